#ifndef CANTORLAB_SEMILATTICE_HPP
#define CANTORLAB_SEMILATTICE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "cantorlab/pbij.hpp"

namespace cantorlab {

/// A finite meet-semilattice given by its meet table; the order is derived
/// as x <= y iff x∧y = x.
class FiniteSemilattice {
 public:
  /// Validates commutativity, associativity and idempotency exhaustively.
  static FiniteSemilattice from_meet_table(
      std::vector<std::vector<std::uint32_t>> meet);

  /// Chain 0 < 1 < ... < n-1 under min.
  static FiniteSemilattice chain(std::size_t n);

  std::size_t size() const { return meet_.size(); }
  std::uint32_t meet(std::uint32_t x, std::uint32_t y) const {
    return meet_[x][y];
  }
  bool leq(std::uint32_t x, std::uint32_t y) const {
    return meet_[x][y] == x;
  }
  const std::vector<std::vector<std::uint32_t>>& meet_table() const {
    return meet_;
  }

  /// The semilattice as an inverse semigroup (product = meet, s^{-1} = s).
  FiniteInverseSemigroup as_inverse_semigroup() const;

 private:
  std::vector<std::vector<std::uint32_t>> meet_;
};

/// Ex = {y : y <= x}, sorted.  Throws MalformedQueryError if x is out of
/// range.
std::vector<std::uint32_t> principal_ideal(const FiniteSemilattice& e,
                                           std::uint32_t x);

/// All (x,y) with Ex order-isomorphic to Ey; reflexive and symmetric.
std::vector<std::pair<std::uint32_t, std::uint32_t>> compat_pairs(
    const FiniteSemilattice& e);

/// An order isomorphism between two principal ideals.
struct MunnElement {
  PartialBijection map;
  std::uint32_t source_apex;
  std::uint32_t target_apex;

  friend bool operator==(const MunnElement&, const MunnElement&) = default;
};

/// T(E): every order isomorphism between every pair of principal ideals,
/// sorted by (source_apex, target_apex, map entries); verified closed under
/// compose and invert before returning.
std::vector<MunnElement> munn_semigroup(const FiniteSemilattice& e);

/// Conditions (a) dom(f) and im(f) are principal ideals and (b) f preserves
/// and reflects the order.  Points must be elements of E.
bool is_munn_member(const FiniteSemilattice& e, const PartialBijection& f);

}  // namespace cantorlab

#endif
