#ifndef CANTORLAB_PBIJ_HPP
#define CANTORLAB_PBIJ_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cantorlab {

/// A finitely supported element of the symmetric inverse semigroup I(N):
/// an injective partial map on naturals, stored as entries sorted by source.
class PartialBijection {
 public:
  using Entry = std::pair<std::uint32_t, std::uint32_t>;

  PartialBijection() = default;

  /// Validates functionality and injectivity; sorts by source.
  static PartialBijection from_entries(std::vector<Entry> entries);

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  std::optional<std::uint32_t> apply(std::uint32_t x) const;
  std::optional<std::uint32_t> preimage(std::uint32_t y) const;
  bool in_domain(std::uint32_t x) const { return apply(x).has_value(); }
  bool in_image(std::uint32_t y) const { return preimage(y).has_value(); }

  std::vector<std::uint32_t> domain() const;
  std::vector<std::uint32_t> image() const;

  friend bool operator==(const PartialBijection&,
                         const PartialBijection&) = default;
  friend std::strong_ordering operator<=>(const PartialBijection&,
                                          const PartialBijection&) = default;

 private:
  std::vector<Entry> entries_;
};

std::string to_string(const PartialBijection& f);

/// f ∘ g: x -> f(g(x)) on g^{-1}(dom(f) ∩ im(g)).
PartialBijection compose(const PartialBijection& f, const PartialBijection& g);
PartialBijection invert(const PartialBijection& f);
PartialBijection partial_identity(std::vector<std::uint32_t> points);
bool is_idempotent(const PartialBijection& f);

enum class Subbasic { v, w1, w2 };

/// v(x,y): x in dom(f) and f(x)=y; w1(x): x not in dom(f);
/// w2(y): y not in im(f).  kind=v requires y.
bool subbasic_membership(const PartialBijection& f, Subbasic kind,
                         std::uint32_t x,
                         std::optional<std::uint32_t> y = std::nullopt);

struct SequenceWindow {
  std::vector<PartialBijection> terms;  // nonempty
  PartialBijection claimed_limit;
  std::uint32_t window_bound = 0;  // points 0..window_bound are checked
};

enum class ConvCondition { i, ii, i_inverse, ii_inverse };

struct ConvergenceWitness {
  std::uint32_t point;
  std::size_t index;
  ConvCondition condition;
};

/// status consistent means "not refuted on this window", never a proof.
struct ConvergenceVerdict {
  bool refuted = false;
  std::optional<ConvergenceWitness> witness;
};

/// Checks the window against the pointwise convergence criterion: for each
/// point x <= window_bound, condition (i) (x in dom of the limit: the terms
/// must eventually hit the limit's value and hold through the last term) or
/// (ii) (x outside: eventually outside every term's domain).  With
/// strict_inverse the same conditions are applied to the inverted sequence.
/// Refutations report the first failing (point, index, condition).
ConvergenceVerdict check_convergence(const SequenceWindow& w,
                                     bool strict_inverse = true);

/// Exact dyadic rational, normalized.
struct Rational {
  long long num = 0;
  long long den = 1;
  friend bool operator==(const Rational&, const Rational&) = default;
};

std::string to_string(const Rational& r);

/// Sum over x,y <= horizon of 2^-(x+1) disagreement weights, in both the
/// forward and inverse directions; symmetric, bounded by 2, and zero iff
/// f and g agree in status on the whole window.  horizon <= 60.
Rational tau_pp_distance(const PartialBijection& f, const PartialBijection& g,
                         std::uint32_t horizon);

/// A finite inverse semigroup given by Cayley and inverse tables on
/// {0..size-1}.
struct FiniteInverseSemigroup {
  std::size_t size = 0;
  std::vector<std::vector<std::uint32_t>> product;
  std::vector<std::uint32_t> inverse;

  /// Associativity, the two inverse axioms, and uniqueness of inverses.
  /// Throws InternalConsistencyError on violation.
  void validate() const;
};

/// The Wagner-Preston representation: element s maps to the translation
/// x -> s·x on {x : s^{-1}·s·x = x}, an element of I({0..size-1}).  The
/// result is verified to be an injective homomorphism before returning.
std::vector<PartialBijection> wagner_preston(const FiniteInverseSemigroup& s);

}  // namespace cantorlab

#endif
