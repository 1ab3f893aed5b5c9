#ifndef CANTORLAB_CLOPEN_HPP
#define CANTORLAB_CLOPEN_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cantorlab {

/// A clopen subset of Cantor space 2^N, stored as the canonical prefix
/// antichain of binary words: prefix-free, sibling-reduced, sorted by
/// (length, content).  {} denotes the empty set, {""} the whole space.
class Clopen {
 public:
  Clopen() = default;

  /// Canonicalizes an arbitrary word family: absorbs words covered by a
  /// prefix and merges sibling pairs w0/w1 to w, to fixpoint.  The denoted
  /// point set is unchanged.  Throws MalformedQueryError on non-binary words.
  static Clopen from_words(std::vector<std::string> words);

  static Clopen whole() { return from_words({""}); }
  static Clopen cylinder(std::string_view w) {
    return from_words({std::string(w)});
  }

  const std::vector<std::string>& words() const { return words_; }
  bool empty() const { return words_.empty(); }
  bool is_whole() const { return words_.size() == 1 && words_[0].empty(); }

  /// Length of the longest word; 0 for the empty set and the whole space.
  int depth() const;

  friend bool operator==(const Clopen&, const Clopen&) = default;
  friend std::strong_ordering operator<=>(const Clopen& a, const Clopen& b);

 private:
  std::vector<std::string> words_;
};

std::string to_string(const Clopen& c);

Clopen clopen_union(const Clopen& a, const Clopen& b);
Clopen clopen_intersect(const Clopen& a, const Clopen& b);
Clopen clopen_complement(const Clopen& a);
Clopen clopen_minus(const Clopen& a, const Clopen& b);

/// a subseteq b, decided as intersect(a, complement(b)) = empty.
bool clopen_subset(const Clopen& a, const Clopen& b);

/// B_d: all unions of depth-d cylinders, in bitmask order (bit i of the mask
/// is the cylinder whose word is i written MSB-first with d bits).
/// |B_d| = 2^(2^d); guarded at d <= 4.
std::vector<Clopen> enumerate_base(int d);

/// {u in B_d : u subseteq V}.
std::vector<Clopen> tilde_truncated(const Clopen& v, int d);

/// Contains the empty set and is closed under pairwise union and
/// intersection; the part of the hereditary condition a finite window can
/// certify about an image family (down-closure may need deeper preimages).
bool is_c_family(const std::vector<Clopen>& fam, int d);

/// Bitmask of depth-d cylinders covered by c.  Requires depth(c) <= d and
/// d <= 6 (masks are 64-bit).
std::uint64_t clopen_to_mask(const Clopen& c, int d);
Clopen mask_to_clopen(std::uint64_t mask, int d);

/// Depth-d reflection of membership in L (hereditary ∪/∩-closed families):
/// nonempty, contains the empty set, downward closed within B_d, closed
/// under pairwise union and intersection.  Elements must lie in B_d.
bool is_hereditary_sublattice(const std::vector<Clopen>& fam, int d);

/// Finite reflection of the C-membership criterion: every finite family of
/// members whose union lies in B_d (always, here) has its union in the
/// family; the empty family contributes the empty set.
bool carac_c_check(const std::vector<Clopen>& fam, int d);

enum class FellKind { v_minus, v_plus };

/// K in V^- (K meets V) / K in V^+ (K contained in V).
bool fell_membership(const Clopen& k, FellKind kind, const Clopen& v);

}  // namespace cantorlab

#endif
