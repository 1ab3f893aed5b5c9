#ifndef CANTORLAB_LATTICE_ISO_HPP
#define CANTORLAB_LATTICE_ISO_HPP

#include <optional>
#include <vector>

#include "cantorlab/clopen.hpp"
#include "cantorlab/homeo.hpp"

namespace cantorlab {

/// A depth-d window onto a partial lattice isomorphism of the clopen base:
/// an injective finite map from clopens in B_d to clopens (values may be
/// deeper than d).  Entries are sorted by key; a nonempty window must
/// contain the entry ∅ -> ∅.
class TruncatedLatticeMap {
 public:
  using Entry = std::pair<Clopen, Clopen>;

  TruncatedLatticeMap() = default;

  static TruncatedLatticeMap from_entries(int depth,
                                          std::vector<Entry> entries);

  int depth() const { return depth_; }
  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  std::optional<Clopen> lookup(const Clopen& key) const;
  bool has_key(const Clopen& key) const { return lookup(key).has_value(); }
  bool has_value(const Clopen& v) const;

  std::vector<Clopen> keys() const;
  std::vector<Clopen> values() const;

  friend bool operator==(const TruncatedLatticeMap&,
                         const TruncatedLatticeMap&) = default;

 private:
  int depth_ = 0;
  std::vector<Entry> entries_;
};

/// u ⊆ v iff M(u) ⊆ M(v), over all key pairs.
bool is_order_iso(const TruncatedLatticeMap& m);

/// Order iso with hereditary ∪/∩-closed key and value families.  The value
/// family is checked at its own depth (values may outgrow B_d).
bool is_sb_member(const TruncatedLatticeMap& m);

/// The S1 condition; with a clopen base, closures are identities, so this
/// coincides with is_order_iso on every input.
bool is_s1_member(const TruncatedLatticeMap& m);

/// Finite-family reflection of the complete-map condition: for every
/// nonempty family of keys, the union of the family is a key iff the union
/// of its images is a value.
bool is_complete_finite(const TruncatedLatticeMap& m);

/// {M(u) : u in L ∩ keys(M)}.  Requires is_sb_member(m) and a hereditary L;
/// the output is checked to be hereditary before returning.
std::vector<Clopen> hereditary_image(const TruncatedLatticeMap& m,
                                     const std::vector<Clopen>& fam);

/// The window of the lattice isomorphism induced by h: keys are the depth-d
/// truncation of dom(h), values their exact images.  Guarded at d <= 3.
TruncatedLatticeMap encode(const PrefixMap& h, int d);

/// Reconstructs the unique canonical PrefixMap consistent with the window,
/// by reading the images of the deepest cylinder keys.  Throws
/// InconsistencyError (with a witness key) when no prefix-exchange map fits.
PrefixMap decode(const TruncatedLatticeMap& m);

/// Verifies that composition commutes with the window encoding: the window
/// of f∘g equals the entrywise composition of the windows, and decode is
/// coherent with pm_compose when depths permit.
bool phi_homomorphism_check(const PrefixMap& f, const PrefixMap& g, int d);

/// The three neighborhood-correspondence identities relating the subbasic
/// sets v(o,p), w1(o), w2(o) on windows to <o;p>, <p;o>^{-1}, D- and I-type
/// sets on prefix maps, checked over a sample.
bool neighborhood_correspondence_check(const Clopen& o, const Clopen& p,
                                       const std::vector<PrefixMap>& sample,
                                       int d);

/// With h = decode(m): image_clopen(h, u) = m(u) for every key u.
bool lemma_fhat_check(const TruncatedLatticeMap& m);

}  // namespace cantorlab

#endif
