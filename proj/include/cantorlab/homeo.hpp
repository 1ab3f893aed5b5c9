#ifndef CANTORLAB_HOMEO_HPP
#define CANTORLAB_HOMEO_HPP

#include <compare>
#include <string>
#include <variant>
#include <vector>

#include "cantorlab/clopen.hpp"

namespace cantorlab {

/// A partial homeomorphism of Cantor space with clopen domain and image,
/// acting by exchanging a domain prefix for an image prefix and preserving
/// the suffix.  Rules are a bijection between two prefix-free word sets,
/// sibling-reduced (never both w0->v0 and w1->v1) and sorted by domain word.
/// Canonical form makes structural equality coincide with equality of the
/// denoted maps.
class PrefixMap {
 public:
  using Rule = std::pair<std::string, std::string>;

  PrefixMap() = default;  // the empty map

  /// Validates prefix-freeness of both word sets and canonicalizes.
  static PrefixMap from_rules(std::vector<Rule> rules);

  /// The bit-flip involution 0... <-> 1...
  static PrefixMap bit_flip() { return from_rules({{"0", "1"}, {"1", "0"}}); }

  /// Partial identity 1_u.
  static PrefixMap identity_on(const Clopen& u);

  const std::vector<Rule>& rules() const { return rules_; }
  bool empty() const { return rules_.empty(); }

  Clopen domain_clopen() const;
  Clopen image_clopen() const;

  /// Length of the longest domain or image word.
  int rule_depth() const;

  friend bool operator==(const PrefixMap&, const PrefixMap&) = default;
  friend std::strong_ordering operator<=>(const PrefixMap&,
                                          const PrefixMap&) = default;

 private:
  std::vector<Rule> rules_;
};

std::string to_string(const PrefixMap& h);

PrefixMap pm_compose(const PrefixMap& f, const PrefixMap& g);
PrefixMap pm_invert(const PrefixMap& f);

/// h[u ∩ dom(h)], exact and canonical.
Clopen image_clopen(const PrefixMap& h, const Clopen& u);

struct ApplyResult {
  enum Status { determined, needs_more_input, outside_domain };
  Status status;
  std::string image_prefix;  // set when determined

  friend bool operator==(const ApplyResult&, const ApplyResult&) = default;
};

/// Evaluates the denoted map on a point known only up to a finite prefix.
ApplyResult apply_point(const PrefixMap& h, const std::string& x_prefix);

// tau_hco neighborhood queries.
struct HcoKV { Clopen k, v; };       // <K;V>: K ⊆ dom(h) and h[K] ⊆ V
struct HcoKVInv { Clopen k, v; };    // <K;V>^{-1}: K ⊆ h[V ∩ dom(h)]
struct HcoDMinus { Clopen v; };      // complement of dom(h) meets V
struct HcoIMinus { Clopen v; };      // complement of im(h) meets V
struct HcoE { Clopen v, w; };        // V ⊆ dom, W ⊆ im, h[V] = W
using HcoQuery = std::variant<HcoKV, HcoKVInv, HcoDMinus, HcoIMinus, HcoE>;

bool hco_membership(const PrefixMap& h, const HcoQuery& query);

/// The quantified base-membership criterion with U ranging over depth-d
/// truncations of dom(h) and im(h); true for every valid PrefixMap.
/// Guarded at d <= 3.
bool is_gamma_base_member(const PrefixMap& h, int d);

}  // namespace cantorlab

#endif
