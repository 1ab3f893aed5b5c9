#include "cantorlab/lattice_iso.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "cantorlab/errors.hpp"

namespace cantorlab {

TruncatedLatticeMap TruncatedLatticeMap::from_entries(
    int depth, std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].first.depth() > depth)
      throw MalformedQueryError("key " + to_string(entries[i].first) +
                                " is outside B_" + std::to_string(depth));
    if (i && entries[i].first == entries[i - 1].first)
      throw MalformedQueryError("duplicate key " +
                                to_string(entries[i].first));
  }
  if (!entries.empty()) {
    if (entries.front().first != Clopen() ||
        entries.front().second != Clopen())
      throw MalformedQueryError(
          "a nonempty window must map the empty set to the empty set");
  }
  TruncatedLatticeMap m;
  m.depth_ = depth;
  m.entries_ = std::move(entries);
  return m;
}

std::optional<Clopen> TruncatedLatticeMap::lookup(const Clopen& key) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), key,
      [](const Entry& e, const Clopen& k) { return e.first < k; });
  if (it != entries_.end() && it->first == key) return it->second;
  return std::nullopt;
}

bool TruncatedLatticeMap::has_value(const Clopen& v) const {
  for (const auto& [k, val] : entries_)
    if (val == v) return true;
  return false;
}

std::vector<Clopen> TruncatedLatticeMap::keys() const {
  std::vector<Clopen> out;
  out.reserve(entries_.size());
  for (const auto& [k, v] : entries_) out.push_back(k);
  return out;
}

std::vector<Clopen> TruncatedLatticeMap::values() const {
  std::vector<Clopen> out;
  out.reserve(entries_.size());
  for (const auto& [k, v] : entries_) out.push_back(v);
  return out;
}

bool is_order_iso(const TruncatedLatticeMap& m) {
  for (const auto& [u, mu] : m.entries())
    for (const auto& [v, mv] : m.entries())
      if (clopen_subset(u, v) != clopen_subset(mu, mv)) return false;
  return true;
}

namespace {

int family_depth(const std::vector<Clopen>& fam, int at_least) {
  int d = at_least;
  for (const auto& c : fam) d = std::max(d, c.depth());
  return d;
}

}  // namespace

bool is_sb_member(const TruncatedLatticeMap& m) {
  if (!is_order_iso(m)) return false;
  if (!is_hereditary_sublattice(m.keys(), m.depth())) return false;
  const auto vals = m.values();
  return is_c_family(vals, family_depth(vals, m.depth()));
}

bool is_s1_member(const TruncatedLatticeMap& m) {
  // Clopen sets are their own closures, so the S1 biconditional collapses
  // to the order-isomorphism biconditional.
  for (const auto& [u, mu] : m.entries())
    for (const auto& [v, mv] : m.entries())
      if (clopen_subset(v, u) != clopen_subset(mv, mu)) return false;
  return true;
}

bool is_complete_finite(const TruncatedLatticeMap& m) {
  if (m.empty()) return true;
  const int kd = m.depth();
  const int vd = family_depth(m.values(), m.depth());
  std::unordered_set<std::uint64_t> key_masks, value_masks;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> gens;
  for (const auto& [k, v] : m.entries()) {
    const auto km = clopen_to_mask(k, kd);
    const auto vm = clopen_to_mask(v, vd);
    key_masks.insert(km);
    value_masks.insert(vm);
    gens.emplace_back(km, vm);
  }
  // Distinct (union of keys, union of images) pairs over nonempty families.
  std::set<std::pair<std::uint64_t, std::uint64_t>> seen(gens.begin(),
                                                         gens.end());
  std::vector<std::pair<std::uint64_t, std::uint64_t>> frontier(seen.begin(),
                                                                seen.end());
  while (!frontier.empty()) {
    if (seen.size() > (1u << 20))
      throw ResourceLimitError("complete-map family closure too large");
    std::vector<std::pair<std::uint64_t, std::uint64_t>> next;
    for (const auto& [ku, vu] : frontier)
      for (const auto& [km, vm] : gens) {
        auto p = std::make_pair(ku | km, vu | vm);
        if (seen.insert(p).second) next.push_back(p);
      }
    frontier = std::move(next);
  }
  for (const auto& [ku, vu] : seen)
    if (key_masks.count(ku) != value_masks.count(vu)) return false;
  return true;
}

std::vector<Clopen> hereditary_image(const TruncatedLatticeMap& m,
                                     const std::vector<Clopen>& fam) {
  if (!is_sb_member(m))
    throw MalformedQueryError("hereditary_image requires an S(B) window");
  if (!is_hereditary_sublattice(fam, family_depth(fam, m.depth())))
    throw MalformedQueryError("hereditary_image requires a hereditary family");
  std::set<Clopen> out;
  for (const auto& u : fam)
    if (auto v = m.lookup(u)) out.insert(*v);
  std::vector<Clopen> result(out.begin(), out.end());
  if (!is_c_family(result, family_depth(result, 0)))
    throw InternalConsistencyError(
        "hereditary image failed the closure check");
  return result;
}

TruncatedLatticeMap encode(const PrefixMap& h, int d) {
  if (d < 0 || d > 3) throw ResourceLimitError("encode limited to depth 3");
  std::vector<TruncatedLatticeMap::Entry> entries;
  for (const auto& u : tilde_truncated(h.domain_clopen(), d))
    entries.emplace_back(u, image_clopen(h, u));
  return TruncatedLatticeMap::from_entries(d, std::move(entries));
}

PrefixMap decode(const TruncatedLatticeMap& m) {
  if (m.empty()) return PrefixMap();
  if (!is_sb_member(m))
    throw MalformedQueryError("decode requires an S(B) window");
  const int d = m.depth();
  std::vector<PrefixMap::Rule> rules;
  // The deepest cylinder keys partition the union of the keys; each must
  // map to a single cylinder for a suffix-preserving map to exist.
  for (const auto& [k, v] : m.entries()) {
    if (k.words().size() != 1 ||
        static_cast<int>(k.words()[0].size()) != d)
      continue;
    if (v.words().size() != 1)
      throw InconsistencyError(
          "cylinder key maps to a non-cylinder image; the window is not a "
          "prefix-exchange map",
          to_string(k));
    rules.emplace_back(k.words()[0], v.words()[0]);
  }
  PrefixMap h;
  try {
    h = PrefixMap::from_rules(std::move(rules));
  } catch (const MalformedQueryError& e) {
    throw InconsistencyError(
        std::string("cylinder images do not form a partial bijection: ") +
            e.what(),
        to_string(m.keys().empty() ? Clopen() : m.keys().back()));
  }
  for (const auto& [k, v] : m.entries())
    if (image_clopen(h, k) != v)
      throw InconsistencyError(
          "window disagrees with the reconstructed map", to_string(k));
  return h;
}

bool phi_homomorphism_check(const PrefixMap& f, const PrefixMap& g, int d) {
  if (d < 0 || d > 3)
    throw ResourceLimitError("phi_homomorphism_check limited to depth 3");
  const PrefixMap c = pm_compose(f, g);
  const TruncatedLatticeMap wc = encode(c, d);
  const TruncatedLatticeMap wg = encode(g, d);

  // Entrywise window composition: keys of the g-window whose image lies in
  // the domain family of f, mapped through f's (untruncated) window entry.
  const Clopen fdom = f.domain_clopen();
  std::vector<TruncatedLatticeMap::Entry> entries;
  for (const auto& [u, gu] : wg.entries())
    if (clopen_subset(gu, fdom)) entries.emplace_back(u, image_clopen(f, gu));
  if (TruncatedLatticeMap::from_entries(d, std::move(entries)) != wc)
    return false;

  if (c.rule_depth() <= d && decode(wc) != c) return false;
  return true;
}

bool neighborhood_correspondence_check(const Clopen& o, const Clopen& p,
                                       const std::vector<PrefixMap>& sample,
                                       int d) {
  if (o.depth() > d || p.depth() > d)
    throw MalformedQueryError("o and p must lie in B_d");
  for (const auto& h : sample)
    if (h.rule_depth() > d)
      throw MalformedQueryError("sample map exceeds rule depth d");

  for (const auto& h : sample) {
    const TruncatedLatticeMap m = encode(h, d);
    // (1) the window hits v(o,p) iff h lies in <o;p> ∩ <p;o>^{-1} with
    //     image exactly p.
    const bool in_v = m.lookup(o) == std::optional<Clopen>(p);
    const bool gamma_side = hco_membership(h, HcoKV{o, p}) &&
                            hco_membership(h, HcoKVInv{p, o}) &&
                            image_clopen(h, o) == p;
    if (in_v != gamma_side) return false;
    // (2) the window hits w1(o) iff the complement of dom(h) meets o.
    if (!m.has_key(o) != hco_membership(h, HcoDMinus{o})) return false;
    // (3) the window hits w2(o) iff the complement of im(h) meets o.  The
    //     image family of the untruncated lattice map is tilde(im h), read
    //     off here as a subset test (the depth-d window's value list can
    //     miss image sets whose preimages are deeper than d).
    const bool in_image_family = clopen_subset(o, h.image_clopen());
    if (!in_image_family != hco_membership(h, HcoIMinus{o})) return false;
  }
  return true;
}

bool lemma_fhat_check(const TruncatedLatticeMap& m) {
  const PrefixMap h = decode(m);
  for (const auto& [u, v] : m.entries())
    if (image_clopen(h, u) != v) return false;
  return true;
}

}  // namespace cantorlab
