#include "cantorlab/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cantorlab/clopen.hpp"
#include "cantorlab/errors.hpp"
#include "cantorlab/homeo.hpp"
#include "cantorlab/lattice_iso.hpp"
#include "cantorlab/pbij.hpp"
#include "cantorlab/sampling.hpp"
#include "cantorlab/semilattice.hpp"

namespace cantorlab {

namespace {

using sampling::Rng;

FiniteSemilattice flat_semilattice() {
  return FiniteSemilattice::from_meet_table(
      {{0, 0, 0}, {0, 1, 0}, {0, 0, 2}});
}

std::string inverse_semigroup_laws(Rng& rng) {
  std::vector<PartialBijection> pool;
  for (int i = 0; i < 1000; ++i) pool.push_back(sampling::random_pbij(rng, 10));

  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int i = 0; i < 5000; ++i) {
    const auto& f = pool[pick(rng)];
    const auto& g = pool[pick(rng)];
    const auto& h = pool[pick(rng)];
    if (compose(compose(f, g), h) != compose(f, compose(g, h)))
      return "associativity failed for " + to_string(f) + ", " +
             to_string(g) + ", " + to_string(h);
  }
  for (const auto& f : pool) {
    const auto g = invert(f);
    if (compose(compose(f, g), f) != f || compose(compose(g, f), g) != g)
      return "inverse axioms failed for " + to_string(f);
  }
  const auto small = sampling::all_pbijs({0, 1, 2});
  for (const auto& f : small) {
    std::size_t inverses = 0;
    for (const auto& g : small)
      if (compose(compose(f, g), f) == f && compose(compose(g, f), g) == g) {
        ++inverses;
        if (g != invert(f))
          return "non-canonical inverse found for " + to_string(f);
      }
    if (inverses != 1)
      return to_string(f) + " has " + std::to_string(inverses) + " inverses";
    if (is_idempotent(f) != (compose(f, f) == f))
      return "idempotent characterization failed for " + to_string(f);
    if (is_idempotent(f) && f != partial_identity(f.domain()))
      return "idempotent is not a partial identity: " + to_string(f);
  }
  return "";
}

// Brute-force T(E): every partial bijection Ex -> Ey satisfying conditions
// (a) and (b), enumerated by permutations; independent of the backtracking
// path in munn_semigroup.
std::set<PartialBijection> munn_brute_force(const FiniteSemilattice& e) {
  std::set<PartialBijection> out;
  for (std::uint32_t x = 0; x < e.size(); ++x)
    for (std::uint32_t y = 0; y < e.size(); ++y) {
      const auto src = principal_ideal(e, x);
      auto dst = principal_ideal(e, y);
      if (src.size() != dst.size()) continue;
      std::sort(dst.begin(), dst.end());
      do {
        bool ok = true;
        for (std::size_t i = 0; i < src.size() && ok; ++i)
          for (std::size_t j = 0; j < src.size() && ok; ++j)
            ok = e.leq(src[i], src[j]) == e.leq(dst[i], dst[j]);
        if (!ok) continue;
        std::vector<PartialBijection::Entry> entries;
        for (std::size_t i = 0; i < src.size(); ++i)
          entries.emplace_back(src[i], dst[i]);
        out.insert(PartialBijection::from_entries(std::move(entries)));
      } while (std::next_permutation(dst.begin(), dst.end()));
    }
  return out;
}

std::string munn_correctness() {
  for (const auto& e : sampling::all_semilattices(4)) {
    const auto enumerated = munn_semigroup(e);  // verifies closure itself
    std::set<PartialBijection> got;
    for (const auto& m : enumerated) {
      got.insert(m.map);
      if (!is_munn_member(e, m.map))
        return "enumerated element fails membership: " + to_string(m.map);
      const auto dom = m.map.domain();
      for (std::uint32_t a : dom)
        if (!e.leq(a, m.source_apex))
          return "source apex is not the maximum of the domain";
      if (m.map.apply(m.source_apex) != m.target_apex)
        return "target apex is not the image of the source apex";
    }
    if (got != munn_brute_force(e))
      return "enumeration disagrees with brute force on a size-" +
             std::to_string(e.size()) + " semilattice";
  }
  for (std::size_t n = 1; n <= 6; ++n)
    if (munn_semigroup(FiniteSemilattice::chain(n)).size() != n)
      return "chain of length " + std::to_string(n) +
             " has |T(E)| != " + std::to_string(n);
  return "";
}

std::string cl_census() {
  const auto base = enumerate_base(2);  // indexed by cylinder mask
  std::set<std::uint32_t> passing, expected;
  for (std::uint32_t fam_mask = 0; fam_mask < (1u << 16); ++fam_mask) {
    std::vector<Clopen> fam;
    for (int i = 0; i < 16; ++i)
      if (fam_mask >> i & 1) fam.push_back(base[static_cast<std::size_t>(i)]);
    if (is_hereditary_sublattice(fam, 2)) passing.insert(fam_mask);
  }
  for (std::uint32_t v = 0; v < 16; ++v) {
    std::uint32_t fam_mask = 0;
    for (std::uint32_t u = 0; u < 16; ++u)
      if ((u & v) == u) fam_mask |= 1u << u;  // u ⊆ v as cylinder masks
    expected.insert(fam_mask);
  }
  if (passing != expected || passing.size() != 16)
    return "hereditary families at depth 2 are not exactly the 16 truncated "
           "down-families (" +
           std::to_string(passing.size()) + " found)";
  // Cross-check the mask argument against the public API.
  for (std::uint32_t v = 0; v < 16; ++v) {
    const auto tilde = tilde_truncated(base[v], 2);
    if (!is_hereditary_sublattice(tilde, 2))
      return "tilde_truncated family rejected at depth 2";
  }
  return "";
}

std::string phi_isomorphism(Rng& rng) {
  std::vector<PrefixMap> maps;
  for (int i = 0; i < 500; ++i)
    maps.push_back(sampling::random_prefix_map(rng, 3));
  std::set<PrefixMap> distinct(maps.begin(), maps.end());
  std::vector<TruncatedLatticeMap> windows;
  for (const auto& h : maps) {
    const auto w = encode(h, 3);
    if (decode(w) != h) return "decode(encode(h,3)) != h for " + to_string(h);
    windows.push_back(w);
  }
  std::set<std::string> window_keys;
  for (const auto& w : windows) {
    std::string key = std::to_string(w.entries().size());
    for (const auto& [k, v] : w.entries())
      key += "|" + to_string(k) + ">" + to_string(v);
    window_keys.insert(std::move(key));
  }
  if (window_keys.size() != distinct.size())
    return "encode is not injective: " + std::to_string(distinct.size()) +
           " maps gave " + std::to_string(window_keys.size()) + " windows";
  std::uniform_int_distribution<std::size_t> pick(0, maps.size() - 1);
  for (int i = 0; i < 500; ++i) {
    const auto& f = maps[pick(rng)];
    const auto& g = maps[pick(rng)];
    if (!phi_homomorphism_check(f, g, 3))
      return "phi_homomorphism_check failed for " + to_string(f) + ", " +
             to_string(g);
  }
  return "";
}

std::string fhat_lemma(Rng& rng) {
  for (int i = 0; i < 500; ++i) {
    const auto h = sampling::random_prefix_map(rng, 3);
    if (!lemma_fhat_check(encode(h, 3)))
      return "lemma_fhat_check failed for " + to_string(h);
  }
  return "";
}

std::string neighborhood_identities(Rng& rng) {
  std::vector<PrefixMap> sample;
  for (int i = 0; i < 100; ++i)
    sample.push_back(sampling::random_prefix_map(rng, 2));
  for (const auto& o : enumerate_base(2))
    for (const auto& p : enumerate_base(2))
      if (!neighborhood_correspondence_check(o, p, sample, 2))
        return "identity failed at o=" + to_string(o) + ", p=" + to_string(p);
  return "";
}

std::string convergence_suite(Rng& rng) {
  // (a) growing partial identities against a larger identity window
  {
    SequenceWindow w;
    for (std::uint32_t n = 0; n < 10; ++n) {
      std::vector<std::uint32_t> pts;
      for (std::uint32_t i = 0; i <= n; ++i) pts.push_back(i);
      w.terms.push_back(partial_identity(pts));
    }
    std::vector<std::uint32_t> pts;
    for (std::uint32_t i = 0; i <= 20; ++i) pts.push_back(i);
    w.claimed_limit = partial_identity(pts);
    w.window_bound = 5;
    if (check_convergence(w, false).refuted ||
        check_convergence(w, true).refuted)
      return "growing identities refuted";
  }
  // (b) escaping singletons against the empty map
  {
    SequenceWindow w;
    for (std::uint32_t n = 0; n < 10; ++n)
      w.terms.push_back(PartialBijection::from_entries({{n, 0}}));
    w.window_bound = 3;
    if (check_convergence(w, false).refuted)
      return "escaping singletons refuted without the inverse check";
    const auto verdict = check_convergence(w, true);
    if (!verdict.refuted || !verdict.witness ||
        verdict.witness->point != 0 ||
        verdict.witness->condition != ConvCondition::ii_inverse)
      return "escaping singletons: expected refutation at point 0, "
             "condition ii-inverse";
  }
  // (c) eventually constant sequences
  std::uniform_int_distribution<std::size_t> cut(0, 5);
  for (int i = 0; i < 10; ++i) {
    SequenceWindow w;
    w.claimed_limit = sampling::random_pbij(rng, 10);
    const std::size_t k = cut(rng);
    for (std::size_t n = 0; n < 10; ++n)
      w.terms.push_back(n < k ? sampling::random_pbij(rng, 10)
                              : w.claimed_limit);
    w.window_bound = 12;
    if (check_convergence(w, true).refuted)
      return "eventually constant sequence refuted";
    for (std::size_t n = k; n < 10; ++n)
      if (tau_pp_distance(w.terms[n], w.claimed_limit, 16) != Rational{0, 1})
        return "tau_pp_distance nonzero on the constant tail";
  }
  return "";
}

std::string wagner_preston_scale() {
  // The 5-element Munn semigroup of the flat semilattice, as a Cayley table.
  const auto flat = flat_semilattice();
  const auto munn = munn_semigroup(flat);
  std::vector<PartialBijection> elems;
  for (const auto& m : munn) elems.push_back(m.map);
  auto index_of = [&elems](const PartialBijection& f) {
    const auto it = std::find(elems.begin(), elems.end(), f);
    return static_cast<std::uint32_t>(it - elems.begin());
  };
  FiniteInverseSemigroup s;
  s.size = elems.size();
  s.product.assign(s.size, std::vector<std::uint32_t>(s.size));
  s.inverse.resize(s.size);
  for (std::size_t a = 0; a < s.size; ++a) {
    s.inverse[a] = index_of(invert(elems[a]));
    for (std::size_t b = 0; b < s.size; ++b)
      s.product[a][b] = index_of(compose(elems[a], elems[b]));
  }
  if (s.size != 5) return "flat Munn semigroup does not have 5 elements";

  std::vector<FiniteInverseSemigroup> inputs{std::move(s)};
  for (const auto& e : sampling::all_semilattices(4))
    inputs.push_back(e.as_inverse_semigroup());
  for (const auto& in : inputs) {
    const auto theta = wagner_preston(in);  // verifies before returning
    for (std::size_t a = 0; a < in.size; ++a)
      for (std::size_t b = 0; b < in.size; ++b) {
        if (a != b && theta[a] == theta[b])
          return "representation not injective";
        if (theta[in.product[a][b]] != compose(theta[a], theta[b]))
          return "representation not a homomorphism";
      }
  }
  return "";
}

std::string hereditary_image_lemma(Rng& rng) {
  for (int i = 0; i < 200; ++i) {
    const auto m = encode(sampling::random_prefix_map(rng, 2), 2);
    const auto fam = tilde_truncated(sampling::random_clopen(rng, 2), 2);
    const auto image = hereditary_image(m, fam);  // self-checks closure

    // Independent recomputation through the reconstructed map.
    const PrefixMap h = decode(m);
    std::set<Clopen> expected;
    for (const auto& u : fam)
      if (m.has_key(u)) expected.insert(image_clopen(h, u));
    if (std::vector<Clopen>(expected.begin(), expected.end()) != image)
      return "hereditary_image disagrees with the reconstructed map";

    // Closure oracle on the clopen sets themselves, no masks.
    const auto member = [&image](const Clopen& c) {
      return std::find(image.begin(), image.end(), c) != image.end();
    };
    if (!member(Clopen())) return "image family misses the empty set";
    for (const auto& a : image)
      for (const auto& b : image)
        if (!member(clopen_union(a, b)) || !member(clopen_intersect(a, b)))
          return "image family is not union/intersection closed";
  }
  return "";
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
  std::vector<CriterionResult> results;
  int id = 0;
  auto add = [&results, &id](const char* name, std::string detail) {
    ++id;
    results.push_back({id, name, detail.empty(), std::move(detail)});
  };

  Rng rng(seed);
  add("inverse-semigroup laws in I(N)", inverse_semigroup_laws(rng));
  add("Munn semigroup matches brute force", munn_correctness());
  add("depth-2 hereditary-family census", cl_census());
  add("phi encode/decode isomorphism on representables", phi_isomorphism(rng));
  add("reconstructed map realizes every window entry", fhat_lemma(rng));
  add("neighborhood correspondence identities", neighborhood_identities(rng));
  add("convergence criterion canned suite", convergence_suite(rng));
  add("Wagner-Preston at finite scale", wagner_preston_scale());
  add("hereditary images stay closed", hereditary_image_lemma(rng));
  return results;
}

}  // namespace cantorlab
