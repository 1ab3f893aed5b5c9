#include "cantorlab/sampling.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cantorlab::sampling {

PartialBijection random_pbij(Rng& rng, std::uint32_t universe) {
  std::uniform_int_distribution<std::uint32_t> size_dist(0, universe);
  const std::uint32_t k = size_dist(rng);
  std::vector<std::uint32_t> sources(universe), targets(universe);
  for (std::uint32_t i = 0; i < universe; ++i) sources[i] = targets[i] = i;
  std::shuffle(sources.begin(), sources.end(), rng);
  std::shuffle(targets.begin(), targets.end(), rng);
  std::vector<PartialBijection::Entry> entries;
  for (std::uint32_t i = 0; i < k; ++i)
    entries.emplace_back(sources[i], targets[i]);
  return PartialBijection::from_entries(std::move(entries));
}

std::vector<PartialBijection> all_pbijs(
    const std::vector<std::uint32_t>& points) {
  const std::size_t n = points.size();
  std::vector<PartialBijection> out;
  for (std::uint32_t smask = 0; smask < (1u << n); ++smask) {
    std::vector<std::uint32_t> src;
    for (std::size_t i = 0; i < n; ++i)
      if (smask >> i & 1) src.push_back(points[i]);
    for (std::uint32_t tmask = 0; tmask < (1u << n); ++tmask) {
      std::vector<std::uint32_t> dst;
      for (std::size_t i = 0; i < n; ++i)
        if (tmask >> i & 1) dst.push_back(points[i]);
      if (dst.size() != src.size()) continue;
      std::sort(dst.begin(), dst.end());
      do {
        std::vector<PartialBijection::Entry> entries;
        for (std::size_t i = 0; i < src.size(); ++i)
          entries.emplace_back(src[i], dst[i]);
        out.push_back(PartialBijection::from_entries(std::move(entries)));
      } while (std::next_permutation(dst.begin(), dst.end()));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Clopen random_clopen(Rng& rng, int depth) {
  std::uniform_int_distribution<std::uint64_t> dist(
      0, (1ull << (1 << depth)) - 1);
  return mask_to_clopen(dist(rng), depth);
}

namespace {

// A random prefix-free word set of exactly k words of length <= depth,
// built by splitting leaves of the full antichain.
std::vector<std::string> random_antichain(Rng& rng, int depth,
                                          std::size_t k) {
  std::vector<std::string> leaves{""};
  while (leaves.size() < k) {
    std::vector<std::size_t> splittable;
    for (std::size_t i = 0; i < leaves.size(); ++i)
      if (static_cast<int>(leaves[i].size()) < depth) splittable.push_back(i);
    std::uniform_int_distribution<std::size_t> pick(0, splittable.size() - 1);
    const std::size_t i = splittable[pick(rng)];
    const std::string w = leaves[i];
    leaves.erase(leaves.begin() + static_cast<std::ptrdiff_t>(i));
    leaves.push_back(w + "0");
    leaves.push_back(w + "1");
  }
  std::shuffle(leaves.begin(), leaves.end(), rng);
  leaves.resize(k);
  return leaves;
}

}  // namespace

PrefixMap random_prefix_map(Rng& rng, int max_depth) {
  const std::size_t max_k = 1ull << max_depth;
  std::uniform_int_distribution<std::size_t> size_dist(0, max_k);
  const std::size_t k = size_dist(rng);
  if (k == 0) return PrefixMap();
  // An antichain with exactly k leaves exists for any k <= 2^depth.
  auto dom = random_antichain(rng, max_depth, k);
  auto img = random_antichain(rng, max_depth, k);
  std::vector<PrefixMap::Rule> rules;
  for (std::size_t i = 0; i < k; ++i) rules.emplace_back(dom[i], img[i]);
  return PrefixMap::from_rules(std::move(rules));
}

FiniteSemilattice random_semilattice(Rng& rng, std::size_t max_size) {
  constexpr int kUniverse = 4;
  std::uniform_int_distribution<unsigned> subset(0, (1u << kUniverse) - 1);
  std::uniform_int_distribution<int> count(1, 4);
  for (;;) {
    std::set<unsigned> fam;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) fam.insert(subset(rng));
    // Close under intersection; the meet is then set intersection.
    bool changed = true;
    while (changed) {
      changed = false;
      for (unsigned a : fam)
        for (unsigned b : fam)
          if (!fam.count(a & b)) {
            fam.insert(a & b);
            changed = true;
            break;
          }
    }
    if (fam.empty() || fam.size() > max_size) continue;
    std::vector<unsigned> elems(fam.begin(), fam.end());
    std::map<unsigned, std::uint32_t> index;
    for (std::size_t i = 0; i < elems.size(); ++i)
      index[elems[i]] = static_cast<std::uint32_t>(i);
    std::vector<std::vector<std::uint32_t>> meet(
        elems.size(), std::vector<std::uint32_t>(elems.size()));
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (std::size_t j = 0; j < elems.size(); ++j)
        meet[i][j] = index.at(elems[i] & elems[j]);
    return FiniteSemilattice::from_meet_table(std::move(meet));
  }
}

std::vector<FiniteSemilattice> all_semilattices(std::size_t max_size) {
  std::vector<FiniteSemilattice> out;
  for (std::size_t n = 1; n <= max_size; ++n) {
    const std::size_t pairs = n * (n - 1) / 2;
    std::size_t combos = 1;
    for (std::size_t i = 0; i < pairs; ++i) combos *= 3;
    for (std::size_t code = 0; code < combos; ++code) {
      // leq as a relation matrix; each unordered pair is one of
      // incomparable, i<j, j<i.
      std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
      for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;
      std::size_t c = code;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          switch (c % 3) {
            case 1: leq[i][j] = true; break;
            case 2: leq[j][i] = true; break;
            default: break;
          }
          c /= 3;
        }
      bool transitive = true;
      for (std::size_t i = 0; i < n && transitive; ++i)
        for (std::size_t j = 0; j < n && transitive; ++j)
          for (std::size_t k = 0; k < n && transitive; ++k)
            if (leq[i][j] && leq[j][k] && !leq[i][k]) transitive = false;
      if (!transitive) continue;
      // Every pair needs a greatest lower bound.
      std::vector<std::vector<std::uint32_t>> meet(
          n, std::vector<std::uint32_t>(n));
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i)
        for (std::size_t j = 0; j < n && ok; ++j) {
          int glb = -1;
          for (std::size_t m = 0; m < n; ++m) {
            if (!leq[m][i] || !leq[m][j]) continue;
            if (glb < 0 || leq[static_cast<std::size_t>(glb)][m])
              glb = static_cast<int>(m);
          }
          if (glb < 0) { ok = false; break; }
          for (std::size_t m = 0; m < n; ++m)
            if (leq[m][i] && leq[m][j] &&
                !leq[m][static_cast<std::size_t>(glb)]) {
              ok = false;
              break;
            }
          meet[i][j] = static_cast<std::uint32_t>(glb);
        }
      if (!ok) continue;
      out.push_back(FiniteSemilattice::from_meet_table(std::move(meet)));
    }
  }
  return out;
}

}  // namespace cantorlab::sampling
