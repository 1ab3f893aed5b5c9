#ifndef CANTORLAB_SAMPLING_HPP
#define CANTORLAB_SAMPLING_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "cantorlab/clopen.hpp"
#include "cantorlab/homeo.hpp"
#include "cantorlab/pbij.hpp"
#include "cantorlab/semilattice.hpp"

namespace cantorlab::sampling {

using Rng = std::mt19937_64;

/// Uniformly sized random element of I({0..universe-1}).
PartialBijection random_pbij(Rng& rng, std::uint32_t universe);

/// Every partial bijection with sources and targets inside the given points.
std::vector<PartialBijection> all_pbijs(
    const std::vector<std::uint32_t>& points);

Clopen random_clopen(Rng& rng, int depth);

/// Random canonical prefix-exchange map with all rule words of length
/// <= max_depth.
PrefixMap random_prefix_map(Rng& rng, int max_depth);

/// Random valid meet table with 1..max_size elements, built as an
/// intersection-closed family of subsets of a small universe.
FiniteSemilattice random_semilattice(Rng& rng, std::size_t max_size);

/// All meet-semilattices on {0..n-1} for n = 1..max_size, enumerated from
/// labeled partial orders with all binary meets.
std::vector<FiniteSemilattice> all_semilattices(std::size_t max_size);

}  // namespace cantorlab::sampling

#endif
