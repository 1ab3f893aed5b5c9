#include "cantorlab/semilattice.hpp"

#include <algorithm>
#include <set>

#include "cantorlab/errors.hpp"

namespace cantorlab {

FiniteSemilattice FiniteSemilattice::from_meet_table(
    std::vector<std::vector<std::uint32_t>> meet) {
  const std::size_t n = meet.size();
  if (n == 0) throw MalformedQueryError("semilattice must be nonempty");
  for (const auto& row : meet) {
    if (row.size() != n)
      throw MalformedQueryError("meet table is not square");
    for (auto v : row)
      if (v >= n) throw MalformedQueryError("meet entry out of range");
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (meet[x][x] != x)
      throw MalformedQueryError("meet is not idempotent");
    for (std::size_t y = 0; y < n; ++y) {
      if (meet[x][y] != meet[y][x])
        throw MalformedQueryError("meet is not commutative");
      for (std::size_t z = 0; z < n; ++z)
        if (meet[meet[x][y]][z] != meet[x][meet[y][z]])
          throw MalformedQueryError("meet is not associative");
    }
  }
  FiniteSemilattice e;
  e.meet_ = std::move(meet);
  return e;
}

FiniteSemilattice FiniteSemilattice::chain(std::size_t n) {
  std::vector<std::vector<std::uint32_t>> meet(
      n, std::vector<std::uint32_t>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      meet[x][y] = static_cast<std::uint32_t>(std::min(x, y));
  return from_meet_table(std::move(meet));
}

FiniteInverseSemigroup FiniteSemilattice::as_inverse_semigroup() const {
  FiniteInverseSemigroup s;
  s.size = size();
  s.product = meet_;
  s.inverse.resize(size());
  for (std::uint32_t x = 0; x < size(); ++x) s.inverse[x] = x;
  return s;
}

std::vector<std::uint32_t> principal_ideal(const FiniteSemilattice& e,
                                           std::uint32_t x) {
  if (x >= e.size())
    throw MalformedQueryError("element " + std::to_string(x) +
                              " out of range");
  std::vector<std::uint32_t> out;
  for (std::uint32_t y = 0; y < e.size(); ++y)
    if (e.leq(y, x)) out.push_back(y);
  return out;
}

namespace {

// Backtracking enumeration of order isomorphisms between two down-sets.
// Assignments are tried in increasing target order, so maps come out in
// lexicographic order of their entry vectors.
void enum_order_isos(const FiniteSemilattice& e,
                     const std::vector<std::uint32_t>& src,
                     const std::vector<std::uint32_t>& dst, std::size_t pos,
                     std::vector<std::uint32_t>& assign,
                     std::vector<bool>& used,
                     std::vector<PartialBijection>& out, bool first_only) {
  if (first_only && !out.empty()) return;
  if (pos == src.size()) {
    std::vector<PartialBijection::Entry> entries;
    for (std::size_t i = 0; i < src.size(); ++i)
      entries.emplace_back(src[i], assign[i]);
    out.push_back(PartialBijection::from_entries(std::move(entries)));
    return;
  }
  for (std::size_t j = 0; j < dst.size(); ++j) {
    if (used[j]) continue;
    bool ok = true;
    for (std::size_t i = 0; i < pos && ok; ++i)
      ok = (e.leq(src[pos], src[i]) == e.leq(dst[j], assign[i])) &&
           (e.leq(src[i], src[pos]) == e.leq(assign[i], dst[j]));
    if (!ok) continue;
    used[j] = true;
    assign[pos] = dst[j];
    enum_order_isos(e, src, dst, pos + 1, assign, used, out, first_only);
    used[j] = false;
  }
}

std::vector<PartialBijection> order_isos(const FiniteSemilattice& e,
                                         std::uint32_t x, std::uint32_t y,
                                         bool first_only) {
  const auto src = principal_ideal(e, x);
  const auto dst = principal_ideal(e, y);
  std::vector<PartialBijection> out;
  if (src.size() != dst.size()) return out;
  std::vector<std::uint32_t> assign(src.size());
  std::vector<bool> used(dst.size(), false);
  enum_order_isos(e, src, dst, 0, assign, used, out, first_only);
  return out;
}

}  // namespace

std::vector<std::pair<std::uint32_t, std::uint32_t>> compat_pairs(
    const FiniteSemilattice& e) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t x = 0; x < e.size(); ++x)
    for (std::uint32_t y = 0; y < e.size(); ++y)
      if (!order_isos(e, x, y, /*first_only=*/true).empty())
        out.emplace_back(x, y);
  return out;
}

std::vector<MunnElement> munn_semigroup(const FiniteSemilattice& e) {
  std::vector<MunnElement> out;
  for (std::uint32_t x = 0; x < e.size(); ++x)
    for (std::uint32_t y = 0; y < e.size(); ++y)
      for (auto& f : order_isos(e, x, y, /*first_only=*/false))
        out.push_back(MunnElement{std::move(f), x, y});
  std::sort(out.begin(), out.end(),
            [](const MunnElement& a, const MunnElement& b) {
              return std::tie(a.source_apex, a.target_apex, a.map) <
                     std::tie(b.source_apex, b.target_apex, b.map);
            });

  std::set<PartialBijection> members;
  for (const auto& m : out) members.insert(m.map);
  for (const auto& a : out) {
    if (!members.count(invert(a.map)))
      throw InternalConsistencyError("Munn semigroup not closed under invert");
    for (const auto& b : out)
      if (!members.count(compose(a.map, b.map)))
        throw InternalConsistencyError(
            "Munn semigroup not closed under compose");
  }
  return out;
}

bool is_munn_member(const FiniteSemilattice& e, const PartialBijection& f) {
  for (const auto& [s, t] : f.entries())
    if (s >= e.size() || t >= e.size())
      throw MalformedQueryError("map point out of range");

  // (a) dom(f) and im(f) are principal ideals.
  auto is_ideal = [&e](const std::vector<std::uint32_t>& pts) {
    for (std::uint32_t x = 0; x < e.size(); ++x)
      if (principal_ideal(e, x) == pts) return true;
    return false;
  };
  if (!is_ideal(f.domain()) || !is_ideal(f.image())) return false;

  // (b) x <= y iff f(x) <= f(y).
  for (const auto& [x, fx] : f.entries())
    for (const auto& [y, fy] : f.entries())
      if (e.leq(x, y) != e.leq(fx, fy)) return false;
  return true;
}

}  // namespace cantorlab
