#include "cantorlab/pbij.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cantorlab/errors.hpp"

namespace cantorlab {

PartialBijection PartialBijection::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end());
  std::set<std::uint32_t> targets;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i && entries[i].first == entries[i - 1].first)
      throw MalformedQueryError("duplicate source " +
                                std::to_string(entries[i].first));
    if (!targets.insert(entries[i].second).second)
      throw MalformedQueryError("duplicate target " +
                                std::to_string(entries[i].second));
  }
  PartialBijection f;
  f.entries_ = std::move(entries);
  return f;
}

std::optional<std::uint32_t> PartialBijection::apply(std::uint32_t x) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), x,
                             [](const Entry& e, std::uint32_t v) {
                               return e.first < v;
                             });
  if (it != entries_.end() && it->first == x) return it->second;
  return std::nullopt;
}

std::optional<std::uint32_t> PartialBijection::preimage(
    std::uint32_t y) const {
  for (const auto& [s, t] : entries_)
    if (t == y) return s;
  return std::nullopt;
}

std::vector<std::uint32_t> PartialBijection::domain() const {
  std::vector<std::uint32_t> out;
  out.reserve(entries_.size());
  for (const auto& [s, t] : entries_) out.push_back(s);
  return out;
}

std::vector<std::uint32_t> PartialBijection::image() const {
  std::vector<std::uint32_t> out;
  out.reserve(entries_.size());
  for (const auto& [s, t] : entries_) out.push_back(t);
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(const PartialBijection& f) {
  std::string out = "{";
  for (std::size_t i = 0; i < f.entries().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(f.entries()[i].first) + "->" +
           std::to_string(f.entries()[i].second);
  }
  return out + "}";
}

PartialBijection compose(const PartialBijection& f,
                         const PartialBijection& g) {
  std::vector<PartialBijection::Entry> entries;
  for (const auto& [x, gx] : g.entries())
    if (auto fgx = f.apply(gx)) entries.emplace_back(x, *fgx);
  return PartialBijection::from_entries(std::move(entries));
}

PartialBijection invert(const PartialBijection& f) {
  std::vector<PartialBijection::Entry> entries;
  entries.reserve(f.size());
  for (const auto& [s, t] : f.entries()) entries.emplace_back(t, s);
  return PartialBijection::from_entries(std::move(entries));
}

PartialBijection partial_identity(std::vector<std::uint32_t> points) {
  std::vector<PartialBijection::Entry> entries;
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  for (std::uint32_t p : points) entries.emplace_back(p, p);
  return PartialBijection::from_entries(std::move(entries));
}

bool is_idempotent(const PartialBijection& f) {
  for (const auto& [s, t] : f.entries())
    if (s != t) return false;
  return true;
}

bool subbasic_membership(const PartialBijection& f, Subbasic kind,
                         std::uint32_t x, std::optional<std::uint32_t> y) {
  switch (kind) {
    case Subbasic::v:
      if (!y) throw MalformedQueryError("subbasic v(x,y) requires y");
      return f.apply(x) == y;
    case Subbasic::w1:
      return !f.in_domain(x);
    case Subbasic::w2:
      return !f.in_image(x);
  }
  throw MalformedQueryError("unknown subbasic kind");
}

namespace {

// Does term satisfy the pointwise requirement at x for the given limit?
bool point_ok(const PartialBijection& term, const PartialBijection& limit,
              std::uint32_t x) {
  if (auto y = limit.apply(x)) return term.apply(x) == y;  // condition (i)
  return !term.in_domain(x);                               // condition (ii)
}

// Within a finite window, a witness n0 holding through the last term exists
// iff the last term itself satisfies the requirement.
std::optional<ConvergenceWitness> check_direction(
    const std::vector<PartialBijection>& terms, const PartialBijection& limit,
    std::uint32_t x, bool inverted) {
  if (point_ok(terms.back(), limit, x)) return std::nullopt;
  ConvCondition cond;
  if (limit.in_domain(x))
    cond = inverted ? ConvCondition::i_inverse : ConvCondition::i;
  else
    cond = inverted ? ConvCondition::ii_inverse : ConvCondition::ii;
  return ConvergenceWitness{x, terms.size() - 1, cond};
}

}  // namespace

ConvergenceVerdict check_convergence(const SequenceWindow& w,
                                     bool strict_inverse) {
  if (w.terms.empty())
    throw MalformedQueryError("sequence window requires at least one term");
  std::vector<PartialBijection> inv_terms;
  PartialBijection inv_limit;
  if (strict_inverse) {
    inv_terms.reserve(w.terms.size());
    for (const auto& t : w.terms) inv_terms.push_back(invert(t));
    inv_limit = invert(w.claimed_limit);
  }
  for (std::uint32_t x = 0; x <= w.window_bound; ++x) {
    if (auto wit = check_direction(w.terms, w.claimed_limit, x, false))
      return {true, wit};
    if (strict_inverse)
      if (auto wit = check_direction(inv_terms, inv_limit, x, true))
        return {true, wit};
  }
  return {false, std::nullopt};
}

std::string to_string(const Rational& r) {
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

namespace {

// 1 where f and g disagree at x (domain status or value), else 0.
int delta(const PartialBijection& f, const PartialBijection& g,
          std::uint32_t x) {
  return f.apply(x) == g.apply(x) ? 0 : 1;
}

}  // namespace

Rational tau_pp_distance(const PartialBijection& f, const PartialBijection& g,
                         std::uint32_t horizon) {
  if (horizon > 60) throw ResourceLimitError("metric horizon limited to 60");
  const PartialBijection fi = invert(f), gi = invert(g);
  // Scale by 2^(horizon+1): weight 2^-(x+1) becomes 2^(horizon-x).
  long long num = 0;
  for (std::uint32_t x = 0; x <= horizon; ++x) {
    const long long w = 1ll << (horizon - x);
    num += w * delta(f, g, x);
    num += w * delta(fi, gi, x);
  }
  long long den = 1ll << (horizon + 1);
  const long long d = std::gcd(num, den);
  return {num / d, den / d};
}

void FiniteInverseSemigroup::validate() const {
  if (product.size() != size || inverse.size() != size)
    throw MalformedQueryError("table dimensions disagree with size");
  for (const auto& row : product) {
    if (row.size() != size)
      throw MalformedQueryError("product table is not square");
    for (auto v : row)
      if (v >= size) throw MalformedQueryError("product entry out of range");
  }
  for (auto v : inverse)
    if (v >= size) throw MalformedQueryError("inverse entry out of range");

  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = 0; b < size; ++b)
      for (std::size_t c = 0; c < size; ++c)
        if (product[product[a][b]][c] != product[a][product[b][c]])
          throw InternalConsistencyError("product table is not associative");

  for (std::uint32_t s = 0; s < size; ++s) {
    std::size_t count = 0;
    for (std::uint32_t t = 0; t < size; ++t) {
      const bool sts = product[product[s][t]][s] == s;
      const bool tst = product[product[t][s]][t] == t;
      if (sts && tst) {
        ++count;
        if (t != inverse[s])
          throw InternalConsistencyError(
              "inverse table disagrees with the semigroup inverse of " +
              std::to_string(s));
      }
    }
    if (count != 1)
      throw InternalConsistencyError("element " + std::to_string(s) +
                                     " has " + std::to_string(count) +
                                     " inverses");
  }
}

std::vector<PartialBijection> wagner_preston(
    const FiniteInverseSemigroup& s) {
  s.validate();
  const auto& p = s.product;
  std::vector<PartialBijection> theta;
  theta.reserve(s.size);
  for (std::uint32_t a = 0; a < s.size; ++a) {
    // x in dom iff a^{-1}·a·x = x; the translation is x -> a·x.
    const std::uint32_t e = p[s.inverse[a]][a];
    std::vector<PartialBijection::Entry> entries;
    for (std::uint32_t x = 0; x < s.size; ++x)
      if (p[e][x] == x) entries.emplace_back(x, p[a][x]);
    theta.push_back(PartialBijection::from_entries(std::move(entries)));
  }
  for (std::uint32_t a = 0; a < s.size; ++a)
    for (std::uint32_t b = 0; b < s.size; ++b) {
      if (a != b && theta[a] == theta[b])
        throw InternalConsistencyError(
            "representation is not injective on the input table");
      if (theta[p[a][b]] != compose(theta[a], theta[b]))
        throw InternalConsistencyError(
            "representation is not a homomorphism on the input table");
    }
  return theta;
}

}  // namespace cantorlab
