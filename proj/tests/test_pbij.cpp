#include <doctest.h>

#include <set>

#include "cantorlab/errors.hpp"
#include "cantorlab/pbij.hpp"
#include "cantorlab/sampling.hpp"

using namespace cantorlab;

namespace {

PartialBijection pb(std::vector<std::pair<std::uint32_t, std::uint32_t>> e) {
  return PartialBijection::from_entries(std::move(e));
}

// Pointwise oracle: evaluate f(g(x)) directly over a window of points.
PartialBijection compose_oracle(const PartialBijection& f,
                                const PartialBijection& g) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> e;
  for (std::uint32_t x = 0; x < 64; ++x)
    if (auto gx = g.apply(x))
      if (auto fgx = f.apply(*gx)) e.emplace_back(x, *fgx);
  return PartialBijection::from_entries(std::move(e));
}

}  // namespace

TEST_CASE("compose follows the composite-domain rule") {
  CHECK(compose(pb({{1, 2}}), pb({{0, 1}})) == pb({{0, 2}}));
  CHECK(compose(pb({{0, 1}}), pb({{0, 1}})) == pb({}));
  CHECK(compose(pb({{0, 1}, {1, 0}}), pb({{0, 0}, {1, 1}, {2, 2}})) ==
        pb({{0, 1}, {1, 0}}));
}

TEST_CASE("compose agrees with the pointwise oracle on random pairs") {
  sampling::Rng rng(7);
  for (int i = 0; i < 300; ++i) {
    const auto f = sampling::random_pbij(rng, 12);
    const auto g = sampling::random_pbij(rng, 12);
    CHECK(compose(f, g) == compose_oracle(f, g));
  }
}

TEST_CASE("invert reverses entries and satisfies the inverse axioms") {
  CHECK(invert(pb({{0, 3}, {1, 4}})) == pb({{3, 0}, {4, 1}}));
  CHECK(invert(pb({})) == pb({}));
  sampling::Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto f = sampling::random_pbij(rng, 10);
    const auto g = invert(f);
    CHECK(compose(compose(f, g), f) == f);
    CHECK(compose(compose(g, f), g) == g);
  }
}

TEST_CASE("from_entries rejects non-functional and non-injective input") {
  CHECK_THROWS_AS(pb({{0, 1}, {0, 2}}), MalformedQueryError);
  CHECK_THROWS_AS(pb({{0, 1}, {2, 1}}), MalformedQueryError);
}

TEST_CASE("partial identities") {
  CHECK(partial_identity({0, 1}) == pb({{0, 0}, {1, 1}}));
  CHECK(partial_identity({}) == pb({}));
  const auto e = partial_identity({5});
  CHECK(e == pb({{5, 5}}));
  CHECK(compose(e, e) == e);
}

TEST_CASE("idempotents are exactly the partial identities") {
  CHECK(is_idempotent(pb({{0, 0}, {2, 2}})));
  CHECK_FALSE(is_idempotent(pb({{0, 1}})));
  // brute-force compose oracle on every element of I({0,1,2})
  for (const auto& f : sampling::all_pbijs({0, 1, 2}))
    CHECK(is_idempotent(f) == (compose(f, f) == f));
}

TEST_CASE("subbasic membership") {
  const auto f = pb({{0, 1}});
  CHECK(subbasic_membership(f, Subbasic::v, 0, 1));
  CHECK_FALSE(subbasic_membership(f, Subbasic::v, 0, 2));
  CHECK(subbasic_membership(f, Subbasic::w1, 2, {}));
  CHECK_FALSE(subbasic_membership(f, Subbasic::w1, 0, {}));
  CHECK_FALSE(subbasic_membership(f, Subbasic::w2, 1, {}));
  CHECK(subbasic_membership(f, Subbasic::w2, 0, {}));
  CHECK_THROWS_AS(subbasic_membership(f, Subbasic::v, 0, {}),
                  MalformedQueryError);
}

TEST_CASE("convergence: growing partial identities toward a larger one") {
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
  CHECK_FALSE(check_convergence(w, true).refuted);
  CHECK_FALSE(check_convergence(w, false).refuted);
}

TEST_CASE("convergence: the image-side escape sequence") {
  // f_n = {n -> 0}: domains escape every point but 0 stays in every image.
  SequenceWindow w;
  for (std::uint32_t n = 0; n < 10; ++n) w.terms.push_back(pb({{n, 0}}));
  w.claimed_limit = pb({});
  w.window_bound = 3;
  CHECK_FALSE(check_convergence(w, false).refuted);
  const auto verdict = check_convergence(w, true);
  REQUIRE(verdict.refuted);
  REQUIRE(verdict.witness.has_value());
  CHECK(verdict.witness->point == 0);
  CHECK(verdict.witness->condition == ConvCondition::ii_inverse);
}

TEST_CASE("convergence: constant sequences are consistent") {
  sampling::Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    SequenceWindow w;
    const auto f = sampling::random_pbij(rng, 8);
    for (int n = 0; n < 6; ++n) w.terms.push_back(f);
    w.claimed_limit = f;
    w.window_bound = 10;
    CHECK_FALSE(check_convergence(w, true).refuted);
    CHECK_FALSE(check_convergence(w, false).refuted);
  }
}

TEST_CASE("tau_pp_distance values and metric axioms") {
  const auto f = pb({{0, 1}});
  CHECK(tau_pp_distance(f, f, 20) == Rational{0, 1});
  CHECK(tau_pp_distance(pb({}), pb({{0, 0}}), 8) == Rational{1, 1});
  // forward mismatch at 0 (1/2), inverse mismatches at 1 (1/4) and 2 (1/8)
  CHECK(tau_pp_distance(pb({{0, 1}}), pb({{0, 2}}), 8) == Rational{7, 8});

  sampling::Rng rng(19);
  const auto leq = [](Rational a, Rational b) {
    return a.num * b.den <= b.num * a.den;
  };
  for (int i = 0; i < 500; ++i) {
    const auto a = sampling::random_pbij(rng, 10);
    const auto b = sampling::random_pbij(rng, 10);
    const auto c = sampling::random_pbij(rng, 10);
    CHECK(tau_pp_distance(a, b, 16) == tau_pp_distance(b, a, 16));
    const auto ab = tau_pp_distance(a, b, 16);
    const auto ac = tau_pp_distance(a, c, 16);
    const auto cb = tau_pp_distance(c, b, 16);
    CHECK(leq(ab, {ac.num * cb.den + cb.num * ac.den, ac.den * cb.den}));
    CHECK(leq(ab, {2, 1}));
  }
}

TEST_CASE("wagner_preston embeds small tables") {
  // 2-element chain as a semigroup: product = min
  FiniteInverseSemigroup chain2;
  chain2.size = 2;
  chain2.product = {{0, 0}, {0, 1}};
  chain2.inverse = {0, 1};
  const auto rep = wagner_preston(chain2);
  REQUIRE(rep.size() == 2);
  CHECK(rep[0] == partial_identity({0}));
  CHECK(rep[1] == partial_identity({0, 1}));

  FiniteInverseSemigroup one;
  one.size = 1;
  one.product = {{0}};
  one.inverse = {0};
  CHECK(wagner_preston(one) ==
        std::vector<PartialBijection>{partial_identity({0})});
}

TEST_CASE("wagner_preston is an injective homomorphism on sampled tables") {
  for (const auto& e : sampling::all_semilattices(3)) {
    const auto s = e.as_inverse_semigroup();
    const auto rep = wagner_preston(s);
    std::set<PartialBijection> distinct(rep.begin(), rep.end());
    CHECK(distinct.size() == s.size);
    for (std::uint32_t a = 0; a < s.size; ++a)
      for (std::uint32_t b = 0; b < s.size; ++b)
        CHECK(rep[s.product[a][b]] == compose(rep[a], rep[b]));
  }
}

TEST_CASE("FiniteInverseSemigroup validation rejects broken tables") {
  FiniteInverseSemigroup bad;
  bad.size = 2;
  bad.product = {{0, 1}, {1, 0}};  // xor: a group, but wrong inverse below
  bad.inverse = {1, 0};            // 0 is the identity; its inverse is 0
  CHECK_THROWS_AS(bad.validate(), InternalConsistencyError);
}
