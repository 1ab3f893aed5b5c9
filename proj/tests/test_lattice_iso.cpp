#include <doctest.h>

#include <set>

#include "cantorlab/errors.hpp"
#include "cantorlab/lattice_iso.hpp"
#include "cantorlab/sampling.hpp"

using namespace cantorlab;

namespace {

Clopen cw(std::vector<std::string> ws) { return Clopen::from_words(std::move(ws)); }

PrefixMap pm(std::vector<std::pair<std::string, std::string>> rules) {
  return PrefixMap::from_rules(std::move(rules));
}

TruncatedLatticeMap tlm(int d,
                        std::vector<std::pair<Clopen, Clopen>> entries) {
  return TruncatedLatticeMap::from_entries(d, std::move(entries));
}

const Clopen kEmpty = Clopen();
const Clopen kWhole = Clopen::whole();

TruncatedLatticeMap sigma_window_1() {
  return tlm(1, {{kEmpty, kEmpty},
                 {cw({"0"}), cw({"1"})},
                 {cw({"1"}), cw({"0"})},
                 {kWhole, kWhole}});
}

}  // namespace

TEST_CASE("window construction and validation") {
  CHECK_THROWS_AS(tlm(1, {{cw({"00"}), kEmpty}}), MalformedQueryError);
  CHECK_THROWS_AS(tlm(1, {{cw({"0"}), cw({"0"})}}),
                  MalformedQueryError);  // missing empty-set entry
  CHECK_NOTHROW(tlm(2, {}));
}

TEST_CASE("is_order_iso") {
  const auto identity1 = encode(PrefixMap::identity_on(kWhole), 1);
  CHECK(is_order_iso(identity1));
  CHECK(is_order_iso(sigma_window_1()));
  CHECK_FALSE(is_order_iso(tlm(1, {{kEmpty, kEmpty},
                                   {cw({"0"}), kWhole},
                                   {kWhole, cw({"0"})}})));
}

TEST_CASE("is_sb_member") {
  CHECK(is_sb_member(encode(PrefixMap::bit_flip(), 1)));
  CHECK_FALSE(is_sb_member(tlm(2, {{kEmpty, kEmpty},
                                   {cw({"00"}), cw({"00"})},
                                   {cw({"01"}), cw({"01"})}})));
  CHECK(is_sb_member(tlm(2, {{kEmpty, kEmpty}})));
}

TEST_CASE("is_s1_member collapses to is_order_iso") {
  sampling::Rng rng(47);
  for (int i = 0; i < 500; ++i) {
    const auto m = encode(sampling::random_prefix_map(rng, 2), 2);
    CHECK(is_s1_member(m) == is_order_iso(m));
    CHECK(is_s1_member(m));
  }
}

TEST_CASE("is_complete_finite") {
  CHECK(is_complete_finite(encode(PrefixMap::bit_flip(), 2)));
  CHECK(is_complete_finite(tlm(2, {{kEmpty, kEmpty}})));
  // {10} ∪ {11} = {1} is not a value while {00} ∪ {01} = {0} is a key
  CHECK_FALSE(is_complete_finite(tlm(2, {{kEmpty, kEmpty},
                                         {cw({"00"}), cw({"10"})},
                                         {cw({"01"}), cw({"11"})},
                                         {cw({"0"}), cw({"00"})}})));
}

TEST_CASE("hereditary_image") {
  // result order is the Clopen comparator, tilde order is the base order
  const auto as_set = [](const std::vector<Clopen>& v) {
    return std::set<Clopen>(v.begin(), v.end());
  };
  const auto m = encode(PrefixMap::bit_flip(), 2);
  CHECK(as_set(hereditary_image(m, tilde_truncated(cw({"0"}), 2))) ==
        as_set(tilde_truncated(cw({"1"}), 2)));
  CHECK(hereditary_image(m, {kEmpty}) == std::vector<Clopen>{kEmpty});
  const auto id2 = encode(PrefixMap::identity_on(kWhole), 2);
  const auto fam = tilde_truncated(cw({"1"}), 2);
  CHECK(as_set(hereditary_image(id2, fam)) == as_set(fam));
  CHECK_THROWS_AS(hereditary_image(m, {cw({"0"})}), MalformedQueryError);
}

TEST_CASE("encode on fixed maps") {
  CHECK(encode(PrefixMap::bit_flip(), 1) == sigma_window_1());
  CHECK(encode(pm({{"0", "0"}}), 1) ==
        tlm(1, {{kEmpty, kEmpty}, {cw({"0"}), cw({"0"})}}));
  CHECK(encode(pm({{"00", "0"}, {"01", "10"}, {"1", "11"}}), 1) ==
        tlm(1, {{kEmpty, kEmpty},
                {cw({"0"}), cw({"0", "10"})},
                {cw({"1"}), cw({"11"})},
                {kWhole, kWhole}}));
  CHECK_THROWS_AS(encode(PrefixMap::bit_flip(), 4), ResourceLimitError);
}

TEST_CASE("decode round trips and fixed windows") {
  const auto sigma = PrefixMap::bit_flip();
  CHECK(decode(encode(sigma, 2)) == sigma);
  CHECK(decode(sigma_window_1()) == sigma);
  const auto f = pm({{"00", "0"}, {"01", "10"}, {"1", "11"}});
  CHECK(decode(encode(f, 2)) == f);
  CHECK(decode(encode(f, 3)) == f);
  CHECK(decode(tlm(2, {})) == PrefixMap());
}

TEST_CASE("decode rejects windows with no prefix-exchange realization") {
  // A legitimate order isomorphism that scrambles cylinders non-locally:
  // each depth-2 cylinder maps to a split pair, so no suffix-preserving
  // prefix exchange realizes it.
  const auto bad = tlm(2, {{kEmpty, kEmpty},
                           {cw({"00"}), cw({"00", "11"})},
                           {cw({"01"}), cw({"01", "10"})},
                           {cw({"0"}), kWhole}});
  CHECK(is_sb_member(bad));
  CHECK_THROWS_AS(decode(bad), InconsistencyError);
}

TEST_CASE("decode requires an S(B) window") {
  CHECK_THROWS_AS(decode(tlm(2, {{kEmpty, kEmpty},
                                 {cw({"00"}), cw({"00"})},
                                 {cw({"01"}), cw({"01"})}})),
                  MalformedQueryError);
}

TEST_CASE("phi homomorphism check") {
  const auto sigma = PrefixMap::bit_flip();
  CHECK(phi_homomorphism_check(sigma, sigma, 2));
  CHECK(phi_homomorphism_check(pm({{"00", "0"}, {"01", "10"}, {"1", "11"}}),
                               sigma, 3));
  sampling::Rng rng(53);
  for (int i = 0; i < 100; ++i) {
    const auto f = sampling::random_prefix_map(rng, 2);
    CHECK(phi_homomorphism_check(f, PrefixMap(), 2));
    CHECK(phi_homomorphism_check(f, sampling::random_prefix_map(rng, 2), 2));
  }
}

TEST_CASE("phi is injective at matched depth") {
  sampling::Rng rng(59);
  for (int i = 0; i < 500; ++i) {
    const auto f = sampling::random_prefix_map(rng, 2);
    const auto g = sampling::random_prefix_map(rng, 2);
    if (f == g) continue;
    CHECK(encode(f, 2) != encode(g, 2));
  }
}

TEST_CASE("neighborhood correspondence identities") {
  const auto sigma = PrefixMap::bit_flip();
  CHECK(neighborhood_correspondence_check(cw({"0"}), cw({"1"}), {sigma}, 1));
  CHECK(neighborhood_correspondence_check(cw({"1"}), cw({"1"}),
                                          {pm({{"0", "0"}})}, 1));
  CHECK(neighborhood_correspondence_check(kEmpty, cw({"0"}), {sigma}, 1));
  CHECK_THROWS_AS(
      neighborhood_correspondence_check(cw({"000"}), kEmpty, {sigma}, 1),
      MalformedQueryError);
}

TEST_CASE("lemma fhat check") {
  const auto sigma = PrefixMap::bit_flip();
  CHECK(lemma_fhat_check(encode(sigma, 2)));
  CHECK(lemma_fhat_check(encode(PrefixMap(), 2)));
  CHECK(lemma_fhat_check(
      encode(pm({{"00", "0"}, {"01", "10"}, {"1", "11"}}), 2)));
}

TEST_CASE("window-level semigroup closure") {
  sampling::Rng rng(61);
  for (int i = 0; i < 100; ++i) {
    const auto f = sampling::random_prefix_map(rng, 2);
    const auto g = sampling::random_prefix_map(rng, 2);
    CHECK(is_sb_member(encode(pm_compose(f, g), 2)));
  }
}
