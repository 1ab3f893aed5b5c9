#include <doctest.h>

#include "cantorlab/errors.hpp"
#include "cantorlab/json_io.hpp"

using namespace cantorlab;

TEST_CASE("partial bijection round trip") {
  const auto f = PartialBijection::from_entries({{0, 3}, {1, 4}});
  CHECK(pbij_from_json(to_json(f)) == f);
  CHECK(to_json(f) == json{{"entries", {{0, 3}, {1, 4}}}});
  CHECK_THROWS_AS(pbij_from_json(json{{"wrong", 1}}), MalformedQueryError);
  CHECK_THROWS_AS(pbij_from_json(json::parse(R"({"entries":[[0,1],[0,2]]})")),
                  MalformedQueryError);
}

TEST_CASE("semilattice round trip") {
  const auto e = FiniteSemilattice::chain(3);
  const auto j = to_json(e);
  CHECK(j.at("size") == 3);
  CHECK(semilattice_from_json(j).meet_table() == e.meet_table());
  CHECK_THROWS_AS(semilattice_from_json(json{{"size", 2}}),
                  MalformedQueryError);
}

TEST_CASE("clopen round trip with the whole-space word") {
  const auto c = Clopen::from_words({"00", "1"});
  CHECK(clopen_from_json(to_json(c)) == c);
  CHECK(clopen_from_json(json{{"words", {""}}}) == Clopen::whole());
  CHECK(clopen_from_json(json{{"words", json::array()}}) == Clopen());
  CHECK_THROWS_AS(clopen_from_json(json{{"words", {"2"}}}),
                  MalformedQueryError);
}

TEST_CASE("prefix map round trip") {
  const auto h =
      PrefixMap::from_rules({{"00", "0"}, {"01", "10"}, {"1", "11"}});
  CHECK(prefix_map_from_json(to_json(h)) == h);
  CHECK_THROWS_AS(prefix_map_from_json(json{{"rules", {{"0", "0"}, {"00", "1"}}}}),
                  MalformedQueryError);
}

TEST_CASE("truncated lattice map round trip") {
  const auto m = encode(PrefixMap::bit_flip(), 2);
  const auto j = to_json(m);
  CHECK(j.at("depth") == 2);
  CHECK(tlm_from_json(j) == m);
}

TEST_CASE("inverse semigroup table round trip") {
  const auto s = FiniteSemilattice::chain(2).as_inverse_semigroup();
  const auto j = to_json(s);
  const auto back = fis_from_json(j);
  CHECK(back.product == s.product);
  CHECK(back.inverse == s.inverse);
}

TEST_CASE("rational and verdict serialization") {
  CHECK(to_json(Rational{7, 8}) == json{{"num", 7}, {"den", 8}});
  ConvergenceVerdict v;
  v.refuted = true;
  v.witness = ConvergenceWitness{0, 9, ConvCondition::ii_inverse};
  const auto j = to_json(v);
  CHECK(j.at("status") == "refuted");
  CHECK(j.at("witness").at("condition") == "ii-inverse");
}
