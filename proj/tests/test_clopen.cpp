#include <doctest.h>

#include <set>

#include "cantorlab/clopen.hpp"
#include "cantorlab/errors.hpp"
#include "cantorlab/sampling.hpp"

using namespace cantorlab;

namespace {

Clopen cw(std::vector<std::string> ws) { return Clopen::from_words(std::move(ws)); }

// Point-sampling oracle: membership of each depth-8 cylinder.
bool contains_word(const Clopen& c, const std::string& w) {
  for (const auto& p : c.words())
    if (w.compare(0, p.size(), p) == 0) return true;
  return false;
}

std::set<std::string> depth8_points(const Clopen& c) {
  std::set<std::string> out;
  for (int i = 0; i < 256; ++i) {
    std::string w(8, '0');
    for (int b = 0; b < 8; ++b)
      if (i >> (7 - b) & 1) w[b] = '1';
    if (contains_word(c, w)) out.insert(w);
  }
  return out;
}

}  // namespace

TEST_CASE("canonicalization") {
  CHECK(cw({"00", "01"}) == cw({"0"}));
  CHECK(cw({"0", "01"}) == cw({"0"}));
  CHECK(cw({"00", "01", "10", "11"}) == Clopen::whole());
  CHECK(cw({}) == Clopen());
  CHECK_THROWS_AS(cw({"02"}), MalformedQueryError);
}

TEST_CASE("lattice operations on fixed inputs") {
  CHECK(clopen_union(cw({"0"}), cw({"1"})) == Clopen::whole());
  CHECK(clopen_intersect(cw({"0"}), cw({"01"})) == cw({"01"}));
  CHECK(clopen_complement(cw({"00"})) == cw({"01", "1"}));
  CHECK(clopen_minus(cw({"0"}), cw({"01"})) == cw({"00"}));
}

TEST_CASE("lattice operations agree with the point-sampling oracle") {
  sampling::Rng rng(5);
  std::set<std::string> all;
  for (const auto& w : depth8_points(Clopen::whole())) all.insert(w);
  for (int i = 0; i < 1000; ++i) {
    const auto a = sampling::random_clopen(rng, 1 + int(rng() % 4));
    const auto b = sampling::random_clopen(rng, 1 + int(rng() % 4));
    const auto c = sampling::random_clopen(rng, 1 + int(rng() % 4));
    const auto pa = depth8_points(a), pb = depth8_points(b);

    std::set<std::string> want;
    std::set_union(pa.begin(), pa.end(), pb.begin(), pb.end(),
                   std::inserter(want, want.end()));
    CHECK(depth8_points(clopen_union(a, b)) == want);
    want.clear();
    std::set_intersection(pa.begin(), pa.end(), pb.begin(), pb.end(),
                          std::inserter(want, want.end()));
    CHECK(depth8_points(clopen_intersect(a, b)) == want);
    want.clear();
    std::set_difference(all.begin(), all.end(), pa.begin(), pa.end(),
                        std::inserter(want, want.end()));
    CHECK(depth8_points(clopen_complement(a)) == want);

    // De Morgan and absorption
    CHECK(clopen_complement(clopen_union(a, b)) ==
          clopen_intersect(clopen_complement(a), clopen_complement(b)));
    CHECK(clopen_complement(clopen_intersect(a, b)) ==
          clopen_union(clopen_complement(a), clopen_complement(b)));
    CHECK(clopen_union(a, clopen_intersect(a, c)) == a);
    CHECK(clopen_intersect(a, clopen_union(a, c)) == a);

    // canonical equality iff semantic equality
    CHECK((a == b) == (pa == pb));
    CHECK(clopen_subset(a, b) ==
          std::includes(pb.begin(), pb.end(), pa.begin(), pa.end()));
  }
}

TEST_CASE("subset on fixed inputs") {
  CHECK(clopen_subset(cw({"00"}), cw({"0"})));
  CHECK_FALSE(clopen_subset(cw({"0"}), cw({"00"})));
  CHECK(clopen_subset(Clopen(), cw({"11"})));
  CHECK(clopen_subset(Clopen(), Clopen()));
}

TEST_CASE("enumerate_base sizes and closure") {
  CHECK(enumerate_base(0) ==
        std::vector<Clopen>{Clopen(), Clopen::whole()});
  CHECK(enumerate_base(1) ==
        std::vector<Clopen>{Clopen(), cw({"0"}), cw({"1"}), Clopen::whole()});
  const auto b2 = enumerate_base(2);
  CHECK(b2.size() == 16);
  std::set<Clopen> s2(b2.begin(), b2.end());
  CHECK(s2.size() == 16);
  for (const auto& a : b2)
    for (const auto& b : b2) {
      CHECK(s2.count(clopen_union(a, b)));
      CHECK(s2.count(clopen_intersect(a, b)));
    }
  CHECK_THROWS_AS(enumerate_base(5), ResourceLimitError);
}

TEST_CASE("tilde_truncated") {
  CHECK(tilde_truncated(cw({"0"}), 2) ==
        std::vector<Clopen>{Clopen(), cw({"00"}), cw({"01"}), cw({"0"})});
  CHECK(tilde_truncated(Clopen(), 1) == std::vector<Clopen>{Clopen()});
  CHECK(tilde_truncated(Clopen::whole(), 1) == enumerate_base(1));
}

TEST_CASE("hereditary sublattice membership") {
  CHECK(is_hereditary_sublattice(tilde_truncated(cw({"0"}), 2), 2));
  CHECK_FALSE(
      is_hereditary_sublattice({Clopen(), cw({"00"}), cw({"01"})}, 2));
  CHECK(is_hereditary_sublattice({Clopen()}, 2));
  CHECK_FALSE(is_hereditary_sublattice({}, 2));
  CHECK_THROWS_AS(is_hereditary_sublattice({cw({"000"})}, 2),
                  MalformedQueryError);
}

TEST_CASE("depth-2 census: hereditary families are exactly the tildes") {
  const auto b2 = enumerate_base(2);
  std::set<std::set<Clopen>> tildes;
  for (const auto& v : b2) {
    const auto t = tilde_truncated(v, 2);
    tildes.insert(std::set<Clopen>(t.begin(), t.end()));
  }
  CHECK(tildes.size() == 16);
  int passing = 0;
  for (int mask = 0; mask < (1 << 16); ++mask) {
    std::vector<Clopen> fam;
    for (int i = 0; i < 16; ++i)
      if (mask >> i & 1) fam.push_back(b2[i]);
    if (is_hereditary_sublattice(fam, 2)) {
      ++passing;
      CHECK(tildes.count(std::set<Clopen>(fam.begin(), fam.end())));
    }
  }
  CHECK(passing == 16);
}

TEST_CASE("carac_c_check") {
  CHECK(carac_c_check(tilde_truncated(Clopen::whole(), 1), 1));
  CHECK_FALSE(carac_c_check({Clopen(), cw({"00"}), cw({"01"})}, 2));
  CHECK(carac_c_check({Clopen()}, 2));
  // agrees with the hereditary test on down-closed families
  sampling::Rng rng(13);
  const auto b2 = enumerate_base(2);
  for (int i = 0; i < 200; ++i) {
    std::vector<Clopen> fam;
    for (const auto& c : b2)
      if (rng() % 2) fam.push_back(c);
    if (is_hereditary_sublattice(fam, 2)) CHECK(carac_c_check(fam, 2));
  }
}

TEST_CASE("fell membership") {
  CHECK(fell_membership(cw({"0"}), FellKind::v_minus, cw({"01"})));
  CHECK_FALSE(fell_membership(cw({"0"}), FellKind::v_plus, cw({"1"})));
  CHECK_FALSE(fell_membership(Clopen(), FellKind::v_minus, Clopen::whole()));
  CHECK(fell_membership(Clopen(), FellKind::v_plus, Clopen()));
}
