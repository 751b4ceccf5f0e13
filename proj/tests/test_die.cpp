#include <numeric>

#include "doctest.h"
#include "intransitive/die.hpp"
#include "intransitive/rng.hpp"
#include "intransitive/samplers.hpp"
#include "oracles.hpp"

using namespace intransitive;

namespace {

oracle::Faces faces_of(const Die& d) { return {d.faces().begin(), d.faces().end()}; }

}  // namespace

TEST_CASE("die construction validates faces and sum") {
  CHECK_NOTHROW(Die({1, 1, 4, 4}));
  CHECK_THROWS_AS(Die({1, 1, 4, 5}), std::invalid_argument);
  CHECK_THROWS_AS(Die({0, 2, 4, 4}), std::invalid_argument);
  CHECK_THROWS_AS(Die({1, 2, 3, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Die(std::vector<int>{}), std::invalid_argument);
  CHECK(Die({4, 4, 1, 1}, Model::multiset_canonical) == Die({1, 1, 4, 4}, Model::multiset_canonical));
  CHECK(faces_of(Die({4, 1, 4, 1})) == oracle::Faces{4, 1, 4, 1});
  CHECK(to_string(Die({1, 1, 4, 4})) == "(1,1,4,4)");
  CHECK(parse_die(" 1, 3,3 ,3") == Die({1, 3, 3, 3}));
  CHECK_THROWS_AS(parse_die("1,x,3"), std::invalid_argument);
}

TEST_CASE("half integers keep doubled units") {
  const HalfInteger h = HalfInteger::from_doubled(-3);
  CHECK(h.value() == -1.5);
  CHECK((h + HalfInteger::from_doubled(5)).doubled() == 2);
  CHECK(HalfInteger::from_doubled(1) > h);
}

TEST_CASE("beats on the worked example") {
  const Die a({1, 1, 4, 4}), b({1, 3, 3, 3});
  const BeatOutcome r = beats(a, b);
  CHECK(r.greater == 8);
  CHECK(r.less == 6);
  CHECK(r.equal == 2);
  CHECK(r.verdict == Verdict::a_wins);
  const BeatOutcome s = beats(b, a);
  CHECK(s.greater == 6);
  CHECK(s.less == 8);
  CHECK(s.verdict == Verdict::b_wins);
  CHECK(beats(a, a).verdict == Verdict::tie);
  CHECK_THROWS_AS(beats(a, Die({1, 2, 3})), std::invalid_argument);
}

TEST_CASE("f and g from their definitions") {
  const Die a({1, 1, 4, 4});
  CHECK(f_of(a, 1).doubled() == 2);
  CHECK(f_of(a, 4).doubled() == 6);
  const std::vector<std::int64_t> g{1, 1, -1, -1};
  CHECK(g_table_doubled(a) == g);
  for (int j = 1; j <= 4; ++j) CHECK(g_of(a, j).doubled() == g[j - 1]);
  CHECK_THROWS_AS(f_of(a, 0), std::out_of_range);
  CHECK_THROWS_AS(g_of(a, 5), std::out_of_range);
  for (int n = 1; n <= 20; ++n) {
    const Die s = Die::standard(n);
    for (int j = 1; j <= n; ++j) CHECK(g_of(s, j).doubled() == 0);
  }
}

TEST_CASE("f sums to n^2/2 and g sums to zero on sampled dice") {
  for (int n : {3, 7, 20, 51}) {
    for (std::uint64_t t = 0; t < 20; ++t) {
      RngStream rng(11, t);
      const Die d = sample_die(n, Model::balanced_sequence, rng);
      const auto faces = faces_of(d);
      std::int64_t f = 0, g = 0;
      for (int j = 1; j <= n; ++j) {
        CHECK(f_of(d, j).doubled() == oracle::f2(faces, j));
        f += f_of(d, j).doubled();
        g += g_of(d, j).doubled();
      }
      CHECK(f == static_cast<std::int64_t>(n) * n);
      CHECK(g == 0);
    }
  }
}

TEST_CASE("score sum on the worked example") {
  const Die a({1, 1, 4, 4}), b({1, 3, 3, 3});
  CHECK(score_sum(a, b).doubled() == -2);
  CHECK(verdict_from_score(score_sum(a, b)) == Verdict::a_wins);
  CHECK(verdict_from_score(score_sum(a, a)) == Verdict::tie);
}

TEST_CASE("exhaustive reduction and duality for n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    const auto seqs = oracle::balanced_sequences(n);
    std::vector<Die> dice;
    for (const auto& s : seqs) dice.emplace_back(s);
    for (std::size_t i = 0; i < dice.size(); ++i) {
      for (std::size_t j = 0; j < dice.size(); ++j) {
        const BeatOutcome r = beats(dice[i], dice[j]);
        const oracle::Pairs p = oracle::pairs(seqs[i], seqs[j]);
        REQUIRE(r.greater == p.greater);
        REQUIRE(r.less == p.less);
        REQUIRE(r.equal == p.equal);
        REQUIRE(verdict_from_score(score_sum(dice[i], dice[j])) == r.verdict);
        const bool dual = beats(complement(dice[j]), complement(dice[i])).verdict == Verdict::a_wins;
        REQUIRE(dual == (r.verdict == Verdict::a_wins));
      }
    }
  }
}

TEST_CASE("random pairs at larger n") {
  for (int n : {50, 100}) {
    for (std::uint64_t t = 0; t < 10000; ++t) {
      RngStream rng(5, t);
      const Die a = sample_die(n, Model::balanced_sequence, rng);
      const Die b = sample_die(n, Model::balanced_sequence, rng);
      const BeatOutcome r = beats(a, b);
      REQUIRE(r.greater + r.less + r.equal == static_cast<std::int64_t>(n) * n);
      const BeatOutcome s = beats(b, a);
      REQUIRE(s.greater == r.less);
      REQUIRE(s.less == r.greater);
      REQUIRE(score_sum(a, b).doubled() * score_sum(b, a).doubled() <= 0);
      REQUIRE((score_sum(a, b).doubled() == 0) == (score_sum(b, a).doubled() == 0));
      REQUIRE(verdict_from_score(score_sum(a, b)) == r.verdict);
      if (t < 500) REQUIRE(beats_reference(a, b) == r);
    }
  }
}

TEST_CASE("complement") {
  CHECK(faces_of(complement(Die({1, 1, 4, 4}))) == oracle::Faces{4, 4, 1, 1});
  const Die s = Die::standard(6);
  CHECK(faces_of(complement(s)) == oracle::Faces{6, 5, 4, 3, 2, 1});
  RngStream rng(3, 0);
  for (int i = 0; i < 50; ++i) {
    const Die d = sample_die(17, Model::balanced_sequence, rng);
    CHECK(complement(complement(d)) == d);
  }
  CHECK(complement(Die({1, 1, 4, 4}, Model::multiset_canonical)).model() == Model::multiset_canonical);
}
