#include <doctest.h>

#include "oracles.hpp"
#include "sumprod/energy.hpp"

using namespace sumprod;
using oracles::rat;
using oracles::rset;

TEST_CASE("correlation examples") {
  RSet a = rset({"0", "1", "2"});
  RationalCountMap m = correlation(a, a, Group::additive);
  REQUIRE(m.entries.size() == 5);
  CHECK(m.entries[0] == std::pair(rat(-2), uint64_t(1)));
  CHECK(m.entries[1] == std::pair(rat(-1), uint64_t(2)));
  CHECK(m.entries[2] == std::pair(rat(0), uint64_t(3)));
  CHECK(m.entries[3] == std::pair(rat(1), uint64_t(2)));
  CHECK(m.entries[4] == std::pair(rat(2), uint64_t(1)));

  RSet g = rset({"1", "2", "4"});
  RationalCountMap mm = correlation(g, g, Group::multiplicative);
  REQUIRE(mm.entries.size() == 5);
  CHECK(mm.entries[0] == std::pair(rat(1, 4), uint64_t(1)));
  CHECK(mm.entries[1] == std::pair(rat(1, 2), uint64_t(2)));
  CHECK(mm.entries[2] == std::pair(rat(1), uint64_t(3)));
  CHECK(mm.entries[3] == std::pair(rat(2), uint64_t(2)));
  CHECK(mm.entries[4] == std::pair(rat(4), uint64_t(1)));

  RSet s = rset({"7"});
  RationalCountMap sm = correlation(s, s, Group::additive);
  REQUIRE(sm.entries.size() == 1);
  CHECK(sm.entries[0] == std::pair(rat(0), uint64_t(1)));

  CHECK_THROWS_AS(correlation(rset({"0", "1"}), g, Group::multiplicative), error);
  CHECK_THROWS_AS(correlation(RSet(), g, Group::additive), error);
}

TEST_CASE("countmap json") {
  RSet a = rset({"1", "2"});
  CHECK(countmap_to_json(correlation(a, a, Group::multiplicative)) ==
        "[{\"value\":\"1/2\",\"count\":\"1\"},{\"value\":\"1\",\"count\":\"2\"},"
        "{\"value\":\"2\",\"count\":\"1\"}]");
}

TEST_CASE("mass conservation") {
  oracles::Rng rng{3};
  for (int it = 0; it < 40; ++it) {
    RSet a = oracles::random_rset(rng, 1 + rng.next() % 9, 25, 6, false);
    RSet b = oracles::random_rset(rng, 1 + rng.next() % 9, 25, 6, false);
    for (Group g : {Group::additive, Group::multiplicative}) {
      for (PairForm f : {PairForm::correlation, PairForm::convolution}) {
        CHECK(pair_countmap(a, b, g, f).mass() == BigInt(a.size()) * BigInt(b.size()));
      }
    }
  }
}

TEST_CASE("energy examples") {
  CHECK(energy(rset({"0", "1", "2"}), 2, Group::additive).value == BigInt(19));
  CHECK(energy(rset({"1", "2", "4"}), 2, Group::multiplicative).value == BigInt(19));
  CHECK(energy(rset({"0", "1", "2"}), 3, Group::additive).value == BigInt(45));
  CHECK_THROWS_AS(energy(rset({"1"}), 1, Group::additive), error);
}

TEST_CASE("energy against quadruple and k-tuple oracles") {
  oracles::Rng rng{11};
  for (int it = 0; it < 30; ++it) {
    RSet a = oracles::random_rset(rng, 2 + rng.next() % 10, 18, 4, false);
    for (Group g : {Group::additive, Group::multiplicative}) {
      bool mult = g == Group::multiplicative;
      CHECK(energy(a, 2, g).value == oracles::energy2(a, a, mult));
      CHECK(energy(a, 3, g).value == oracles::energy_k(a, 3, mult));
      CHECK(energy(a, 4, g).value == oracles::energy_k(a, 4, mult));
    }
  }
}

TEST_CASE("mixed energy examples") {
  RSet z = rset({"0", "1"});
  CHECK(mixed_energy(z, z, Group::additive).value == BigInt(6));
  RSet one = rset({"1"});
  RSet two = rset({"1", "2"});
  CHECK(mixed_energy(one, two, Group::multiplicative).value == BigInt(2));
  oracles::Rng rng{19};
  for (int it = 0; it < 20; ++it) {
    RSet a = oracles::random_rset(rng, 1 + rng.next() % 8, 15, 4, false);
    for (Group g : {Group::additive, Group::multiplicative})
      CHECK(mixed_energy(a, a, g).value == energy(a, 2, g).value);
  }
}

TEST_CASE("three-way energy identity") {
  oracles::Rng rng{23};
  for (int it = 0; it < 40; ++it) {
    RSet a = oracles::random_rset(rng, 1 + rng.next() % 8, 20, 5, false);
    RSet b = oracles::random_rset(rng, 1 + rng.next() % 8, 20, 5, false);
    for (Group g : {Group::additive, Group::multiplicative}) {
      auto d = mixed_energy_three_ways(a, b, g);
      CHECK(d.consistent());
      CHECK(d.via_correlation == mixed_energy(a, b, g).value);
      CHECK(d.via_correlation == oracles::energy2(a, b, g == Group::multiplicative));
    }
  }
}

TEST_CASE("Cauchy-Schwarz bounds") {
  oracles::Rng rng{29};
  for (int it = 0; it < 40; ++it) {
    RSet a = oracles::random_rset(rng, 1 + rng.next() % 10, 22, 5, false);
    RSet b = oracles::random_rset(rng, 1 + rng.next() % 10, 22, 5, false);
    for (Group g : {Group::additive, Group::multiplicative}) {
      BigInt e = mixed_energy(a, b, g).value;
      BigInt na(a.size()), nb(b.size());
      CHECK(e <= na * na * nb);
      CHECK(e <= nb * nb * na);
      CHECK(e * e <= (na * nb).pow(3));
    }
  }
}

TEST_CASE("fiber identity and CS floor") {
  oracles::Rng rng{37};
  for (int it = 0; it < 30; ++it) {
    RSet a = oracles::random_rset(rng, 2 + rng.next() % 9, 18, 5, false);
    BigInt ex = energy(a, 2, Group::multiplicative).value;
    BigInt sum;
    auto fibers = fiber_decomposition(a);
    for (const auto& [lam, fib] : fibers) sum += BigInt(fib.size()) * BigInt(fib.size());
    CHECK(sum == ex);
    RSet quot = setop(SetOp::quotient, a, a);
    CHECK(fibers.size() == quot.size());
    CHECK(ex * BigInt(quot.size()) >= BigInt(a.size()).pow(4));
  }
}

TEST_CASE("dilation and translation invariance") {
  oracles::Rng rng{41};
  for (int it = 0; it < 20; ++it) {
    RSet a = oracles::random_rset(rng, 2 + rng.next() % 8, 15, 4, false);
    Rational u = rat(3, 7), v = rat(-5, 2);
    CHECK(energy(a, 2, Group::multiplicative).value ==
          energy(dilate(a, u), 2, Group::multiplicative).value);
    CHECK(energy(a, 3, Group::multiplicative).value ==
          energy(dilate(a, rat(-2)), 3, Group::multiplicative).value);
    CHECK(energy(a, 2, Group::additive).value ==
          energy(translate(a, v), 2, Group::additive).value);
    CHECK(energy(a, 2, Group::additive).value ==
          energy(dilate(a, u), 2, Group::additive).value);
  }
}

TEST_CASE("fast and generic counting paths agree") {
  // elements far beyond the tiny profile force the generic path
  std::vector<Rational> huge;
  for (int i = 0; i < 8; ++i) huge.push_back(Rational(BigInt(2).pow(40 + 7 * i)));
  RSet g(std::move(huge));
  CHECK(energy(g, 2, Group::multiplicative).value == oracles::energy_k(g, 2, true));
  CHECK(energy(g, 3, Group::additive).value == oracles::energy_k(g, 3, false));
  // mixed magnitudes exercise the small/big split inside one run
  std::vector<Rational> mix;
  for (const char* t : {"1", "2", "3", "4", "6", "9", "12", "17"})
    mix.push_back(Rational::parse(t));
  mix.push_back(Rational(BigInt(2).pow(90)));
  mix.push_back(Rational::make(BigInt(1), BigInt(2).pow(90)));
  RSet m(std::move(mix));
  CHECK(energy(m, 2, Group::multiplicative).value == oracles::energy_k(m, 2, true));
  CHECK(energy(m, 2, Group::additive).value == oracles::energy_k(m, 2, false));
}

TEST_CASE("energy with zero under the quadruple convention") {
  CHECK(mult_energy_allowing_zero(rset({"0"})) == BigInt(1));
  CHECK(mult_energy_allowing_zero(rset({"0", "1"})) == BigInt(10));
  oracles::Rng rng{47};
  for (int it = 0; it < 15; ++it) {
    RSet b = oracles::random_rset(rng, 1 + rng.next() % 7, 9, 3, true);
    CHECK(mult_energy_allowing_zero(b) == oracles::energy2(b, b, true));
  }
}

TEST_CASE("m_hat") {
  RSet one = rset({"1"});
  CHECK(m_hat(one, {one}).first == rat(1));

  RSet g = rset({"1", "2", "4"});
  CHECK(m_hat(g, {g}).first == rat(25, 9));
  auto [v, idx] = m_hat(g, {g, one});
  CHECK(v == rat(25, 9));
  CHECK(idx == 0);

  CHECK_THROWS_AS(m_hat(g, {}), error);
  CHECK_THROWS_AS(m_hat(rset({"0", "1"}), {one}), error);
  CHECK_THROWS_AS(m_hat(g, {rset({"0"})}), error);

  auto cands = default_mhat_candidates(g);
  auto best = m_hat(g, cands);
  CHECK(cmp(best.first, rat(25, 9)) <= 0);
}

TEST_CASE("energy budget") {
  RSet g = rset({"1", "2", "4"});
  CHECK_THROWS_AS(energy(g, 2, Group::additive, /*max_set=*/2), error);
}
