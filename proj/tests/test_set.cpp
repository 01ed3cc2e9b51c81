#include <doctest.h>

#include "oracles.hpp"
#include "sumprod/set.hpp"

using namespace sumprod;
using oracles::rat;
using oracles::rset;

TEST_CASE("parse_rset") {
  RSet a = parse_rset("1 2 4");
  CHECK(a.size() == 3);
  CHECK(a.contains(rat(1)));
  CHECK(a.contains(rat(4)));

  RSet b = parse_rset("1/2 2/4 3");
  CHECK(b.size() == 2);
  CHECK(b.contains(rat(1, 2)));
  CHECK(b.contains(rat(3)));

  CHECK_THROWS_AS(parse_rset("1/0"), error);
  CHECK_THROWS_AS(parse_rset("3 x 4"), error);

  RSet c = parse_rset("# a comment line\n5 -1/3  # trailing\n7");
  CHECK(c.size() == 3);
  CHECK(c.contains(rat(-1, 3)));
  CHECK(c.to_text() == "-1/3 5 7");
}

TEST_CASE("setop examples") {
  RSet z01 = rset({"0", "1"});
  CHECK(setop(SetOp::sum, z01, z01) == rset({"0", "1", "2"}));

  RSet a = rset({"0", "1", "3"});
  CHECK(setop(SetOp::difference, a, a) == rset({"-3", "-2", "-1", "0", "1", "2", "3"}));

  RSet g = rset({"1", "2", "4"});
  CHECK(setop(SetOp::quotient, g, g) == rset({"1/4", "1/2", "1", "2", "4"}));

  // quotient skips zero divisors instead of erroring
  RSet with0 = rset({"0", "1", "2"});
  CHECK(setop(SetOp::quotient, g, with0) == rset({"1/2", "1", "2", "4"}));
  CHECK_THROWS_AS(setop(SetOp::quotient, g, rset({"0"})), error);
  CHECK_THROWS_AS(setop(SetOp::sum, RSet(), g), error);
}

TEST_CASE("iterated sumset") {
  CHECK(iterated_sumset(rset({"0", "1"}), 2) == rset({"0", "1", "2"}));
  CHECK(iterated_sumset(rset({"5"}), 4) == rset({"20"}));
  CHECK_THROWS_AS(iterated_sumset(rset({"1"}), 0), error);

  // {0,1,3} summed three times, against full 27-triple enumeration
  RSet a = rset({"0", "1", "3"});
  RSet k3 = iterated_sumset(a, 3);
  auto expect = oracles::ksum_strings(a, 3);
  CHECK(k3.size() == expect.size());
  for (const auto& s : expect) CHECK(k3.contains(Rational::parse(s)));
  CHECK(k3 == rset({"0", "1", "2", "3", "4", "5", "6", "7", "9"}));
}

TEST_CASE("affine image") {
  RSet g = rset({"1", "2", "4"});
  CHECK(affine_image(g, rat(1), rat(1)) == rset({"2", "3", "5"}));
  CHECK(affine_image(g, rat(1, 2), rat(0)) == rset({"1/2", "1", "2"}));
  CHECK(affine_image(g, rat(-1), rat(0)) == rset({"-4", "-2", "-1"}));
  CHECK_THROWS_AS(affine_image(g, rat(0), rat(1)), error);
  // inverse affine map restores the set
  RSet im = affine_image(g, rat(3, 7), rat(-2, 5));
  CHECK(affine_image(im, rat(7, 3), rat(2, 5) * rat(7, 3)) == g);
}

TEST_CASE("fiber") {
  RSet g = rset({"1", "2", "4"});
  CHECK(fiber(g, rat(1)) == g);
  CHECK(fiber(rset({"1", "2", "3", "6"}), rat(2)) == rset({"1", "3"}));
  CHECK(fiber(g, rat(4)) == rset({"1"}));
  CHECK_THROWS_AS(fiber(g, rat(0)), error);
  CHECK_THROWS_AS(fiber(rset({"0", "1"}), rat(2)), error);
}

TEST_CASE("fiber invariants on random sets") {
  oracles::Rng rng{31};
  for (int it = 0; it < 60; ++it) {
    RSet a = oracles::random_rset(rng, 2 + rng.next() % 6, 12, 5, /*allow_zero=*/false);
    RSet quot = setop(SetOp::quotient, a, a);
    std::size_t total = 0;
    for (const auto& lam : quot) {
      RSet f = fiber(a, lam);
      CHECK(f == oracles::fiber_brute(a, lam));
      CHECK(f.size() == fiber(a, lam.inverse()).size());
      total += f.size();
    }
    // every ordered pair (a,b) contributes to lambda = b/a
    CHECK(total == a.size() * a.size());
  }
}

TEST_CASE("setop agreement with pair-enumeration oracle on 1000 random instances") {
  oracles::Rng rng{101};
  for (int it = 0; it < 1000; ++it) {
    RSet a = oracles::random_rset(rng, 1 + rng.next() % 6, 15, 6);
    RSet b = oracles::random_rset(rng, 1 + rng.next() % 6, 15, 6);
    SetOp op = static_cast<SetOp>(rng.next() % 4);
    if (op == SetOp::quotient && b.size() == 1 && b[0].is_zero()) continue;
    RSet got = setop(op, a, b);
    CHECK(got.size() == oracles::setop_size(op, a, b));
    CHECK(got.size() <= a.size() * b.size());
    if (op == SetOp::sum || op == SetOp::difference)
      CHECK(got.size() >= std::max(a.size(), b.size()));
  }
}

TEST_CASE("identity elements") {
  oracles::Rng rng{77};
  for (int it = 0; it < 50; ++it) {
    RSet a = oracles::random_rset(rng, 1 + rng.next() % 8, 30, 9);
    CHECK(setop(SetOp::sum, a, rset({"0"})) == a);
    CHECK(setop(SetOp::product, a, rset({"1"})) == a);
  }
}

TEST_CASE("iterated sumset is additive in k") {
  oracles::Rng rng{55};
  for (int it = 0; it < 20; ++it) {
    RSet a = oracles::random_rset(rng, 2 + rng.next() % 3, 9, 3);
    unsigned j = 1 + rng.next() % 2, k = 1 + rng.next() % 2;
    CHECK(iterated_sumset(a, j + k) ==
          setop(SetOp::sum, iterated_sumset(a, j), iterated_sumset(a, k)));
  }
}

TEST_CASE("budget errors") {
  std::vector<Rational> big;
  for (int i = 0; i < 40; ++i) big.push_back(rat(i));
  RSet a(std::move(big));
  CHECK_THROWS_AS(setop(SetOp::sum, a, a, /*cap=*/16), error);
  CHECK_THROWS_AS(setop(SetOp::sum, a, a, kDefaultSetCap, /*pair_budget=*/100), error);
  try {
    setop(SetOp::sum, a, a, 16);
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.kind() == errc::budget);
  }
}

TEST_CASE("parse_fpset and fp ops") {
  FpSet f = parse_fpset("p=7 1 2 4");
  CHECK(f.modulus() == 7);
  CHECK(f.size() == 3);
  CHECK(f.contains(2));

  FpSet g = parse_fpset("p=7 8 -1 15");
  CHECK(g.elements() == std::vector<uint64_t>{1, 6});

  CHECK_THROWS_AS(parse_fpset("p=8 1 2"), error);
  CHECK_THROWS_AS(parse_fpset("1 2 3"), error);

  FpSet s = fp_setop(SetOp::sum, f, f);
  CHECK(s.elements() == std::vector<uint64_t>{1, 2, 3, 4, 5, 6}); // 1+1..4+4 mod 7
  FpSet q = fp_setop(SetOp::quotient, f, f);
  for (uint64_t x : q) CHECK(x != 0);
  FpSet prod = fp_setop(SetOp::product, f, f);
  CHECK(prod.elements() == std::vector<uint64_t>{1, 2, 4}); // subgroup is closed
  CHECK_THROWS_AS(fp_setop(SetOp::sum, f, parse_fpset("p=11 1")), error);
}

TEST_CASE("deterministic iteration order") {
  RSet a = parse_rset("3 1/2 -5 1/2 7");
  std::string first = a.to_text();
  RSet b = parse_rset("7 -5 3 1/2");
  CHECK(first == b.to_text());
}
