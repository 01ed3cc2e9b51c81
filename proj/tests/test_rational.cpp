#include <doctest.h>

#include "sumprod/rational.hpp"

using sumprod::BigInt;
using sumprod::Rational;

namespace {
Rational rat(long long n, long long d) { return Rational::make(BigInt(n), BigInt(d)); }

struct Rng {
  uint64_t s;
  uint64_t next() {
    uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  long long small(long long bound) {
    return static_cast<long long>(next() % (2 * bound + 1)) - bound;
  }
};
} // namespace

TEST_CASE("canonical form") {
  CHECK(rat(2, 4).to_string() == "1/2");
  CHECK(rat(-2, 4).to_string() == "-1/2");
  CHECK(rat(2, -4).to_string() == "-1/2");
  CHECK(rat(-2, -4).to_string() == "1/2");
  CHECK(rat(0, 7).to_string() == "0");
  CHECK(rat(0, -7).den() == BigInt(1));
  CHECK(rat(6, 3).to_string() == "2");
  CHECK_THROWS_AS(Rational::make(BigInt(1), BigInt()), sumprod::error);
}

TEST_CASE("parse") {
  CHECK(Rational::parse("1/2") == rat(1, 2));
  CHECK(Rational::parse("2/4") == rat(1, 2));
  CHECK(Rational::parse("-3") == Rational(-3));
  CHECK(Rational::parse("+3/9") == rat(1, 3));
  CHECK(Rational::parse("4/-6") == rat(-2, 3));
  CHECK_THROWS_AS(Rational::parse("1/0"), sumprod::error);
  CHECK_THROWS_AS(Rational::parse("a/3"), sumprod::error);
  CHECK_THROWS_AS(Rational::parse(""), sumprod::error);
}

TEST_CASE("field operations against direct cross formulas") {
  Rng rng{5};
  for (int it = 0; it < 5000; ++it) {
    long long an = rng.small(500), ad = rng.small(500), bn = rng.small(500), bd = rng.small(500);
    if (ad == 0 || bd == 0) continue;
    Rational a = rat(an, ad), b = rat(bn, bd);
    CHECK(a + b == Rational::make(BigInt(an * bd + bn * ad), BigInt(ad * bd)));
    CHECK(a - b == Rational::make(BigInt(an * bd - bn * ad), BigInt(ad * bd)));
    CHECK(a * b == Rational::make(BigInt(an * bn), BigInt(ad * bd)));
    if (bn != 0) CHECK(a / b == Rational::make(BigInt(an * bd), BigInt(ad * bn)));
    Rational diff = a - b;
    CHECK(cmp(a, b) == diff.sign());
  }
}

TEST_CASE("identities") {
  Rng rng{17};
  for (int it = 0; it < 2000; ++it) {
    long long an = rng.small(1000), ad = rng.small(1000);
    if (ad == 0) continue;
    Rational a = rat(an, ad);
    CHECK(a + Rational() == a);
    CHECK(a * Rational(1) == a);
    CHECK((a - a).is_zero());
    if (!a.is_zero()) {
      CHECK((a * a.inverse()).is_one());
      CHECK(a.inverse().inverse() == a);
    }
    CHECK(-(-a) == a);
  }
  CHECK_THROWS_AS(Rational().inverse(), sumprod::error);
  CHECK_THROWS_AS(Rational(1) / Rational(), sumprod::error);
}

TEST_CASE("pow") {
  CHECK(rat(2, 3).pow(3) == rat(8, 27));
  CHECK(rat(2, 3).pow(-2) == rat(9, 4));
  CHECK(rat(-2, 3).pow(2) == rat(4, 9));
  CHECK(rat(-2, 3).pow(3) == rat(-8, 27));
  CHECK(rat(5, 7).pow(0).is_one());
}

TEST_CASE("big operands keep exactness") {
  Rational big = Rational::make(BigInt(2).pow(130) + BigInt(1), BigInt(3).pow(80));
  CHECK((big * big.inverse()).is_one());
  CHECK((big + big) / big == Rational(2));
  CHECK(cmp(big, big + Rational::make(BigInt(1), BigInt(10).pow(50))) < 0);
}

TEST_CASE("hash and small key") {
  CHECK(rat(3, 6).hash() == rat(1, 2).hash());
  CHECK(rat(1, 2).fits_small());
  CHECK(rat(1, 2).small_num() == 1);
  CHECK(rat(1, 2).small_den() == 2);
  CHECK(rat(-5, 3).small_num() == -5);
  Rational huge = Rational::make(BigInt(2).pow(100), BigInt(1));
  CHECK(!huge.fits_small());
}

TEST_CASE("to_double approximation") {
  CHECK(rat(1, 2).to_double() == doctest::Approx(0.5));
  CHECK(rat(-22, 7).to_double() == doctest::Approx(-3.142857).epsilon(1e-5));
  Rational ratio = Rational::make(BigInt(2).pow(2000) * BigInt(3), BigInt(2).pow(2000));
  CHECK(ratio.to_double() == doctest::Approx(3.0));
}
