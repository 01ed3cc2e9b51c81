#include <doctest.h>

#include <cstdint>
#include <string>

#include "sumprod/bigint.hpp"

using sumprod::BigInt;

namespace {

// deterministic generator for test values
struct Rng {
  uint64_t s;
  uint64_t next() {
    uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  int64_t next_i64_small(int64_t bound) {
    return static_cast<int64_t>(next() % (2 * static_cast<uint64_t>(bound) + 1)) - bound;
  }
};

BigInt random_big(Rng& rng, int limbs) {
  BigInt r;
  for (int i = 0; i < limbs; ++i) {
    r = (r << 64) + BigInt(rng.next());
  }
  if (rng.next() & 1) r.negate();
  return r;
}

} // namespace

TEST_CASE("construction and small round trips") {
  CHECK(BigInt().is_zero());
  CHECK(BigInt(0LL).to_string() == "0");
  CHECK(BigInt(42LL).to_string() == "42");
  CHECK(BigInt(-42LL).to_string() == "-42");
  CHECK(BigInt(INT64_MIN).to_string() == "-9223372036854775808");
  CHECK(BigInt(UINT64_MAX).to_string() == "18446744073709551615");
  CHECK(BigInt::from_string("0").is_zero());
  CHECK(BigInt::from_string("-0").is_zero());
  CHECK(BigInt::from_string("+123") == BigInt(123LL));
  CHECK_THROWS_AS(BigInt::from_string(""), sumprod::error);
  CHECK_THROWS_AS(BigInt::from_string("12x3"), sumprod::error);
  CHECK_THROWS_AS(BigInt::from_string("-"), sumprod::error);
}

TEST_CASE("string round trip on large values") {
  std::string s = "123456789012345678901234567890123456789012345678901234567890";
  CHECK(BigInt::from_string(s).to_string() == s);
  std::string neg = "-" + s;
  CHECK(BigInt::from_string(neg).to_string() == neg);
  // power of two with many limbs
  BigInt p = BigInt(1LL) << 321;
  CHECK(BigInt::from_string(p.to_string()) == p);
}

TEST_CASE("arithmetic agrees with __int128 on random small operands") {
  Rng rng{7};
  for (int it = 0; it < 20000; ++it) {
    int64_t a = rng.next_i64_small(3000000000LL);
    int64_t b = rng.next_i64_small(3000000000LL);
    BigInt A(a), B(b);
    CHECK((A + B).to_i64() == a + b);
    CHECK((A - B).to_i64() == a - b);
    __int128 p = static_cast<__int128>(a) * b;
    BigInt P = A * B;
    __int128 q = P.negative() ? -static_cast<__int128>(P.to_u128_abs())
                              : static_cast<__int128>(P.to_u128_abs());
    CHECK(q == p);
    if (b != 0) {
      CHECK((A / B).to_i64() == a / b);
      CHECK((A % B).to_i64() == a % b);
    }
    int c = cmp(A, B);
    CHECK(c == (a < b ? -1 : (a > b ? 1 : 0)));
  }
}

TEST_CASE("division identity on random multi-limb operands") {
  Rng rng{99};
  for (int it = 0; it < 4000; ++it) {
    BigInt a = random_big(rng, 1 + static_cast<int>(rng.next() % 6));
    BigInt b = random_big(rng, 1 + static_cast<int>(rng.next() % 4));
    if (b.is_zero()) continue;
    BigInt q, r;
    divmod(a, b, q, r);
    CHECK(q * b + r == a);
    // |r| < |b|
    BigInt ra = r.negative() ? -r : r;
    BigInt ba = b.negative() ? -b : b;
    CHECK(ra < ba);
    // remainder sign matches dividend
    if (!r.is_zero()) CHECK(r.sign() == a.sign());
  }
}

TEST_CASE("division add-back corner cases") {
  // operands crafted so Knuth D needs qhat corrections
  BigInt a = (BigInt(1LL) << 128) - BigInt(1LL);
  BigInt b = (BigInt(1LL) << 64) + BigInt(1LL);
  BigInt q, r;
  divmod(a, b, q, r);
  CHECK(q * b + r == a);
  a = BigInt::from_string("340282366920938463463374607431768211455");
  b = BigInt::from_string("18446744073709551616");
  divmod(a, b, q, r);
  CHECK(q.to_string() == "18446744073709551615");
  CHECK(r.to_string() == "18446744073709551615");
}

TEST_CASE("gcd properties") {
  Rng rng{13};
  CHECK(gcd(BigInt(), BigInt(-6LL)) == BigInt(6LL));
  CHECK(gcd(BigInt(6LL), BigInt()) == BigInt(6LL));
  for (int it = 0; it < 2000; ++it) {
    BigInt a = random_big(rng, 1 + static_cast<int>(rng.next() % 4));
    BigInt b = random_big(rng, 1 + static_cast<int>(rng.next() % 3));
    BigInt g = gcd(a, b);
    if (a.is_zero() && b.is_zero()) {
      CHECK(g.is_zero());
      continue;
    }
    CHECK(!g.negative());
    if (!a.is_zero()) CHECK((a % g).is_zero());
    if (!b.is_zero()) CHECK((b % g).is_zero());
    // g is maximal: gcd(a/g, b/g) = 1
    if (!a.is_zero() && !b.is_zero()) CHECK(gcd(a / g, b / g).is_one());
  }
}

TEST_CASE("pow, shifts, parity") {
  CHECK(BigInt(2LL).pow(10) == BigInt(1024LL));
  CHECK(BigInt(3LL).pow(0).is_one());
  CHECK(BigInt(-2LL).pow(3) == BigInt(-8LL));
  CHECK((BigInt(1LL) << 200) == BigInt(2LL).pow(200));
  CHECK(((BigInt(1LL) << 200) >> 137) == BigInt(2LL).pow(63));
  CHECK(BigInt(4LL).is_even());
  CHECK(!BigInt(7LL).is_even());
  CHECK(BigInt().is_even());
}

TEST_CASE("isqrt and icbrt exact floors") {
  Rng rng{21};
  for (int it = 0; it < 500; ++it) {
    BigInt n = random_big(rng, 1 + static_cast<int>(rng.next() % 5));
    if (n.negative()) n.negate();
    BigInt s = isqrt(n);
    CHECK(s * s <= n);
    CHECK((s + BigInt(1LL)) * (s + BigInt(1LL)) > n);
    BigInt c = icbrt(n);
    CHECK(c * c * c <= n);
    BigInt c1 = c + BigInt(1LL);
    CHECK(c1 * c1 * c1 > n);
  }
  CHECK(isqrt(BigInt()).is_zero());
  CHECK(isqrt(BigInt(15LL)) == BigInt(3LL));
  CHECK(isqrt(BigInt(16LL)) == BigInt(4LL));
  CHECK(icbrt(BigInt(26LL)) == BigInt(2LL));
  CHECK(icbrt(BigInt(27LL)) == BigInt(3LL));
}

TEST_CASE("bit length and double conversion") {
  CHECK(BigInt().bit_length() == 0);
  CHECK(BigInt(1LL).bit_length() == 1);
  CHECK(BigInt(255LL).bit_length() == 8);
  CHECK((BigInt(1LL) << 300).bit_length() == 301);
  CHECK(BigInt(1000000LL).to_double() == doctest::Approx(1e6));
  CHECK(BigInt(-52LL).to_double() == doctest::Approx(-52.0));
  double big = (BigInt(1LL) << 100).to_double();
  CHECK(big == doctest::Approx(std::ldexp(1.0, 100)));
}

TEST_CASE("hash is value-stable") {
  BigInt a = BigInt::from_string("987654321987654321987654321");
  BigInt b = BigInt::from_string("987654321987654321987654321");
  CHECK(a.hash() == b.hash());
  CHECK(a.hash() != (-a).hash());
}

TEST_CASE("u64/u128 gcd kernels") {
  CHECK(BigInt::gcd_u64(0, 5) == 5);
  CHECK(BigInt::gcd_u64(12, 18) == 6);
  CHECK(BigInt::gcd_u64(1, UINT64_MAX) == 1);
  unsigned __int128 a = (static_cast<unsigned __int128>(3) << 80);
  unsigned __int128 b = (static_cast<unsigned __int128>(9) << 40);
  CHECK(BigInt::gcd_u128(a, b) == (static_cast<unsigned __int128>(3) << 40));
}
