#include <doctest.h>

#include "sumprod/fp_lab.hpp"

using namespace sumprod;

namespace {

BigInt fp_energy_oracle(const FpSet& a, const FpSet& c) {
  uint64_t p = a.modulus();
  BigInt count;
  for (uint64_t a1 : a)
    for (uint64_t c1 : c)
      for (uint64_t a2 : a)
        for (uint64_t c2 : c)
          if ((a1 + c1) % p == (a2 + c2) % p) count += BigInt(1);
  return count;
}

FpSet subgroup_oracle(uint64_t p, uint64_t d) {
  // solutions of x^d = 1
  std::vector<uint64_t> elems;
  for (uint64_t x = 1; x < p; ++x)
    if (powmod_u64(x, d, p) == 1) elems.push_back(x);
  return FpSet(p, std::move(elems));
}

} // namespace

TEST_CASE("primality") {
  CHECK(!is_prime_u64(0));
  CHECK(!is_prime_u64(1));
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(3));
  CHECK(!is_prime_u64(561)); // Carmichael
  CHECK(is_prime_u64(10007));
  CHECK(is_prime_u64(9241));
  CHECK(!is_prime_u64(10006));
  CHECK(is_prime_u64(2305843009213693951ULL)); // Mersenne 2^61 - 1
  CHECK(!is_prime_u64(2305843009213693951ULL * 3));
}

TEST_CASE("subgroup examples") {
  FpSet s = subgroup(7, 3);
  CHECK(s.elements() == std::vector<uint64_t>{1, 2, 4});

  FpSet t = subgroup(13, 4);
  CHECK(t.elements() == std::vector<uint64_t>{1, 5, 8, 12});
  CHECK(t == subgroup_oracle(13, 4));

  CHECK(subgroup(101, 1).elements() == std::vector<uint64_t>{1});

  CHECK_THROWS_AS(subgroup(7, 4), error);
  CHECK_THROWS_AS(subgroup(8, 2), error);
}

TEST_CASE("subgroup structure") {
  for (auto [p, d] : std::vector<std::pair<uint64_t, uint64_t>>{
           {7, 3}, {13, 6}, {31, 5}, {101, 20}, {9241, 22}}) {
    FpSet s = subgroup(p, d);
    CHECK(s.size() == d);
    CHECK(s == subgroup_oracle(p, d));
    for (uint64_t x : s) {
      CHECK(s.contains(invmod_u64(x, p)));
      for (uint64_t y : s) CHECK(s.contains(mulmod_u64(x, y, p)));
    }
    // AA = A for a subgroup
    CHECK(fp_setop(SetOp::product, s, s) == s);
  }
}

TEST_CASE("shift intersection examples") {
  FpSet s = subgroup(7, 3);
  auto [v, x] = shift_intersection_max(s);
  CHECK(v == 1);
  CHECK(x == 1);

  std::vector<uint64_t> all;
  for (uint64_t i = 0; i < 11; ++i) all.push_back(i);
  FpSet full(11, std::move(all));
  auto [fv, fx] = shift_intersection_max(full);
  CHECK(fv == 11);
  CHECK(fx == 1);

  FpSet zero(5, {0});
  auto [zv, zx] = shift_intersection_max(zero);
  CHECK(zv == 0);
  CHECK(zx == 1);
}

TEST_CASE("shift symmetry") {
  for (auto [p, d] : std::vector<std::pair<uint64_t, uint64_t>>{{13, 4}, {31, 6}, {9241, 40}}) {
    FpSet s = subgroup(p, d);
    FpCountMap corr = fp_correlation(s, s, Group::additive);
    for (const auto& [x, c] : corr.entries) {
      if (x == 0) continue;
      CHECK(corr.count_of(p - x) == c);
    }
  }
}

TEST_CASE("fp_energy examples") {
  FpSet z(5, {0});
  CHECK(fp_energy(z, z) == BigInt(1));

  FpSet s = subgroup(7, 3);
  CHECK(fp_energy(s, s) == BigInt(15));
  CHECK(fp_energy(s, s) == fp_energy_oracle(s, s));

  std::vector<uint64_t> all;
  for (uint64_t i = 0; i < 5; ++i) all.push_back(i);
  FpSet full(5, std::move(all));
  CHECK(fp_energy(full, full) == BigInt(125));

  CHECK_THROWS_AS(fp_energy(z, s), error);
}

TEST_CASE("fp energy against the quadruple oracle") {
  uint64_t seeds[] = {3, 17, 40};
  for (uint64_t seed : seeds) {
    uint64_t state = seed;
    auto next = [&state]() {
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      return state >> 33;
    };
    uint64_t p = 101;
    std::vector<uint64_t> elems;
    for (int i = 0; i < 8; ++i) elems.push_back(next() % p);
    FpSet a(p, std::move(elems));
    std::vector<uint64_t> elems2;
    for (int i = 0; i < 6; ++i) elems2.push_back(next() % p);
    FpSet c(p, std::move(elems2));
    CHECK(fp_energy(a, c) == fp_energy_oracle(a, c));
    auto d = fp_mixed_energy_three_ways(a, c, Group::additive);
    CHECK(d.consistent());
  }
}

TEST_CASE("subgroup multiplicative correlation is flat") {
  FpSet s = subgroup(31, 6);
  FpCountMap corr = fp_correlation(s, s, Group::multiplicative);
  CHECK(corr.entries.size() == 6);
  for (const auto& [x, c] : corr.entries) {
    CHECK(s.contains(x));
    CHECK(c == 6);
  }
  CHECK(fp_energy_k(s, 2, Group::multiplicative).value == BigInt(6 * 6 * 6));
}

TEST_CASE("divisors") {
  CHECK(divisors_of(12) == std::vector<uint64_t>{1, 2, 3, 4, 6, 12});
  CHECK(divisors_of(9240).size() == 64);
  CHECK(divisors_of(1) == std::vector<uint64_t>{1});
}
