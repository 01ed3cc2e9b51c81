#pragma once

#include <cstdint>
#include <vector>

#include "sumprod/countmap.hpp"
#include "sumprod/energy.hpp"
#include "sumprod/prime.hpp"
#include "sumprod/set.hpp"

namespace sumprod {

// The unique multiplicative subgroup of order d in F_p^*, generated by
// g^{(p-1)/d} for the smallest primitive root g.
inline FpSet subgroup(uint64_t p, uint64_t d) {
  if (!is_prime_u64(p)) throw_precondition("modulus " + std::to_string(p) + " is not prime");
  if (d == 0 || (p - 1) % d != 0)
    throw_precondition(std::to_string(d) + " does not divide p-1 = " + std::to_string(p - 1));
  uint64_t g = primitive_root(p);
  uint64_t h = powmod_u64(g, (p - 1) / d, p);
  std::vector<uint64_t> elems;
  elems.reserve(d);
  uint64_t x = 1;
  for (uint64_t i = 0; i < d; ++i) {
    elems.push_back(x);
    x = mulmod_u64(x, h, p);
  }
  return FpSet(p, std::move(elems));
}

inline std::vector<uint64_t> divisors_of(uint64_t n) {
  std::vector<uint64_t> small, large;
  for (uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  for (std::size_t i = large.size(); i-- > 0;) small.push_back(large[i]);
  return small;
}

// max over x != 0 of |A meet (A+x)| together with the smallest attaining x.
// |A meet (A+x)| equals the additive correlation (A o A)(x).
inline std::pair<uint64_t, uint64_t> shift_intersection_max(const FpSet& a) {
  uint64_t p = a.modulus();
  if (a.empty()) return {0, 1};
  if (a.size() * a.size() <= 4 * p) {
    FpCountMap corr = fp_correlation(a, a, Group::additive);
    uint64_t best = 0, best_x = 1;
    for (const auto& [x, c] : corr.entries) {
      if (x == 0) continue;
      if (c > best || (c == best && x < best_x)) {
        best = c;
        best_x = x;
      }
    }
    if (best == 0) return {0, 1};
    return {best, best_x};
  }
  // dense sets: scan shifts directly
  std::vector<bool> member(p, false);
  for (uint64_t v : a) member[v] = true;
  uint64_t best = 0, best_x = 1;
  for (uint64_t x = 1; x < p; ++x) {
    uint64_t c = 0;
    for (uint64_t v : a) {
      uint64_t w = v + x;
      if (w >= p) w -= p;
      if (member[w]) ++c;
    }
    if (c > best) {
      best = c;
      best_x = x;
    }
  }
  return {best, best_x};
}

// E^+(A, C) over F_p.
inline BigInt fp_energy(const FpSet& a, const FpSet& c, std::size_t max_set = 4096) {
  if (a.modulus() != c.modulus()) throw_precondition("modulus mismatch");
  return fp_pair_power_sum(a, c, Group::additive, PairForm::correlation, 2, max_set);
}

} // namespace sumprod
