#pragma once

#include <cstdint>

#include "sumprod/error.hpp"

namespace sumprod {

inline uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) noexcept {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t m) noexcept {
  uint64_t r = m == 1 ? 0 : 1;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod_u64(r, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
inline bool is_prime_u64(uint64_t n) noexcept {
  if (n < 2) return false;
  for (uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

inline uint64_t invmod_u64(uint64_t a, uint64_t p) {
  if (a % p == 0) throw_precondition("inverse of zero residue");
  // p prime, Fermat
  return powmod_u64(a % p, p - 2, p);
}

// Smallest primitive root of an odd prime p (deterministic search).
inline uint64_t primitive_root(uint64_t p) {
  if (p == 2) return 1;
  uint64_t phi = p - 1;
  // factor phi by trial division; phi < 2^63
  uint64_t fac[64];
  int nfac = 0;
  uint64_t m = phi;
  for (uint64_t q = 2; q * q <= m; ++q) {
    if (m % q == 0) {
      fac[nfac++] = q;
      while (m % q == 0) m /= q;
    }
  }
  if (m > 1) fac[nfac++] = m;
  for (uint64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (int i = 0; i < nfac; ++i) {
      if (powmod_u64(g, phi / fac[i], p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw_internal("no primitive root found");
}

} // namespace sumprod
