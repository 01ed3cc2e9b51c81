#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <string>
#include <string_view>

#include "sumprod/error.hpp"

namespace sumprod {

// Signed arbitrary-precision integer, sign-magnitude over 64-bit limbs
// (little endian).  Values up to two limbs live inline; larger magnitudes
// spill to the heap.  All set statistics in this library are exact counts,
// so this type underlies everything.
class BigInt {
public:
  BigInt() noexcept : ssize_(0), cap_(0) { buf_[0] = buf_[1] = 0; }

  template <std::integral T>
  BigInt(T v) noexcept : BigInt() {
    if (v == 0) return;
    bool neg = false;
    unsigned long long m;
    if constexpr (std::is_signed_v<T>) {
      neg = v < 0;
      long long sv = static_cast<long long>(v);
      m = neg ? ~static_cast<unsigned long long>(sv) + 1ULL
              : static_cast<unsigned long long>(sv);
    } else {
      m = static_cast<unsigned long long>(v);
    }
    buf_[0] = m;
    ssize_ = neg ? -1 : 1;
  }

  BigInt(const BigInt& o) : ssize_(o.ssize_), cap_(0) {
    std::size_t n = o.size();
    if (n <= kInline) {
      buf_[0] = n > 0 ? o.limbs()[0] : 0;
      buf_[1] = n > 1 ? o.limbs()[1] : 0;
    } else {
      ptr_ = alloc(n);
      cap_ = static_cast<uint32_t>(n);
      std::memcpy(ptr_, o.ptr_, n * sizeof(uint64_t));
    }
  }

  BigInt(BigInt&& o) noexcept : ssize_(o.ssize_), cap_(o.cap_) {
    if (cap_) {
      ptr_ = o.ptr_;
    } else {
      buf_[0] = o.buf_[0];
      buf_[1] = o.buf_[1];
    }
    o.ssize_ = 0;
    o.cap_ = 0;
    o.buf_[0] = o.buf_[1] = 0;
  }

  BigInt& operator=(const BigInt& o) {
    if (this != &o) {
      BigInt tmp(o);
      swap(tmp);
    }
    return *this;
  }
  BigInt& operator=(BigInt&& o) noexcept {
    if (this != &o) {
      release();
      ssize_ = o.ssize_;
      cap_ = o.cap_;
      if (cap_) {
        ptr_ = o.ptr_;
      } else {
        buf_[0] = o.buf_[0];
        buf_[1] = o.buf_[1];
      }
      o.ssize_ = 0;
      o.cap_ = 0;
    }
    return *this;
  }

  ~BigInt() { release(); }

  void swap(BigInt& o) noexcept {
    std::swap(ssize_, o.ssize_);
    std::swap(cap_, o.cap_);
    uint64_t a0 = buf_[0], a1 = buf_[1];
    buf_[0] = o.buf_[0];
    buf_[1] = o.buf_[1];
    o.buf_[0] = a0;
    o.buf_[1] = a1;
  }

  static BigInt from_string(std::string_view s) {
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      neg = s[i] == '-';
      ++i;
    }
    if (i == s.size()) throw_parse("empty integer literal");
    BigInt r;
    BigInt chunk_base(10000000000000000000ULL); // 10^19
    std::size_t pos = i;
    while (pos < s.size()) {
      std::size_t take = std::min<std::size_t>(19, s.size() - pos);
      uint64_t chunk = 0;
      uint64_t scale = 1;
      for (std::size_t j = 0; j < take; ++j) {
        char c = s[pos + j];
        if (c < '0' || c > '9') throw_parse("invalid digit in integer literal");
        chunk = chunk * 10 + static_cast<uint64_t>(c - '0');
        scale *= 10;
      }
      if (take == 19)
        r = r * chunk_base + BigInt(chunk);
      else
        r = r * BigInt(scale) + BigInt(chunk);
      pos += take;
    }
    if (neg) r.negate();
    return r;
  }

  bool is_zero() const noexcept { return ssize_ == 0; }
  bool is_one() const noexcept { return ssize_ == 1 && limbs()[0] == 1; }
  bool negative() const noexcept { return ssize_ < 0; }
  int sign() const noexcept { return (ssize_ > 0) - (ssize_ < 0); }
  void negate() noexcept { ssize_ = -ssize_; }
  bool is_even() const noexcept { return ssize_ == 0 || (limbs()[0] & 1) == 0; }

  std::size_t size() const noexcept {
    return static_cast<std::size_t>(ssize_ < 0 ? -ssize_ : ssize_);
  }
  const uint64_t* limbs() const noexcept { return cap_ ? ptr_ : buf_; }

  // Number of bits of the magnitude; 0 for zero.
  std::size_t bit_length() const noexcept {
    std::size_t n = size();
    if (n == 0) return 0;
    return 64 * (n - 1) + (64 - static_cast<std::size_t>(std::countl_zero(limbs()[n - 1])));
  }

  bool fits_u64() const noexcept { return size() <= 1 && ssize_ >= 0; }
  uint64_t to_u64() const noexcept { return size() ? limbs()[0] : 0; }
  bool fits_i64() const noexcept {
    if (size() > 1) return false;
    uint64_t m = size() ? limbs()[0] : 0;
    return negative() ? m <= 0x8000000000000000ULL : m <= 0x7FFFFFFFFFFFFFFFULL;
  }
  long long to_i64() const noexcept {
    uint64_t m = size() ? limbs()[0] : 0;
    return negative() ? static_cast<long long>(~m + 1ULL) : static_cast<long long>(m);
  }

  double to_double() const noexcept {
    std::size_t n = size();
    if (n == 0) return 0.0;
    double v = 0.0;
    std::size_t top = n > 3 ? n - 3 : 0;
    for (std::size_t i = n; i-- > top;) v = v * 18446744073709551616.0 + double(limbs()[i]);
    v = std::ldexp(v, static_cast<int>(64 * top));
    return negative() ? -v : v;
  }

  friend int cmp(const BigInt& a, const BigInt& b) noexcept {
    if (a.ssize_ != b.ssize_) {
      // differing sign or limb count with same sign
      if (a.sign() != b.sign()) return a.sign() < b.sign() ? -1 : 1;
      int m = cmp_mag(a, b);
      return a.sign() > 0 ? m : -m;
    }
    int m = cmp_mag(a, b);
    return a.sign() >= 0 ? m : -m;
  }
  friend bool operator==(const BigInt& a, const BigInt& b) noexcept {
    if (a.ssize_ != b.ssize_) return false;
    return cmp_mag(a, b) == 0;
  }
  friend bool operator!=(const BigInt& a, const BigInt& b) noexcept { return !(a == b); }
  friend bool operator<(const BigInt& a, const BigInt& b) noexcept { return cmp(a, b) < 0; }
  friend bool operator<=(const BigInt& a, const BigInt& b) noexcept { return cmp(a, b) <= 0; }
  friend bool operator>(const BigInt& a, const BigInt& b) noexcept { return cmp(a, b) > 0; }
  friend bool operator>=(const BigInt& a, const BigInt& b) noexcept { return cmp(a, b) >= 0; }

  friend BigInt operator-(const BigInt& a) {
    BigInt r(a);
    r.negate();
    return r;
  }

  friend BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    BigInt r;
    if (a.sign() == b.sign()) {
      add_mag(r, a, b);
      r.set_sign(a.sign());
    } else {
      int c = cmp_mag(a, b);
      if (c == 0) return BigInt();
      if (c > 0) {
        sub_mag(r, a, b);
        r.set_sign(a.sign());
      } else {
        sub_mag(r, b, a);
        r.set_sign(b.sign());
      }
    }
    return r;
  }

  friend BigInt operator-(const BigInt& a, const BigInt& b) {
    BigInt nb(b);
    nb.negate();
    return a + nb;
  }

  BigInt& operator+=(const BigInt& b) { return *this = *this + b; }
  BigInt& operator-=(const BigInt& b) { return *this = *this - b; }
  BigInt& operator*=(const BigInt& b) { return *this = *this * b; }

  friend BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.is_zero() || b.is_zero()) return BigInt();
    BigInt r;
    mul_mag(r, a, b);
    r.set_sign(a.sign() * b.sign());
    return r;
  }

  // Truncated division: quotient rounds toward zero, remainder has the
  // dividend's sign.  a == q*b + r with |r| < |b| always holds.
  friend void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.is_zero()) throw_internal("BigInt division by zero");
    int c = cmp_mag(a, b);
    if (c < 0) {
      q = BigInt();
      r = a;
      return;
    }
    divmod_mag(a, b, q, r);
    q.set_sign(q.size() ? a.sign() * b.sign() : 0);
    r.set_sign(r.size() ? a.sign() : 0);
  }

  friend BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    divmod(a, b, q, r);
    return q;
  }
  friend BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    divmod(a, b, q, r);
    return r;
  }

  // gcd of magnitudes; gcd(0, x) = |x|.
  friend BigInt gcd(const BigInt& a, const BigInt& b) {
    if (a.is_zero()) return b.negative() ? -b : b;
    if (b.is_zero()) return a.negative() ? -a : a;
    if (a.size() == 1 && b.size() == 1) return BigInt(gcd_u64(a.limbs()[0], b.limbs()[0]));
    // Euclid until both fit one limb, then the binary kernel.
    BigInt x = a.negative() ? -a : a;
    BigInt y = b.negative() ? -b : b;
    while (y.size() > 1 || x.size() > 1) {
      if (cmp_mag(x, y) < 0) x.swap(y);
      if (y.is_zero()) return x;
      BigInt q, r;
      divmod_mag(x, y, q, r);
      r.set_sign(r.size() ? 1 : 0);
      x = std::move(y);
      y = std::move(r);
    }
    if (y.is_zero()) return x;
    return BigInt(gcd_u64(x.limbs()[0], y.limbs()[0]));
  }

  BigInt pow(uint32_t e) const {
    BigInt base(*this), acc(1LL);
    while (e) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  // Floor square root of a non-negative value.
  friend BigInt isqrt(const BigInt& n) {
    if (n.negative()) throw_internal("isqrt of negative value");
    if (n.is_zero()) return BigInt();
    if (n.size() <= 1) {
      uint64_t v = n.limbs()[0];
      uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(v)));
      while (r > 0 && r > v / r) --r;
      while ((r + 1) <= v / (r + 1)) ++r;
      return BigInt(r);
    }
    BigInt x = BigInt(1LL) << static_cast<uint32_t>((n.bit_length() + 1) / 2);
    for (;;) {
      BigInt y = (x + n / x) >> 1;
      if (cmp(y, x) >= 0) break;
      x = std::move(y);
    }
    return x;
  }

  // Floor cube root of a non-negative value.
  friend BigInt icbrt(const BigInt& n) {
    if (n.negative()) throw_internal("icbrt of negative value");
    if (n.is_zero()) return BigInt();
    uint32_t hi_bits = static_cast<uint32_t>(n.bit_length() / 3 + 2);
    BigInt lo(1LL), hi = BigInt(1LL) << hi_bits;
    while (lo < hi - BigInt(1LL)) {
      BigInt mid = (lo + hi) >> 1;
      if (mid * mid * mid <= n)
        lo = std::move(mid);
      else
        hi = std::move(mid);
    }
    return lo;
  }

  friend BigInt operator<<(const BigInt& a, uint32_t bits) {
    if (a.is_zero()) return BigInt();
    std::size_t n = a.size();
    std::size_t limb_shift = bits / 64, bit_shift = bits % 64;
    BigInt r;
    uint64_t* d = r.prepare(n + limb_shift + 1);
    for (std::size_t i = 0; i < limb_shift; ++i) d[i] = 0;
    uint64_t carry = 0;
    const uint64_t* s = a.limbs();
    for (std::size_t i = 0; i < n; ++i) {
      if (bit_shift == 0) {
        d[i + limb_shift] = s[i];
      } else {
        d[i + limb_shift] = (s[i] << bit_shift) | carry;
        carry = s[i] >> (64 - bit_shift);
      }
    }
    d[n + limb_shift] = bit_shift ? carry : 0;
    r.trim(n + limb_shift + 1);
    r.set_sign(a.sign());
    return r;
  }

  friend BigInt operator>>(const BigInt& a, uint32_t bits) {
    std::size_t n = a.size();
    std::size_t limb_shift = bits / 64, bit_shift = bits % 64;
    if (limb_shift >= n) return BigInt();
    BigInt r;
    std::size_t m = n - limb_shift;
    uint64_t* d = r.prepare(m);
    const uint64_t* s = a.limbs();
    for (std::size_t i = 0; i < m; ++i) {
      uint64_t lo = s[i + limb_shift];
      uint64_t hi = (bit_shift && i + limb_shift + 1 < n) ? s[i + limb_shift + 1] : 0;
      d[i] = bit_shift ? ((lo >> bit_shift) | (hi << (64 - bit_shift))) : lo;
    }
    r.trim(m);
    r.set_sign(r.size() ? a.sign() : 0);
    return r;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    if (size() == 1) {
      std::string s = std::to_string(limbs()[0]);
      return negative() ? "-" + s : s;
    }
    // Peel 19 decimal digits at a time.
    BigInt base(10000000000000000000ULL);
    BigInt cur = negative() ? -*this : *this;
    std::string out;
    while (!cur.is_zero()) {
      BigInt q, r;
      divmod(cur, base, q, r);
      uint64_t chunk = r.size() ? r.limbs()[0] : 0;
      std::string part = std::to_string(chunk);
      if (!q.is_zero())
        part = std::string(19 - part.size(), '0') + part;
      out = part + out;
      cur = std::move(q);
    }
    return negative() ? "-" + out : out;
  }

  uint64_t hash() const noexcept {
    uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<uint64_t>(static_cast<int64_t>(ssize_));
    std::size_t n = size();
    const uint64_t* l = limbs();
    for (std::size_t i = 0; i < n; ++i) {
      uint64_t x = l[i] + 0x9e3779b97f4a7c15ULL;
      x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
      x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
      h ^= x ^ (x >> 31);
      h *= 0xff51afd7ed558ccdULL;
    }
    return h;
  }

  static uint64_t gcd_u64(uint64_t a, uint64_t b) noexcept {
    if (a == 0) return b;
    if (b == 0) return a;
    int sh = std::countr_zero(a | b);
    a >>= std::countr_zero(a);
    for (;;) {
      b >>= std::countr_zero(b);
      if (a > b) std::swap(a, b);
      b -= a;
      if (b == 0) break;
    }
    return a << sh;
  }

  static unsigned __int128 gcd_u128(unsigned __int128 a, unsigned __int128 b) noexcept {
    if (a == 0) return b;
    if (b == 0) return a;
    if ((a >> 64) == 0 && (b >> 64) == 0)
      return gcd_u64(static_cast<uint64_t>(a), static_cast<uint64_t>(b));
    int sh = ctz128(a | b);
    a >>= ctz128(a);
    for (;;) {
      b >>= ctz128(b);
      if (a > b) { auto t = a; a = b; b = t; }
      b -= a;
      if (b == 0) break;
    }
    return a << sh;
  }

  static BigInt from_u128(unsigned __int128 v) {
    BigInt r;
    if (v == 0) return r;
    r.buf_[0] = static_cast<uint64_t>(v);
    r.buf_[1] = static_cast<uint64_t>(v >> 64);
    r.ssize_ = r.buf_[1] ? 2 : 1;
    return r;
  }

  bool fits_u128() const noexcept { return size() <= 2 && ssize_ >= 0; }
  unsigned __int128 to_u128_abs() const noexcept {
    unsigned __int128 v = 0;
    if (size() > 1) v = static_cast<unsigned __int128>(limbs()[1]) << 64;
    if (size() > 0) v |= limbs()[0];
    return v;
  }

private:
  static constexpr std::size_t kInline = 2;

  int32_t ssize_;
  uint32_t cap_;
  union {
    uint64_t buf_[2];
    uint64_t* ptr_;
  };

  static int ctz128(unsigned __int128 v) noexcept {
    uint64_t lo = static_cast<uint64_t>(v);
    if (lo) return std::countr_zero(lo);
    return 64 + std::countr_zero(static_cast<uint64_t>(v >> 64));
  }

  static uint64_t* alloc(std::size_t n) {
    auto* p = static_cast<uint64_t*>(std::malloc(n * sizeof(uint64_t)));
    if (!p) throw std::bad_alloc();
    return p;
  }

  void release() noexcept {
    if (cap_) {
      std::free(ptr_);
      cap_ = 0;
    }
  }

  // Make room for n limbs and return the writable limb array.  Discards the
  // old value.
  uint64_t* prepare(std::size_t n) {
    if (n <= kInline) {
      release();
      return buf_;
    }
    if (cap_ >= n) return ptr_;
    release();
    ptr_ = alloc(n);
    cap_ = static_cast<uint32_t>(n);
    return ptr_;
  }

  uint64_t* mut_limbs() noexcept { return cap_ ? ptr_ : buf_; }

  // Set the limb count to n after stripping high zero limbs; sign left +.
  void trim(std::size_t n) noexcept {
    uint64_t* l = mut_limbs();
    while (n > 0 && l[n - 1] == 0) --n;
    ssize_ = static_cast<int32_t>(n);
  }

  void set_sign(int s) noexcept {
    int32_t n = ssize_ < 0 ? -ssize_ : ssize_;
    if (n == 0) {
      ssize_ = 0;
      return;
    }
    ssize_ = s < 0 ? -n : n;
  }

  static int cmp_mag(const BigInt& a, const BigInt& b) noexcept {
    std::size_t na = a.size(), nb = b.size();
    if (na != nb) return na < nb ? -1 : 1;
    const uint64_t* la = a.limbs();
    const uint64_t* lb = b.limbs();
    for (std::size_t i = na; i-- > 0;) {
      if (la[i] != lb[i]) return la[i] < lb[i] ? -1 : 1;
    }
    return 0;
  }

  static void add_mag(BigInt& r, const BigInt& a, const BigInt& b) {
    const BigInt& x = a.size() >= b.size() ? a : b;
    const BigInt& y = a.size() >= b.size() ? b : a;
    std::size_t nx = x.size(), ny = y.size();
    uint64_t* d = r.prepare(nx + 1);
    const uint64_t* lx = x.limbs();
    const uint64_t* ly = y.limbs();
    unsigned __int128 carry = 0;
    for (std::size_t i = 0; i < ny; ++i) {
      carry += lx[i];
      carry += ly[i];
      d[i] = static_cast<uint64_t>(carry);
      carry >>= 64;
    }
    for (std::size_t i = ny; i < nx; ++i) {
      carry += lx[i];
      d[i] = static_cast<uint64_t>(carry);
      carry >>= 64;
    }
    d[nx] = static_cast<uint64_t>(carry);
    r.trim(nx + 1);
  }

  // requires |a| >= |b|
  static void sub_mag(BigInt& r, const BigInt& a, const BigInt& b) {
    std::size_t na = a.size(), nb = b.size();
    uint64_t* d = r.prepare(na);
    const uint64_t* la = a.limbs();
    const uint64_t* lb = b.limbs();
    uint64_t borrow = 0;
    for (std::size_t i = 0; i < nb; ++i) {
      uint64_t ai = la[i];
      uint64_t s = ai - lb[i] - borrow;
      borrow = (ai < lb[i] || (borrow && ai == lb[i])) ? 1 : 0;
      d[i] = s;
    }
    for (std::size_t i = nb; i < na; ++i) {
      uint64_t ai = la[i];
      d[i] = ai - borrow;
      borrow = (borrow && ai == 0) ? 1 : 0;
    }
    r.trim(na);
  }

  static void mul_mag(BigInt& r, const BigInt& a, const BigInt& b) {
    std::size_t na = a.size(), nb = b.size();
    // operands can alias r, so build into a scratch
    BigInt tmp;
    uint64_t* d = tmp.prepare(na + nb);
    std::memset(d, 0, (na + nb) * sizeof(uint64_t));
    const uint64_t* la = a.limbs();
    const uint64_t* lb = b.limbs();
    for (std::size_t i = 0; i < na; ++i) {
      uint64_t carry = 0;
      uint64_t ai = la[i];
      for (std::size_t j = 0; j < nb; ++j) {
        unsigned __int128 t =
            static_cast<unsigned __int128>(ai) * lb[j] + d[i + j] + carry;
        d[i + j] = static_cast<uint64_t>(t);
        carry = static_cast<uint64_t>(t >> 64);
      }
      d[i + nb] = carry;
    }
    tmp.trim(na + nb);
    r = std::move(tmp);
  }

  // Knuth algorithm D on magnitudes; requires |a| >= |b| > 0.
  static void divmod_mag(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    std::size_t nb = b.size();
    if (nb == 1) {
      uint64_t div = b.limbs()[0];
      std::size_t na = a.size();
      BigInt qt;
      uint64_t* d = qt.prepare(na);
      const uint64_t* la = a.limbs();
      unsigned __int128 rem = 0;
      for (std::size_t i = na; i-- > 0;) {
        unsigned __int128 cur = (rem << 64) | la[i];
        d[i] = static_cast<uint64_t>(cur / div);
        rem = cur % div;
      }
      qt.trim(na);
      q = std::move(qt);
      r = BigInt(static_cast<uint64_t>(rem));
      return;
    }

    int shift = std::countl_zero(b.limbs()[nb - 1]);
    BigInt un = a << static_cast<uint32_t>(shift);
    BigInt vn = b << static_cast<uint32_t>(shift);
    un.set_sign(1);
    vn.set_sign(1);
    std::size_t n = vn.size();
    std::size_t m = un.size() >= n ? un.size() - n : 0;

    // ensure un has m+n+1 limbs available
    BigInt ux;
    uint64_t* u = ux.prepare(m + n + 1);
    std::memset(u, 0, (m + n + 1) * sizeof(uint64_t));
    std::memcpy(u, un.limbs(), un.size() * sizeof(uint64_t));
    const uint64_t* v = vn.limbs();

    BigInt qt;
    uint64_t* qd = qt.prepare(m + 1);
    std::memset(qd, 0, (m + 1) * sizeof(uint64_t));

    const unsigned __int128 kBase = static_cast<unsigned __int128>(1) << 64;
    for (std::size_t j = m + 1; j-- > 0;) {
      unsigned __int128 num =
          (static_cast<unsigned __int128>(u[j + n]) << 64) | u[j + n - 1];
      unsigned __int128 qhat = num / v[n - 1];
      unsigned __int128 rhat = num % v[n - 1];
      while (qhat >= kBase ||
             qhat * v[n - 2] > ((rhat << 64) | u[j + n - 2])) {
        --qhat;
        rhat += v[n - 1];
        if (rhat >= kBase) break;
      }
      // multiply-subtract
      unsigned __int128 borrow = 0, carry = 0;
      for (std::size_t i = 0; i < n; ++i) {
        unsigned __int128 p = qhat * v[i] + carry;
        carry = p >> 64;
        uint64_t plo = static_cast<uint64_t>(p);
        unsigned __int128 sub =
            static_cast<unsigned __int128>(u[i + j]) - plo - borrow;
        u[i + j] = static_cast<uint64_t>(sub);
        borrow = (sub >> 64) ? 1 : 0;
      }
      unsigned __int128 subtop =
          static_cast<unsigned __int128>(u[j + n]) - carry - borrow;
      u[j + n] = static_cast<uint64_t>(subtop);
      bool went_negative = (subtop >> 64) != 0;
      if (went_negative) {
        // add back
        --qhat;
        unsigned __int128 c2 = 0;
        for (std::size_t i = 0; i < n; ++i) {
          c2 += u[i + j];
          c2 += v[i];
          u[i + j] = static_cast<uint64_t>(c2);
          c2 >>= 64;
        }
        u[j + n] = static_cast<uint64_t>(u[j + n] + c2);
      }
      qd[j] = static_cast<uint64_t>(qhat);
    }

    qt.trim(m + 1);
    q = std::move(qt);

    BigInt rem;
    uint64_t* rd = rem.prepare(n);
    std::memcpy(rd, u, n * sizeof(uint64_t));
    rem.trim(n);
    rem.set_sign(rem.size() ? 1 : 0);
    r = rem >> static_cast<uint32_t>(shift);
  }
};

inline BigInt operator*(const BigInt& a, long long b) { return a * BigInt(b); }
inline BigInt operator*(long long a, const BigInt& b) { return BigInt(a) * b; }

struct BigIntHash {
  std::size_t operator()(const BigInt& v) const noexcept { return v.hash(); }
};

} // namespace sumprod
