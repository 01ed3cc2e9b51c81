#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "sumprod/bigint.hpp"
#include "sumprod/error.hpp"

namespace sumprod {

// Exact signed rational, always canonical: gcd(|num|, den) = 1, den >= 1,
// zero is 0/1.  The only scalar used on the rational side of the library;
// no statistic ever touches floating point except for report approximations.
class Rational {
public:
  Rational() : num_(), den_(1LL) {}
  Rational(long long v) : num_(v), den_(1LL) {}
  Rational(int v) : num_(static_cast<long long>(v)), den_(1LL) {}
  explicit Rational(BigInt v) : num_(std::move(v)), den_(1LL) {}

  static Rational make(BigInt num, BigInt den) {
    if (den.is_zero()) throw_precondition("zero denominator");
    if (num.is_zero()) return Rational();
    if (den.negative()) {
      num.negate();
      den.negate();
    }
    BigInt g = gcd(num, den);
    if (!g.is_one()) {
      num = num / g;
      den = den / g;
    }
    Rational r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
  }

  // Token forms "p" and "p/q", decimal with optional sign.
  static Rational parse(std::string_view tok) {
    auto slash = tok.find('/');
    if (slash == std::string_view::npos) return Rational(BigInt::from_string(tok));
    BigInt n = BigInt::from_string(tok.substr(0, slash));
    BigInt d = BigInt::from_string(tok.substr(slash + 1));
    if (d.is_zero()) throw_parse("zero denominator in token '" + std::string(tok) + "'");
    return make(std::move(n), std::move(d));
  }

  const BigInt& num() const noexcept { return num_; }
  const BigInt& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
  bool is_integer() const noexcept { return den_.is_one(); }
  int sign() const noexcept { return num_.sign(); }

  friend Rational operator-(const Rational& a) {
    Rational r(a);
    r.num_.negate();
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    BigInt g = gcd(a.den_, b.den_);
    Rational r;
    if (g.is_one()) {
      r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
      r.den_ = a.den_ * b.den_;
      if (r.num_.is_zero()) r.den_ = BigInt(1LL);
      return r;
    }
    BigInt ad = a.den_ / g, bd = b.den_ / g;
    BigInt t = a.num_ * bd + b.num_ * ad;
    if (t.is_zero()) return Rational();
    BigInt g2 = gcd(t, g);
    r.num_ = g2.is_one() ? std::move(t) : t / g2;
    r.den_ = ad * (g2.is_one() ? b.den_ : b.den_ / g2);
    return r;
  }

  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

  friend Rational operator*(const Rational& a, const Rational& b) {
    if (a.is_zero() || b.is_zero()) return Rational();
    BigInt g1 = gcd(a.num_, b.den_);
    BigInt g2 = gcd(b.num_, a.den_);
    Rational r;
    r.num_ = (g1.is_one() ? a.num_ : a.num_ / g1) * (g2.is_one() ? b.num_ : b.num_ / g2);
    r.den_ = (g2.is_one() ? a.den_ : a.den_ / g2) * (g1.is_one() ? b.den_ : b.den_ / g1);
    return r;
  }

  Rational inverse() const {
    if (is_zero()) throw_precondition("inverse of zero");
    Rational r;
    r.num_ = den_;
    r.den_ = num_;
    if (r.den_.negative()) {
      r.num_.negate();
      r.den_.negate();
    }
    return r;
  }

  friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  Rational pow(int e) const {
    if (e == 0) return Rational(1LL);
    if (e < 0) return inverse().pow(-e);
    Rational r;
    r.num_ = num_.pow(static_cast<uint32_t>(e));
    r.den_ = den_.pow(static_cast<uint32_t>(e));
    return r;
  }

  friend int cmp(const Rational& a, const Rational& b) noexcept {
    int sa = a.sign(), sb = b.sign();
    if (sa != sb) return sa < sb ? -1 : 1;
    if (sa == 0) return 0;
    // cross products of magnitudes, single-limb fast path
    if (a.num_.size() <= 1 && a.den_.size() <= 1 && b.num_.size() <= 1 && b.den_.size() <= 1) {
      unsigned __int128 l = static_cast<unsigned __int128>(a.num_.to_u64()) * b.den_.to_u64();
      unsigned __int128 r = static_cast<unsigned __int128>(b.num_.to_u64()) * a.den_.to_u64();
      int m = l < r ? -1 : (l > r ? 1 : 0);
      return sa > 0 ? m : -m;
    }
    BigInt l = a.num_ * b.den_;
    BigInt r = b.num_ * a.den_;
    return cmp(l, r);
  }

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) noexcept { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) noexcept { return cmp(a, b) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) noexcept { return cmp(a, b) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) noexcept { return cmp(a, b) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) noexcept { return cmp(a, b) >= 0; }

  std::string to_string() const {
    if (den_.is_one()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
  }

  uint64_t hash() const noexcept {
    uint64_t h = num_.hash();
    h ^= den_.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

  double to_double() const noexcept {
    std::size_t bn = num_.bit_length(), bd = den_.bit_length();
    if (bn < 900 && bd < 900) return num_.to_double() / den_.to_double();
    uint32_t sn = bn > 512 ? static_cast<uint32_t>(bn - 512) : 0;
    uint32_t sd = bd > 512 ? static_cast<uint32_t>(bd - 512) : 0;
    double v = (num_ >> sn).to_double() / (den_ >> sd).to_double();
    return std::ldexp(v, static_cast<int>(sn) - static_cast<int>(sd));
  }

  // Fast-path key for hot counting loops: canonical value with |num| < 2^63
  // and den < 2^64.
  bool fits_small() const noexcept { return num_.fits_i64() && den_.fits_u64(); }
  int64_t small_num() const noexcept { return static_cast<int64_t>(num_.to_i64()); }
  uint64_t small_den() const noexcept { return den_.to_u64(); }

private:
  BigInt num_;
  BigInt den_;
};

struct RationalHash {
  std::size_t operator()(const Rational& v) const noexcept { return v.hash(); }
};

inline std::string to_string(const Rational& r) { return r.to_string(); }

} // namespace sumprod
