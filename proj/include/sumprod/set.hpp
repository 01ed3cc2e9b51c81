#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "sumprod/error.hpp"
#include "sumprod/prime.hpp"
#include "sumprod/rational.hpp"

namespace sumprod {

// Hard ceiling on any derived set, so pairwise constructions stay bounded.
inline constexpr std::size_t kDefaultSetCap = std::size_t(1) << 20;
// Ceiling on the number of element pairs a single set operation may touch.
inline constexpr std::size_t kDefaultPairBudget = std::size_t(1) << 25;

// Finite set of rationals in canonical sorted order.  Immutable after
// construction; copies share storage.
class RSet {
public:
  RSet() : elems_(std::make_shared<std::vector<Rational>>()) {}

  explicit RSet(std::vector<Rational> elems) {
    std::sort(elems.begin(), elems.end(),
              [](const Rational& a, const Rational& b) { return cmp(a, b) < 0; });
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    elems_ = std::make_shared<std::vector<Rational>>(std::move(elems));
  }

  std::size_t size() const noexcept { return elems_->size(); }
  bool empty() const noexcept { return elems_->empty(); }
  const Rational& operator[](std::size_t i) const noexcept { return (*elems_)[i]; }
  const std::vector<Rational>& elements() const noexcept { return *elems_; }
  auto begin() const { return elems_->begin(); }
  auto end() const { return elems_->end(); }

  bool contains(const Rational& v) const noexcept {
    auto it = std::lower_bound(elems_->begin(), elems_->end(), v,
                               [](const Rational& a, const Rational& b) { return cmp(a, b) < 0; });
    return it != elems_->end() && *it == v;
  }

  bool contains_zero() const noexcept { return contains(Rational()); }

  const Rational& min() const {
    if (empty()) throw_precondition("min of empty set");
    return elems_->front();
  }
  const Rational& max() const {
    if (empty()) throw_precondition("max of empty set");
    return elems_->back();
  }

  bool operator==(const RSet& o) const noexcept {
    return elems_ == o.elems_ || *elems_ == *o.elems_;
  }

  bool is_subset_of(const RSet& o) const noexcept {
    if (size() > o.size()) return false;
    for (const auto& v : *elems_)
      if (!o.contains(v)) return false;
    return true;
  }

  uint64_t hash() const noexcept {
    uint64_t h = 0x243f6a8885a308d3ULL ^ size();
    for (const auto& v : *elems_) {
      h ^= v.hash();
      h *= 0x100000001b3ULL;
    }
    return h;
  }

  std::string to_text() const {
    std::string out;
    for (std::size_t i = 0; i < size(); ++i) {
      if (i) out += ' ';
      out += (*elems_)[i].to_string();
    }
    return out;
  }

private:
  std::shared_ptr<const std::vector<Rational>> elems_;
};

struct RSetHash {
  std::size_t operator()(const RSet& s) const noexcept { return s.hash(); }
};

// Finite subset of F_p, reduced residues in sorted order.  p is checked for
// primality at construction.
class FpSet {
public:
  FpSet() : p_(2), elems_(std::make_shared<std::vector<uint64_t>>()) {}

  FpSet(uint64_t p, std::vector<uint64_t> elems) : p_(p) {
    if (!is_prime_u64(p)) throw_precondition("modulus " + std::to_string(p) + " is not prime");
    for (auto& e : elems) e %= p;
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    elems_ = std::make_shared<std::vector<uint64_t>>(std::move(elems));
  }

  uint64_t modulus() const noexcept { return p_; }
  std::size_t size() const noexcept { return elems_->size(); }
  bool empty() const noexcept { return elems_->empty(); }
  uint64_t operator[](std::size_t i) const noexcept { return (*elems_)[i]; }
  const std::vector<uint64_t>& elements() const noexcept { return *elems_; }
  auto begin() const { return elems_->begin(); }
  auto end() const { return elems_->end(); }

  bool contains(uint64_t v) const noexcept {
    return std::binary_search(elems_->begin(), elems_->end(), v % p_);
  }
  bool contains_zero() const noexcept { return !elems_->empty() && (*elems_)[0] == 0; }

  bool operator==(const FpSet& o) const noexcept {
    return p_ == o.p_ && (elems_ == o.elems_ || *elems_ == *o.elems_);
  }

  std::string to_text() const {
    std::string out = "p=" + std::to_string(p_);
    for (auto v : *elems_) out += ' ' + std::to_string(v);
    return out;
  }

private:
  uint64_t p_;
  std::shared_ptr<const std::vector<uint64_t>> elems_;
};

namespace detail {

inline std::vector<std::string> tokenize_set_text(std::string_view text) {
  std::vector<std::string> toks;
  std::string cur;
  bool in_comment = false;
  for (char c : text) {
    if (c == '\n') in_comment = false;
    if (in_comment) continue;
    if (c == '#') {
      in_comment = true;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ',') {
      if (!cur.empty()) {
        toks.push_back(cur);
        cur.clear();
      }
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) toks.push_back(cur);
  return toks;
}

} // namespace detail

// Whitespace/newline-separated rational tokens "p/q" or "p"; '#' starts a
// comment running to end of line.
inline RSet parse_rset(std::string_view text) {
  auto toks = detail::tokenize_set_text(text);
  std::vector<Rational> elems;
  elems.reserve(toks.size());
  for (const auto& t : toks) elems.push_back(Rational::parse(t));
  return RSet(std::move(elems));
}

// First token "p=<prime>", then residue tokens, reduced mod p.
inline FpSet parse_fpset(std::string_view text) {
  auto toks = detail::tokenize_set_text(text);
  if (toks.empty() || toks[0].rfind("p=", 0) != 0)
    throw_parse("F_p set text must start with 'p=<prime>'");
  BigInt p = BigInt::from_string(std::string_view(toks[0]).substr(2));
  if (!p.fits_u64()) throw_parse("modulus does not fit in 64 bits");
  uint64_t pp = p.to_u64();
  if (!is_prime_u64(pp)) throw_parse("modulus " + std::to_string(pp) + " is not prime");
  std::vector<uint64_t> elems;
  elems.reserve(toks.size() - 1);
  for (std::size_t i = 1; i < toks.size(); ++i) {
    BigInt v = BigInt::from_string(toks[i]);
    BigInt r = v % BigInt(pp);
    uint64_t res = r.negative() ? pp - r.to_u64() : r.to_u64();
    elems.push_back(res % pp);
  }
  return FpSet(pp, std::move(elems));
}

enum class SetOp { sum, difference, product, quotient };

inline const char* setop_name(SetOp op) {
  switch (op) {
    case SetOp::sum: return "sum";
    case SetOp::difference: return "difference";
    case SetOp::product: return "product";
    case SetOp::quotient: return "quotient";
  }
  return "?";
}

// Elementwise A op B.  Quotient skips b = 0 divisors; all ops require
// non-empty inputs.
inline RSet setop(SetOp op, const RSet& a, const RSet& b,
                  std::size_t cap = kDefaultSetCap, std::size_t pair_budget = kDefaultPairBudget) {
  if (a.empty() || b.empty()) throw_precondition("set operation on empty set");
  if (op == SetOp::quotient && b.size() == 1 && b[0].is_zero())
    throw_precondition("quotient by {0}");
  std::size_t pairs = a.size() * b.size();
  if (a.size() != 0 && pairs / a.size() != b.size())
    throw_budget("pair count overflow in set operation");
  if (pairs > pair_budget)
    throw_budget("set operation touches " + std::to_string(pairs) + " pairs, budget " +
                 std::to_string(pair_budget));
  std::vector<Rational> out;
  out.reserve(pairs);
  for (const auto& x : a) {
    for (const auto& y : b) {
      switch (op) {
        case SetOp::sum: out.push_back(x + y); break;
        case SetOp::difference: out.push_back(x - y); break;
        case SetOp::product: out.push_back(x * y); break;
        case SetOp::quotient:
          if (y.is_zero()) continue;
          out.push_back(x / y);
          break;
      }
    }
  }
  RSet r(std::move(out));
  if (r.size() > cap)
    throw_budget("derived set has " + std::to_string(r.size()) + " elements, cap " +
                 std::to_string(cap));
  return r;
}

// kA = A + ... + A (k copies), exact.
inline RSet iterated_sumset(const RSet& a, unsigned k,
                            std::size_t cap = kDefaultSetCap,
                            std::size_t pair_budget = kDefaultPairBudget) {
  if (k == 0) throw_precondition("iterated sumset needs k >= 1");
  if (a.empty()) throw_precondition("iterated sumset of empty set");
  RSet cur = a;
  for (unsigned i = 1; i < k; ++i) cur = setop(SetOp::sum, cur, a, cap, pair_budget);
  return cur;
}

// {u*x + v : x in A}; u must be nonzero so the image keeps |A| elements.
inline RSet affine_image(const RSet& a, const Rational& u, const Rational& v) {
  if (u.is_zero()) throw_precondition("affine image with u = 0");
  std::vector<Rational> out;
  out.reserve(a.size());
  for (const auto& x : a) out.push_back(u * x + v);
  return RSet(std::move(out));
}

inline RSet dilate(const RSet& a, const Rational& u) { return affine_image(a, u, Rational()); }
inline RSet translate(const RSet& a, const Rational& v) {
  return affine_image(a, Rational(1LL), v);
}

// {1/x : x in A}; requires 0 not in A.
inline RSet inverse_set(const RSet& a) {
  if (a.contains_zero()) throw_precondition("0 in set for multiplicative inversion");
  std::vector<Rational> out;
  out.reserve(a.size());
  for (const auto& x : a) out.push_back(x.inverse());
  return RSet(std::move(out));
}

// Fiber A_lambda = {x in A : lambda*x in A}.
inline RSet fiber(const RSet& a, const Rational& lambda) {
  if (lambda.is_zero()) throw_precondition("fiber with lambda = 0");
  if (a.contains_zero()) throw_precondition("0 in A for fiber");
  std::vector<Rational> out;
  for (const auto& x : a) {
    if (a.contains(lambda * x)) out.push_back(x);
  }
  return RSet(std::move(out));
}

// F_p analogues -------------------------------------------------------------

inline FpSet fp_setop(SetOp op, const FpSet& a, const FpSet& b,
                      std::size_t cap = kDefaultSetCap,
                      std::size_t pair_budget = kDefaultPairBudget) {
  if (a.empty() || b.empty()) throw_precondition("set operation on empty set");
  if (a.modulus() != b.modulus()) throw_precondition("modulus mismatch");
  uint64_t p = a.modulus();
  std::size_t pairs = a.size() * b.size();
  if (pairs > pair_budget) throw_budget("set operation exceeds pair budget");
  std::vector<uint64_t> out;
  out.reserve(pairs);
  for (uint64_t x : a) {
    for (uint64_t y : b) {
      switch (op) {
        case SetOp::sum: out.push_back((x + y) % p); break;
        case SetOp::difference: out.push_back((x + p - y) % p); break;
        case SetOp::product: out.push_back(mulmod_u64(x, y, p)); break;
        case SetOp::quotient:
          if (y == 0) continue;
          out.push_back(mulmod_u64(x, invmod_u64(y, p), p));
          break;
      }
    }
  }
  FpSet r(p, std::move(out));
  if (r.size() > cap) throw_budget("derived set exceeds cap");
  return r;
}

inline FpSet fp_translate(const FpSet& a, uint64_t x) {
  uint64_t p = a.modulus();
  std::vector<uint64_t> out;
  out.reserve(a.size());
  for (uint64_t v : a) out.push_back((v + x) % p);
  return FpSet(p, std::move(out));
}

} // namespace sumprod
