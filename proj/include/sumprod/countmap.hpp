#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "sumprod/bigint.hpp"
#include "sumprod/error.hpp"
#include "sumprod/parallel.hpp"
#include "sumprod/rational.hpp"
#include "sumprod/set.hpp"

namespace sumprod {

enum class Group { additive, multiplicative };
enum class PairForm { correlation, convolution };

inline const char* group_name(Group g) {
  return g == Group::additive ? "additive" : "multiplicative";
}

// value -> multiplicity table, entries sorted by value.  Total mass is
// |A||B| for any two-set statistic, which never exceeds 2^40 under the set
// cap, so multiplicities are stored as machine words and widened to BigInt
// on output.
template <class Key, class Less = std::less<Key>>
struct CountMap {
  std::vector<std::pair<Key, uint64_t>> entries;

  BigInt mass() const {
    BigInt m;
    for (const auto& [k, c] : entries) m += BigInt(c);
    return m;
  }

  uint64_t count_of(const Key& k) const {
    Less less;
    auto it = std::lower_bound(entries.begin(), entries.end(), k,
                               [&](const auto& e, const Key& v) { return less(e.first, v); });
    if (it != entries.end() && !less(k, it->first) && !less(it->first, k)) return it->second;
    return 0;
  }

  uint64_t max_count() const {
    uint64_t m = 0;
    for (const auto& [k, c] : entries) m = std::max(m, c);
    return m;
  }

  BigInt power_sum(int k) const {
    BigInt total;
    for (const auto& [key, c] : entries) total += BigInt(c).pow(static_cast<uint32_t>(k));
    return total;
  }
};

struct RationalLess {
  bool operator()(const Rational& a, const Rational& b) const noexcept { return cmp(a, b) < 0; }
};

using RationalCountMap = CountMap<Rational, RationalLess>;
using FpCountMap = CountMap<uint64_t>;

namespace detail {

inline Rational pair_value(const Rational& a, const Rational& b, Group g, PairForm f) {
  if (g == Group::additive) return f == PairForm::correlation ? b - a : a + b;
  return f == PairForm::correlation ? b / a : a * b;
}

inline void require_pair_stat_ok(const RSet& a, const RSet& b, Group g, std::size_t max_set) {
  if (a.empty() || b.empty()) throw_precondition("empty set in pairwise statistic");
  if (g == Group::multiplicative && (a.contains_zero() || b.contains_zero()))
    throw_precondition("0 in a multiplicative input");
  if (a.size() > max_set || b.size() > max_set)
    throw_budget("set of " + std::to_string(std::max(a.size(), b.size())) +
                 " elements exceeds statistic budget " + std::to_string(max_set));
}

// Canonical value record for the sort-and-count fast path.
struct SmallVal {
  int64_t num;
  uint64_t den;
  friend bool operator<(const SmallVal& x, const SmallVal& y) noexcept {
    if (x.num != y.num) return x.num < y.num;
    return x.den < y.den;
  }
  friend bool operator==(const SmallVal& x, const SmallVal& y) noexcept {
    return x.num == y.num && x.den == y.den;
  }
};

// Elements small enough that every cross product fits in int64 arithmetic.
struct TinyElem {
  int64_t num;
  int64_t den;
};
inline constexpr int64_t kTinyBound = int64_t(1) << 31;

inline bool tiny_profile(const RSet& s, std::vector<TinyElem>& out) {
  out.clear();
  out.reserve(s.size());
  for (const auto& v : s) {
    if (!v.fits_small()) return false;
    int64_t n = v.small_num();
    uint64_t d = v.small_den();
    if (n <= -kTinyBound || n >= kTinyBound || d >= static_cast<uint64_t>(kTinyBound))
      return false;
    out.push_back(TinyElem{n, static_cast<int64_t>(d)});
  }
  return true;
}

inline SmallVal tiny_pair_value(const TinyElem& a, const TinyElem& b, Group g, PairForm f) {
  int64_t num, den;
  if (g == Group::additive) {
    int64_t cross1 = b.num * a.den, cross2 = a.num * b.den;
    num = f == PairForm::correlation ? cross1 - cross2 : cross1 + cross2;
    den = a.den * b.den;
  } else if (f == PairForm::correlation) {
    num = b.num * a.den;
    den = b.den * a.num;
  } else {
    num = a.num * b.num;
    den = a.den * b.den;
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) return SmallVal{0, 1};
  uint64_t g0 = BigInt::gcd_u64(static_cast<uint64_t>(num < 0 ? -num : num),
                                static_cast<uint64_t>(den));
  return SmallVal{num / static_cast<int64_t>(g0), static_cast<uint64_t>(den) / g0};
}

// Merge T sorted record streams, applying fn(count) to every maximal run of
// equal values.
template <class Rec, class Fn>
void for_each_run(std::vector<std::vector<Rec>>& parts, Fn&& fn) {
  std::size_t t = parts.size();
  std::vector<std::size_t> cur(t, 0);
  for (;;) {
    int best = -1;
    for (std::size_t i = 0; i < t; ++i) {
      if (cur[i] < parts[i].size() &&
          (best < 0 || parts[i][cur[i]] < parts[static_cast<std::size_t>(best)][cur[best]]))
        best = static_cast<int>(i);
    }
    if (best < 0) break;
    Rec v = parts[static_cast<std::size_t>(best)][cur[best]];
    uint64_t run = 0;
    for (std::size_t i = 0; i < t; ++i) {
      while (cur[i] < parts[i].size() && parts[i][cur[i]] == v) {
        ++run;
        ++cur[i];
      }
    }
    fn(v, run);
  }
}

struct RationalRecLess {
  bool operator()(const Rational& a, const Rational& b) const noexcept { return cmp(a, b) < 0; }
};

// Power-sum accumulator: sums count^k, staying in 128-bit arithmetic while
// it can.
struct PowerSumAcc {
  int k;
  unsigned __int128 partial = 0;
  BigInt total;

  void add(uint64_t count) {
    // count^k fits in u128 iff k*bits(count) < 127
    int bits = 64 - std::countl_zero(count | 1);
    if (k * bits < 120) {
      unsigned __int128 p = 1;
      for (int i = 0; i < k; ++i) p *= count;
      if (partial > (static_cast<unsigned __int128>(-1) >> 1) - p) flush();
      partial += p;
    } else {
      total += BigInt(count).pow(static_cast<uint32_t>(k));
    }
  }
  void flush() {
    if (partial) {
      total += BigInt::from_u128(partial);
      partial = 0;
    }
  }
  BigInt take() {
    flush();
    return std::move(total);
  }
};

} // namespace detail

// Exact Sum_x r(x)^k where r is the multiplicity function of the chosen
// pairwise statistic of A and B.  Streams through sorted value records; the
// full CountMap is never materialized.
inline BigInt pair_power_sum(const RSet& a, const RSet& b, Group g, PairForm f, int k,
                             std::size_t max_set = 4096) {
  detail::require_pair_stat_ok(a, b, g, max_set);
  const std::size_t na = a.size(), nb = b.size();
  unsigned threads = std::min<unsigned>(thread_count(), 8);
  if (na * nb < 1 << 14) threads = 1;

  detail::PowerSumAcc acc{k, 0, BigInt()};

  std::vector<detail::TinyElem> ta, tb;
  if (detail::tiny_profile(a, ta) && detail::tiny_profile(b, tb)) {
    std::vector<std::vector<detail::SmallVal>> parts(threads);
    parallel_chunks(
        na,
        [&](unsigned ci, std::size_t lo, std::size_t hi) {
          auto& out = parts[ci];
          out.reserve((hi - lo) * nb);
          for (std::size_t i = lo; i < hi; ++i)
            for (std::size_t j = 0; j < nb; ++j)
              out.push_back(detail::tiny_pair_value(ta[i], tb[j], g, f));
          std::sort(out.begin(), out.end());
        },
        threads);
    detail::for_each_run(parts, [&](const detail::SmallVal&, uint64_t run) { acc.add(run); });
    return acc.take();
  }

  // general path: exact Rational records, small canonical keys when possible
  using Rec = detail::SmallVal;
  std::vector<std::vector<Rec>> small_parts(threads);
  std::vector<std::vector<Rational>> big_parts(threads);
  parallel_chunks(
      na,
      [&](unsigned ci, std::size_t lo, std::size_t hi) {
        auto& small = small_parts[ci];
        auto& big = big_parts[ci];
        small.reserve((hi - lo) * nb);
        for (std::size_t i = lo; i < hi; ++i) {
          for (std::size_t j = 0; j < nb; ++j) {
            Rational v = detail::pair_value(a[i], b[j], g, f);
            if (v.fits_small())
              small.push_back(Rec{v.small_num(), v.small_den()});
            else
              big.push_back(std::move(v));
          }
        }
        std::sort(small.begin(), small.end());
        std::sort(big.begin(), big.end(), detail::RationalRecLess{});
      },
      threads);
  detail::for_each_run(small_parts, [&](const Rec&, uint64_t run) { acc.add(run); });
  // big values: canonical, so never equal to any small record
  {
    std::vector<std::size_t> cur(threads, 0);
    for (;;) {
      int best = -1;
      for (unsigned i = 0; i < threads; ++i) {
        if (cur[i] < big_parts[i].size() &&
            (best < 0 ||
             cmp(big_parts[i][cur[i]], big_parts[static_cast<unsigned>(best)][cur[best]]) < 0))
          best = static_cast<int>(i);
      }
      if (best < 0) break;
      Rational v = big_parts[static_cast<unsigned>(best)][cur[best]];
      uint64_t run = 0;
      for (unsigned i = 0; i < threads; ++i) {
        while (cur[i] < big_parts[i].size() && big_parts[i][cur[i]] == v) {
          ++run;
          ++cur[i];
        }
      }
      acc.add(run);
    }
  }
  return acc.take();
}

// Materialized correlation/convolution table over the rationals.
inline RationalCountMap pair_countmap(const RSet& a, const RSet& b, Group g, PairForm f,
                                      std::size_t max_set = 4096) {
  detail::require_pair_stat_ok(a, b, g, max_set);
  std::vector<Rational> values;
  values.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) values.push_back(detail::pair_value(x, y, g, f));
  std::sort(values.begin(), values.end(), detail::RationalRecLess{});
  RationalCountMap m;
  for (std::size_t i = 0; i < values.size();) {
    std::size_t j = i;
    while (j < values.size() && values[j] == values[i]) ++j;
    m.entries.emplace_back(std::move(values[i]), static_cast<uint64_t>(j - i));
    i = j;
  }
  return m;
}

// F_p analogues --------------------------------------------------------------

namespace detail {
inline uint64_t fp_pair_value(uint64_t x, uint64_t y, uint64_t p, Group g, PairForm f) {
  if (g == Group::additive)
    return f == PairForm::correlation ? (y + p - x) % p : (x + y) % p;
  if (f == PairForm::correlation) return mulmod_u64(y, invmod_u64(x, p), p);
  return mulmod_u64(x, y, p);
}

inline void require_fp_pair_stat_ok(const FpSet& a, const FpSet& b, Group g,
                                    std::size_t max_set) {
  if (a.empty() || b.empty()) throw_precondition("empty set in pairwise statistic");
  if (a.modulus() != b.modulus()) throw_precondition("modulus mismatch");
  if (g == Group::multiplicative && (a.contains_zero() || b.contains_zero()))
    throw_precondition("0 in a multiplicative input");
  if (a.size() > max_set || b.size() > max_set)
    throw_budget("set exceeds statistic budget " + std::to_string(max_set));
}
} // namespace detail

inline FpCountMap fp_pair_countmap(const FpSet& a, const FpSet& b, Group g, PairForm f,
                                   std::size_t max_set = 4096) {
  detail::require_fp_pair_stat_ok(a, b, g, max_set);
  uint64_t p = a.modulus();
  std::vector<uint64_t> values;
  values.reserve(a.size() * b.size());
  // invert each a once for the multiplicative correlation
  if (g == Group::multiplicative && f == PairForm::correlation) {
    for (uint64_t x : a) {
      uint64_t xi = invmod_u64(x, p);
      for (uint64_t y : b) values.push_back(mulmod_u64(y, xi, p));
    }
  } else {
    for (uint64_t x : a)
      for (uint64_t y : b) values.push_back(detail::fp_pair_value(x, y, p, g, f));
  }
  std::sort(values.begin(), values.end());
  FpCountMap m;
  for (std::size_t i = 0; i < values.size();) {
    std::size_t j = i;
    while (j < values.size() && values[j] == values[i]) ++j;
    m.entries.emplace_back(values[i], static_cast<uint64_t>(j - i));
    i = j;
  }
  return m;
}

inline BigInt fp_pair_power_sum(const FpSet& a, const FpSet& b, Group g, PairForm f, int k,
                                std::size_t max_set = 4096) {
  FpCountMap m = fp_pair_countmap(a, b, g, f, max_set);
  detail::PowerSumAcc acc{k, 0, BigInt()};
  for (const auto& [v, c] : m.entries) acc.add(c);
  return acc.take();
}

// JSON array of {"value": ..., "count": ...} sorted by value.
inline std::string countmap_to_json(const RationalCountMap& m) {
  std::string out = "[";
  bool first = true;
  for (const auto& [v, c] : m.entries) {
    if (!first) out += ',';
    first = false;
    out += "{\"value\":\"" + v.to_string() + "\",\"count\":\"" + std::to_string(c) + "\"}";
  }
  out += "]";
  return out;
}

inline std::string countmap_to_json(const FpCountMap& m) {
  std::string out = "[";
  bool first = true;
  for (const auto& [v, c] : m.entries) {
    if (!first) out += ',';
    first = false;
    out += "{\"value\":\"" + std::to_string(v) + "\",\"count\":\"" + std::to_string(c) + "\"}";
  }
  out += "]";
  return out;
}

} // namespace sumprod
