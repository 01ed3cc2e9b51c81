#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sumprod/fp_lab.hpp"
#include "sumprod/rational.hpp"
#include "sumprod/set.hpp"

namespace sumprod {

// Deterministic splittable generator; identical seeds give identical streams
// on every platform.
struct SplitMix {
  uint64_t state;
  explicit SplitMix(uint64_t seed) : state(seed) {}
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // uniform in [0, n) by rejection
  uint64_t below(uint64_t n) {
    uint64_t lim = UINT64_MAX - UINT64_MAX % n;
    uint64_t v;
    do {
      v = next();
    } while (v >= lim);
    return v % n;
  }
};

enum class FamilyKind {
  ap,
  gp,
  random_rational,
  gp_subset,
  gp_ap,
  fp_subgroup,
  fp_random,
};

struct FamilySpec {
  FamilyKind kind = FamilyKind::gp;
  Rational start = Rational(1);
  Rational step = Rational(2); // ratio for geometric kinds
  uint64_t seed = 1;
  uint64_t p = 9241;            // prime for F_p kinds
  uint64_t num_bound = 1000000; // random numerator magnitude
  uint64_t den_bound = 1000;    // random denominator bound

  bool is_fp() const { return kind == FamilyKind::fp_subgroup || kind == FamilyKind::fp_random; }

  std::string to_string() const {
    switch (kind) {
      case FamilyKind::ap: return "ap:" + start.to_string() + ":" + step.to_string();
      case FamilyKind::gp: return "gp:" + start.to_string() + ":" + step.to_string();
      case FamilyKind::random_rational:
        return "random:" + std::to_string(num_bound) + ":" + std::to_string(den_bound);
      case FamilyKind::gp_subset:
        return "gp-subset:" + start.to_string() + ":" + step.to_string();
      case FamilyKind::gp_ap:
        return "gp-ap:" + start.to_string() + ":" + step.to_string();
      case FamilyKind::fp_subgroup: return "fp-subgroup:" + std::to_string(p);
      case FamilyKind::fp_random: return "fp-random:" + std::to_string(p);
    }
    return "?";
  }

  // Text forms: gp:<start>:<ratio>, ap:<start>:<step>, random[:num[:den]],
  // gp-subset:<start>:<ratio>, gp-ap:<start>:<ratio>, fp-subgroup:<p>,
  // fp-random:<p>.
  static FamilySpec parse(std::string_view text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
      if (c == ':') {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    parts.push_back(cur);
    FamilySpec f;
    const std::string& kind = parts[0];
    auto arg = [&](std::size_t i, const char* fallback) {
      return i < parts.size() && !parts[i].empty() ? parts[i] : std::string(fallback);
    };
    if (kind == "ap") {
      f.kind = FamilyKind::ap;
      f.start = Rational::parse(arg(1, "0"));
      f.step = Rational::parse(arg(2, "1"));
    } else if (kind == "gp") {
      f.kind = FamilyKind::gp;
      f.start = Rational::parse(arg(1, "1"));
      f.step = Rational::parse(arg(2, "2"));
    } else if (kind == "random") {
      f.kind = FamilyKind::random_rational;
      f.num_bound = std::stoull(arg(1, "1000000"));
      f.den_bound = std::stoull(arg(2, "1000"));
    } else if (kind == "gp-subset") {
      f.kind = FamilyKind::gp_subset;
      f.start = Rational::parse(arg(1, "1"));
      f.step = Rational::parse(arg(2, "2"));
    } else if (kind == "gp-ap") {
      f.kind = FamilyKind::gp_ap;
      f.start = Rational::parse(arg(1, "1"));
      f.step = Rational::parse(arg(2, "2"));
    } else if (kind == "fp-subgroup") {
      f.kind = FamilyKind::fp_subgroup;
      f.p = std::stoull(arg(1, "9241"));
    } else if (kind == "fp-random") {
      f.kind = FamilyKind::fp_random;
      f.p = std::stoull(arg(1, "10007"));
    } else {
      throw_parse("unknown family kind '" + kind + "'");
    }
    return f;
  }
};

using SetVariant = std::variant<RSet, FpSet>;

namespace detail {

inline RSet generate_ap(const Rational& start, const Rational& step, std::size_t n) {
  if (step.is_zero()) throw_precondition("AP step must be nonzero");
  std::vector<Rational> v;
  v.reserve(n);
  Rational cur = start;
  for (std::size_t i = 0; i < n; ++i) {
    v.push_back(cur);
    cur += step;
  }
  return RSet(std::move(v));
}

inline RSet generate_gp(const Rational& start, const Rational& ratio, std::size_t n) {
  if (start.is_zero()) throw_precondition("GP start must be nonzero");
  if (ratio.is_zero() || ratio.is_one() || ratio == Rational(-1))
    throw_precondition("GP ratio must have |ratio| != 0, 1");
  std::vector<Rational> v;
  v.reserve(n);
  Rational cur = start;
  for (std::size_t i = 0; i < n; ++i) {
    v.push_back(cur);
    cur *= ratio;
  }
  return RSet(std::move(v));
}

inline RSet generate_random_rational(uint64_t seed, uint64_t num_bound, uint64_t den_bound,
                                     std::size_t n) {
  // signed nonzero rationals; the stream is a prefix-stable function of the
  // seed, so smaller family members are subsets of larger ones
  SplitMix rng(seed ^ 0xa5a5a5a5deadbeefULL);
  std::set<std::pair<int64_t, uint64_t>> seen;
  std::vector<Rational> v;
  v.reserve(n);
  while (v.size() < n) {
    int64_t num = static_cast<int64_t>(rng.below(num_bound)) + 1;
    if (rng.next() & 1) num = -num;
    uint64_t den = rng.below(den_bound) + 1;
    Rational r = Rational::make(BigInt(num), BigInt(den));
    if (seen.emplace(r.small_num(), r.small_den()).second) v.push_back(std::move(r));
  }
  return RSet(std::move(v));
}

inline RSet generate_gp_subset(const Rational& start, const Rational& ratio, uint64_t seed,
                               std::size_t n) {
  RSet full = generate_gp(start, ratio, 2 * n);
  // choose n of 2n indices by a seeded partial shuffle
  std::vector<std::size_t> idx(full.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  SplitMix rng(seed ^ 0x5bd1e9955bd1e995ULL);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = i + rng.below(idx.size() - i);
    std::swap(idx[i], idx[j]);
  }
  std::vector<Rational> v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(full[idx[i]]);
  return RSet(std::move(v));
}

inline RSet generate_gp_ap(const Rational& start, const Rational& ratio, std::size_t n) {
  std::size_t half = (n + 1) / 2;
  RSet gp = generate_gp(start, ratio, half);
  std::vector<Rational> v(gp.begin(), gp.end());
  // arithmetic tail offset by one third to keep it disjoint from integer GPs
  Rational third = Rational::make(BigInt(1), BigInt(3));
  Rational cur = start + third;
  while (true) {
    RSet merged(v);
    if (merged.size() >= n) {
      std::vector<Rational> first(merged.begin(), merged.begin() + static_cast<long>(n));
      return RSet(std::move(first));
    }
    v.push_back(cur);
    cur += ratio; // reuse the ratio as the AP step
  }
}

inline FpSet generate_fp_random(uint64_t p, uint64_t seed, std::size_t n) {
  if (!is_prime_u64(p)) throw_precondition("modulus is not prime");
  if (n >= p) throw_precondition("family size must be below p");
  // nonzero residues, prefix-stable in the seed
  SplitMix rng(seed ^ 0xc2b2ae3d27d4eb4fULL);
  std::set<uint64_t> seen;
  std::vector<uint64_t> v;
  v.reserve(n);
  while (v.size() < n) {
    uint64_t r = 1 + rng.below(p - 1);
    if (seen.insert(r).second) v.push_back(r);
  }
  return FpSet(p, std::move(v));
}

} // namespace detail

// Deterministic set of exactly n elements.
inline SetVariant generate(const FamilySpec& f, std::size_t n) {
  if (n == 0) throw_precondition("family size must be positive");
  switch (f.kind) {
    case FamilyKind::ap: return detail::generate_ap(f.start, f.step, n);
    case FamilyKind::gp: return detail::generate_gp(f.start, f.step, n);
    case FamilyKind::random_rational:
      return detail::generate_random_rational(f.seed, f.num_bound, f.den_bound, n);
    case FamilyKind::gp_subset: return detail::generate_gp_subset(f.start, f.step, f.seed, n);
    case FamilyKind::gp_ap: return detail::generate_gp_ap(f.start, f.step, n);
    case FamilyKind::fp_subgroup: return subgroup(f.p, n);
    case FamilyKind::fp_random: return detail::generate_fp_random(f.p, f.seed, n);
  }
  throw_internal("unhandled family kind");
}

// Valid sizes for a family within [lo, hi]; subgroup families only admit
// divisors of p-1.
inline std::vector<uint64_t> family_sizes(const FamilySpec& f, uint64_t lo, uint64_t hi) {
  std::vector<uint64_t> out;
  if (f.kind == FamilyKind::fp_subgroup) {
    for (uint64_t d : divisors_of(f.p - 1))
      if (d >= lo && d <= hi) out.push_back(d);
    return out;
  }
  for (uint64_t n = lo; n <= hi; n = n < 4 ? n + 1 : n * 2) out.push_back(n);
  return out;
}

} // namespace sumprod
