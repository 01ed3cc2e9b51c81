#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sumprod/countmap.hpp"
#include "sumprod/set.hpp"

namespace sumprod {

// E_k(A): number of 2k-tuples with equal differences (additive) or ratios
// (multiplicative); E_2 is the usual energy.
struct EnergyValue {
  BigInt value;
  int k;
  Group group;
};

// Non-normalized multiplicative Gowers norm ||A||_{U^k}.
struct GowersValue {
  BigInt value;
  int k;
};

struct EnergyBudget {
  std::size_t max_set = 4096;
};

inline RationalCountMap correlation(const RSet& a, const RSet& b, Group g,
                                    std::size_t max_set = 4096) {
  return pair_countmap(a, b, g, PairForm::correlation, max_set);
}
inline RationalCountMap convolution(const RSet& a, const RSet& b, Group g,
                                    std::size_t max_set = 4096) {
  return pair_countmap(a, b, g, PairForm::convolution, max_set);
}
inline FpCountMap fp_correlation(const FpSet& a, const FpSet& b, Group g,
                                 std::size_t max_set = 4096) {
  return fp_pair_countmap(a, b, g, PairForm::correlation, max_set);
}
inline FpCountMap fp_convolution(const FpSet& a, const FpSet& b, Group g,
                                 std::size_t max_set = 4096) {
  return fp_pair_countmap(a, b, g, PairForm::convolution, max_set);
}

inline EnergyValue energy(const RSet& a, int k, Group g, std::size_t max_set = 4096) {
  if (k < 2) throw_precondition("energy order k must be >= 2");
  EnergyValue e{pair_power_sum(a, a, g, PairForm::correlation, k, max_set), k, g};
  // diagonal tuples alone give |A|^2 at k = 2 and at least |A| for any k
  if (e.value < BigInt(a.size()) ||
      (k == 2 && e.value < BigInt(a.size()) * BigInt(a.size())))
    throw_internal("energy below diagonal count");
  return e;
}

inline EnergyValue fp_energy_k(const FpSet& a, int k, Group g, std::size_t max_set = 4096) {
  if (k < 2) throw_precondition("energy order k must be >= 2");
  EnergyValue e{fp_pair_power_sum(a, a, g, PairForm::correlation, k, max_set), k, g};
  if (e.value < BigInt(a.size()) ||
      (k == 2 && e.value < BigInt(a.size()) * BigInt(a.size())))
    throw_internal("energy below diagonal count");
  return e;
}

// E(A,B) = Sum_x (A o B)(x)^2.
inline EnergyValue mixed_energy(const RSet& a, const RSet& b, Group g,
                                std::size_t max_set = 4096) {
  return EnergyValue{pair_power_sum(a, b, g, PairForm::correlation, 2, max_set), 2, g};
}

inline EnergyValue fp_mixed_energy(const FpSet& a, const FpSet& b, Group g,
                                   std::size_t max_set = 4096) {
  return EnergyValue{fp_pair_power_sum(a, b, g, PairForm::correlation, 2, max_set), 2, g};
}

// The three equivalent expressions for E(A,B): Sum (A*B)^2, Sum (A o B)^2 and
// Sum_x (A o A)(x)(B o B)(x).  They must agree exactly; exposed for the
// identity harness.
struct MixedEnergyDiagnostics {
  BigInt via_convolution;
  BigInt via_correlation;
  BigInt via_pointwise;
  bool consistent() const {
    return via_convolution == via_correlation && via_correlation == via_pointwise;
  }
};

inline MixedEnergyDiagnostics mixed_energy_three_ways(const RSet& a, const RSet& b, Group g,
                                                      std::size_t max_set = 4096) {
  MixedEnergyDiagnostics d;
  d.via_convolution = pair_power_sum(a, b, g, PairForm::convolution, 2, max_set);
  d.via_correlation = pair_power_sum(a, b, g, PairForm::correlation, 2, max_set);
  RationalCountMap aa = correlation(a, a, g, max_set);
  RationalCountMap bb = correlation(b, b, g, max_set);
  BigInt pt;
  std::size_t i = 0, j = 0;
  while (i < aa.entries.size() && j < bb.entries.size()) {
    int c = cmp(aa.entries[i].first, bb.entries[j].first);
    if (c < 0)
      ++i;
    else if (c > 0)
      ++j;
    else {
      pt += BigInt(aa.entries[i].second) * BigInt(bb.entries[j].second);
      ++i;
      ++j;
    }
  }
  d.via_pointwise = std::move(pt);
  return d;
}

inline MixedEnergyDiagnostics fp_mixed_energy_three_ways(const FpSet& a, const FpSet& b, Group g,
                                                         std::size_t max_set = 4096) {
  MixedEnergyDiagnostics d;
  d.via_convolution = fp_pair_power_sum(a, b, g, PairForm::convolution, 2, max_set);
  d.via_correlation = fp_pair_power_sum(a, b, g, PairForm::correlation, 2, max_set);
  FpCountMap aa = fp_correlation(a, a, g, max_set);
  FpCountMap bb = fp_correlation(b, b, g, max_set);
  BigInt pt;
  std::size_t i = 0, j = 0;
  while (i < aa.entries.size() && j < bb.entries.size()) {
    if (aa.entries[i].first < bb.entries[j].first)
      ++i;
    else if (aa.entries[i].first > bb.entries[j].first)
      ++j;
    else {
      pt += BigInt(aa.entries[i].second) * BigInt(bb.entries[j].second);
      ++i;
      ++j;
    }
  }
  d.via_pointwise = std::move(pt);
  return d;
}

// Multiplicative energy extended to sets containing 0 by the quadruple-count
// convention: pairs with product 0 contribute (2|B|-1)^2 once.
inline BigInt mult_energy_allowing_zero(const RSet& b, std::size_t max_set = 4096) {
  if (!b.contains_zero()) return energy(b, 2, Group::multiplicative, max_set).value;
  std::vector<Rational> rest;
  for (const auto& v : b)
    if (!v.is_zero()) rest.push_back(v);
  BigInt zero_part = BigInt(2 * b.size() - 1) * BigInt(2 * b.size() - 1);
  if (rest.empty()) return zero_part;
  RSet nz(std::move(rest));
  return energy(nz, 2, Group::multiplicative, max_set).value + zero_part;
}

// All fibers A_lambda for lambda in A/A, via one sorted pass over the
// |A|^2 quotients.
inline std::vector<std::pair<Rational, RSet>> fiber_decomposition(const RSet& a) {
  if (a.empty()) throw_precondition("fiber decomposition of empty set");
  if (a.contains_zero()) throw_precondition("0 in A for fiber decomposition");
  std::vector<std::pair<Rational, Rational>> pairs; // (lambda, base point)
  pairs.reserve(a.size() * a.size());
  for (const auto& x : a)
    for (const auto& y : a) pairs.emplace_back(y / x, x);
  std::sort(pairs.begin(), pairs.end(), [](const auto& l, const auto& r) {
    int c = cmp(l.first, r.first);
    if (c) return c < 0;
    return cmp(l.second, r.second) < 0;
  });
  std::vector<std::pair<Rational, RSet>> out;
  for (std::size_t i = 0; i < pairs.size();) {
    std::size_t j = i;
    std::vector<Rational> fib;
    while (j < pairs.size() && pairs[j].first == pairs[i].first) {
      fib.push_back(pairs[j].second);
      ++j;
    }
    out.emplace_back(pairs[i].first, RSet(std::move(fib)));
    i = j;
  }
  return out;
}

struct GowersOptions {
  int cap = 5;             // largest admissible k
  std::size_t max_size = 0; // 0: per-k default
};

namespace detail {

inline std::size_t gowers_default_max(int k) {
  if (k <= 3) return 4096;
  if (k == 4) return 256;
  return 128;
}

struct GowersMemo {
  // one cache per order k; values at different orders never mix
  std::vector<std::unordered_map<RSet, BigInt, RSetHash, std::equal_to<RSet>>> by_order;

  std::unordered_map<RSet, BigInt, RSetHash, std::equal_to<RSet>>& at(int k) {
    if (by_order.size() <= static_cast<std::size_t>(k)) by_order.resize(k + 1);
    return by_order[static_cast<std::size_t>(k)];
  }
};

inline RSet dilation_normalize(const RSet& a) {
  // divide by the least element; fibers repeat up to dilation
  return dilate(a, a.min().inverse());
}

inline BigInt gowers_rec(const RSet& a, int k, GowersMemo& memo) {
  if (a.size() == 1) return BigInt(1);
  RSet key = dilation_normalize(a);
  auto& cache = memo.at(k);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  BigInt total;
  if (k == 2) {
    total = pair_power_sum(key, key, Group::multiplicative, PairForm::correlation, 2);
  } else {
    for (auto& lf : fiber_decomposition(key)) total += gowers_rec(lf.second, k - 1, memo);
  }
  memo.at(k).emplace(std::move(key), total);
  return total;
}

} // namespace detail

// ||A||_{U^k} by the fiber recursion ||A||_{U^{k+1}} = Sum_lambda
// ||A_lambda||_{U^k}, base ||A||_{U^2} = Ex(A).
inline GowersValue gowers_norm(const RSet& a, int k, GowersOptions opt = {}) {
  if (a.empty()) throw_precondition("Gowers norm of empty set");
  if (a.contains_zero()) throw_precondition("0 in A for Gowers norm");
  if (k < 2) throw_precondition("Gowers norm order must be >= 2");
  if (k > opt.cap)
    throw_budget("Gowers order " + std::to_string(k) + " beyond cap " + std::to_string(opt.cap));
  std::size_t max_size = opt.max_size ? opt.max_size : detail::gowers_default_max(k);
  if (a.size() > max_size)
    throw_budget("set of " + std::to_string(a.size()) + " elements exceeds Gowers budget " +
                 std::to_string(max_size));
  detail::GowersMemo memo;
  GowersValue g{detail::gowers_rec(a, k, memo), k};
  if (g.value < BigInt(a.size())) throw_internal("Gowers norm below degenerate-cube count");
  return g;
}

// min over the candidate family of |AB|^2 / (|A||B|), an upper-bound witness
// for the optimum over all non-empty B.  Returns the value and the index of
// the minimizing candidate.
inline std::pair<Rational, std::size_t> m_hat(const RSet& a, const std::vector<RSet>& candidates,
                                              std::size_t cap = kDefaultSetCap,
                                              std::size_t pair_budget = kDefaultPairBudget) {
  if (a.empty()) throw_precondition("m_hat of empty set");
  if (a.contains_zero()) throw_precondition("0 in A for m_hat");
  if (candidates.empty()) throw_precondition("empty candidate list for m_hat");
  Rational best;
  std::size_t best_idx = 0;
  bool first = true;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const RSet& b = candidates[i];
    if (b.empty() || b.contains_zero())
      throw_precondition("m_hat candidate must be non-empty with 0 excluded");
    RSet ab = setop(SetOp::product, a, b, cap, pair_budget);
    Rational v = Rational::make(BigInt(ab.size()) * BigInt(ab.size()),
                                BigInt(a.size()) * BigInt(b.size()));
    if (first || cmp(v, best) < 0) {
      best = v;
      best_idx = i;
      first = false;
    }
  }
  return {best, best_idx};
}

// Default m_hat candidate family: A itself, its reciprocal set, {1}, and the
// dyadic popularity classes {a : 2^j <= |A meet aA| < 2^{j+1}}.
inline std::vector<RSet> default_mhat_candidates(const RSet& a) {
  std::vector<RSet> out;
  out.push_back(a);
  out.push_back(inverse_set(a));
  out.push_back(RSet(std::vector<Rational>{Rational(1)}));
  std::vector<std::size_t> popularity(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (const auto& x : a)
      if (a.contains(a[i] * x)) ++popularity[i];
  }
  for (int j = 0; std::size_t(1) << j <= a.size(); ++j) {
    std::vector<Rational> cls;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (popularity[i] >= (std::size_t(1) << j) && popularity[i] < (std::size_t(2) << j))
        cls.push_back(a[i]);
    }
    if (!cls.empty()) out.push_back(RSet(std::move(cls)));
  }
  return out;
}

} // namespace sumprod
