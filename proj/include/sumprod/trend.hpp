#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "sumprod/error.hpp"
#include "sumprod/rational.hpp"

namespace sumprod {

enum class TrendFlag { bounded, growing, shrinking };

inline const char* trend_flag_name(TrendFlag f) {
  switch (f) {
    case TrendFlag::bounded: return "bounded";
    case TrendFlag::growing: return "growing";
    case TrendFlag::shrinking: return "shrinking";
  }
  return "?";
}

struct TrendPoint {
  uint64_t n;
  double ratio; // pow-normalized approximation, > 0
};

struct TrendReport {
  std::string claim;
  std::string family;
  std::size_t points = 0;
  double slope = 0;
  double r2 = 0;
  TrendFlag flag = TrendFlag::bounded;
  std::size_t holds = 0;
  std::size_t fails = 0;
  std::size_t recorded = 0;
  std::size_t skipped = 0;
  double max_ratio = 0;
  // halves rule: max over the top size half at most (21/20)^pow times the
  // max over the previous half, evaluated on untransformed exact brackets
  bool has_halves = false;
  bool halves_bounded = true;
};

// Log-log least squares of ratio versus n.
inline TrendReport fit_trend(const std::vector<TrendPoint>& pts) {
  if (pts.size() < 3) throw_precondition("trend needs at least 3 points");
  TrendReport r;
  r.points = pts.size();
  double sx = 0, sy = 0;
  for (const auto& p : pts) {
    sx += std::log2(static_cast<double>(p.n));
    sy += std::log2(p.ratio);
  }
  double mx = sx / static_cast<double>(pts.size());
  double my = sy / static_cast<double>(pts.size());
  double sxx = 0, sxy = 0, syy = 0;
  for (const auto& p : pts) {
    double dx = std::log2(static_cast<double>(p.n)) - mx;
    double dy = std::log2(p.ratio) - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0) throw_precondition("trend needs at least two distinct sizes");
  r.slope = sxy / sxx;
  r.r2 = syy == 0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  r.flag = r.slope > 0.1    ? TrendFlag::growing
           : r.slope < -0.1 ? TrendFlag::shrinking
                            : TrendFlag::bounded;
  for (const auto& p : pts) r.max_ratio = std::max(r.max_ratio, p.ratio);
  return r;
}

// Exact boundedness check: with N the largest size, the max ratio bracket
// over sizes in (N/2, N] must not exceed (21/20)^pow times the max over
// (N/4, N/2].  Ratios arrive pow-transformed, so the factor is transformed
// the same way.
inline bool halves_bounded(const std::vector<std::pair<uint64_t, Rational>>& ratio_hi, int pow,
                           bool* evaluable = nullptr) {
  if (evaluable) *evaluable = false;
  if (ratio_hi.empty()) return true;
  uint64_t top = 0;
  for (const auto& [n, v] : ratio_hi) top = std::max(top, n);
  Rational max_top, max_prev;
  bool have_top = false, have_prev = false;
  for (const auto& [n, v] : ratio_hi) {
    if (2 * n > top) {
      if (!have_top || cmp(v, max_top) > 0) max_top = v;
      have_top = true;
    } else if (4 * n > top) {
      if (!have_prev || cmp(v, max_prev) > 0) max_prev = v;
      have_prev = true;
    }
  }
  if (!have_top || !have_prev) return true;
  if (evaluable) *evaluable = true;
  Rational factor = Rational::make(BigInt(21), BigInt(20)).pow(pow);
  return cmp(max_top, factor * max_prev) <= 0;
}

} // namespace sumprod
