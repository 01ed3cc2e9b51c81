#pragma once

#include <chrono>
#include <map>
#include <string>
#include <vector>

#include "sumprod/claims.hpp"
#include "sumprod/families.hpp"
#include "sumprod/parallel.hpp"
#include "sumprod/trend.hpp"

namespace sumprod {

struct RunRequest {
  std::vector<std::string> claim_ids; // empty: every claim applicable to the family domain
  std::vector<FamilySpec> families;
  std::vector<uint64_t> sizes;
  ClaimConfig cfg;
  bool parallel = true;
};

namespace detail {

inline bool claim_applies(const ClaimDef& c, bool fp_family) {
  if (c.domain == ClaimDomain::both) return true;
  return fp_family == (c.domain == ClaimDomain::fp_only);
}

// Companion set for two-set claims: half-size member of the same family
// (seeded independently for random kinds).
inline std::optional<SetVariant> secondary_for(const FamilySpec& f, uint64_t n) {
  uint64_t m = n / 2 < 2 ? 2 : n / 2;
  FamilySpec g = f;
  g.seed = f.seed + 1;
  if (f.kind == FamilyKind::fp_subgroup) {
    uint64_t best = 0;
    for (uint64_t d : divisors_of(f.p - 1))
      if (d <= m) best = d;
    if (best == 0) return std::nullopt;
    m = best;
  }
  if (m > n) m = n;
  try {
    return generate(g, m);
  } catch (const error&) {
    return std::nullopt;
  }
}

} // namespace detail

// Evaluates the requested claims over family x size, in a deterministic
// output order independent of the worker count.
inline std::vector<ClaimResult> run_claims(const RunRequest& req) {
  struct Task {
    std::size_t family;
    uint64_t n;
  };
  std::vector<Task> tasks;
  for (std::size_t fi = 0; fi < req.families.size(); ++fi) {
    const FamilySpec& fam = req.families[fi];
    if (fam.kind == FamilyKind::fp_subgroup && !req.sizes.empty()) {
      // subgroup orders must divide p-1; walk the divisor ladder instead
      uint64_t lo = req.sizes.front(), hi = req.sizes.front();
      for (uint64_t n : req.sizes) {
        lo = std::min(lo, n);
        hi = std::max(hi, n);
      }
      for (uint64_t n : family_sizes(fam, lo, hi)) tasks.push_back(Task{fi, n});
    } else {
      for (uint64_t n : req.sizes) tasks.push_back(Task{fi, n});
    }
  }

  std::vector<std::vector<ClaimResult>> slots(tasks.size());
  auto run_task = [&](std::size_t ti) {
    const Task& t = tasks[ti];
    const FamilySpec& fam = req.families[t.family];
    std::vector<const ClaimDef*> claims;
    if (req.claim_ids.empty()) {
      for (const auto& c : claim_registry())
        if (detail::claim_applies(c, fam.is_fp())) claims.push_back(&c);
    } else {
      for (const auto& id : req.claim_ids) claims.push_back(&find_claim(id));
    }

    std::vector<ClaimResult>& out = slots[ti];
    ClaimInput in;
    in.family_name = fam.to_string();
    in.n = t.n;
    in.cfg = req.cfg;
    in.cfg.seed = req.cfg.seed;
    bool generated = false;
    std::string gen_error;
    try {
      in.primary = generate(fam, t.n);
      in.secondary = detail::secondary_for(fam, t.n);
      generated = true;
    } catch (const error& e) {
      gen_error = e.what();
    }
    for (const ClaimDef* c : claims) {
      if (!detail::claim_applies(*c, fam.is_fp())) {
        ClaimResult r;
        r.claim = c->id;
        r.family = in.family_name;
        r.n = t.n;
        r.verdict = Verdict::skipped;
        r.skip_reason = "claim domain does not match family";
        out.push_back(std::move(r));
        continue;
      }
      if (!generated) {
        ClaimResult r;
        r.claim = c->id;
        r.family = in.family_name;
        r.n = t.n;
        r.verdict = Verdict::skipped;
        r.skip_reason = "family generation failed: " + gen_error;
        out.push_back(std::move(r));
        continue;
      }
      auto t0 = std::chrono::steady_clock::now();
      std::vector<ClaimResult> rows;
      try {
        rows = c->eval(in);
      } catch (const error& e) {
        ClaimResult r;
        r.claim = c->id;
        r.family = in.family_name;
        r.n = t.n;
        r.verdict = Verdict::skipped;
        r.skip_reason = std::string("evaluation stopped: ") + e.what();
        rows.push_back(std::move(r));
      }
      double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                      .count() /
                  static_cast<double>(rows.empty() ? 1 : rows.size());
      for (auto& row : rows) row.runtime_ms = ms;
      for (auto& row : rows) out.push_back(std::move(row));
    }
  };

  if (req.parallel && tasks.size() > 1) {
    parallel_chunks(tasks.size(), [&](unsigned, std::size_t lo, std::size_t hi) {
      for (std::size_t i = lo; i < hi; ++i) run_task(i);
    });
  } else {
    for (std::size_t i = 0; i < tasks.size(); ++i) run_task(i);
  }

  std::vector<ClaimResult> all;
  for (auto& s : slots)
    for (auto& r : s) all.push_back(std::move(r));
  return all;
}

// Per (claim, family) aggregation used by summaries and the scan command.
struct ClaimSummary {
  std::string claim;
  std::string family;
  std::size_t holds = 0;
  std::size_t fails = 0;
  std::size_t recorded = 0;
  std::size_t skipped = 0;
  double max_ratio = 0; // pow-normalized approximation
  bool has_trend = false;
  TrendReport trend;
  bool halves_evaluable = false;
  bool halves_ok = true;
};

inline std::vector<ClaimSummary> summarize(const std::vector<ClaimResult>& results) {
  std::map<std::pair<std::string, std::string>, ClaimSummary> by_key;
  std::map<std::pair<std::string, std::string>, std::map<uint64_t, double>> ratio_by_n;
  std::map<std::pair<std::string, std::string>, std::map<int, std::vector<std::pair<uint64_t, Rational>>>>
      exact_by_pow;
  for (const auto& r : results) {
    auto key = std::make_pair(r.claim, r.family);
    ClaimSummary& s = by_key[key];
    s.claim = r.claim;
    s.family = r.family;
    switch (r.verdict) {
      case Verdict::holds: ++s.holds; break;
      case Verdict::fails: ++s.fails; break;
      case Verdict::ratio_recorded: ++s.recorded; break;
      case Verdict::skipped: ++s.skipped; break;
    }
    if (r.ratio && r.verdict != Verdict::skipped) {
      double approx = r.ratio->approx();
      s.max_ratio = std::max(s.max_ratio, approx);
      auto& m = ratio_by_n[key];
      auto it = m.find(r.n);
      if (it == m.end() || approx > it->second) m[r.n] = approx;
      auto& e = exact_by_pow[key][r.ratio->pow];
      bool merged = false;
      for (auto& [n, v] : e) {
        if (n == r.n) {
          if (cmp(r.ratio->hi, v) > 0) v = r.ratio->hi;
          merged = true;
          break;
        }
      }
      if (!merged) e.emplace_back(r.n, r.ratio->hi);
    }
  }
  std::vector<ClaimSummary> out;
  for (auto& [key, s] : by_key) {
    auto rit = ratio_by_n.find(key);
    if (rit != ratio_by_n.end() && rit->second.size() >= 3) {
      std::vector<TrendPoint> pts;
      for (const auto& [n, ratio] : rit->second) {
        if (ratio > 0) pts.push_back(TrendPoint{n, ratio});
      }
      if (pts.size() >= 3) {
        s.trend = fit_trend(pts);
        s.trend.claim = s.claim;
        s.trend.family = s.family;
        s.has_trend = true;
      }
    }
    auto eit = exact_by_pow.find(key);
    if (eit != exact_by_pow.end()) {
      bool ok = true, any = false;
      for (auto& [pow, pts] : eit->second) {
        bool evaluable = false;
        bool b = halves_bounded(pts, pow, &evaluable);
        if (evaluable) {
          any = true;
          ok = ok && b;
        }
      }
      s.halves_evaluable = any;
      s.halves_ok = ok;
    }
    out.push_back(std::move(s));
  }
  return out;
}

inline bool any_exact_failure(const std::vector<ClaimResult>& results) {
  for (const auto& r : results) {
    if (r.verdict != Verdict::fails) continue;
    const ClaimDef& c = find_claim(r.claim);
    if (c.cls == Exactness::exact_identity || c.cls == Exactness::exact_inequality) return true;
  }
  return false;
}

} // namespace sumprod
