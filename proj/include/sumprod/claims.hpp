#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sumprod/energy.hpp"
#include "sumprod/families.hpp"
#include "sumprod/fp_lab.hpp"
#include "sumprod/incidence.hpp"
#include "sumprod/set.hpp"

namespace sumprod {

enum class Exactness { exact_identity, exact_inequality, constant_bounded, trend_only };
enum class Verdict { holds, fails, ratio_recorded, skipped };
enum class ClaimDomain { rational_only, fp_only, both };

inline const char* exactness_name(Exactness e) {
  switch (e) {
    case Exactness::exact_identity: return "exact-identity";
    case Exactness::exact_inequality: return "exact-inequality";
    case Exactness::constant_bounded: return "constant-bounded";
    case Exactness::trend_only: return "trend-only";
  }
  return "?";
}

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::ratio_recorded: return "ratio-recorded";
    case Verdict::skipped: return "skipped";
  }
  return "?";
}

// Exact two-sided bracket of ratio^pow; log factors and fractional powers
// are bracketed with integer floors/ceilings so no verdict ever involves
// floating point.
struct RatioBracket {
  Rational lo;
  Rational hi;
  int pow = 1;

  double approx() const {
    double mid = 0.5 * (lo.to_double() + hi.to_double());
    if (mid <= 0) mid = hi.to_double();
    return pow == 1 ? mid : std::pow(mid, 1.0 / pow);
  }
};

struct ClaimResult {
  std::string claim;
  std::string family;
  uint64_t n = 0;
  std::string params;
  Verdict verdict = Verdict::skipped;
  std::string lhs;
  std::string rhs_lo;
  std::string rhs_hi;
  std::optional<RatioBracket> ratio;
  std::string skip_reason;
  double runtime_ms = 0;
};

struct ClaimConfig {
  uint64_t seed = 1;
  std::vector<Rational> alphas = {Rational(1), Rational(-1), Rational(2),
                                  Rational::make(BigInt(1), BigInt(2)), Rational(3)};
  unsigned random_alphas = 2;
  bool sigma_widen = false; // widen the sigma_e z-search from A^-1 to A/A
  std::size_t energy_budget = 4096;
  TripleBudget triple_budget{};
  GowersOptions gowers{};
  std::size_t set_cap = kDefaultSetCap;
  std::size_t pair_budget = kDefaultPairBudget;
  // per-claim size ceilings; above them the claim reports skipped
  uint64_t szt_max_n = 32;
  uint64_t k_fold_max_n = 64;
  uint64_t four_a_max_n = 64;
  uint64_t three_fold_max_n = 48;
  uint64_t product_shift_max_n = 28;
  uint64_t plunnecke_x_max_n = 12;
  uint64_t plunnecke_max_n = 64;
  uint64_t sigma_max_n = 160;
  uint64_t e3m_max_n = 256;
  uint64_t szt_work_budget = 100000000; // |P| * lambda-group count
};

struct ClaimInput {
  SetVariant primary;
  std::optional<SetVariant> secondary;
  std::string family_name;
  uint64_t n = 0;
  ClaimConfig cfg;

  const RSet& rset() const { return std::get<RSet>(primary); }
  const FpSet& fpset() const { return std::get<FpSet>(primary); }
  const RSet& rset_b() const { return std::get<RSet>(secondary ? *secondary : primary); }
  const FpSet& fpset_b() const { return std::get<FpSet>(secondary ? *secondary : primary); }
};

struct ClaimDef {
  std::string id;
  Exactness cls;
  ClaimDomain domain;
  std::string summary;
  std::function<std::vector<ClaimResult>(const ClaimInput&)> eval;
};

namespace detail {

inline ClaimResult base_result(const ClaimInput& in, const std::string& id) {
  ClaimResult r;
  r.claim = id;
  r.family = in.family_name;
  r.n = in.n;
  return r;
}

inline ClaimResult skipped(const ClaimInput& in, const std::string& id,
                           const std::string& reason, const std::string& params = "") {
  ClaimResult r = base_result(in, id);
  r.verdict = Verdict::skipped;
  r.skip_reason = reason;
  r.params = params;
  return r;
}

// floor/ceil of log2(n) for n >= 2
inline std::pair<uint32_t, uint32_t> log2_bracket(uint64_t n) {
  uint32_t fl = 63 - static_cast<uint32_t>(std::countl_zero(n));
  uint32_t ce = (n & (n - 1)) ? fl + 1 : fl;
  return {fl, ce};
}

// bracket of lhs / (rhs * log2(n)^log_exp)
inline RatioBracket log_ratio(const Rational& lhs, const Rational& rhs, int log_exp, uint64_t n,
                              int pow = 1) {
  auto [fl, ce] = log2_bracket(n);
  RatioBracket b;
  b.pow = pow;
  Rational rlo = rhs * Rational(BigInt(fl).pow(static_cast<uint32_t>(log_exp)));
  Rational rhi = rhs * Rational(BigInt(ce).pow(static_cast<uint32_t>(log_exp)));
  b.lo = lhs / rhi;
  b.hi = lhs / rlo;
  return b;
}

inline RatioBracket exact_ratio(const Rational& lhs, const Rational& rhs, int pow = 1) {
  RatioBracket b;
  b.pow = pow;
  b.lo = lhs / rhs;
  b.hi = b.lo;
  return b;
}

inline Rational rat_of(const BigInt& v) { return Rational(v); }
inline Rational rat_of(uint64_t v) { return Rational(BigInt(v)); }

inline BigInt rset_op_size(const RSet& a, SetOp op, const ClaimConfig& cfg) {
  return BigInt(setop(op, a, a, cfg.set_cap, cfg.pair_budget).size());
}

// best admissible multiplicative-doubling constant min(|AA|, |A/A|) / |A|
inline Rational doubling_m(const RSet& a, const ClaimConfig& cfg) {
  BigInt aa = rset_op_size(a, SetOp::product, cfg);
  BigInt qq = rset_op_size(a, SetOp::quotient, cfg);
  BigInt best = aa < qq ? aa : qq;
  return Rational::make(best, BigInt(a.size()));
}

inline std::vector<Rational> alpha_samples(const ClaimInput& in) {
  std::vector<Rational> out = in.cfg.alphas;
  SplitMix rng(in.cfg.seed ^ (0x9e3779b97f4a7c15ULL * (in.n + 1)));
  for (unsigned i = 0; i < in.cfg.random_alphas; ++i) {
    int64_t num = static_cast<int64_t>(rng.below(12)) + 1;
    if (rng.next() & 1) num = -num;
    uint64_t den = rng.below(6) + 1;
    out.push_back(Rational::make(BigInt(num), BigInt(den)));
  }
  return out;
}

} // namespace detail

inline const std::vector<ClaimDef>& claim_registry();

inline const ClaimDef& find_claim(const std::string& id) {
  for (const auto& c : claim_registry())
    if (c.id == id) return c;
  throw_parse("unknown claim id '" + id + "'");
}

// ---------------------------------------------------------------------------
// evaluators

namespace claims_impl {

using detail::base_result;
using detail::exact_ratio;
using detail::log_ratio;
using detail::rat_of;
using detail::skipped;

inline std::vector<ClaimResult> e_cs(const ClaimInput& in) {
  const RSet& a = in.rset();
  const RSet& b = in.rset_b();
  ClaimResult r = base_result(in, "e_cs");
  BigInt e = mixed_energy(a, b, Group::additive, in.cfg.energy_budget).value;
  BigInt na(a.size()), nb(b.size());
  BigInt bound1 = na * na * nb;
  BigInt bound2 = nb * nb * na;
  BigInt prod3 = (na * nb).pow(3);
  bool ok = e <= bound1 && e <= bound2 && e * e <= prod3;
  r.verdict = ok ? Verdict::holds : Verdict::fails;
  r.lhs = e.to_string();
  BigInt smaller = bound1 < bound2 ? bound1 : bound2;
  BigInt s = isqrt(prod3);
  BigInt rhs_lo = smaller < s ? smaller : s;
  BigInt rhs_hi = smaller < s + BigInt(1) ? smaller : s + BigInt(1);
  r.rhs_lo = rhs_lo.to_string();
  r.rhs_hi = rhs_hi.to_string();
  RatioBracket rb;
  rb.pow = 1;
  rb.lo = Rational(e) / Rational(rhs_hi);
  rb.hi = Rational(e) / Rational(rhs_lo);
  r.ratio = rb;
  return {r};
}

inline std::vector<ClaimResult> conv_identity(const ClaimInput& in) {
  std::vector<ClaimResult> out;
  auto push = [&](Group g, const MixedEnergyDiagnostics& d) {
    ClaimResult r = base_result(in, "conv_identity");
    r.params = std::string("group=") + (g == Group::additive ? "add" : "mult");
    r.verdict = d.consistent() ? Verdict::holds : Verdict::fails;
    r.lhs = d.via_convolution.to_string();
    r.rhs_lo = d.via_pointwise.to_string();
    r.rhs_hi = r.rhs_lo;
    out.push_back(std::move(r));
  };
  if (std::holds_alternative<RSet>(in.primary)) {
    const RSet& a = in.rset();
    const RSet& b = in.rset_b();
    push(Group::additive, mixed_energy_three_ways(a, b, Group::additive, in.cfg.energy_budget));
    if (!a.contains_zero() && !b.contains_zero())
      push(Group::multiplicative,
           mixed_energy_three_ways(a, b, Group::multiplicative, in.cfg.energy_budget));
    else
      out.push_back(skipped(in, "conv_identity", "0 in a multiplicative input", "group=mult"));
  } else {
    const FpSet& a = in.fpset();
    const FpSet& b = in.fpset_b();
    push(Group::additive, fp_mixed_energy_three_ways(a, b, Group::additive, in.cfg.energy_budget));
    if (!a.contains_zero() && !b.contains_zero())
      push(Group::multiplicative,
           fp_mixed_energy_three_ways(a, b, Group::multiplicative, in.cfg.energy_budget));
    else
      out.push_back(skipped(in, "conv_identity", "0 in a multiplicative input", "group=mult"));
  }
  return out;
}

inline std::vector<ClaimResult> fiber_identity(const ClaimInput& in) {
  ClaimResult r = base_result(in, "fiber_identity");
  if (std::holds_alternative<RSet>(in.primary)) {
    const RSet& a = in.rset();
    if (a.contains_zero()) return {skipped(in, "fiber_identity", "0 in A")};
    BigInt ex = energy(a, 2, Group::multiplicative, in.cfg.energy_budget).value;
    BigInt sum;
    for (const auto& [lam, fib] : fiber_decomposition(a))
      sum += BigInt(fib.size()) * BigInt(fib.size());
    r.verdict = ex == sum ? Verdict::holds : Verdict::fails;
    r.lhs = ex.to_string();
    r.rhs_lo = r.rhs_hi = sum.to_string();
  } else {
    const FpSet& a = in.fpset();
    if (a.contains_zero()) return {skipped(in, "fiber_identity", "0 in A")};
    BigInt ex = fp_energy_k(a, 2, Group::multiplicative, in.cfg.energy_budget).value;
    // independent route: enumerate fibers by membership lookups
    uint64_t p = a.modulus();
    FpSet quot = fp_setop(SetOp::quotient, a, a, in.cfg.set_cap, in.cfg.pair_budget);
    BigInt sum;
    for (uint64_t lam : quot) {
      uint64_t lam_inv = invmod_u64(lam, p);
      uint64_t c = 0;
      for (uint64_t x : a)
        if (a.contains(mulmod_u64(lam_inv, x, p))) ++c;
      sum += BigInt(c) * BigInt(c);
    }
    r.verdict = ex == sum ? Verdict::holds : Verdict::fails;
    r.lhs = ex.to_string();
    r.rhs_lo = r.rhs_hi = sum.to_string();
  }
  return {r};
}

inline std::vector<ClaimResult> cs_floor(const ClaimInput& in) {
  ClaimResult r = base_result(in, "cs_floor");
  if (std::holds_alternative<RSet>(in.primary)) {
    const RSet& a = in.rset();
    if (a.contains_zero()) return {skipped(in, "cs_floor", "0 in A")};
    BigInt ex = energy(a, 2, Group::multiplicative, in.cfg.energy_budget).value;
    BigInt q = detail::rset_op_size(a, SetOp::quotient, in.cfg);
    BigInt n4 = BigInt(a.size()).pow(4);
    r.verdict = ex * q >= n4 ? Verdict::holds : Verdict::fails;
    r.lhs = ex.to_string();
    r.rhs_lo = r.rhs_hi = (Rational(n4) / Rational(q)).to_string();
    r.ratio = exact_ratio(Rational(n4) / Rational(q), Rational(ex));
  } else {
    const FpSet& a = in.fpset();
    if (a.contains_zero()) return {skipped(in, "cs_floor", "0 in A")};
    BigInt ex = fp_energy_k(a, 2, Group::multiplicative, in.cfg.energy_budget).value;
    BigInt q(fp_setop(SetOp::quotient, a, a, in.cfg.set_cap, in.cfg.pair_budget).size());
    BigInt n4 = BigInt(a.size()).pow(4);
    r.verdict = ex * q >= n4 ? Verdict::holds : Verdict::fails;
    r.lhs = ex.to_string();
    r.rhs_lo = r.rhs_hi = (Rational(n4) / Rational(q)).to_string();
    r.ratio = exact_ratio(Rational(n4) / Rational(q), Rational(ex));
  }
  return {r};
}

inline std::vector<ClaimResult> plunnecke(const ClaimInput& in) {
  std::vector<ClaimResult> out;
  if (in.n > in.cfg.plunnecke_max_n)
    return {skipped(in, "plunnecke", "size above plunnecke budget")};
  static const std::pair<unsigned, unsigned> nm[] = {{1, 1}, {1, 2}, {2, 1},
                                                     {2, 2}, {1, 3}, {3, 1}};
  if (std::holds_alternative<RSet>(in.primary)) {
    const RSet& a = in.rset();
    const RSet& b = in.rset_b();
    RSet apb = setop(SetOp::sum, a, b, in.cfg.set_cap, in.cfg.pair_budget);
    Rational k = Rational::make(BigInt(apb.size()), BigInt(a.size()));
    for (auto [nn, mm] : nm) {
      ClaimResult r = base_result(in, "plunnecke");
      r.params = "n=" + std::to_string(nn) + ",m=" + std::to_string(mm);
      RSet nb = iterated_sumset(b, nn, in.cfg.set_cap, in.cfg.pair_budget);
      RSet mb = iterated_sumset(b, mm, in.cfg.set_cap, in.cfg.pair_budget);
      RSet diff = setop(SetOp::difference, nb, mb, in.cfg.set_cap, in.cfg.pair_budget);
      Rational lhs = rat_of(BigInt(diff.size()));
      Rational rhs = k.pow(static_cast<int>(nn + mm)) * rat_of(BigInt(a.size()));
      r.verdict = cmp(lhs, rhs) <= 0 ? Verdict::holds : Verdict::fails;
      r.lhs = lhs.to_string();
      r.rhs_lo = r.rhs_hi = rhs.to_string();
      r.ratio = exact_ratio(lhs, rhs);
      out.push_back(std::move(r));
    }
  } else {
    const FpSet& a = in.fpset();
    const FpSet& b = in.fpset_b();
    FpSet apb = fp_setop(SetOp::sum, a, b, in.cfg.set_cap, in.cfg.pair_budget);
    Rational k = Rational::make(BigInt(apb.size()), BigInt(a.size()));
    for (auto [nn, mm] : nm) {
      ClaimResult r = base_result(in, "plunnecke");
      r.params = "n=" + std::to_string(nn) + ",m=" + std::to_string(mm);
      FpSet nb = b;
      for (unsigned i = 1; i < nn; ++i)
        nb = fp_setop(SetOp::sum, nb, b, in.cfg.set_cap, in.cfg.pair_budget);
      FpSet mb = b;
      for (unsigned i = 1; i < mm; ++i)
        mb = fp_setop(SetOp::sum, mb, b, in.cfg.set_cap, in.cfg.pair_budget);
      FpSet diff = fp_setop(SetOp::difference, nb, mb, in.cfg.set_cap, in.cfg.pair_budget);
      Rational lhs = rat_of(BigInt(diff.size()));
      Rational rhs = k.pow(static_cast<int>(nn + mm)) * rat_of(BigInt(a.size()));
      r.verdict = cmp(lhs, rhs) <= 0 ? Verdict::holds : Verdict::fails;
      r.lhs = lhs.to_string();
      r.rhs_lo = r.rhs_hi = rhs.to_string();
      r.ratio = exact_ratio(lhs, rhs);
      out.push_back(std::move(r));
    }
  }
  return out;
}

inline std::vector<ClaimResult> plunnecke_x(const ClaimInput& in) {
  const RSet& a = in.rset();
  const RSet& b = in.rset_b();
  if (a.size() > in.cfg.plunnecke_x_max_n)
    return {skipped(in, "plunnecke_x", "exhaustive subset search limited to |A| <= " +
                                           std::to_string(in.cfg.plunnecke_x_max_n))};
  RSet apb = setop(SetOp::sum, a, b, in.cfg.set_cap, in.cfg.pair_budget);
  Rational k = Rational::make(BigInt(apb.size()), BigInt(a.size()));
  std::vector<ClaimResult> out;
  for (Rational delta : {Rational::make(BigInt(1), BigInt(2)),
                         Rational::make(BigInt(1), BigInt(4))}) {
    ClaimResult r = base_result(in, "plunnecke_x");
    r.params = "delta=" + delta.to_string();
    Rational kd = k / delta;
    Rational kd2 = kd * kd;
    // subsets in descending size; the full set is tried first
    std::size_t nA = a.size();
    Rational min_size = (Rational(1) - delta) * rat_of(BigInt(nA));
    bool found = false;
    std::vector<uint32_t> masks;
    masks.reserve(std::size_t(1) << nA);
    for (uint32_t m = 1; m < (uint32_t(1) << nA); ++m) {
      if (cmp(rat_of(BigInt(static_cast<uint64_t>(std::popcount(m)))), min_size) >= 0)
        masks.push_back(m);
    }
    std::sort(masks.begin(), masks.end(), [](uint32_t x, uint32_t y) {
      int px = std::popcount(x), py = std::popcount(y);
      if (px != py) return px > py;
      return x < y;
    });
    for (uint32_t m : masks) {
      std::vector<Rational> xs;
      for (std::size_t i = 0; i < nA; ++i)
        if (m & (uint32_t(1) << i)) xs.push_back(a[i]);
      RSet x(std::move(xs));
      Rational szx = rat_of(BigInt(x.size()));
      RSet xb = setop(SetOp::sum, x, b, in.cfg.set_cap, in.cfg.pair_budget);
      if (cmp(rat_of(BigInt(xb.size())), kd * szx) > 0) continue;
      RSet xbb = setop(SetOp::sum, xb, b, in.cfg.set_cap, in.cfg.pair_budget);
      if (cmp(rat_of(BigInt(xbb.size())), kd2 * szx) > 0) continue;
      found = true;
      r.lhs = BigInt(x.size()).to_string();
      r.rhs_lo = r.rhs_hi = (kd2 * szx).to_string();
      break;
    }
    r.verdict = found ? Verdict::holds : Verdict::fails;
    out.push_back(std::move(r));
  }
  return out;
}

inline std::vector<ClaimResult> sigma_e(const ClaimInput& in) {
  const RSet& a = in.rset();
  if (a.contains_zero()) return {skipped(in, "sigma_e", "0 in A")};
  if (a.size() > in.cfg.sigma_max_n) return {skipped(in, "sigma_e", "size above sigma_e budget")};
  ClaimResult r = base_result(in, "sigma_e");
  Rational lhs = Rational(energy(a, 2, Group::multiplicative, in.cfg.energy_budget).value) /
                 rat_of(BigInt(a.size()));
  RSet zs = in.cfg.sigma_widen ? setop(SetOp::quotient, a, a, in.cfg.set_cap, in.cfg.pair_budget)
                               : inverse_set(a);
  BigInt best;
  for (const auto& z : zs) {
    if (z.is_zero()) continue;
    RSet za = dilate(a, z);
    BigInt total;
    for (const auto& x : za) {
      uint64_t c = 0;
      for (const auto& y : za)
        if (za.contains(x * y)) ++c;
      total += BigInt(c);
    }
    if (total > best) best = total;
  }
  r.lhs = lhs.to_string();
  r.rhs_lo = r.rhs_hi = best.to_string();
  r.verdict = Verdict::ratio_recorded;
  r.ratio = exact_ratio(lhs, Rational(best));
  return {r};
}

inline std::vector<ClaimResult> e3_m(const ClaimInput& in) {
  const RSet& a = in.rset();
  if (a.contains_zero()) return {skipped(in, "e3_m", "0 in A")};
  if (a.size() < 2) return {skipped(in, "e3_m", "needs |A| >= 2 for the log factor")};
  if (a.size() > in.cfg.e3m_max_n) return {skipped(in, "e3_m", "size above e3_m budget")};
  ClaimResult r = base_result(in, "e3_m");
  BigInt e3 = energy(a, 3, Group::additive, in.cfg.energy_budget).value;
  auto cands = default_mhat_candidates(a);
  auto [mh, idx] = m_hat(a, cands, in.cfg.set_cap, in.cfg.pair_budget);
  r.params = "mhat_witness=" + std::to_string(idx);
  Rational rhs = mh * rat_of(BigInt(a.size()).pow(3));
  r.lhs = e3.to_string();
  r.rhs_lo = r.rhs_hi = rhs.to_string();
  r.verdict = Verdict::ratio_recorded;
  r.ratio = log_ratio(Rational(e3), rhs, 1, a.size());
  return {r};
}

inline std::vector<ClaimResult> triples_log(const ClaimInput& in) {
  const RSet& a = in.rset();
  if (a.size() < 2) return {skipped(in, "triples_log", "needs |A| >= 2 for the log factor")};
  uint64_t work = static_cast<uint64_t>(a.size()) * a.size() * a.size();
  if (work > in.cfg.triple_budget.max_product)
    return {skipped(in, "triples_log", "size above triple budget")};
  ClaimResult r = base_result(in, "triples_log");
  BigInt t = collinear_triples(a, a, a, TripleAlgo::slope_sort, in.cfg.triple_budget);
  Rational rhs = rat_of(BigInt(a.size()).pow(4));
  r.lhs = t.to_string();
  r.rhs_lo = r.rhs_hi = rhs.to_string();
  r.verdict = Verdict::ratio_recorded;
  r.ratio = log_ratio(Rational(t), rhs, 1, a.size());
  return {r};
}

inline std::vector<ClaimResult> rn_t(const ClaimInput& in) {
  const RSet& a = in.rset();
  const RSet& b = in.rset_b();
  if (b.size() > a.size()) return {skipped(in, "rn_t", "requires |B| <= |A|")};
  if (b.size() < 2) return {skipped(in, "rn_t", "needs |B| >= 2 for the log factor")};
  uint64_t work = static_cast<uint64_t>(a.size()) * b.size() * b.size();
  if (work > in.cfg.triple_budget.max_product)
    return {skipped(in, "rn_t", "size above triple budget")};
  ClaimResult r = base_result(in, "rn_t");
  BigInt t = collinear_triples(a, b, b, TripleAlgo::energy_form, in.cfg.triple_budget);
  Rational rhs = rat_of(BigInt(a.size()) * BigInt(a.size()) * BigInt(b.size()) * BigInt(b.size()));
  r.lhs = t.to_string();
  r.rhs_lo = r.rhs_hi = rhs.to_string();
  r.verdict = Verdict::ratio_recorded;
  r.ratio = log_ratio(Rational(t), rhs, 1, b.size());
  return {r};
}

inline std::vector<ClaimResult> szt(const ClaimInput& in) {
  const RSet& a = in.rset();
  if (a.contains_zero()) return {skipped(in, "szt", "0 in A")};
  if (a.size() > in.cfg.szt_max_n) return {skipped(in, "szt", "size above szt budget")};
  ClaimResult r = base_result(in, "szt");
  RSet diff = setop(SetOp::difference, a, a, in.cfg.set_cap, in.cfg.pair_budget);
  RSet quot = setop(SetOp::quotient, a, a, in.cfg.set_cap, in.cfg.pair_budget);
  if (static_cast<uint64_t>(diff.size()) * diff.size() * quot.size() > in.cfg.szt_work_budget)
    return {skipped(in, "szt", "incidence instance above szt work budget")};
  PointSet pts = PointSet::grid(diff, diff);
  std::vector<std::pair<Rational, PointSet>> targets;
  targets.reserve(quot.size());
  for (const auto& lam : quot) targets.emplace_back(lam, q_lambda(a, lam, in.cfg.pair_budget));
  LineFamily fam = build_line_family(targets);
  BigInt inc = incidences(pts, fam);
  BigInt np(pts.size()), nl(fam.size());
  BigInt pl2 = (np * nl).pow(2);
  BigInt c = icbrt(pl2);
  BigInt rhs_lo = c + np + nl;
  BigInt rhs_hi = c + BigInt(1) + np + nl;
  r.lhs = inc.to_string();
  r.rhs_lo = rhs_lo.to_string();
  r.rhs_hi = rhs_hi.to_string();
  r.verdict = Verdict::ratio_recorded;
  RatioBracket rb;
  rb.pow = 1;
  rb.lo = Rational(inc) / Rational(rhs_hi);
  rb.hi = Rational(inc) / Rational(rhs_lo);
  r.ratio = rb;
  return {r};
}

inline std::vector<ClaimResult> main_5_3(const ClaimInput& in) {
  const RSet& a = in.rset();
  if (a.contains_zero()) return {skipped(in, "main_5_3", "0 in A")};
  ClaimResult r = base_result(in, "main_5_3");
  BigInt d = detail::rset_op_size(a, SetOp::difference, in.cfg);
  BigInt q = detail::rset_op_size(a, SetOp::quotient, in.cfg);
  Rational lhs = Rational(d.pow(6) * q.pow(13));
  Rational rhs = rat_of(BigInt(a.size()).pow(23));
  r.lhs = lhs.to_string();
  r.rhs_lo = r.rhs_hi = rhs.to_string();
  r.verdict = Verdict::ratio_recorded;
  r.ratio = exact_ratio(lhs, rhs);
  return {r};
}

inline std::vector<ClaimResult> e8_remark(const ClaimInput& in) {
  const RSet& a = in.rset();
  if (a.contains_zero()) return {skipped(in, "e8_remark", "0 in A")};
  ClaimResult r = base_result(in, "e8_remark");
  BigInt e8 = energy(a, 8, Group::multiplicative, in.cfg.energy_budget).value;
  BigInt d = detail::rset_op_size(a, SetOp::difference, in.cfg);
  BigInt q = detail::rset_op_size(a, SetOp::quotient, in.cfg);
  Rational lhs = Rational(BigInt(a.size()).pow(7) * e8);
  Rational rhs = Rational(q.pow(6) * d.pow(6));
  r.lhs = lhs.to_string();
  r.rhs_lo = r.rhs_hi = rhs.to_string();
  r.verdict = Verdict::ratio_recorded;
  r.ratio = exact_ratio(lhs, rhs);
  return {r};
}

inline std::vector<ClaimResult> elekes(const ClaimInput& in) {
  const RSet& a = in.rset();
  if (a.contains_zero()) return {skipped(in, "elekes", "0 in A")};
  ClaimResult r = base_result(in, "elekes");
  BigInt q = detail::rset_op_size(a, SetOp::quotient, in.cfg);
  BigInt s = detail::rset_op_size(a, SetOp::sum, in.cfg);
  BigInt d = detail::rset_op_size(a, SetOp::difference, in.cfg);
  BigInt pm = s < d ? s : d;
  Rational lhs = rat_of(BigInt(a.size()).pow(5));
  Rational rhs = Rational(q * q * pm * pm);
  r.params = "pm=" + std::string(s < d ? "sum" : "difference");
  r.lhs = lhs.to_string();
  r.rhs_lo = r.rhs_hi = rhs.to_string();
  r.verdict = Verdict::ratio_recorded;
  r.ratio = exact_ratio(lhs, rhs);
  return {r};
}

inline std::vector<ClaimResult> e_m_alpha(const ClaimInput& in) {
  const RSet& a = in.rset();
  if (a.contains_zero()) return {skipped(in, "e_m_alpha", "0 in A")};
  if (a.size() < 2) return {skipped(in, "e_m_alpha", "needs |A| >= 2 for the log factor")};
  Rational m = detail::doubling_m(a, in.cfg);
  Rational rhs_core = m.pow(4) * rat_of(BigInt(a.size()) * BigInt(a.size()));
  std::vector<ClaimResult> out;
  for (const auto& alpha : detail::alpha_samples(in)) {
    if (alpha.is_zero()) continue;
    ClaimResult r = base_result(in, "e_m_alpha");
    r.params = "alpha=" + alpha.to_string();
    BigInt lhs = mult_energy_allowing_zero(translate(a, alpha), in.cfg.energy_budget);
    r.lhs = lhs.to_string();
    r.rhs_lo = r.rhs_hi = rhs_core.to_string();
    r.verdict = Verdict::ratio_recorded;
    r.ratio = log_ratio(Rational(lhs), rhs_core, 1, a.size());
    out.push_back(std::move(r));
  }
  return out;
}

inline std::vector<ClaimResult> product_shift_inclusion(const ClaimInput& in) {
  const RSet& a = in.rset();
  if (a.size() > in.cfg.product_shift_max_n)
    return {skipped(in, "product_shift_inclusion", "size above product_shift budget")};
  ClaimResult r = base_result(in, "product_shift_inclusion");
  Rational one(1);
  RSet a1 = translate(a, one);
  RSet lhs_set = setop(SetOp::product, a1, a1, in.cfg.set_cap, in.cfg.pair_budget);
  RSet aa = setop(SetOp::product, a, a, in.cfg.set_cap, in.cfg.pair_budget);
  RSet aapa = setop(SetOp::sum, aa, a, in.cfg.set_cap, in.cfg.pair_budget);
  RSet aapaa = setop(SetOp::sum, aapa, a, in.cfg.set_cap, in.cfg.pair_budget);
  RSet rhs_set = translate(aapaa, one);
  bool incl = lhs_set.is_subset_of(rhs_set);
  bool size_eq = rhs_set.size() == aapaa.size();
  r.verdict = incl && size_eq ? Verdict::holds : Verdict::fails;
  r.lhs = BigInt(lhs_set.size()).to_string();
  r.rhs_lo = r.rhs_hi = BigInt(aapaa.size()).to_string();
  r.ratio = exact_ratio(rat_of(BigInt(lhs_set.size())), rat_of(BigInt(aapaa.size())));
  return {r};
}

inline std::vector<ClaimResult> three_fold(const ClaimInput& in) {
  const RSet& a = in.rset();
  if (a.contains_zero()) return {skipped(in, "three_fold", "0 in A")};
  if (a.size() < 2) return {skipped(in, "three_fold", "needs |A| >= 2 for the log factor")};
  if (a.size() > in.cfg.three_fold_max_n)
    return {skipped(in, "three_fold", "size above three_fold budget")};
  Rational m = detail::doubling_m(a, in.cfg);
  auto alphas = detail::alpha_samples(in);
  std::vector<ClaimResult> out;
  for (std::size_t i = 0; i + 1 < alphas.size(); i += 2) {
    const Rational& alpha = alphas[i];
    const Rational& beta = alphas[i + 1];
    if (alpha.is_zero() || beta.is_zero()) continue;
    ClaimResult r = base_result(in, "three_fold");
    r.params = "alpha=" + alpha.to_string() + ",beta=" + beta.to_string();
    RSet sum1 = setop(SetOp::sum, a, dilate(a, alpha), in.cfg.set_cap, in.cfg.pair_budget);
    RSet sum2 = setop(SetOp::sum, sum1, dilate(a, beta), in.cfg.set_cap, in.cfg.pair_budget);
    Rational lhs = rat_of(BigInt(sum2.size()));
    // bound = |A|^2 / (M^6 log|A|); ratio = bound / lhs
    Rational core = rat_of(BigInt(a.size()) * BigInt(a.size())) / m.pow(6);
    r.lhs = lhs.to_string();
    r.rhs_lo = r.rhs_hi = core.to_string();
    r.verdict = Verdict::ratio_recorded;
    r.ratio = log_ratio(core / lhs, Rational(1), 1, a.size());
    out.push_back(std::move(r));
  }
  return out;
}

inline std::vector<ClaimResult> gowers_char(const ClaimInput& in) {
  const RSet& a = in.rset();
  if (a.contains_zero()) return {skipped(in, "gowers_char", "0 in A")};
  BigInt ex = energy(a, 2, Group::multiplicative, in.cfg.energy_budget).value;
  BigInt n(a.size());
  struct Row {
    int k;
    uint32_t e_exp;
    uint32_t n_exp;
  };
  static const Row rows[] = {{2, 1, 0}, {3, 4, 8}, {4, 11, 28}};
  std::vector<ClaimResult> out;
  for (const auto& row : rows) {
    ClaimResult r = base_result(in, "gowers_char");
    r.params = "k=" + std::to_string(row.k);
    GowersOptions opt = in.cfg.gowers;
    std::size_t maxn = opt.max_size ? opt.max_size : detail::gowers_default_max(row.k);
    if (a.size() > maxn) {
      out.push_back(skipped(in, "gowers_char", "size above Gowers budget", r.params));
      continue;
    }
    BigInt u = gowers_norm(a, row.k, opt).value;
    BigInt lhs = u * n.pow(row.n_exp);
    BigInt rhs = ex.pow(row.e_exp);
    r.verdict = lhs >= rhs ? Verdict::holds : Verdict::fails;
    r.lhs = lhs.to_string();
    r.rhs_lo = r.rhs_hi = rhs.to_string();
    r.ratio = exact_ratio(Rational(rhs), Rational(lhs));
    out.push_back(std::move(r));
  }
  return out;
}

inline std::vector<ClaimResult> k_fold_gowers(const ClaimInput& in) {
  const RSet& a = in.rset();
  if (a.contains_zero()) return {skipped(in, "k_fold_gowers", "0 in A")};
  if (a.size() < 2) return {skipped(in, "k_fold_gowers", "needs |A| >= 2 for the log factor")};
  if (a.size() > in.cfg.k_fold_max_n)
    return {skipped(in, "k_fold_gowers", "size above k_fold budget")};
  std::vector<ClaimResult> out;
  for (int k : {1, 2}) {
    ClaimResult r = base_result(in, "k_fold_gowers");
    r.params = "k=" + std::to_string(k);
    BigInt u = gowers_norm(a, k + 1, in.cfg.gowers).value;
    RSet ksum = iterated_sumset(a, 1u << k, in.cfg.set_cap, in.cfg.pair_budget);
    BigInt s2 = BigInt(ksum.size()) * BigInt(ksum.size());
    r.lhs = u.to_string();
    r.rhs_lo = r.rhs_hi = s2.to_string();
    r.verdict = Verdict::ratio_recorded;
    r.ratio = log_ratio(Rational(u), Rational(s2), k, a.size());
    out.push_back(std::move(r));
  }
  return out;
}

inline std::vector<ClaimResult> k_fold(const ClaimInput& in) {
  const RSet& a = in.rset();
  if (a.contains_zero()) return {skipped(in, "k_fold", "0 in A")};
  if (a.size() < 2) return {skipped(in, "k_fold", "needs |A| >= 2 for the log factor")};
  if (a.size() > in.cfg.k_fold_max_n) return {skipped(in, "k_fold", "size above k_fold budget")};
  Rational m = detail::doubling_m(a, in.cfg);
  std::vector<ClaimResult> out;
  // k = 1: |2A| >= c |A|^{3/2} M^{-1/2} log^{-1/2}; squared ratio stays exact
  {
    ClaimResult r = base_result(in, "k_fold");
    r.params = "k=1";
    RSet s = iterated_sumset(a, 2, in.cfg.set_cap, in.cfg.pair_budget);
    BigInt sz(s.size());
    Rational num = rat_of(BigInt(a.size()).pow(3));
    Rational den = m * Rational(sz * sz);
    r.lhs = sz.to_string();
    r.rhs_lo = r.rhs_hi = num.to_string();
    r.verdict = Verdict::ratio_recorded;
    r.ratio = log_ratio(num / den, Rational(1), 1, a.size(), /*pow=*/2);
    out.push_back(std::move(r));
  }
  // k = 2: |4A| >= c |A|^2 M^{-2} log^{-1}
  {
    ClaimResult r = base_result(in, "k_fold");
    r.params = "k=2";
    RSet s = iterated_sumset(a, 4, in.cfg.set_cap, in.cfg.pair_budget);
    BigInt sz(s.size());
    Rational bound = rat_of(BigInt(a.size()) * BigInt(a.size())) / m.pow(2);
    r.lhs = sz.to_string();
    r.rhs_lo = r.rhs_hi = bound.to_string();
    r.verdict = Verdict::ratio_recorded;
    r.ratio = log_ratio(bound / Rational(sz), Rational(1), 1, a.size());
    out.push_back(std::move(r));
  }
  return out;
}

inline std::vector<ClaimResult> four_a_exponent(const ClaimInput& in) {
  const RSet& a = in.rset();
  if (a.size() < 2) return {skipped(in, "four_a_exponent", "needs |A| >= 2")};
  if (a.size() > in.cfg.four_a_max_n)
    return {skipped(in, "four_a_exponent", "size above four_a budget")};
  ClaimResult r = base_result(in, "four_a_exponent");
  RSet s = iterated_sumset(a, 4, in.cfg.set_cap, in.cfg.pair_budget);
  BigInt sz(s.size());
  double expo = std::log2(sz.to_double()) / std::log2(static_cast<double>(a.size()));
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", expo);
  r.params = std::string("exponent=") + buf;
  Rational lhs = rat_of(sz);
  Rational rhs = rat_of(BigInt(a.size()) * BigInt(a.size()));
  r.lhs = lhs.to_string();
  r.rhs_lo = r.rhs_hi = rhs.to_string();
  r.verdict = Verdict::ratio_recorded;
  r.ratio = exact_ratio(lhs, rhs);
  return {r};
}

inline std::vector<ClaimResult> fp_sum_prod(const ClaimInput& in) {
  const FpSet& a = in.fpset();
  if (a.contains_zero()) return {skipped(in, "fp_sum_prod", "0 in A")};
  // B = C = A; precondition |A||B||BC| <= p^2/4
  FpSet bc = fp_setop(SetOp::product, a, a, in.cfg.set_cap, in.cfg.pair_budget);
  BigInt p(a.modulus());
  BigInt filt = BigInt(a.size()) * BigInt(a.size()) * BigInt(bc.size());
  if (BigInt(4) * filt > p * p)
    return {skipped(in, "fp_sum_prod", "|A||B||BC| above p^2/4 filter")};
  ClaimResult r = base_result(in, "fp_sum_prod");
  BigInt e = fp_energy(a, a, in.cfg.energy_budget);
  BigInt na(a.size()), nbc(bc.size());
  BigInt m = na > nbc ? na : nbc;
  // (|A||BC|)^{3/2} |B|^{-1/2} = sqrt(|A|^2 |BC|^3) with B = A
  BigInt s = isqrt(na * na * nbc.pow(3));
  BigInt t = m * nbc; // M |A||BC|/|B| = M|BC|
  BigInt rhs_lo = s + t;
  BigInt rhs_hi = s + BigInt(1) + t;
  r.lhs = e.to_string();
  r.rhs_lo = rhs_lo.to_string();
  r.rhs_hi = rhs_hi.to_string();
  r.verdict = Verdict::ratio_recorded;
  RatioBracket rb;
  rb.pow = 1;
  rb.lo = Rational(e) / Rational(rhs_hi);
  rb.hi = Rational(e) / Rational(rhs_lo);
  r.ratio = rb;
  return {r};
}

inline std::vector<ClaimResult> fp_shift(const ClaimInput& in) {
  const FpSet& a = in.fpset();
  if (a.contains_zero()) return {skipped(in, "fp_shift", "0 in A")};
  FpSet aa = fp_setop(SetOp::product, a, a, in.cfg.set_cap, in.cfg.pair_budget);
  BigInt p(a.modulus());
  // |AA| <= p^{2/3}/2 filter, evaluated as (2|AA|)^3 <= p^2
  if ((BigInt(2) * BigInt(aa.size())).pow(3) > p * p)
    return {skipped(in, "fp_shift", "|AA| above p^(2/3)/2 filter")};
  ClaimResult r = base_result(in, "fp_shift");
  auto [v, x] = shift_intersection_max(a);
  r.params = "argmax=" + std::to_string(x);
  Rational m = Rational::make(BigInt(aa.size()), BigInt(a.size()));
  Rational lhs = rat_of(BigInt(v));
  // ratio^4 = v^4 / (M^9 |A|^3)
  Rational rhs4 = m.pow(9) * rat_of(BigInt(a.size()).pow(3));
  r.lhs = lhs.to_string();
  r.rhs_lo = r.rhs_hi = rhs4.to_string();
  r.verdict = Verdict::ratio_recorded;
  r.ratio = exact_ratio(lhs.pow(4), rhs4, /*pow=*/4);
  return {r};
}

inline std::vector<ClaimResult> fp_shift_q(const ClaimInput& in) {
  const FpSet& a = in.fpset();
  if (a.contains_zero()) return {skipped(in, "fp_shift_q", "0 in A")};
  FpSet q = fp_setop(SetOp::quotient, a, a, in.cfg.set_cap, in.cfg.pair_budget);
  BigInt p(a.modulus());
  // M^4 |A|^3 <= p^2/4 with M = |A/A|/|A|: 4|A/A|^4 <= p^2 |A|
  if (BigInt(4) * BigInt(q.size()).pow(4) > p * p * BigInt(a.size()))
    return {skipped(in, "fp_shift_q", "M^4|A|^3 above p^2/4 filter")};
  ClaimResult r = base_result(in, "fp_shift_q");
  auto [v, x] = shift_intersection_max(a);
  r.params = "argmax=" + std::to_string(x);
  Rational m = Rational::make(BigInt(q.size()), BigInt(a.size()));
  Rational lhs = rat_of(BigInt(v));
  Rational rhs4 = m.pow(12) * rat_of(BigInt(a.size()).pow(3));
  r.lhs = lhs.to_string();
  r.rhs_lo = r.rhs_hi = rhs4.to_string();
  r.verdict = Verdict::ratio_recorded;
  r.ratio = exact_ratio(lhs.pow(4), rhs4, /*pow=*/4);
  return {r};
}

} // namespace claims_impl

inline const std::vector<ClaimDef>& claim_registry() {
  static const std::vector<ClaimDef> defs = {
      {"e_cs", Exactness::exact_inequality, ClaimDomain::rational_only,
       "E+(A,B) <= min(|A|^2|B|, |B|^2|A|, (|A||B|)^(3/2))", claims_impl::e_cs},
      {"conv_identity", Exactness::exact_identity, ClaimDomain::both,
       "sum (A*B)^2 = sum (AoB)^2 = sum (AoA)(BoB)", claims_impl::conv_identity},
      {"fiber_identity", Exactness::exact_identity, ClaimDomain::both,
       "Ex(A) = sum over lambda of |A_lambda|^2", claims_impl::fiber_identity},
      {"cs_floor", Exactness::exact_inequality, ClaimDomain::both,
       "Ex(A) >= |A|^4 / |A/A|", claims_impl::cs_floor},
      {"plunnecke", Exactness::exact_inequality, ClaimDomain::both,
       "|nB-mB| <= K^(n+m)|A| with K = |A+B|/|A|", claims_impl::plunnecke},
      {"plunnecke_x", Exactness::exact_inequality, ClaimDomain::rational_only,
       "exists X in A, |X| >= (1-d)|A|, |X+kB| <= (K/d)^k |X|", claims_impl::plunnecke_x},
      {"sigma_e", Exactness::constant_bounded, ClaimDomain::rational_only,
       "max_z sum_x |zA meet x zA| vs Ex(A)/|A|", claims_impl::sigma_e},
      {"e3_m", Exactness::constant_bounded, ClaimDomain::rational_only,
       "E3+(A) vs mhat(A) |A|^3 log|A|", claims_impl::e3_m},
      {"triples_log", Exactness::constant_bounded, ClaimDomain::rational_only,
       "T(A) vs |A|^4 log|A|", claims_impl::triples_log},
      {"rn_t", Exactness::constant_bounded, ClaimDomain::rational_only,
       "T(A,B,B) vs |A|^2|B|^2 log|B|", claims_impl::rn_t},
      {"szt", Exactness::constant_bounded, ClaimDomain::rational_only,
       "I(P,L) vs (|P||L|)^(2/3) + |P| + |L|", claims_impl::szt},
      {"main_5_3", Exactness::trend_only, ClaimDomain::rational_only,
       "|A-A|^6 |A/A|^13 vs |A|^23", claims_impl::main_5_3},
      {"e8_remark", Exactness::trend_only, ClaimDomain::rational_only,
       "|A|^7 Ex_8(A) vs |A/A|^6 |A-A|^6", claims_impl::e8_remark},
      {"elekes", Exactness::constant_bounded, ClaimDomain::rational_only,
       "|A|^5 vs |A/A|^2 |A+-A|^2", claims_impl::elekes},
      {"e_m_alpha", Exactness::constant_bounded, ClaimDomain::rational_only,
       "Ex(A+alpha) vs M^4 |A|^2 log|A|", claims_impl::e_m_alpha},
      {"product_shift_inclusion", Exactness::exact_inequality, ClaimDomain::rational_only,
       "(A+1)(A+1) inside AA+A+A+1", claims_impl::product_shift_inclusion},
      {"three_fold", Exactness::constant_bounded, ClaimDomain::rational_only,
       "|A+aA+bA| vs |A|^2 / (M^6 log|A|)", claims_impl::three_fold},
      {"gowers_char", Exactness::exact_inequality, ClaimDomain::rational_only,
       "U^k norm vs Ex(A) powers, k in {2,3,4}", claims_impl::gowers_char},
      {"k_fold_gowers", Exactness::constant_bounded, ClaimDomain::rational_only,
       "|2^k A|^2 vs U^(k+1) log^-k |A|", claims_impl::k_fold_gowers},
      {"k_fold", Exactness::constant_bounded, ClaimDomain::rational_only,
       "|2^k A| vs |A|^(1+k/2) M^-u_k log^(-k/2)|A|", claims_impl::k_fold},
      {"four_a_exponent", Exactness::trend_only, ClaimDomain::rational_only,
       "log|4A| / log|A| along geometric-like families", claims_impl::four_a_exponent},
      {"fp_sum_prod", Exactness::constant_bounded, ClaimDomain::fp_only,
       "E+(A,C) vs (|A||BC|)^(3/2)|B|^(-1/2) + M|A||BC||B|^(-1)", claims_impl::fp_sum_prod},
      {"fp_shift", Exactness::constant_bounded, ClaimDomain::fp_only,
       "max_x |A meet (A+x)| vs M^(9/4)|A|^(3/4), M = |AA|/|A|", claims_impl::fp_shift},
      {"fp_shift_q", Exactness::constant_bounded, ClaimDomain::fp_only,
       "max_x |A meet (A+x)| vs M^3|A|^(3/4), M = |A/A|/|A|", claims_impl::fp_shift_q},
  };
  return defs;
}

} // namespace sumprod
