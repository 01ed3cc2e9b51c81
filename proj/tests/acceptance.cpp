// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// fails.  Each criterion carries its own wall-clock budget.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sumprod/energy.hpp"
#include "sumprod/families.hpp"
#include "sumprod/fp_lab.hpp"
#include "sumprod/incidence.hpp"
#include "sumprod/report.hpp"
#include "sumprod/runner.hpp"

using namespace sumprod;

namespace {

int g_failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

void report(int criterion, bool ok, double secs, double limit, const std::string& detail) {
  bool in_time = secs < limit;
  std::printf("%s criterion-%d: %s (%.1f s%s limit %.0f s)\n",
              ok && in_time ? "PASS" : "FAIL", criterion, detail.c_str(), secs,
              in_time ? "," : " OVER", limit);
  if (!(ok && in_time)) ++g_failures;
  std::fflush(stdout);
}

FpSet random_fpset(oracles::Rng& rng, uint64_t p, std::size_t size) {
  std::vector<uint64_t> v;
  while (v.size() < size) {
    uint64_t r = 1 + rng.next() % (p - 1);
    v.push_back(r);
    FpSet probe(p, v);
    if (probe.size() < v.size()) v.pop_back();
  }
  return FpSet(p, v);
}

// 1. exact identities with oracle cross-checks on 500 seeded random sets
void criterion_1() {
  Timer timer;
  oracles::Rng rng{20260808};
  std::size_t checked = 0;
  bool ok = true;
  auto expect = [&](bool cond, const char* what) {
    if (!cond) {
      ok = false;
      std::fprintf(stderr, "criterion-1 mismatch: %s\n", what);
    }
  };
  for (int i = 0; i < 250 && ok; ++i) {
    RSet a = oracles::random_rset(rng, 1 + rng.next() % 24, 40, 10, false);
    RSet b = oracles::random_rset(rng, 1 + rng.next() % 24, 40, 10, false);
    ++checked;
    for (Group g : {Group::additive, Group::multiplicative}) {
      auto d = mixed_energy_three_ways(a, b, g);
      expect(d.consistent(), "convolution identity");
    }
    BigInt ex = energy(a, 2, Group::multiplicative).value;
    BigInt fiber_sum;
    for (const auto& lf : fiber_decomposition(a))
      fiber_sum += BigInt(lf.second.size()) * BigInt(lf.second.size());
    expect(ex == fiber_sum, "fiber identity");
    // T(A,B,B): energy form against the slope form, brute force when tiny
    BigInt t_energy = collinear_triples(a, b, b, TripleAlgo::energy_form);
    BigInt t_slope = collinear_triples(a, b, b, TripleAlgo::slope_sort);
    expect(t_energy == t_slope, "T energy vs slope");
    if (a.size() <= 6 && b.size() <= 6)
      expect(t_energy == oracles::collinear_triples(a, b, b), "T vs determinant brute force");
    if (a.size() <= 12) {
      expect(energy(a, 2, Group::additive).value == oracles::energy2(a, a, false),
             "additive quadruple oracle");
      expect(ex == oracles::energy2(a, a, true), "multiplicative quadruple oracle");
      expect(gowers_norm(a, 3).value == oracles::gowers_u3(a), "U3 parallelepiped oracle");
    }
  }
  for (int i = 0; i < 250 && ok; ++i) {
    uint64_t p = (i & 1) ? 10007 : 8191;
    FpSet a = random_fpset(rng, p, 1 + rng.next() % 24);
    FpSet b = random_fpset(rng, p, 1 + rng.next() % 24);
    ++checked;
    for (Group g : {Group::additive, Group::multiplicative}) {
      auto d = fp_mixed_energy_three_ways(a, b, g);
      expect(d.consistent(), "fp convolution identity");
    }
    BigInt ex = fp_energy_k(a, 2, Group::multiplicative).value;
    FpSet quot = fp_setop(SetOp::quotient, a, a);
    BigInt fiber_sum;
    for (uint64_t lam : quot) {
      uint64_t li = invmod_u64(lam, p);
      uint64_t c = 0;
      for (uint64_t x : a)
        if (a.contains(mulmod_u64(li, x, p))) ++c;
      fiber_sum += BigInt(c) * BigInt(c);
    }
    expect(ex == fiber_sum, "fp fiber identity");
  }
  report(1, ok && checked == 500, timer.seconds(), 60,
         "exact identities + oracle cross-checks on " + std::to_string(checked) +
             " random sets");
}

// 2. exact inequality suite with zero failures
void criterion_2() {
  Timer timer;
  bool ok = true;
  std::size_t holds = 0, fails = 0;

  RunRequest req;
  req.cfg.seed = 7;
  req.claim_ids = {"e_cs", "cs_floor", "gowers_char", "product_shift_inclusion"};
  req.families = {FamilySpec::parse("gp:1:2"),     FamilySpec::parse("gp:1:3/2"),
                  FamilySpec::parse("ap:0:3"),     FamilySpec::parse("random:100000:100"),
                  FamilySpec::parse("gp-subset:1:2"), FamilySpec::parse("gp-ap:1:2")};
  req.sizes = {4, 6, 8, 12, 16, 24};
  for (auto& f : req.families) f.seed = req.cfg.seed;
  auto res1 = run_claims(req);

  RunRequest req2 = req;
  req2.claim_ids = {"plunnecke"};
  req2.sizes = {4, 8, 12, 16};
  auto res2 = run_claims(req2);

  RunRequest req3 = req;
  req3.claim_ids = {"plunnecke_x"};
  req3.sizes = {4, 8, 12};
  auto res3 = run_claims(req3);

  RunRequest req4 = req;
  req4.claim_ids = {"cs_floor", "plunnecke"};
  req4.families = {FamilySpec::parse("fp-subgroup:8191"), FamilySpec::parse("fp-random:10007")};
  req4.sizes = {8, 16, 24};
  auto res4 = run_claims(req4);

  for (const auto* batch : {&res1, &res2, &res3, &res4}) {
    for (const auto& r : *batch) {
      if (r.verdict == Verdict::holds) ++holds;
      if (r.verdict == Verdict::fails) {
        ++fails;
        std::fprintf(stderr, "criterion-2 failure: %s %s n=%llu %s lhs=%s rhs=%s\n",
                     r.claim.c_str(), r.family.c_str(),
                     static_cast<unsigned long long>(r.n), r.params.c_str(), r.lhs.c_str(),
                     r.rhs_hi.c_str());
      }
    }
  }
  ok = fails == 0 && holds > 100;
  report(2, ok, timer.seconds(), 300,
         "exact inequalities: " + std::to_string(holds) + " holds, " + std::to_string(fails) +
             " failures");
}

// 3. ratio-2 GP difference/quotient structure and the 5/3-regime ratio
void criterion_3() {
  Timer timer;
  bool ok = true;
  FamilySpec gp = FamilySpec::parse("gp:1:2");
  for (std::size_t n = 2; n <= 64 && ok; ++n) {
    RSet a = std::get<RSet>(generate(gp, n));
    RSet diff = setop(SetOp::difference, a, a);
    RSet quot = setop(SetOp::quotient, a, a);
    if (diff.size() != n * n - n + 1 || quot.size() != 2 * n - 1) {
      ok = false;
      std::fprintf(stderr, "criterion-3: size formulas fail at n=%zu\n", n);
    }
    // independent pair-enumeration oracle
    if (oracles::setop_size(SetOp::difference, a, a) != diff.size() ||
        oracles::setop_size(SetOp::quotient, a, a) != quot.size()) {
      ok = false;
      std::fprintf(stderr, "criterion-3: oracle disagrees at n=%zu\n", n);
    }
  }
  Rational prev;
  bool first = true;
  for (uint64_t n : {8, 16, 32, 64, 128}) {
    ClaimInput in;
    in.primary = generate(gp, n);
    in.n = n;
    in.family_name = "gp:1:2";
    auto rows = find_claim("main_5_3").eval(in);
    if (rows.size() != 1 || !rows[0].ratio) {
      ok = false;
      break;
    }
    const Rational& ratio = rows[0].ratio->lo;
    if (!(cmp(ratio, Rational(1)) > 0) || (!first && !(cmp(ratio, prev) > 0))) {
      ok = false;
      std::fprintf(stderr, "criterion-3: ratio not increasing above 1 at n=%llu\n",
                   static_cast<unsigned long long>(n));
    }
    prev = ratio;
    first = false;
  }
  report(3, ok, timer.seconds(), 120,
         "ratio-2 GP: |A-A| = n^2-n+1, |A/A| = 2n-1 for n <= 64; 5/3-regime ratio "
         "exceeds 1 and increases through n = 128");
}

// 4. constant-bounded suite: record ratios per family, assert the halves
// flag on the GP and subgroup families
void criterion_4() {
  Timer timer;
  static const char* bounded_claims[] = {"e3_m",   "triples_log", "rn_t",        "szt",
                                         "elekes", "e_m_alpha",   "three_fold",  "k_fold",
                                         "fp_sum_prod", "fp_shift"};
  RunRequest req;
  req.cfg.seed = 7;
  for (const char* id : bounded_claims) req.claim_ids.push_back(id);
  req.families = {FamilySpec::parse("gp:1:2"), FamilySpec::parse("ap:0:3"),
                  FamilySpec::parse("random:100000:100"), FamilySpec::parse("gp-subset:1:2"),
                  FamilySpec::parse("fp-subgroup:8191")};
  for (auto& f : req.families) f.seed = req.cfg.seed;
  req.sizes = {8, 16, 32, 64, 90};
  auto results = run_claims(req);

  bool ok = true;
  for (const auto& r : results) {
    if (r.verdict == Verdict::fails) {
      ok = false;
      std::fprintf(stderr, "criterion-4: unexpected failure %s %s\n", r.claim.c_str(),
                   r.family.c_str());
    }
  }
  auto sums = summarize(results);
  std::size_t asserted = 0;
  for (const auto& s : sums) {
    bool fp_claim = s.claim.rfind("fp_", 0) == 0;
    bool acceptance_family = fp_claim ? s.family == "fp-subgroup:8191" : s.family == "gp:1:2";
    if (!acceptance_family) continue;
    if (s.recorded == 0) {
      ok = false;
      std::fprintf(stderr, "criterion-4: %s recorded nothing on %s\n", s.claim.c_str(),
                   s.family.c_str());
      continue;
    }
    if (s.halves_evaluable) {
      ++asserted;
      if (!s.halves_ok) {
        ok = false;
        std::fprintf(stderr, "criterion-4: halves flag exceeded for %s on %s\n",
                     s.claim.c_str(), s.family.c_str());
      }
    }
  }
  ok = ok && asserted >= std::size(bounded_claims);
  report(4, ok, timer.seconds(), 900,
         "constant-bounded ratios recorded on 5 families; halves flag clean on the "
         "acceptance families (" +
             std::to_string(asserted) + " flags)");
}

// 5. performance floor
void criterion_5() {
  Timer timer;
  bool ok = true;
  std::string detail;

  FamilySpec rnd = FamilySpec::parse("random:1000000:1000");
  rnd.seed = 42;
  RSet a4096 = std::get<RSet>(generate(rnd, 4096));
  Timer t1;
  BigInt e = energy(a4096, 2, Group::multiplicative).value;
  double s1 = t1.seconds();
  ok = ok && s1 < 5.0 && !e.is_zero();

  RSet a96 = std::get<RSet>(generate(rnd, 96));
  Timer t2;
  TripleBudget tb;
  BigInt t = collinear_triples(a96, a96, a96, TripleAlgo::slope_sort, tb);
  double s2 = t2.seconds();
  ok = ok && s2 < 30.0 && !t.is_zero();

  RSet gp128 = std::get<RSet>(generate(FamilySpec::parse("gp:1:2"), 128));
  Timer t3;
  BigInt g = gowers_norm(gp128, 4).value;
  double s3 = t3.seconds();
  ok = ok && s3 < 60.0 && !g.is_zero();

  char buf[160];
  std::snprintf(buf, sizeof buf,
                "energy(4096) %.1f s < 5; T(96) slope %.1f s < 30; U4(GP-128) %.1f s < 60", s1,
                s2, s3);
  report(5, ok, timer.seconds(), 120, buf);
}

// 6. byte-identical reruns
void criterion_6() {
  Timer timer;
  RunRequest req;
  req.cfg.seed = 11;
  req.claim_ids = {"conv_identity", "fiber_identity", "cs_floor", "elekes", "main_5_3",
                   "fp_shift"};
  req.families = {FamilySpec::parse("random:100000:100"), FamilySpec::parse("gp:1:2"),
                  FamilySpec::parse("fp-subgroup:8191"), FamilySpec::parse("fp-random:10007")};
  for (auto& f : req.families) f.seed = req.cfg.seed;
  req.sizes = {4, 8, 16};
  std::string first = results_to_jsonl(run_claims(req));
  std::string second = results_to_jsonl(run_claims(req));
  req.parallel = false;
  std::string serial = results_to_jsonl(run_claims(req));
  bool ok = !first.empty() && first == second && first == serial;
  report(6, ok, timer.seconds(), 120,
         "full-suite JSON lines byte-identical across reruns and worker counts");
}

} // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  if (g_failures) {
    std::printf("ACCEPTANCE: %d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("ACCEPTANCE: all 6 criteria passed\n");
  return 0;
}
