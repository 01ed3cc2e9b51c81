// sumprod: exact arithmetic statistics of finite sets and a claim
// verification harness over generated set families.
//
// Exit codes: 0 success, 1 exact-claim failure in verify, 2 parse/usage
// error, 3 precondition or budget violation, 4 internal error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "sumprod/claims.hpp"
#include "sumprod/energy.hpp"
#include "sumprod/families.hpp"
#include "sumprod/fp_lab.hpp"
#include "sumprod/incidence.hpp"
#include "sumprod/report.hpp"
#include "sumprod/runner.hpp"
#include "sumprod/set.hpp"

using namespace sumprod;

namespace {

int exit_code_for(const error& e) {
  switch (e.kind()) {
    case errc::parse: return 2;
    case errc::precondition: return 3;
    case errc::budget: return 3;
    case errc::internal: return 4;
  }
  return 4;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw_parse("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

SetVariant load_set(const std::string& inline_text, const std::string& file) {
  std::string text = inline_text;
  if (!file.empty()) text = read_file(file);
  if (text.empty()) throw_parse("no input set: pass --set or --set-file");
  auto toks = detail::tokenize_set_text(text);
  if (!toks.empty() && toks[0].rfind("p=", 0) == 0) return parse_fpset(text);
  return parse_rset(text);
}

std::vector<uint64_t> parse_sizes(const std::string& text) {
  std::vector<uint64_t> out;
  auto dots = text.find("..");
  if (dots != std::string::npos) {
    uint64_t lo = std::stoull(text.substr(0, dots));
    uint64_t hi = std::stoull(text.substr(dots + 2));
    if (lo == 0 || hi < lo) throw_parse("bad size range '" + text + "'");
    for (uint64_t n = lo; n <= hi; n = n < 4 ? n + 1 : n * 2) out.push_back(n);
    if (out.back() != hi) out.push_back(hi);
    return out;
  }
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(std::stoull(tok));
  }
  if (out.empty()) throw_parse("no sizes in '" + text + "'");
  return out;
}

Group parse_group(const std::string& g) {
  if (g == "add" || g == "additive" || g == "+") return Group::additive;
  if (g == "mult" || g == "multiplicative" || g == "x") return Group::multiplicative;
  throw_parse("unknown group '" + g + "' (use add or mult)");
}

SetOp parse_setop_kind(const std::string& k) {
  if (k == "sum") return SetOp::sum;
  if (k == "difference" || k == "diff") return SetOp::difference;
  if (k == "product" || k == "prod") return SetOp::product;
  if (k == "quotient" || k == "quot") return SetOp::quotient;
  throw_parse("unknown set operation '" + k + "'");
}

struct VerifyArgs {
  std::vector<std::string> claims;
  std::vector<std::string> families;
  std::string sizes = "4..32";
  uint64_t seed = 1;
  std::string out;
  std::string csv;
  std::string md;
  std::string config;
  bool timings = false;
  unsigned threads = 0;
};

struct ConfigPresence {
  bool claims = false;
  bool families = false;
  bool sizes = false;
};

ConfigPresence apply_config_file(const std::string& path, RunRequest& req) {
  ConfigPresence got;
  nlohmann::json j = nlohmann::json::parse(read_file(path));
  if (j.contains("claims")) {
    got.claims = true;
    req.claim_ids.clear();
    for (const auto& c : j["claims"]) req.claim_ids.push_back(c.get<std::string>());
  }
  if (j.contains("families")) {
    got.families = true;
    req.families.clear();
    for (const auto& f : j["families"]) req.families.push_back(FamilySpec::parse(f.get<std::string>()));
  }
  if (j.contains("sizes")) {
    got.sizes = true;
    req.sizes.clear();
    if (j["sizes"].is_string()) {
      req.sizes = parse_sizes(j["sizes"].get<std::string>());
    } else {
      for (const auto& s : j["sizes"]) req.sizes.push_back(s.get<uint64_t>());
    }
  }
  if (j.contains("seed")) req.cfg.seed = j["seed"].get<uint64_t>();
  if (j.contains("alphas")) {
    req.cfg.alphas.clear();
    for (const auto& a : j["alphas"]) req.cfg.alphas.push_back(Rational::parse(a.get<std::string>()));
  }
  if (j.contains("budgets")) {
    const auto& b = j["budgets"];
    if (b.contains("energy")) req.cfg.energy_budget = b["energy"].get<std::size_t>();
    if (b.contains("triples")) req.cfg.triple_budget.max_product = b["triples"].get<uint64_t>();
    if (b.contains("gowers_cap")) req.cfg.gowers.cap = b["gowers_cap"].get<int>();
    if (b.contains("gowers_max_size")) req.cfg.gowers.max_size = b["gowers_max_size"].get<std::size_t>();
    if (b.contains("set_cap")) req.cfg.set_cap = b["set_cap"].get<std::size_t>();
    if (b.contains("szt_max_n")) req.cfg.szt_max_n = b["szt_max_n"].get<uint64_t>();
    if (b.contains("k_fold_max_n")) req.cfg.k_fold_max_n = b["k_fold_max_n"].get<uint64_t>();
  }
  if (j.contains("sigma_widen")) req.cfg.sigma_widen = j["sigma_widen"].get<bool>();
  return got;
}

// A config file wins for the fields it provides; flags fill the rest.
RunRequest build_request(const VerifyArgs& a) {
  RunRequest req;
  req.cfg.seed = a.seed;
  ConfigPresence got;
  if (!a.config.empty()) got = apply_config_file(a.config, req);
  if (!got.claims) req.claim_ids = a.claims;
  if (!got.families)
    for (const auto& f : a.families) req.families.push_back(FamilySpec::parse(f));
  if (!got.sizes) req.sizes = parse_sizes(a.sizes);
  if (req.families.empty()) throw_parse("no family given (use --family or --config)");
  for (auto& f : req.families) {
    if (f.kind == FamilyKind::random_rational || f.kind == FamilyKind::fp_random ||
        f.kind == FamilyKind::gp_subset)
      f.seed = req.cfg.seed;
  }
  return req;
}

void write_or_print(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::fwrite(content.data(), 1, content.size(), stdout);
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw_parse("cannot write file '" + path + "'");
  f << content;
}

int cmd_compute(const std::string& stat, const std::string& set_text,
                const std::string& set_file, const std::string& set_b_text, int k,
                const std::string& group_name, const std::string& lambda_text,
                const std::string& kind, uint64_t p, uint64_t d, int gowers_cap,
                std::size_t budget) {
  if (stat == "subgroup") {
    FpSet s = subgroup(p, d);
    std::printf("%s\n", s.to_text().c_str());
    return 0;
  }
  SetVariant v = load_set(set_text, set_file);

  if (std::holds_alternative<FpSet>(v)) {
    const FpSet& a = std::get<FpSet>(v);
    if (stat == "energy") {
      Group g = parse_group(group_name);
      std::printf("%s\n", fp_energy_k(a, k, g, budget).value.to_string().c_str());
      return 0;
    }
    if (stat == "shift-max") {
      auto [val, x] = shift_intersection_max(a);
      std::printf("%llu %llu\n", static_cast<unsigned long long>(val),
                  static_cast<unsigned long long>(x));
      return 0;
    }
    if (stat == "fp-energy") {
      FpSet b = set_b_text.empty() ? a : std::get<FpSet>(load_set(set_b_text, ""));
      std::printf("%s\n", fp_energy(a, b, budget).to_string().c_str());
      return 0;
    }
    if (stat == "correlation") {
      Group g = parse_group(group_name);
      std::printf("%s\n", countmap_to_json(fp_correlation(a, a, g, budget)).c_str());
      return 0;
    }
    if (stat == "canon") {
      std::printf("%s\n", a.to_text().c_str());
      return 0;
    }
    throw_parse("statistic '" + stat + "' is not defined for F_p sets");
  }

  const RSet& a = std::get<RSet>(v);
  if (stat == "energy") {
    Group g = parse_group(group_name);
    std::printf("%s\n", energy(a, k, g, budget).value.to_string().c_str());
  } else if (stat == "gowers") {
    GowersOptions opt;
    if (gowers_cap > 0) opt.cap = gowers_cap;
    std::printf("%s\n", gowers_norm(a, k, opt).value.to_string().c_str());
  } else if (stat == "sumset-size") {
    if (k < 0) throw_precondition("fold count must be >= 1");
    std::printf("%zu\n", iterated_sumset(a, static_cast<unsigned>(k)).size());
  } else if (stat == "setop-size") {
    std::printf("%zu\n", setop(parse_setop_kind(kind), a,
                               set_b_text.empty() ? a : std::get<RSet>(load_set(set_b_text, "")))
                             .size());
  } else if (stat == "triples") {
    if (set_b_text.empty()) {
      std::printf("%s\n", collinear_triples(a, a, a, TripleAlgo::slope_sort)
                              .to_string()
                              .c_str());
    } else {
      RSet b = std::get<RSet>(load_set(set_b_text, ""));
      std::printf("%s\n", collinear_triples(a, b, b, TripleAlgo::energy_form)
                              .to_string()
                              .c_str());
    }
  } else if (stat == "correlation" || stat == "convolution") {
    Group g = parse_group(group_name);
    PairForm f = stat == "correlation" ? PairForm::correlation : PairForm::convolution;
    RSet b = set_b_text.empty() ? a : std::get<RSet>(load_set(set_b_text, ""));
    std::printf("%s\n", countmap_to_json(pair_countmap(a, b, g, f, budget)).c_str());
  } else if (stat == "mhat") {
    auto [val, idx] = m_hat(a, default_mhat_candidates(a));
    std::printf("%s\n", val.to_string().c_str());
  } else if (stat == "fiber") {
    if (lambda_text.empty()) throw_parse("fiber needs --lambda");
    std::printf("%s\n", fiber(a, Rational::parse(lambda_text)).to_text().c_str());
  } else if (stat == "qlambda") {
    if (lambda_text.empty()) throw_parse("qlambda needs --lambda");
    Rational lam = Rational::parse(lambda_text);
    if (!lambda_in_quotient(a, lam))
      std::fprintf(stderr, "warning: lambda not in A/A; construction is empty or degenerate\n");
    std::printf("%s\n", to_json(q_lambda(a, lam)).c_str());
  } else if (stat == "lines") {
    // line families of the projection construction; one group per lambda
    std::vector<std::pair<Rational, PointSet>> targets;
    if (!lambda_text.empty()) {
      Rational lam = Rational::parse(lambda_text);
      targets.emplace_back(lam, q_lambda(a, lam));
    } else {
      RSet quot = setop(SetOp::quotient, a, a);
      for (const auto& lam : quot) targets.emplace_back(lam, q_lambda(a, lam));
    }
    std::printf("%s\n", to_json(build_line_family(targets)).c_str());
  } else if (stat == "canon") {
    std::printf("%s\n", a.to_text().c_str());
  } else {
    throw_parse("unknown statistic '" + stat + "'");
  }
  return 0;
}

int cmd_verify(const VerifyArgs& args, bool scan_mode) {
  RunRequest req = build_request(args);
  if (scan_mode && req.sizes.size() < 3) throw_parse("need >= 3 sizes for a scan");
  if (args.threads) set_thread_count(args.threads);
  auto results = run_claims(req);
  auto sums = summarize(results);

  if (scan_mode) {
    std::string table = summary_markdown(sums);
    write_or_print(args.out.empty() ? args.md : args.out, table);
    if (!args.csv.empty()) write_or_print(args.csv, scan_csv(results));
    if (args.out.empty() && args.md.empty()) {
      // table already printed to stdout
    }
  } else {
    std::string jsonl = results_to_jsonl(results, args.timings);
    write_or_print(args.out, jsonl);
    if (!args.csv.empty()) write_or_print(args.csv, results_to_csv(results));
    if (!args.md.empty()) write_or_print(args.md, summary_markdown(sums));
    std::fputs(summary_markdown(sums).c_str(), stderr);
  }
  for (const auto& r : results) {
    if (r.verdict != Verdict::fails) continue;
    const ClaimDef& c = find_claim(r.claim);
    if (c.cls == Exactness::exact_identity || c.cls == Exactness::exact_inequality)
      std::fprintf(stderr, "FAILED %s on %s n=%llu %s: lhs=%s rhs=[%s, %s]\n", r.claim.c_str(),
                   r.family.c_str(), static_cast<unsigned long long>(r.n), r.params.c_str(),
                   r.lhs.c_str(), r.rhs_lo.c_str(), r.rhs_hi.c_str());
  }
  return any_exact_failure(results) ? 1 : 0;
}

int cmd_report(const std::string& in_path, const std::string& format) {
  std::ifstream f(in_path);
  if (!f) throw_parse("cannot open '" + in_path + "'");
  std::vector<ClaimResult> results;
  std::string line;
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line);
    ClaimResult r;
    r.claim = j.value("claim", "");
    r.family = j.value("family", "");
    r.n = j.value("n", uint64_t(0));
    r.params = j.value("params", "");
    std::string v = j.value("verdict", "skipped");
    r.verdict = v == "holds"            ? Verdict::holds
                : v == "fails"          ? Verdict::fails
                : v == "ratio-recorded" ? Verdict::ratio_recorded
                                        : Verdict::skipped;
    r.lhs = j.value("lhs", "");
    r.rhs_lo = j.value("rhs_lo", "");
    r.rhs_hi = j.value("rhs_hi", "");
    if (j.contains("ratio_lo")) {
      RatioBracket rb;
      rb.lo = Rational::parse(j["ratio_lo"].get<std::string>());
      rb.hi = Rational::parse(j["ratio_hi"].get<std::string>());
      rb.pow = j.value("ratio_pow", 1);
      r.ratio = rb;
    }
    r.skip_reason = j.value("skip_reason", "");
    results.push_back(std::move(r));
  }
  auto sums = summarize(results);
  if (format == "csv")
    std::fputs(results_to_csv(results).c_str(), stdout);
  else
    std::fputs(summary_markdown(sums).c_str(), stdout);
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact sum-product statistics laboratory"};
  app.require_subcommand(1);

  unsigned threads = 0;
  app.add_option("--threads", threads, "worker threads (default: all cores)");

  // compute -----------------------------------------------------------------
  auto* compute = app.add_subcommand("compute", "compute one statistic of one set");
  std::string stat, set_text, set_file, set_b, group_name = "add", lambda_text, kind = "sum";
  int k = 2, gowers_cap = 0;
  uint64_t p = 7, d = 1;
  std::size_t budget = 4096;
  compute->add_option("statistic", stat,
                      "energy | gowers | sumset-size | setop-size | triples | correlation | "
                      "convolution | mhat | fiber | qlambda | lines | subgroup | shift-max | fp-energy | "
                      "canon")
      ->required();
  compute->add_option("--set", set_text, "inline set text");
  compute->add_option("--set-file", set_file, "set file path");
  compute->add_option("--b", set_b, "second set (inline text)");
  compute->add_option("--k", k, "order (energy/gowers) or fold count (sumset-size)");
  compute->add_option("--group", group_name, "add | mult");
  compute->add_option("--lambda", lambda_text, "rational parameter for fiber/qlambda");
  compute->add_option("--kind", kind, "setop kind: sum | difference | product | quotient");
  compute->add_option("--p", p, "prime modulus for subgroup");
  compute->add_option("--d", d, "subgroup order");
  compute->add_option("--gowers-cap", gowers_cap, "override the Gowers order cap");
  compute->add_option("--budget", budget, "max set size per statistic");

  // verify / scan -------------------------------------------------------------
  VerifyArgs vargs;
  auto add_common = [&](CLI::App* c) {
    c->add_option("claims", vargs.claims, "claim ids (empty: all applicable)");
    c->add_option("--family", vargs.families, "family descriptor, repeatable (gp:1:2, ap:0:3, "
                                              "random, gp-subset:1:2, gp-ap:1:2, "
                                              "fp-subgroup:9241, fp-random:10007)");
    c->add_option("--sizes", vargs.sizes, "size range lo..hi (doubling) or comma list");
    c->add_option("--seed", vargs.seed, "seed for random families");
    c->add_option("--out", vargs.out, "output file (default stdout)");
    c->add_option("--csv", vargs.csv, "also write CSV here");
    c->add_option("--md", vargs.md, "also write markdown summary here");
    c->add_option("--config", vargs.config, "JSON config file (overrides flags)");
    c->add_flag("--timings", vargs.timings, "include runtime_ms in JSON lines");
  };
  auto* verify = app.add_subcommand("verify", "evaluate claims over families, emit JSON lines");
  add_common(verify);
  auto* scan = app.add_subcommand("scan", "trend scan over >= 3 sizes, emit slope table");
  add_common(scan);

  // report --------------------------------------------------------------------
  auto* report = app.add_subcommand("report", "summarize a JSON-lines results file");
  std::string report_in, report_format = "md";
  report->add_option("--in", report_in, "JSON-lines file from verify")->required();
  report->add_option("--format", report_format, "md | csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (threads) set_thread_count(threads);
    vargs.threads = threads;
    if (compute->parsed())
      return cmd_compute(stat, set_text, set_file, set_b, k, group_name, lambda_text, kind, p, d,
                         gowers_cap, budget);
    if (verify->parsed()) return cmd_verify(vargs, /*scan_mode=*/false);
    if (scan->parsed()) return cmd_verify(vargs, /*scan_mode=*/true);
    if (report->parsed()) return cmd_report(report_in, report_format);
  } catch (const error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 4;
  }
  return 0;
}
