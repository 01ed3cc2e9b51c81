#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include "sumprod/runner.hpp"

namespace sumprod {

namespace detail {

inline std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '"' || c == '\\') {
      out += '\\';
      out += c;
    } else if (static_cast<unsigned char>(c) < 0x20) {
      char buf[8];
      std::snprintf(buf, sizeof buf, "\\u%04x", c);
      out += buf;
    } else {
      out += c;
    }
  }
  return out;
}

inline std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

} // namespace detail

// One JSON-lines record per result; field order is fixed so identical runs
// are byte-identical.  Timings are off by default for that reason.
inline std::string to_jsonl(const ClaimResult& r, bool with_timings = false) {
  using detail::json_escape;
  std::string s = "{\"schema\":\"1\"";
  s += ",\"claim\":\"" + json_escape(r.claim) + "\"";
  s += ",\"family\":\"" + json_escape(r.family) + "\"";
  s += ",\"n\":" + std::to_string(r.n);
  s += ",\"params\":\"" + json_escape(r.params) + "\"";
  s += ",\"verdict\":\"" + std::string(verdict_name(r.verdict)) + "\"";
  s += ",\"lhs\":\"" + json_escape(r.lhs) + "\"";
  s += ",\"rhs_lo\":\"" + json_escape(r.rhs_lo) + "\"";
  s += ",\"rhs_hi\":\"" + json_escape(r.rhs_hi) + "\"";
  if (r.ratio) {
    s += ",\"ratio_lo\":\"" + r.ratio->lo.to_string() + "\"";
    s += ",\"ratio_hi\":\"" + r.ratio->hi.to_string() + "\"";
    s += ",\"ratio_pow\":" + std::to_string(r.ratio->pow);
    s += ",\"ratio_approx\":" + detail::fmt_double(r.ratio->approx());
  }
  if (!r.skip_reason.empty()) s += ",\"skip_reason\":\"" + json_escape(r.skip_reason) + "\"";
  if (with_timings) s += ",\"runtime_ms\":" + detail::fmt_double(r.runtime_ms);
  s += "}";
  return s;
}

inline std::string results_to_jsonl(const std::vector<ClaimResult>& rs,
                                    bool with_timings = false) {
  std::string out;
  for (const auto& r : rs) {
    out += to_jsonl(r, with_timings);
    out += '\n';
  }
  return out;
}

inline std::string results_to_csv(const std::vector<ClaimResult>& rs) {
  using detail::csv_field;
  std::string out = "claim,family,n,params,verdict,lhs,rhs_lo,rhs_hi,ratio_lo,ratio_hi,"
                    "ratio_pow,ratio_approx,skip_reason\n";
  for (const auto& r : rs) {
    out += csv_field(r.claim) + ',' + csv_field(r.family) + ',' + std::to_string(r.n) + ',';
    out += csv_field(r.params) + ',' + verdict_name(r.verdict) + ',';
    out += csv_field(r.lhs) + ',' + csv_field(r.rhs_lo) + ',' + csv_field(r.rhs_hi) + ',';
    if (r.ratio) {
      out += csv_field(r.ratio->lo.to_string()) + ',' + csv_field(r.ratio->hi.to_string()) + ',';
      out += std::to_string(r.ratio->pow) + ',' + detail::fmt_double(r.ratio->approx()) + ',';
    } else {
      out += ",,,,";
    }
    out += csv_field(r.skip_reason) + '\n';
  }
  return out;
}

// Plot-ready per-claim table: n, lhs, rhs bracket, ratio approximation.
inline std::string scan_csv(const std::vector<ClaimResult>& rs) {
  std::string out = "claim,family,n,lhs,rhs_lo,rhs_hi,ratio_approx\n";
  for (const auto& r : rs) {
    if (r.verdict == Verdict::skipped) continue;
    out += r.claim + ',' + detail::csv_field(r.family) + ',' + std::to_string(r.n) + ',';
    out += detail::csv_field(r.lhs) + ',' + detail::csv_field(r.rhs_lo) + ',' +
           detail::csv_field(r.rhs_hi) + ',';
    out += (r.ratio ? detail::fmt_double(r.ratio->approx()) : "") + std::string("\n");
  }
  return out;
}

inline std::string summary_markdown(const std::vector<ClaimSummary>& sums) {
  std::string out =
      "| claim | family | holds | fails | recorded | skipped | max ratio | slope | flag |\n"
      "|---|---|---|---|---|---|---|---|---|\n";
  for (const auto& s : sums) {
    out += "| " + s.claim + " | " + s.family + " | " + std::to_string(s.holds) + " | " +
           std::to_string(s.fails) + " | " + std::to_string(s.recorded) + " | " +
           std::to_string(s.skipped) + " | ";
    out += (s.max_ratio > 0 ? detail::fmt_double(s.max_ratio) : "-");
    out += " | ";
    if (s.has_trend) {
      out += detail::fmt_double(s.trend.slope);
      out += " | ";
      out += trend_flag_name(s.trend.flag);
      if (s.halves_evaluable) out += s.halves_ok ? ", halves-ok" : ", halves-exceeded";
    } else {
      out += "- | -";
    }
    out += " |\n";
  }
  return out;
}

} // namespace sumprod
