#include "symcap/report_io.hpp"

#include <cstdio>
#include <limits>

#include "json.hpp"

namespace symcap {

using Json = nlohmann::ordered_json;

namespace {

Json count_json(Count c) {
  if (c <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(c);
  return to_string(c);
}

std::string fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  return buf;
}

}  // namespace

std::string to_json(const SolveReport& report) {
  Json j;
  j["alpha"] = report.alpha;
  j["optimal"] = report.optimal;
  j["nodes"] = report.nodes_explored;
  j["elapsed_ms"] = report.elapsed.count();
  j["certificate"] = report.certificate.members;
  return j.dump();
}

std::string to_json(const BoundsReport& r) {
  Json j;
  j["k"] = r.k;
  j["alpha_base"] = r.alpha_base;
  j["theta_base"] = r.theta_base;
  j["lower"] = count_json(r.lower);
  j["upper_theta"] = count_json(r.upper_theta);
  j["upper_c5"] = r.upper_c5 ? Json(*r.upper_c5) : Json(nullptr);
  if (r.alpha_exact) {
    j["alpha"] = r.alpha_exact->value;
    j["optimal"] = r.alpha_exact->optimal;
  } else {
    j["alpha"] = nullptr;
    j["optimal"] = nullptr;
  }
  return j.dump();
}

std::string to_json(const CapacityEstimate& e) {
  Json samples = Json::array();
  for (const auto& s : e.samples)
    samples.push_back({{"k", s.k}, {"alpha", s.alpha}, {"ratio", s.ratio}, {"normalized", s.normalized}});
  Json j;
  j["target"] = e.target;
  j["samples"] = std::move(samples);
  j["skipped"] = e.skipped;
  return j.dump();
}

std::string to_json(const c5::AuditResult& a) {
  Json j;
  j["k"] = a.k;
  j["check"] = a.check;
  j["ok"] = a.ok;
  j["counterexamples"] = a.counterexamples;
  return j.dump();
}

std::string bounds_csv_header() { return "k,lower,alpha,optimal,upper_c5,upper_theta"; }

std::string to_csv_row(const BoundsReport& r) {
  std::string row = std::to_string(r.k) + "," + to_string(r.lower) + ",";
  if (r.alpha_exact) row += std::to_string(r.alpha_exact->value);
  row += ",";
  if (r.alpha_exact) row += r.alpha_exact->optimal ? "true" : "false";
  row += ",";
  if (r.upper_c5) row += std::to_string(*r.upper_c5);
  row += "," + to_string(r.upper_theta);
  return row;
}

std::string capacity_csv(const CapacityEstimate& e) {
  std::string out = "k,alpha,ratio\n";
  for (const auto& s : e.samples)
    out += std::to_string(s.k) + "," + std::to_string(s.alpha) + "," + fixed(s.ratio, 6) + "\n";
  return out;
}

}  // namespace symcap
