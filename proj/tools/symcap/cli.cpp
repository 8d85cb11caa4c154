#include "symcap/cli.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <tuple>

#include "CLI11.hpp"
#include "json.hpp"
#include "symcap/bounds.hpp"
#include "symcap/c5_lab.hpp"
#include "symcap/error.hpp"
#include "symcap/quotient.hpp"
#include "symcap/report_io.hpp"

namespace symcap::cli {

using Json = nlohmann::ordered_json;

namespace {

// verify-c5 runs exhaustive audits; past this weight they stop being
// desk-scale.
constexpr std::uint32_t kVerifyMaxK = 8;

std::uint32_t parse_u32(const std::string& text) {
  std::uint32_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
    throw InvalidArgument("expected a nonnegative integer, got '" + text + "'");
  return value;
}

std::size_t parse_size(const std::string& text) { return parse_u32(text); }

Graph resolve_graph(const std::string& name) {
  if (name == "petersen") return construct_named(Family::kPetersen, 10);
  if (const auto colon = name.find(':'); colon != std::string::npos)
    return construct_named(name.substr(0, colon), parse_size(name.substr(colon + 1)));
  // Short forms: c5, k3, p4, e2.
  if (name.size() >= 2 && std::isdigit(static_cast<unsigned char>(name[1]))) {
    const std::size_t size = parse_size(name.substr(1));
    switch (name[0]) {
      case 'c': return construct_named(Family::kCycle, size);
      case 'k': return construct_named(Family::kComplete, size);
      case 'p': return construct_named(Family::kPath, size);
      case 'e': return construct_named(Family::kEmpty, size);
      default: break;
    }
  }
  if (std::filesystem::is_regular_file(name)) {
    std::ifstream in(name);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_graph(buffer.str());
  }
  throw InvalidArgument("unknown graph '" + name + "' (not a known family or a readable file)");
}

const char* command_name(Command c) {
  switch (c) {
    case Command::kAlpha: return "alpha";
    case Command::kBounds: return "bounds";
    case Command::kVerifyC5: return "verify-c5";
    case Command::kSearch: return "search";
    case Command::kOracleCheck: return "oracle-check";
  }
  return "?";
}

// JSON-lines sink. With --out, records are appended to the file and records
// already present for the same (command, graph, k, seed) are not recomputed.
class ResultSink {
 public:
  ResultSink(const RunConfig& cfg, std::ostream& out) : cfg_(cfg), out_(&out) {
    if (!cfg.out) return;
    if (cfg.format == Format::kCsv) {
      // Tables are rewritten, not resumed.
      file_.open(*cfg.out, std::ios::trunc);
      if (!file_) throw InvalidArgument("cannot open output file '" + *cfg.out + "'");
      out_ = &file_;
      return;
    }
    if (std::ifstream existing(*cfg.out); existing) {
      std::string line;
      while (std::getline(existing, line)) {
        if (line.empty()) continue;
        const Json j = Json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.contains("k")) continue;
        done_.emplace(j.value("command", ""), j.value("graph", ""), j["k"].get<std::uint64_t>(),
                      j.value("seed", std::uint64_t{0}));
      }
    }
    file_.open(*cfg.out, std::ios::app);
    if (!file_) throw InvalidArgument("cannot open output file '" + *cfg.out + "'");
    out_ = &file_;
  }

  bool already_done(std::uint64_t k) const {
    return done_.count({command_name(cfg_.command), cfg_.graph, k, cfg_.seed}) != 0;
  }

  Json record(std::uint64_t k) const {
    Json j;
    j["command"] = command_name(cfg_.command);
    j["graph"] = cfg_.graph;
    j["k"] = k;
    j["seed"] = cfg_.seed;
    return j;
  }

  void emit(const Json& j) { *out_ << j.dump() << '\n' << std::flush; }
  std::ostream& stream() { return *out_; }

 private:
  const RunConfig& cfg_;
  std::ostream* out_;
  std::ofstream file_;
  std::set<std::tuple<std::string, std::string, std::uint64_t, std::uint64_t>> done_;
};

SolveBudget budget_of(const RunConfig& cfg) {
  if (cfg.max_nodes == 0 || cfg.max_seconds <= 0) throw InvalidArgument("solver budget must be positive");
  return {cfg.max_nodes, cfg.max_seconds, std::max(1U, cfg.threads)};
}

QuotientOptions quotient_options(const RunConfig& cfg) { return {.threads = std::max(1U, cfg.threads)}; }

void merge(Json& into, const std::string& object_text) {
  const Json parsed = Json::parse(object_text);
  for (const auto& [key, value] : parsed.items()) into[key] = value;
}

int cmd_alpha(const RunConfig& cfg, ResultSink& sink, std::ostream& err) {
  const Graph g = resolve_graph(cfg.graph);
  const SolveBudget budget = budget_of(cfg);
  int code = kSuccess;
  for (std::uint32_t k = cfg.k_first; k <= cfg.k_last; ++k) {
    if (sink.already_done(k)) {
      err << "alpha k=" << k << ": already recorded, skipping\n";
      continue;
    }
    const QuotientGraph q = build_quotient(g, k, quotient_options(cfg));
    const SolveReport report = solve_symmetric_power(q, budget);
    if (!report.optimal) {
      err << "alpha k=" << k << ": budget exhausted, best found " << report.alpha << '\n';
      code = kBudgetDegraded;
    }
    Json j = sink.record(k);
    j["vertices"] = q.vertex_count();
    merge(j, to_json(report));
    sink.emit(j);
  }
  return code;
}

int cmd_bounds(const RunConfig& cfg, ResultSink& sink, std::ostream& err) {
  const Graph g = resolve_graph(cfg.graph);
  const BaseParameters base = base_parameters(g);
  const SolveBudget budget = budget_of(cfg);
  int code = kSuccess;
  if (cfg.format == Format::kCsv) sink.stream() << bounds_csv_header() << '\n';
  for (std::uint32_t k = cfg.k_first; k <= cfg.k_last; ++k) {
    if (cfg.format == Format::kJson && sink.already_done(k)) {
      err << "bounds k=" << k << ": already recorded, skipping\n";
      continue;
    }
    BoundsReport report = bounds_report(base, k);
    try {
      const QuotientGraph q = build_quotient(g, k, quotient_options(cfg));
      const SolveReport solved = solve_symmetric_power(q, budget);
      report.alpha_exact = ExactAlpha{solved.alpha, solved.optimal};
      if (!solved.optimal) {
        err << "bounds k=" << k << ": alpha not optimal within budget\n";
        code = kBudgetDegraded;
      }
    } catch (const CapExceeded& e) {
      err << "bounds k=" << k << ": alpha not computed: " << e.what() << '\n';
      code = kBudgetDegraded;
    }
    if (cfg.format == Format::kCsv) {
      sink.stream() << to_csv_row(report) << '\n';
    } else {
      Json j = sink.record(k);
      merge(j, to_json(report));
      sink.emit(j);
    }
  }
  return code;
}

int cmd_verify_c5(const RunConfig& cfg, ResultSink& sink, std::ostream& err) {
  if (cfg.graph_given && resolve_graph(cfg.graph) != construct_named(Family::kCycle, 5))
    throw InvalidArgument("verify-c5 only applies to the 5-cycle");
  if (cfg.k_last > kVerifyMaxK)
    throw InvalidArgument("verify-c5 is exhaustive; k must be <= " + std::to_string(kVerifyMaxK));
  const Graph g = construct_named(Family::kCycle, 5);
  const SolveBudget budget = budget_of(cfg);
  bool all_ok = true;
  for (std::uint32_t k = cfg.k_first; k <= cfg.k_last; ++k) {
    if (sink.already_done(k)) {
      err << "verify-c5 k=" << k << ": already recorded, skipping\n";
      continue;
    }
    std::vector<c5::AuditResult> audits;
    audits.push_back(c5::counting_audit(k));
    audits.push_back(c5::cardinality_audit(k));
    audits.push_back(c5::midpoint_characterization_audit(k, {.inject_fault = cfg.inject_fault}));

    const QuotientGraph q = build_quotient(g, k, quotient_options(cfg));
    const SolveReport solved = solve_symmetric_power(q, budget);
    std::vector<Configuration> members;
    for (std::size_t r : solved.certificate.members) members.push_back(q.configuration(r));
    audits.push_back(c5::disjointness_audit(members));

    const c5::Prop1Record prop1 =
        c5::prop1_audit(k, solved.optimal ? std::optional<std::uint64_t>(solved.alpha) : std::nullopt);
    c5::AuditResult prop1_audit{k, "prop1", true, {}};
    if (prop1.recomputed != prop1.bound)
      prop1_audit.counterexamples.push_back("recomputed " + std::to_string(prop1.recomputed) + " != bound " +
                                            std::to_string(prop1.bound));
    if (prop1.alpha_ok == false)
      prop1_audit.counterexamples.push_back("alpha " + std::to_string(solved.alpha) + " > bound " +
                                            std::to_string(prop1.bound));
    if (!solved.optimal) prop1_audit.counterexamples.push_back("alpha not optimal within budget");
    prop1_audit.ok = prop1_audit.counterexamples.empty();
    audits.push_back(prop1_audit);

    Json j = sink.record(k);
    bool ok = true;
    Json list = Json::array();
    for (const auto& a : audits) {
      ok = ok && a.ok;
      list.push_back(Json::parse(to_json(a)));
      if (!a.ok) err << "verify-c5 k=" << k << ": " << a.check << " audit FAILED\n";
    }
    j["ok"] = ok;
    j["audits"] = std::move(list);
    sink.emit(j);
    all_ok = all_ok && ok;
  }
  return all_ok ? kSuccess : kAuditFailed;
}

int cmd_search(const RunConfig& cfg, ResultSink& sink, std::ostream& err) {
  if (cfg.iterations == 0) throw InvalidArgument("--iterations must be >= 1");
  const Graph g = resolve_graph(cfg.graph);
  const VertexSet support = maximum_independent_set(g);
  const std::uint64_t alpha_base = support.count();
  for (std::uint32_t k = cfg.k_first; k <= cfg.k_last; ++k) {
    if (sink.already_done(k)) {
      err << "search k=" << k << ": already recorded, skipping\n";
      continue;
    }
    const QuotientGraph q = build_quotient(g, k, quotient_options(cfg));
    const IndependentSetCertificate found =
        heuristic_search(q.adjacency, cfg.seed, cfg.iterations, supported_certificate(q, support));
    if (!verify_certificate(q.adjacency, found))
      throw Error("heuristic_search produced an invalid certificate");
    const Count baseline = lower_bound(alpha_base, k);
    const bool notable = found.size() > baseline;
    if (notable)
      err << "NOTABLE: " << cfg.graph << " k=" << k << " independent set of size " << found.size()
          << " exceeds the supported baseline " << to_string(baseline) << '\n';
    Json j = sink.record(k);
    j["iterations"] = cfg.iterations;
    j["size"] = found.size();
    j["baseline"] = static_cast<std::uint64_t>(baseline);
    j["notable"] = notable;
    Json members = Json::array();
    for (std::size_t r : found.members) members.push_back(to_string(q.configuration(r)));
    j["certificate"] = std::move(members);
    sink.emit(j);
  }
  return kSuccess;
}

// Every labelled graph on n vertices, by edge bitmask over the pairs u < v.
std::vector<Graph> all_graphs(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<std::pair<Vertex, Vertex>> es;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if ((mask >> i) & 1U) es.push_back(pairs[i]);
    out.emplace_back(n, es);
  }
  return out;
}

bool quotients_agree(const Graph& g, std::uint32_t k, const RunConfig& cfg) {
  const QuotientGraph flow = build_quotient(g, k, quotient_options(cfg));
  const QuotientGraph orbit = strong_power_quotient_oracle(g, k);
  return flow.adjacency == orbit.adjacency;
}

int cmd_oracle_check(const RunConfig& cfg, ResultSink& sink, std::ostream& err) {
  bool all_ok = true;
  if (cfg.graph_given) {
    const Graph g = resolve_graph(cfg.graph);
    const std::uint32_t first = cfg.k_given ? cfg.k_first : 1;
    const std::uint32_t last = cfg.k_given ? cfg.k_last : 3;
    for (std::uint32_t k = first; k <= last; ++k) {
      const bool ok = quotients_agree(g, k, cfg);
      if (!ok) err << "oracle-check " << cfg.graph << " k=" << k << ": MISMATCH\n";
      Json j = sink.record(k);
      j["vertices"] = static_cast<std::uint64_t>(composition_count(g.vertex_count(), k));
      j["ok"] = ok;
      sink.emit(j);
      all_ok = all_ok && ok;
    }
    return all_ok ? kSuccess : kAuditFailed;
  }

  // Default suite: every labelled graph with n <= 4 and k <= 3, plus C5 with k <= 3.
  std::vector<std::pair<std::string, Graph>> suite;
  for (std::size_t n = 1; n <= 4; ++n)
    for (const Graph& g : all_graphs(n)) suite.emplace_back(to_edge_list(g), g);
  suite.emplace_back("c5", construct_named(Family::kCycle, 5));
  std::uint64_t instances = 0;
  Json mismatches = Json::array();
  for (const auto& [name, g] : suite)
    for (std::uint32_t k = 0; k <= 3; ++k) {
      ++instances;
      if (!quotients_agree(g, k, cfg)) {
        mismatches.push_back({{"graph", name}, {"k", k}});
        all_ok = false;
      }
    }
  Json j;
  j["command"] = command_name(cfg.command);
  j["graph"] = "suite";
  j["instances"] = instances;
  j["ok"] = all_ok;
  j["mismatches"] = std::move(mismatches);
  sink.emit(j);
  if (!all_ok) err << "oracle-check: constructions disagree\n";
  return all_ok ? kSuccess : kAuditFailed;
}

}  // namespace

std::pair<std::uint32_t, std::uint32_t> parse_k_range(const std::string& text) {
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const std::uint32_t a = parse_u32(text.substr(0, dots));
    const std::uint32_t b = parse_u32(text.substr(dots + 2));
    if (a > b) throw InvalidArgument("empty k range '" + text + "'");
    return {a, b};
  }
  const std::uint32_t k = parse_u32(text);
  return {k, k};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::string k_text;
  std::string format = "json";
  std::string out_path;

  CLI::App app{"Symmetric powers G[k] of small graphs: exact independence numbers, bounds and audits"};
  app.require_subcommand(1);
  auto add_common = [&](CLI::App* sub, Command command) {
    sub->add_option("--graph", cfg.graph, "c5, k3, p4, e2, cycle:7, petersen, or a graph file");
    sub->add_option("--k", k_text, "weight k or inclusive range a..b");
    sub->add_option("--max-nodes", cfg.max_nodes, "solver node budget per k");
    sub->add_option("--max-seconds", cfg.max_seconds, "solver time budget per k");
    sub->add_option("--seed", cfg.seed, "RNG seed");
    sub->add_option("--iterations", cfg.iterations, "local search iterations");
    sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", out_path, "append JSON lines to this file (resumes)");
    sub->add_option("--threads", cfg.threads, "worker threads");
    sub->callback([&cfg, command] { cfg.command = command; });
    return sub;
  };
  add_common(app.add_subcommand("alpha", "exact alpha(G[k]) for each k"), Command::kAlpha);
  add_common(app.add_subcommand("bounds", "closed-form bounds next to exact alpha"), Command::kBounds);
  auto* verify = add_common(app.add_subcommand("verify-c5", "audit the pentagon counting argument"),
                            Command::kVerifyC5);
  verify->add_flag("--inject-fault", cfg.inject_fault)->group("");
  add_common(app.add_subcommand("search", "local search for large independent sets in G[k]"),
             Command::kSearch);
  add_common(app.add_subcommand("oracle-check", "compare G[k] with the strong-power quotient"),
             Command::kOracleCheck);

  std::vector<const char*> argv{"symcap"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    for (const CLI::App* sub : app.get_subcommands())
      cfg.graph_given = sub->count("--graph") > 0;
    if (!k_text.empty()) {
      std::tie(cfg.k_first, cfg.k_last) = parse_k_range(k_text);
      cfg.k_given = true;
    } else if (cfg.command == Command::kVerifyC5) {
      std::tie(cfg.k_first, cfg.k_last) = std::pair{1U, 5U};
    } else if (cfg.command != Command::kOracleCheck) {
      throw InvalidArgument("--k is required");
    }
    cfg.format = format == "csv" ? Format::kCsv : Format::kJson;
    if (cfg.format == Format::kCsv && cfg.command != Command::kBounds)
      throw InvalidArgument("--format csv is only available for bounds");
    if (!out_path.empty()) cfg.out = out_path;

    ResultSink sink(cfg, out);
    switch (cfg.command) {
      case Command::kAlpha: return cmd_alpha(cfg, sink, err);
      case Command::kBounds: return cmd_bounds(cfg, sink, err);
      case Command::kVerifyC5: return cmd_verify_c5(cfg, sink, err);
      case Command::kSearch: return cmd_search(cfg, sink, err);
      case Command::kOracleCheck: return cmd_oracle_check(cfg, sink, err);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace symcap::cli
