#pragma once

// Command-line front end. Depends on the vendored CLI11 and nlohmann/json
// single headers, so it is kept out of the umbrella header.

#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperlines/hyperlines.hpp"

namespace hyperlines::cli {

using Report = nlohmann::ordered_json;

enum ExitCode : int { kSuccess = 0, kCheckFailed = 1, kUsageError = 2, kInterrupted = 130 };

/// Set from a signal handler; exhaustive searches poll it between steps.
inline std::atomic<bool>& interrupt_flag() {
  static std::atomic<bool> flag{false};
  return flag;
}

/// Precondition failures map to exit code 2.
struct PreconditionFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Rendering

namespace detail {

inline std::string scalar_text(const Report& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

inline bool all_scalars(const Report& arr) {
  return std::all_of(arr.begin(), arr.end(), [](const Report& x) { return x.is_primitive(); });
}

inline void render(const Report& node, const std::string& prefix, std::ostream& out) {
  for (auto it = node.begin(); it != node.end(); ++it) {
    const std::string key = prefix + it.key();
    const Report& v = it.value();
    if (v.is_object()) {
      render(v, key + ".", out);
    } else if (v.is_array() && all_scalars(v)) {
      out << key << ":";
      for (const auto& x : v) out << ' ' << scalar_text(x);
      out << '\n';
    } else if (v.is_array()) {
      out << key << ":";
      for (const auto& x : v) {
        out << " [";
        bool first = true;
        for (const auto& y : x) {
          out << (first ? "" : " ") << scalar_text(y);
          first = false;
        }
        out << "]";
      }
      out << '\n';
    } else {
      out << key << ": " << scalar_text(v) << '\n';
    }
  }
}

}  // namespace detail

/// Text rendering: one "key: value" line per field, nested keys dotted. JSON
/// rendering dumps the same tree, so both carry identical numbers.
inline void emit(const Report& report, bool json, std::ostream& out) {
  if (json)
    out << report.dump(2) << '\n';
  else
    detail::render(report, "", out);
}

inline Report line_array(const std::vector<Line>& lines) {
  Report arr = Report::array();
  for (const auto& line : lines) {
    Report members = Report::array();
    line.for_each([&](std::size_t v) { members.push_back(v); });
    arr.push_back(members);
  }
  return arr;
}

inline Report hedge_array(const Hypergraph3& h) {
  Report arr = Report::array();
  for (const auto& t : h.hedges()) arr.push_back({t.a, t.b, t.c});
  return arr;
}

// ---------------------------------------------------------------------------
// Inputs

struct Options {
  std::string input;
  bool json = false;
  std::uint64_t seed = 1;
  std::string shard = "0/1";
  std::string checkpoint;
};

inline std::string read_all(const Options& opt, std::istream& in) {
  if (opt.input.empty() || opt.input == "-")
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  std::ifstream file(opt.input);
  if (!file) throw Error(ErrorKind::invalid_argument, "cannot open input file '" + opt.input + "'");
  return std::string(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
}

inline Shard parse_shard(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) throw std::invalid_argument("no slash");
    std::size_t used = 0;
    Shard s{std::stoull(text.substr(0, slash), &used), std::stoull(text.substr(slash + 1))};
    if (used != slash || s.count == 0 || s.index >= s.count) throw std::invalid_argument("range");
    return s;
  } catch (const std::exception&) {
    throw Error(ErrorKind::invalid_argument, "shard must look like I/K with 0 <= I < K, got '" + text + "'");
  }
}

/// The hypergraph an input document stands for, plus what it was built from.
struct ResolvedInput {
  InputKind kind = InputKind::hypergraph;
  Hypergraph3 hypergraph;
  std::optional<bool> general_position;
  std::optional<BoundCertificate> certificate;
};

inline ResolvedInput resolve(const InputDocument& doc) {
  ResolvedInput r;
  r.kind = doc.kind;
  switch (doc.kind) {
    case InputKind::hypergraph: r.hypergraph = std::get<Hypergraph3>(doc.value); break;
    case InputKind::graph: r.hypergraph = betweenness_hypergraph(graph_metric(std::get<Graph>(doc.value))); break;
    case InputKind::metric: r.hypergraph = betweenness_hypergraph(std::get<MetricSpace>(doc.value)); break;
    case InputKind::points_l1: {
      auto l1 = l1_metric(std::get<PointSet>(doc.value));
      r.hypergraph = betweenness_hypergraph(l1.metric);
      r.general_position = l1.general_position;
      break;
    }
    case InputKind::certificate:
      r.certificate = std::get<BoundCertificate>(doc.value);
      r.hypergraph = r.certificate->hypergraph;
      break;
  }
  return r;
}

inline ResolvedInput load(const Options& opt, std::istream& in) { return resolve(parse_input(read_all(opt, in))); }

// ---------------------------------------------------------------------------
// lines

inline int cmd_lines(const Options& opt, std::istream& in, std::ostream& out) {
  ResolvedInput input = load(opt, in);
  const Hypergraph3& h = input.hypergraph;
  if (h.vertex_count() < 2) throw PreconditionFailure("lines needs n >= 2");
  LineStructure ls(h);
  Report r;
  r["kind"] = std::string(to_string(input.kind));
  r["n"] = ls.vertex_count();
  r["m"] = ls.line_count();
  r["universal"] = ls.has_universal_line();
  if (input.general_position) r["general_position"] = *input.general_position;
  r["lines"] = line_array(ls.lines());
  emit(r, opt.json, out);
  return kSuccess;
}

// ---------------------------------------------------------------------------
// check

struct SuiteOutcome {
  bool pass = true;
  std::uint64_t checked = 0;
  std::string detail;
};

inline Report outcome_report(const SuiteOutcome& o) {
  Report r;
  r["status"] = o.pass ? "PASS" : "FAIL";
  r["checked"] = o.checked;
  if (!o.pass) r["counterexample"] = o.detail;
  return r;
}

inline void run_antichain(const LineStructure& ls, Rng& rng, std::uint64_t trials, SuiteOutcome& o) {
  auto record = [&](const AntichainReport& rep, auto&& which) {
    ++o.checked;
    if (!rep.holds && o.pass) {
      o.pass = false;
      o.detail = which() + ": f(" + std::to_string(rep.violation->first) + ") is contained in f(" +
                 std::to_string(rep.violation->second) + ")";
    }
  };
  auto a = alpha_map(ls);
  auto b = beta_map(ls);
  record(check_sandwich_antichain(ls, a), [] { return std::string("alpha"); });
  record(check_sandwich_antichain(ls, b), [] { return std::string("beta"); });
  for (std::uint64_t i = 0; i < trials; ++i) {
    auto f = random_sandwich(ls, rng);
    record(check_sandwich_antichain(ls, f), [i] { return "sandwich #" + std::to_string(i); });
  }
}

inline void run_trace(const LineStructure& ls, SuiteOutcome& o) {
  auto rep = check_trace_equality(ls);
  ++o.checked;
  if (!rep.holds && o.pass) {
    auto [x, y, z] = *rep.violation;
    o.pass = false;
    o.detail = "x=" + std::to_string(x) + " y=" + std::to_string(y) + " z=" + std::to_string(z);
  }
}

inline void run_span(const LineStructure& ls, Rng& rng, std::uint64_t trials, SuiteOutcome& o) {
  const std::size_t n = ls.vertex_count();
  auto one = [&](const VertexSet& s) {
    auto rep = check_span_inequality(ls, s);
    ++o.checked;
    if (!rep.holds && o.pass) {
      o.pass = false;
      o.detail = "S=" + to_text(s) + " m=" + std::to_string(rep.m) + " t=" + std::to_string(rep.t);
    }
  };
  if (n <= 16) {
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) one(VertexSet::from_word(mask));
    return;
  }
  for (std::uint64_t i = 0; i < trials; ++i) {
    VertexSet s;
    while (s.empty())
      for (VertexId v = 0; v < n; ++v)
        if (rng() & 1u) s.insert(v);
    one(s);
  }
}

inline void run_lg_bound(const LineStructure& ls, SuiteOutcome& o) {
  auto rep = check_lg_bound(ls);
  ++o.checked;
  if (!rep.holds && o.pass) {
    o.pass = false;
    o.detail = "n=" + std::to_string(rep.n) + " m=" + std::to_string(rep.m);
  }
}

inline void run_bernstein(SuiteOutcome& o) {
  for (std::int64_t big_n = 2; big_n <= 60; ++big_n) {
    for (std::int64_t k = 1; 2 * k <= big_n; ++k) {
      ++o.checked;
      if (!check_bernstein(big_n, k).holds && o.pass) {
        o.pass = false;
        o.detail = "Bernstein fails at N=" + std::to_string(big_n) + " k=" + std::to_string(k);
      }
    }
  }
  for (const Rational& eps : {Rational(1, 8), Rational(1, 4), Rational(1, 2), Rational(1)}) {
    Rational delta = delta_for_epsilon(eps);
    for (std::int64_t big_n = 1; big_n <= 200; ++big_n) {
      ++o.checked;
      if (!tail_condition_holds(delta, eps, big_n) && o.pass) {
        o.pass = false;
        o.detail = "tail bound fails at eps=" + to_string(eps) + " N=" + std::to_string(big_n);
      }
    }
  }
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"antichain", "trace", "span", "lg_bound", "bernstein", "certificate", "all"};
  return names;
}

struct CheckArgs {
  std::string suite = "all";
  std::uint64_t trials = 1000;
  std::optional<std::size_t> exhaustive;
};

inline int cmd_check(const Options& opt, const CheckArgs& args, std::istream& in, std::ostream& out) {
  const std::string& suite = args.suite;
  auto wants = [&](const char* name) { return suite == name || suite == "all"; };
  Rng rng(opt.seed);
  Report r;
  bool pass = true;
  auto finish = [&](const char* name, const SuiteOutcome& o) {
    r[name] = outcome_report(o);
    pass = pass && o.pass;
  };

  // Structural suites over one input or over every hypergraph on N vertices.
  auto structural = [&](const std::vector<Hypergraph3>& population, bool skip_universal) {
    SuiteOutcome anti, trace, span_o, lg;
    for (const auto& h : population) {
      LineStructure ls(h);
      if (wants("trace")) run_trace(ls, trace);
      if (ls.has_universal_line()) {
        if (skip_universal) continue;
        if (wants("antichain") || wants("span") || wants("lg_bound"))
          throw PreconditionFailure("suite '" + suite + "' needs an input without a universal line");
      }
      if (wants("antichain")) run_antichain(ls, rng, args.trials, anti);
      if (wants("span")) run_span(ls, rng, args.trials, span_o);
      if (wants("lg_bound")) run_lg_bound(ls, lg);
    }
    if (wants("antichain")) finish("antichain", anti);
    if (wants("trace")) finish("trace", trace);
    if (wants("span")) finish("span", span_o);
    if (wants("lg_bound")) finish("lg_bound", lg);
  };

  const bool needs_input = suite != "bernstein" && !args.exhaustive;
  if (args.exhaustive) {
    std::size_t n = *args.exhaustive;
    if (n < 2 || n > 6) throw PreconditionFailure("--exhaustive supports 2 <= N <= 6");
    if (suite == "certificate") throw PreconditionFailure("the certificate suite needs a certificate input");
    std::vector<Hypergraph3> population;
    enumerate_hypergraphs(n, Shard{}, [&](HedgeMask, Hypergraph3 h) { population.push_back(std::move(h)); });
    r["population"] = population.size();
    structural(population, true);
  } else if (needs_input) {
    ResolvedInput input = load(opt, in);
    if (input.hypergraph.vertex_count() < 2) throw PreconditionFailure("check needs n >= 2");
    if (suite == "certificate" && !input.certificate)
      throw PreconditionFailure("the certificate suite needs a certificate input");
    if (input.certificate && (suite == "certificate" || suite == "all")) {
      auto v = validate_certificate(*input.certificate);
      SuiteOutcome o;
      o.checked = input.certificate->inequalities.size();
      o.pass = v.valid;
      if (!v.valid) o.detail = v.failures.front();
      finish("certificate", o);
    }
    if (suite != "certificate") structural({input.hypergraph}, false);
  }
  if (wants("bernstein")) {
    SuiteOutcome o;
    run_bernstein(o);
    finish("bernstein", o);
  }
  r["result"] = pass ? "PASS" : "FAIL";
  emit(r, opt.json, out);
  return pass ? kSuccess : kCheckFailed;
}

// ---------------------------------------------------------------------------
// search

inline Constraint parse_constraint(const std::string& text) {
  if (text == "no-universal" || text == "no_universal") return Constraint::no_universal;
  if (text == "dbe-two-or-three" || text == "dbe_two_or_three") return Constraint::dbe_two_or_three;
  if (text == "dbe-two" || text == "dbe_two") return Constraint::dbe_two;
  if (text == "none") return Constraint::none;
  throw Error(ErrorKind::invalid_argument, "unknown constraint '" + text + "'");
}

inline Report result_report(const SearchResult& res, const Shard& shard, LineEngine engine, bool iso_reject) {
  Report r;
  r["n"] = res.n;
  r["mode"] = std::string(to_string(res.mode));
  r["constraint"] = std::string(to_string(res.constraint));
  r["engine"] = std::string(to_string(engine));
  r["iso_reject"] = iso_reject;
  r["shard"] = std::to_string(shard.index) + "/" + std::to_string(shard.count);
  r["examined"] = res.examined;
  if (res.mode == SearchMode::sampled) r["skipped"] = res.skipped;
  r["ceil_lg_n"] = res.n <= 1 ? 0 : static_cast<std::size_t>(boost::multiprecision::msb(BigInt(res.n - 1))) + 1;
  if (res.min_m) {
    r["min_m"] = *res.min_m;
    r["argmin_index"] = *res.argmin_index;
    r["witness"] = hedge_array(*res.argmin);
  } else {
    r["min_m"] = nullptr;
  }
  Report hist = Report::object();
  for (auto [m, count] : res.histogram) hist[std::to_string(m)] = count;
  r["histogram"] = hist;
  return r;
}

inline nlohmann::json checkpoint_json(const Checkpoint& c) {
  nlohmann::json j;
  j["n"] = c.n;
  j["constraint"] = std::string(to_string(c.constraint));
  j["engine"] = std::string(to_string(c.options.engine));
  j["iso_reject"] = c.options.iso_reject;
  j["shard_index"] = c.options.shard.index;
  j["shard_count"] = c.options.shard.count;
  j["next_index"] = c.next_index;
  j["examined"] = c.partial.examined;
  nlohmann::json hist = nlohmann::json::object();
  for (auto [m, count] : c.partial.histogram) hist[std::to_string(m)] = count;
  j["histogram"] = hist;
  if (c.partial.min_m) {
    j["min_m"] = *c.partial.min_m;
    j["argmin_index"] = *c.partial.argmin_index;
  }
  return j;
}

inline Checkpoint checkpoint_from_json(const nlohmann::json& j) {
  Checkpoint c;
  c.n = j.at("n").get<std::size_t>();
  c.constraint = parse_constraint(j.at("constraint").get<std::string>());
  c.options.engine = j.at("engine").get<std::string>() == "naive" ? LineEngine::naive : LineEngine::optimized;
  c.options.iso_reject = j.at("iso_reject").get<bool>();
  c.options.shard = {j.at("shard_index").get<std::uint64_t>(), j.at("shard_count").get<std::uint64_t>()};
  c.next_index = j.at("next_index").get<std::uint64_t>();
  c.partial.n = c.n;
  c.partial.constraint = c.constraint;
  c.partial.mode = SearchMode::exhaustive;
  c.partial.examined = j.at("examined").get<std::uint64_t>();
  for (auto& [key, value] : j.at("histogram").items()) c.partial.histogram[std::stoull(key)] = value.get<std::uint64_t>();
  if (j.contains("min_m")) {
    c.partial.min_m = j.at("min_m").get<std::size_t>();
    c.partial.argmin_index = j.at("argmin_index").get<std::uint64_t>();
    c.partial.argmin = Hypergraph3::from_mask(c.n, *c.partial.argmin_index);
  }
  return c;
}

inline void write_checkpoint(const std::string& path, const Checkpoint& c) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream file(tmp);
    if (!file) throw Error(ErrorKind::invalid_argument, "cannot write checkpoint '" + path + "'");
    file << checkpoint_json(c).dump(2) << '\n';
  }
  std::filesystem::rename(tmp, path);
}

struct SearchArgs {
  std::size_t n = 0;
  std::string mode = "exhaustive";
  std::string constraint = "no-universal";
  std::uint64_t trials = 10000;
  std::string engine = "optimized";
  bool iso_reject = false;
  std::uint64_t step = std::uint64_t{1} << 16;
};

inline int cmd_search(const Options& opt, const SearchArgs& args, std::ostream& out, std::ostream& err) {
  Shard shard = parse_shard(opt.shard);
  Constraint constraint = parse_constraint(args.constraint);
  LineEngine engine;
  if (args.engine == "optimized") engine = LineEngine::optimized;
  else if (args.engine == "naive") engine = LineEngine::naive;
  else throw Error(ErrorKind::invalid_argument, "unknown engine '" + args.engine + "'");

  if (args.mode == "sampled") {
    SearchTask task{args.n, SearchMode::sampled, constraint, opt.seed, shard, engine};
    emit(result_report(sampled_search(task, args.trials), shard, engine, false), opt.json, out);
    return kSuccess;
  }
  if (args.mode != "exhaustive") throw Error(ErrorKind::invalid_argument, "unknown mode '" + args.mode + "'");

  ExhaustiveOptions options{engine, shard, args.iso_reject};
  std::optional<ExhaustiveRun> run;
  if (!opt.checkpoint.empty() && std::filesystem::exists(opt.checkpoint)) {
    std::ifstream file(opt.checkpoint);
    Checkpoint saved = checkpoint_from_json(nlohmann::json::parse(file));
    if (saved.n != args.n || saved.constraint != constraint || saved.options.engine != engine ||
        saved.options.iso_reject != args.iso_reject || !(saved.options.shard == shard))
      throw Error(ErrorKind::invalid_argument, "checkpoint '" + opt.checkpoint + "' belongs to a different search");
    run.emplace(std::move(saved));
  } else {
    run.emplace(args.n, constraint, options);
  }
  while (!run->step(args.step)) {
    if (!opt.checkpoint.empty()) write_checkpoint(opt.checkpoint, run->checkpoint());
    if (interrupt_flag().load()) {
      err << "interrupted at index " << run->checkpoint().next_index;
      if (!opt.checkpoint.empty()) err << "; checkpoint written to " << opt.checkpoint;
      err << '\n';
      return kInterrupted;
    }
  }
  if (!opt.checkpoint.empty()) write_checkpoint(opt.checkpoint, run->checkpoint());
  emit(result_report(run->result(), shard, engine, args.iso_reject), opt.json, out);
  return kSuccess;
}

// ---------------------------------------------------------------------------
// witness

struct WitnessArgs {
  std::string epsilon = "1/4";
  std::string mode = "exhaustive";
};

inline Report certificate_report(const BoundCertificate& c, const CertificateValidation& v) {
  Report r;
  r["n"] = c.n;
  r["m"] = c.m;
  r["epsilon"] = to_string(c.epsilon);
  r["delta"] = to_string(c.delta);
  r["mode"] = std::string(to_string(c.mode));
  r["heuristic"] = c.heuristic();
  r["S"] = c.S.members();
  r["s"] = c.s;
  r["T"] = line_array(c.T);
  r["t"] = c.t;
  r["R"] = c.R.members();
  r["r"] = c.r;
  r["branch"] = std::string(to_string(c.branch));
  r["side_condition"] = c.side_condition;
  r["chain_applicable"] = c.chain_applicable;
  r["m_minus_t"] = c.m - c.t;
  Report ineqs = Report::object();
  for (const auto& q : c.inequalities) {
    Report e;
    e["lhs"] = to_text(q.lhs);
    e["relation"] = std::string(to_string(q.relation));
    e["rhs"] = to_text(q.rhs);
    e["holds"] = q.holds;
    ineqs[q.name] = e;
  }
  r["inequalities"] = ineqs;
  r["valid"] = v.valid;
  return r;
}

inline int cmd_witness(const Options& opt, const WitnessArgs& args, std::istream& in, std::ostream& out,
                       std::ostream& err) {
  Rational epsilon;
  try {
    epsilon = parse_rational(args.epsilon);
  } catch (const Error&) {
    throw Error(ErrorKind::invalid_epsilon, "epsilon must be a positive rational, got '" + args.epsilon + "'");
  }
  if (epsilon <= 0) throw Error(ErrorKind::invalid_epsilon, "epsilon must be positive, got " + args.epsilon);
  SpanSearch mode;
  if (args.mode == "exhaustive") mode = SpanSearch::exhaustive;
  else if (args.mode == "greedy") mode = SpanSearch::greedy;
  else throw Error(ErrorKind::invalid_argument, "unknown mode '" + args.mode + "'");

  ResolvedInput input = load(opt, in);
  BoundCertificate c = extract_certificate(input.hypergraph, epsilon, mode);
  CertificateValidation v = validate_certificate(c);
  if (opt.json)
    emit(certificate_report(c, v), true, out);
  else
    out << write_certificate(c);
  for (const auto& why : v.failures) err << "validation: " << why << '\n';
  return v.valid ? kSuccess : kCheckFailed;
}

// ---------------------------------------------------------------------------
// gen

struct GenArgs {
  std::string family;
  std::size_t n = 0;
  std::string output;
};

inline Family parse_family(const std::string& text) {
  static const std::pair<const char*, Family> table[] = {
      {"bipartite", Family::bipartite},           {"chordal", Family::chordal},
      {"one_two_metric", Family::one_two_metric}, {"one-two-metric", Family::one_two_metric},
      {"random_graph", Family::random_graph},     {"random-graph", Family::random_graph},
      {"random_hypergraph", Family::random_hypergraph}, {"random-hypergraph", Family::random_hypergraph},
  };
  for (auto [name, family] : table)
    if (text == name) return family;
  throw Error(ErrorKind::invalid_argument, "unknown family '" + text + "'");
}

inline int cmd_gen(const Options& opt, const GenArgs& args, std::ostream& out) {
  Generated g = gen_family(parse_family(args.family), args.n, opt.seed);
  std::string text = std::visit([](const auto& x) { return to_text(x); }, g);
  if (args.output.empty() || args.output == "-") {
    out << text;
  } else {
    std::ofstream file(args.output);
    if (!file) throw Error(ErrorKind::invalid_argument, "cannot write '" + args.output + "'");
    file << text;
  }
  return kSuccess;
}

// ---------------------------------------------------------------------------

/// Entry point; `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lines in 3-uniform hypergraphs and metric spaces", "hyperlines"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--input", opt.input, "Input document (default: standard input)");
  app.add_flag("--json", opt.json, "Emit JSON instead of key: value text");
  app.add_option("--seed", opt.seed, "Seed for randomized parts");
  app.add_option("--shard", opt.shard, "Shard I/K of an exhaustive or sampled search");
  app.add_option("--checkpoint", opt.checkpoint, "Checkpoint file for resumable exhaustive searches");

  auto* lines = app.add_subcommand("lines", "List the distinct lines of the input");

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "Run the structural and bound checkers");
  check->add_option("--suite", check_args.suite, "Suite to run")
      ->check(CLI::IsMember(suite_names()));
  check->add_option("--trials", check_args.trials, "Random sandwiches (antichain) or subsets (span, n > 16)");
  check->add_option("--exhaustive", check_args.exhaustive, "Check every hypergraph on N vertices instead of the input");

  SearchArgs search_args;
  auto* search = app.add_subcommand("search", "Minimum line counts over hypergraph populations");
  search->add_option("--n", search_args.n, "Vertex count")->required();
  search->add_option("--mode", search_args.mode, "exhaustive or sampled")
      ->check(CLI::IsMember({"exhaustive", "sampled"}));
  search->add_option("--constraint", search_args.constraint, "no-universal, dbe-two-or-three, dbe-two or none");
  search->add_option("--trials", search_args.trials, "Trials in sampled mode");
  search->add_option("--engine", search_args.engine, "optimized or naive line engine");
  search->add_flag("--iso-reject", search_args.iso_reject, "Count one hypergraph per isomorphism class");
  search->add_option("--step", search_args.step, "Instances between checkpoints")->check(CLI::PositiveNumber);

  WitnessArgs witness_args;
  auto* witness = app.add_subcommand("witness", "Extract and validate a bound certificate");
  witness->add_option("--epsilon", witness_args.epsilon, "Positive rational, e.g. 1/4 or 0.25");
  witness->add_option("--mode", witness_args.mode, "exhaustive or greedy choice of S");

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Generate an instance of a named family");
  gen->add_option("--family", gen_args.family, "bipartite, chordal, one_two_metric, random_graph, random_hypergraph")
      ->required();
  gen->add_option("--n", gen_args.n, "Vertex count")->required();
  gen->add_option("--output", gen_args.output, "Output file (default: standard output)");

  for (auto* sub : {lines, check, search, witness, gen}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (*lines) return cmd_lines(opt, in, out);
    if (*check) return cmd_check(opt, check_args, in, out);
    if (*search) return cmd_search(opt, search_args, out, err);
    if (*witness) return cmd_witness(opt, witness_args, in, out, err);
    if (*gen) return cmd_gen(opt, gen_args, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsageError;
  } catch (const PreconditionFailure& e) {
    err << "precondition: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::internal) {
      err << "internal error: " << e.what() << '\n';
      return kCheckFailed;
    }
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: bad checkpoint: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace hyperlines::cli
