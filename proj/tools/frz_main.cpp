// frz: command-line front end for the compression toolkit.
//
// Exit codes: 0 success, 1 a checked property failed, 2 usage or input
// error, 3 capacity refusal.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "frz/bounds.hpp"
#include "frz/compress.hpp"
#include "frz/error.hpp"
#include "frz/io.hpp"
#include "frz/pipeline.hpp"
#include "frz/search.hpp"
#include "frz/setops.hpp"
#include "frz/structure.hpp"
#include "frz/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace frz;

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;

constexpr const char* kToleranceEnv = "FRZ_TOLERANCE";

// Ordered key/value pairs printed before any result.
struct ConfigEcho {
  std::string command;
  std::vector<std::pair<std::string, std::string>> entries;

  void add(std::string key, std::string value) { entries.emplace_back(std::move(key), std::move(value)); }

  void print_comments(std::ostream& out) const {
    out << "# frz " << command << "\n";
    for (const auto& [k, v] : entries) out << "# " << k << " = " << v << "\n";
  }
  ordered_json to_json() const {
    ordered_json j;
    j["command"] = command;
    for (const auto& [k, v] : entries) j[k] = v;
    return j;
  }
};

struct Tolerance {
  double value = kDefaultTolerance;
  std::string source = "default";
};

Tolerance resolve_tolerance(const std::optional<double>& flag) {
  if (flag) {
    if (!(*flag >= 0)) throw ValidationError("tolerance must be non-negative");
    return {*flag, "--tolerance"};
  }
  if (const char* env = std::getenv(kToleranceEnv); env && *env) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (*end != '\0' || !(v >= 0)) throw ValidationError(std::string(kToleranceEnv) + " is not a non-negative number");
    return {v, kToleranceEnv};
  }
  return {};
}

std::string fmt_double(double x) {
  std::ostringstream s;
  s.precision(12);
  s << x;
  return s.str();
}

// A positive real given by its natural log, printed in scientific notation
// without ever forming the (possibly overflowing) value itself.
std::string fmt_from_log(double log_value) {
  if (std::isnan(log_value)) return "";
  const double l10 = log_value / std::log(10.0);
  if (std::abs(l10) < 15) return fmt_double(std::exp(log_value));
  double exponent = std::floor(l10);
  double mantissa = std::pow(10.0, l10 - exponent);
  if (mantissa >= 9.9999999999995) {
    mantissa /= 10;
    exponent += 1;
  }
  std::ostringstream s;
  s.precision(12);
  s << mantissa << "e" << (exponent >= 0 ? "+" : "") << static_cast<long long>(exponent);
  return s.str();
}

// Input set: a path, "-" for stdin, or inline text where ';' separates lines.
struct SetSource {
  std::string path;
  std::string inline_text;

  DenseSet load() const {
    if (!inline_text.empty()) {
      if (!path.empty()) throw ValidationError("give either an input file or --inline, not both");
      std::string text = inline_text;
      std::replace(text.begin(), text.end(), ';', '\n');
      return parse_set(text);
    }
    if (path.empty()) throw ValidationError("no input set (give a file, '-' for stdin, or --inline)");
    if (path == "-") {
      std::string text{std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
      return parse_set(text);
    }
    return read_set_file(path);
  }
  std::string describe() const { return inline_text.empty() ? path : "inline"; }
};

void add_source(CLI::App* cmd, SetSource& src) {
  cmd->add_option("input", src.path, "Set file, or '-' for stdin");
  cmd->add_option("--inline", src.inline_text, "Set given inline, lines separated by ';' (e.g. \"3 2; (0,0); (1,0)\")");
}

std::string points_string(const DenseSet& a) {
  std::string out;
  a.for_each([&](Point u) {
    if (!out.empty()) out += ' ';
    out += format_point(a.group(), u);
  });
  return out;
}

ordered_json points_json(const DenseSet& a) {
  ordered_json j = ordered_json::array();
  a.for_each([&](Point u) { j.push_back(format_point(a.group(), u)); });
  return j;
}

ordered_json step_json(const GroupParams& g, const CompressionStep& s) {
  return {{"direction", format_point(g, s.direction.vector())},
          {"potential_before", s.potential_before},
          {"potential_after", s.potential_after},
          {"moved", s.moved}};
}

std::string bool_word(bool b) { return b ? "yes" : "no"; }

// ---------------------------------------------------------------- analyze

struct AnalyzeArgs {
  SetSource src;
  bool pipeline = false;
  bool json = false;
  std::optional<double> tolerance;
};

ordered_json structure_json(const StructureReport& st) {
  ordered_json pieces = ordered_json::array();
  ordered_json offsets = ordered_json::array();
  for (std::size_t i = 0; i < st.pieces.size(); ++i) {
    pieces.push_back(points_json(st.pieces[i]));
    offsets.push_back(format_point(st.group, st.piece_offset(i)));
  }
  ordered_json a = ordered_json::array();
  for (Point u : st.a) a.push_back(format_point(st.group, u));
  return {{"h", st.h}, {"m", st.m}, {"q", st.q}, {"H_size", st.h_size},
          {"a", a}, {"pieces", pieces}, {"piece_offsets", offsets}};
}

int run_analyze(const AnalyzeArgs& args) {
  const Tolerance tol = resolve_tolerance(args.tolerance);
  const DenseSet a = args.src.load();
  if (a.empty()) throw DomainError("the set is empty");

  ConfigEcho echo{"analyze"};
  echo.add("input", args.src.describe());
  echo.add("p", std::to_string(a.group().p()));
  echo.add("n", std::to_string(a.group().n()));
  echo.add("tolerance", fmt_double(tol.value) + " (" + tol.source + ")");
  echo.add("pipeline", bool_word(args.pipeline));

  const std::uint64_t sum = sumset(a, a).size();
  const AffineSpanDescriptor span = affine_span(a);
  const Rational k = ratio(sum, a.size());
  const Rational s = ratio(span.size, a.size());
  const FrontierRecord rec{k, s, a, SetClass::kArbitrary};
  const FrontierReport cmp = compare_frontier(std::span(&rec, 1), a.group().p(), tol.value);
  const CurveComparison& c = cmp.entries.front();

  std::optional<PipelineReport> pipe;
  if (args.pipeline) pipe = end_to_end(a);

  if (args.json) {
    ordered_json j;
    j["config"] = echo.to_json();
    j["size"] = a.size();
    j["sumset_size"] = sum;
    j["span_size"] = span.size;
    j["dimension"] = span.dim;
    j["doubling"] = to_string(k);
    j["spanning"] = to_string(s);
    j["curve"] = {{"log_spanning", c.log_spanning},
                  {"log_main_curve", c.log_curve},
                  {"status", to_string(c.status)},
                  {"below_threshold", c.below_threshold}};
    if (pipe) {
      ordered_json pj;
      pj["normalized_sumset_size"] = pipe->normalized_sum_size;
      ordered_json steps = ordered_json::array();
      for (std::size_t i = 0; i < pipe->trace.steps.size(); ++i) {
        ordered_json sj = step_json(pipe->reduced.group(), pipe->trace.steps[i]);
        sj["sumset_size"] = pipe->step_sum_sizes[i];
        steps.push_back(sj);
      }
      pj["steps"] = steps;
      pj["reduced"] = points_json(pipe->reduced);
      pj["size_preserved"] = pipe->size_preserved;
      pj["span_preserved"] = pipe->span_preserved;
      pj["doubling_monotone"] = pipe->doubling_monotone;
      if (pipe->structure) {
        pj["structure"] = structure_json(*pipe->structure);
        pj["structure_verified"] = pipe->structure_verified;
        pj["observations_hold"] = pipe->observations_hold;
        pj["cardinality_interval"] = {to_string(pipe->cardinality_interval.first),
                                      to_string(pipe->cardinality_interval.second)};
        pj["cardinality_holds"] = pipe->cardinality_holds;
        if (pipe->bounds_apply) {
          pj["sumset_lower_bound"] = pipe->sumset_bound.str();
          pj["sumset_bound_holds"] = pipe->sumset_bound_holds;
          pj["simplified_lower_bound"] = to_string(pipe->simplified_bound);
          pj["simplified_bound_holds"] = pipe->simplified_bound_holds;
        } else {
          pj["sumset_lower_bound"] = nullptr;
          pj["simplified_lower_bound"] = nullptr;
        }
      }
      pj["ok"] = pipe->ok();
      j["pipeline"] = pj;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    echo.print_comments(std::cout);
    std::cout << "size          " << a.size() << "\n"
              << "sumset_size   " << sum << "\n"
              << "span_size     " << span.size << "\n"
              << "dimension     " << span.dim << "\n"
              << "doubling      " << to_string(k) << "\n"
              << "spanning      " << to_string(s) << "\n"
              << "main_curve    " << fmt_from_log(c.log_curve) << "\n"
              << "curve_status  " << to_string(c.status) << (c.below_threshold ? " (below K_0 = 8)" : "") << "\n";
    if (pipe) {
      std::cout << "pipeline.steps              " << pipe->trace.steps.size() << "\n";
      std::cout << "pipeline.sumset_sizes       " << pipe->normalized_sum_size;
      for (std::uint64_t v : pipe->step_sum_sizes) std::cout << " -> " << v;
      std::cout << "\n"
                << "pipeline.size_preserved     " << bool_word(pipe->size_preserved) << "\n"
                << "pipeline.span_preserved     " << bool_word(pipe->span_preserved) << "\n"
                << "pipeline.doubling_monotone  " << bool_word(pipe->doubling_monotone) << "\n";
      if (pipe->structure) {
        const StructureReport& st = *pipe->structure;
        std::cout << "pipeline.structure          h=" << st.h << " m=" << st.m << " q=" << st.q << "\n"
                  << "pipeline.structure_ok       " << bool_word(pipe->structure_verified && pipe->observations_hold)
                  << "\n"
                  << "pipeline.cardinality        [" << to_string(pipe->cardinality_interval.first) << ", "
                  << to_string(pipe->cardinality_interval.second) << "] " << bool_word(pipe->cardinality_holds) << "\n";
        if (pipe->bounds_apply) {
          std::cout << "pipeline.sumset_bound       " << pipe->sumset_bound.str() << " "
                    << bool_word(pipe->sumset_bound_holds) << "\n"
                    << "pipeline.simplified_bound   " << to_string(pipe->simplified_bound) << " "
                    << bool_word(pipe->simplified_bound_holds) << "\n";
        } else {
          std::cout << "pipeline.sumset_bound       n/a (needs p > 2)\n";
        }
      }
      std::cout << "pipeline.reduced            " << points_string(pipe->reduced) << "\n"
                << "pipeline.ok                 " << bool_word(pipe->ok()) << "\n";
    }
  }
  return pipe && !pipe->ok() ? kExitPropertyFailure : kExitOk;
}

// ---------------------------------------------------------------- compress

struct CompressArgs {
  SetSource src;
  std::string direction;
  bool reduce = false;
  bool normalize = false;
  std::string out;
  std::string trace;
  bool json = false;
};

int run_compress(const CompressArgs& args) {
  DenseSet a = args.src.load();
  if (args.direction.empty() == !args.reduce) {
    throw ValidationError("give exactly one of --direction or --reduce");
  }

  ConfigEcho echo{"compress"};
  echo.add("input", args.src.describe());
  echo.add("p", std::to_string(a.group().p()));
  echo.add("n", std::to_string(a.group().n()));
  echo.add("mode", args.reduce ? "reduce" : "direction " + args.direction);
  echo.add("normalize", bool_word(args.normalize));

  if (args.normalize) a = normalize_to_E(a).set;
  const GroupParams& g = a.group();
  CompressionTrace trace;
  DenseSet result(g);
  if (args.reduce) {
    ReduceResult r = reduce(a);
    trace = std::move(r.trace);
    result = std::move(r.set);
  } else {
    const Direction d = normalize_direction(g, parse_point(g, args.direction));
    result = compress(a, d);
    trace.initial_potential = potential(a);
    trace.final_potential = potential(result);
    if (!(result == a)) {
      std::size_t moved = 0;
      a.for_each([&](Point u) { moved += !result.contains(u); });
      trace.steps.push_back({d, trace.initial_potential, trace.final_potential, moved});
    }
  }

  ordered_json tj = ordered_json::array();
  for (const auto& s : trace.steps) tj.push_back(step_json(g, s));
  std::vector<std::string> comments{"frz compress"};
  for (const auto& [k, v] : echo.entries) comments.push_back(k + " = " + v);
  comments.push_back("steps = " + std::to_string(trace.steps.size()));

  if (!args.out.empty()) write_set_file(args.out, result, comments);
  if (!args.trace.empty()) {
    std::ofstream t(args.trace);
    if (!t) throw ValidationError("cannot write trace file " + args.trace);
    t << tj.dump(2) << "\n";
  }
  if (args.json) {
    ordered_json j;
    j["config"] = echo.to_json();
    j["trace"] = tj;
    j["initial_potential"] = trace.initial_potential;
    j["final_potential"] = trace.final_potential;
    j["set"] = format_set(result);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << format_set(result, comments);
    if (args.trace.empty()) std::cout << "# trace = " << tj.dump() << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------- structure

struct StructureArgs {
  SetSource src;
  bool json = false;
};

int run_structure(const StructureArgs& args) {
  const DenseSet input = args.src.load();
  if (input.empty()) throw DomainError("the set is empty");
  ConfigEcho echo{"structure"};
  echo.add("input", args.src.describe());
  echo.add("p", std::to_string(input.group().p()));
  echo.add("n", std::to_string(input.group().n()));

  // Sets that are not E-compressed are first normalized and reduced.
  DenseSet a = input;
  std::size_t steps = 0;
  bool prepared = false;
  if (input.group().n() == 0 || !is_E_compressed(input)) {
    const NormalizedSet norm = normalize_to_E(input);
    if (norm.group.n() == 0) throw DomainError("a single point has no coset structure");
    ReduceResult r = reduce(norm.set);
    steps = r.trace.steps.size();
    a = std::move(r.set);
    prepared = true;
  }
  echo.add("prepared", prepared ? "normalized and reduced (" + std::to_string(steps) + " steps)" : "input is E-compressed");

  const StructureReport st = extract_structure(a);
  const bool verified = verify_structure(a, st);
  const ProofObservations obs = check_proof_observations(a, st);
  const auto [lo, hi] = cardinality_bounds(st);
  const std::uint64_t span = a.group().size();
  const std::uint64_t sum = sumset(a, a).size();
  const bool bounds_apply = sumset_bounds_apply(st);
  const BigInt bound = bounds_apply ? sumset_lower_bound(st) : BigInt(0);
  const Rational simplified = bounds_apply ? simplified_lower_bound(st, a.size(), span) : Rational(0);
  const Rational density = ratio(a.size(), span);
  const bool ok = verified && obs.all() && lo <= density && density <= hi &&
                  (!bounds_apply || (bound <= sum && simplified <= sum));
  const std::string na = "n/a (needs p > 2)";

  if (args.json) {
    ordered_json j;
    j["config"] = echo.to_json();
    j["set"] = points_json(a);
    j["structure"] = structure_json(st);
    j["verified"] = verified;
    j["observations"] = {{"coset_below_q", obs.coset_below_q},
                         {"a1_plus_ai_absent", obs.a1_plus_ai_absent},
                         {"double_ai_absent", obs.double_ai_absent},
                         {"aj_plus_ai_absent", obs.aj_plus_ai_absent}};
    j["cardinality_interval"] = {to_string(lo), to_string(hi)};
    j["density"] = to_string(density);
    j["sumset_size"] = sum;
    j["doubling"] = to_string(ratio(sum, a.size()));
    j["sumset_lower_bound"] = bounds_apply ? ordered_json(bound.str()) : ordered_json(nullptr);
    j["simplified_lower_bound"] = bounds_apply ? ordered_json(to_string(simplified)) : ordered_json(nullptr);
    j["ok"] = ok;
    std::cout << j.dump(2) << "\n";
  } else {
    echo.print_comments(std::cout);
    std::cout << "set                     " << points_string(a) << "\n"
              << "h                       " << st.h << "\n"
              << "m                       " << st.m << "\n"
              << "q                       " << st.q << "\n";
    for (std::size_t i = 0; i < st.pieces.size(); ++i) {
      std::cout << "piece " << i + 1 << " @ " << format_point(st.group, st.piece_offset(i)) << "  size "
                << st.pieces[i].size() << "  " << points_string(st.pieces[i]) << "\n";
    }
    std::cout << "verified                " << bool_word(verified) << "\n"
              << "observations            " << bool_word(obs.all()) << "\n"
              << "cardinality_interval    [" << to_string(lo) << ", " << to_string(hi) << "] contains "
              << to_string(density) << "\n"
              << "sumset_size             " << sum << "\n"
              << "sumset_lower_bound      " << (bounds_apply ? bound.str() : na) << "\n"
              << "simplified_lower_bound  " << (bounds_apply ? to_string(simplified) : na) << "\n"
              << "ok                      " << bool_word(ok) << "\n";
  }
  return ok ? kExitOk : kExitPropertyFailure;
}

// ---------------------------------------------------------------- bounds

struct BoundsArgs {
  std::uint32_t p = 3;
  double k_min = 1;
  double k_max = 12;
  double k_step = 0.5;
  bool log = false;
};

int run_bounds(const BoundsArgs& args) {
  if (!is_prime(args.p)) throw ValidationError("p must be prime");
  if (!(args.k_step > 0)) throw ValidationError("--k-step must be positive");
  if (!(args.k_min >= 1) || args.k_max < args.k_min) throw ValidationError("need 1 <= k-min <= k-max");

  ConfigEcho echo{"bounds"};
  echo.add("p", std::to_string(args.p));
  echo.add("k_min", fmt_double(args.k_min));
  echo.add("k_max", fmt_double(args.k_max));
  echo.add("k_step", fmt_double(args.k_step));
  echo.add("values", args.log ? "natural log" : "real");
  echo.print_comments(std::cout);

  const std::vector<BoundCurve> curves = standard_curves(args.p);
  std::cout << "K";
  for (const auto& c : curves) std::cout << "," << c.label;
  std::cout << "\n";
  const auto count = static_cast<std::uint64_t>(std::floor((args.k_max - args.k_min) / args.k_step + 1e-9)) + 1;
  for (std::uint64_t i = 0; i < count; ++i) {
    const double k = args.k_min + static_cast<double>(i) * args.k_step;
    std::cout << fmt_double(k);
    for (const auto& c : curves) {
      std::cout << ",";
      if (k < c.k_min || k > c.k_max) continue;
      const double v = c.log_value(k);
      std::cout << (args.log ? fmt_double(v) : fmt_from_log(v));
    }
    std::cout << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string suite;
  std::optional<std::uint32_t> p;
  std::optional<std::uint32_t> n;
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t trials = 1000;
  unsigned threads = 1;
  std::optional<double> tolerance;
};

int run_verify(const VerifyArgs& args) {
  const Tolerance tol = resolve_tolerance(args.tolerance);
  if (args.p && !is_prime(*args.p)) throw ValidationError("p must be prime");
  VerifyOptions o;
  o.p = args.p;
  o.n = args.n;
  o.seed = args.seed;
  o.trials = args.trials;
  o.threads = args.threads;
  o.tolerance = tol.value;

  ConfigEcho echo{"verify"};
  echo.add("suite", args.suite);
  echo.add("p", args.p ? std::to_string(*args.p) : "suite default");
  echo.add("n", args.n ? std::to_string(*args.n) : "suite default");
  echo.add("seed", std::to_string(args.seed));
  echo.add("trials", std::to_string(args.trials));
  echo.add("threads", std::to_string(args.threads));
  echo.add("tolerance", fmt_double(tol.value) + " (" + tol.source + ")");

  const std::vector<SuiteResult> results = run_suite(args.suite, o);
  bool passed = true;
  ordered_json suites = ordered_json::array();
  for (const auto& r : results) {
    passed = passed && r.passed();
    ordered_json s{{"name", r.name},
                   {"passed", r.passed()},
                   {"cases", r.cases},
                   {"violations", r.violations},
                   {"seconds", r.seconds}};
    if (!r.detail.empty()) s["first_violation"] = r.detail;
    suites.push_back(s);
  }
  ordered_json j;
  j["config"] = echo.to_json();
  j["suites"] = suites;
  j["passed"] = passed;
  std::cout << j.dump(2) << "\n";
  return passed ? kExitOk : kExitPropertyFailure;
}

// ---------------------------------------------------------------- search

struct SearchArgs {
  std::uint32_t p = 3;
  std::uint32_t n = 2;
  std::string mode = "exhaustive";
  std::uint64_t trials = 10000;
  std::uint64_t seed = kDefaultSeed;
  std::string set_class = "arbitrary";
  std::string shard = "0/1";
  bool force = false;
  bool json = false;
  bool compare = false;
  unsigned threads = 1;
  std::optional<double> tolerance;
};

int run_search_cmd(const SearchArgs& args) {
  const Tolerance tol = resolve_tolerance(args.tolerance);
  SearchConfig cfg;
  cfg.p = args.p;
  cfg.n = args.n;
  cfg.mode = parse_search_mode(args.mode);
  cfg.trials = args.trials;
  cfg.seed = args.seed;
  cfg.set_class = parse_set_class(args.set_class);
  cfg.shard = parse_shard(args.shard);
  cfg.force = args.force;
  cfg.threads = args.threads;
  cfg.validate();

  ConfigEcho echo{"search"};
  echo.add("p", std::to_string(cfg.p));
  echo.add("n", std::to_string(cfg.n));
  echo.add("mode", std::string(to_string(cfg.mode)));
  echo.add("class", std::string(to_string(cfg.set_class)));
  if (cfg.mode == SearchMode::kRandom) {
    echo.add("trials", std::to_string(cfg.trials));
    echo.add("seed", std::to_string(cfg.seed));
  }
  echo.add("shard", std::to_string(cfg.shard.index) + "/" + std::to_string(cfg.shard.count));
  echo.add("force", bool_word(cfg.force));
  echo.add("threads", std::to_string(cfg.threads));
  echo.add("tolerance", fmt_double(tol.value) + " (" + tol.source + ")");
  if (cfg.force && cfg.mode == SearchMode::kExhaustive) {
    const GroupParams g(cfg.p, cfg.n);
    std::cerr << "frz: forced scan of 2^" << g.size() << " subsets\n";
  }

  const std::vector<FrontierRecord> records = run_search(cfg);
  const FrontierReport report = compare_frontier(records, cfg.p, tol.value);

  if (args.json) {
    ordered_json j;
    j["config"] = echo.to_json();
    ordered_json rs = ordered_json::array();
    for (std::size_t i = 0; i < records.size(); ++i) {
      const auto& r = records[i];
      const auto& c = report.entries[i];
      rs.push_back({{"doubling", to_string(r.doubling)},
                    {"spanning", to_string(r.spanning)},
                    {"witness", points_json(r.witness)},
                    {"class", to_string(r.set_class)},
                    {"curve_status", to_string(c.status)},
                    {"below_threshold", c.below_threshold}});
    }
    j["frontier"] = rs;
    j["exceedances"] = report.exceedances;
    j["exceedances_at_threshold"] = report.exceedances_at_threshold;
    j["threshold_vacuous"] = report.threshold_vacuous;
    std::cout << j.dump(2) << "\n";
  } else {
    echo.print_comments(std::cout);
    std::cout << "doubling_num,doubling_den,spanning_num,spanning_den,witness,class";
    if (args.compare) std::cout << ",curve_status,below_threshold";
    std::cout << "\n";
    for (std::size_t i = 0; i < records.size(); ++i) {
      const auto& r = records[i];
      std::cout << numerator_of(r.doubling) << "," << denominator_of(r.doubling) << "," << numerator_of(r.spanning)
                << "," << denominator_of(r.spanning) << ",\"" << points_string(r.witness) << "\","
                << to_string(r.set_class);
      if (args.compare) {
        std::cout << "," << to_string(report.entries[i].status) << ","
                  << (report.entries[i].below_threshold ? "true" : "false");
      }
      std::cout << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"frz: compressions, structure and doubling/spanning bounds over F_p^n"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "frz 0.1.0");

  AnalyzeArgs analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Size, sumset, span, doubling and spanning of a set");
  add_source(analyze_cmd, analyze.src);
  analyze_cmd->add_flag("--pipeline", analyze.pipeline, "Also run normalize, reduce, structure and bound checks");
  analyze_cmd->add_flag("--json", analyze.json, "JSON output");
  analyze_cmd->add_option("--tolerance", analyze.tolerance, "Log-space comparison tolerance");

  CompressArgs comp;
  auto* compress_cmd = app.add_subcommand("compress", "Apply one compression or reduce to an E-compressed set");
  add_source(compress_cmd, comp.src);
  compress_cmd->add_option("--direction", comp.direction, "Direction vector, e.g. \"(4,1)\" (scaled to pivot 1)");
  compress_cmd->add_flag("--reduce", comp.reduce, "Compress until E-compressed (requires E inside the set)");
  compress_cmd->add_flag("--normalize", comp.normalize, "Map the set onto a full-dimensional one containing E first");
  compress_cmd->add_option("--out", comp.out, "Write the resulting set file here");
  compress_cmd->add_option("--trace", comp.trace, "Write the JSON step trace here");
  compress_cmd->add_flag("--json", comp.json, "JSON output");

  StructureArgs structure;
  auto* structure_cmd = app.add_subcommand("structure", "Coset decomposition and sumset lower bounds");
  add_source(structure_cmd, structure.src);
  structure_cmd->add_flag("--json", structure.json, "JSON output");

  BoundsArgs bounds;
  auto* bounds_cmd = app.add_subcommand("bounds", "CSV table of the bound curves over a K grid");
  bounds_cmd->add_option("--p", bounds.p, "Prime")->capture_default_str();
  bounds_cmd->add_option("--k-min", bounds.k_min, "Smallest K")->capture_default_str();
  bounds_cmd->add_option("--k-max", bounds.k_max, "Largest K")->capture_default_str();
  bounds_cmd->add_option("--k-step", bounds.k_step, "K increment")->capture_default_str();
  bounds_cmd->add_flag("--log", bounds.log, "Print natural logs instead of values");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run a property suite and print a JSON summary");
  verify_cmd->add_option("suite", verify.suite, "cauchy-davenport, compression-lemma, structure-lemma, "
                                                "inequalities, claims, identities or all")
      ->required();
  verify_cmd->add_option("--p", verify.p, "Restrict to one prime");
  verify_cmd->add_option("--n", verify.n, "Restrict to one dimension");
  verify_cmd->add_option("--seed", verify.seed, "Seed for sampled suites")->capture_default_str();
  verify_cmd->add_option("--trials", verify.trials, "Samples per (p, n) for sampled suites")->capture_default_str();
  verify_cmd->add_option("--threads", verify.threads, "Worker threads")->capture_default_str();
  verify_cmd->add_option("--tolerance", verify.tolerance, "Log-space comparison tolerance");

  SearchArgs search;
  auto* search_cmd = app.add_subcommand("search", "Empirical (doubling, spanning) Pareto frontier");
  search_cmd->add_option("--p", search.p, "Prime")->capture_default_str();
  search_cmd->add_option("--n", search.n, "Dimension")->capture_default_str();
  search_cmd->add_option("--mode", search.mode, "exhaustive or random")->capture_default_str();
  search_cmd->add_option("--trials", search.trials, "Samples in random mode")->capture_default_str();
  search_cmd->add_option("--seed", search.seed, "Seed in random mode")->capture_default_str();
  search_cmd->add_option("--class", search.set_class, "arbitrary, contains-E, down-set or E-compressed")
      ->capture_default_str();
  search_cmd->add_option("--shard", search.shard, "Shard i/k of the scan")->capture_default_str();
  search_cmd->add_flag("--force", search.force, "Allow unfiltered scans above the default cap");
  search_cmd->add_flag("--json", search.json, "JSON output");
  search_cmd->add_flag("--compare", search.compare, "Add main-curve comparison columns to the CSV");
  search_cmd->add_option("--threads", search.threads, "Worker threads")->capture_default_str();
  search_cmd->add_option("--tolerance", search.tolerance, "Log-space comparison tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (analyze_cmd->parsed()) return run_analyze(analyze);
    if (compress_cmd->parsed()) return run_compress(comp);
    if (structure_cmd->parsed()) return run_structure(structure);
    if (bounds_cmd->parsed()) return run_bounds(bounds);
    if (verify_cmd->parsed()) return run_verify(verify);
    if (search_cmd->parsed()) return run_search_cmd(search);
  } catch (const CapacityError& e) {
    std::cerr << "frz: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const std::exception& e) {
    std::cerr << "frz: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
