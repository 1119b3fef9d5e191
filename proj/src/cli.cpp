#include "spinbell/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "spinbell/correlations.hpp"
#include "spinbell/errors.hpp"
#include "spinbell/lhv_oracle.hpp"
#include "spinbell/optimizer.hpp"
#include "spinbell/sampler.hpp"
#include "spinbell/scan.hpp"

namespace spinbell::cli {

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

namespace {

using json = nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Command { Correlate, Chsh, Wigner, Optimize, Scan, Sample, LhvCheck };
enum class Format { Table, Json, Csv };

constexpr std::array<std::pair<Command, const char*>, 7> kCommandNames{{
    {Command::Correlate, "correlate"},
    {Command::Chsh, "chsh"},
    {Command::Wigner, "wigner"},
    {Command::Optimize, "optimize"},
    {Command::Scan, "scan"},
    {Command::Sample, "sample"},
    {Command::LhvCheck, "lhv-check"},
}};

const char* command_name(Command c) {
  for (const auto& [cmd, name] : kCommandNames) {
    if (cmd == c) return name;
  }
  return "?";
}

// ---------------------------------------------------------------------------
// run specification

struct RunSpec {
  Command command = Command::Correlate;
  Format format = Format::Table;
  std::optional<EntangledState> state;
  std::map<std::string, Direction> directions;
  std::optional<SignPair> signs;
  std::uint64_t seed = 0;
  std::uint64_t shots = 100000;
  std::string target = "w";
  SearchConfig search;
  ScanSpec scan;
  std::optional<std::array<double, 8>> population;
};

double round15(double x) {
  if (!std::isfinite(x)) return x;
  return std::strtod(format_number(x).c_str(), nullptr);
}

double parse_double(const std::string& text, const std::string& what) {
  const char* begin = text.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0' || !std::isfinite(v)) {
    throw UsageError("invalid number '" + text + "' for " + what);
  }
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

double angle_unit(bool degrees) { return degrees ? kPi / 180.0 : 1.0; }

Direction parse_direction(const std::string& text, bool degrees, const std::string& name) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) {
    throw UsageError("direction --" + name + " must be \"theta,phi\", got '" + text + "'");
  }
  const double u = angle_unit(degrees);
  return {parse_double(parts[0], "--" + name) * u, parse_double(parts[1], "--" + name) * u};
}

Polarization parse_polarization(const std::string& s) {
  if (s == "antiparallel") return Polarization::Antiparallel;
  if (s == "parallel") return Polarization::Parallel;
  throw UsageError("polarization must be 'antiparallel' or 'parallel', got '" + s + "'");
}

EntangledState preset_state(const std::string& name) {
  if (name == "singlet") return EntangledState::singlet();
  if (name == "triplet") return EntangledState::triplet();
  if (name == "bell-parallel") return EntangledState::bell_parallel();
  throw UsageError("unknown state preset '" + name + "' (singlet, triplet, bell-parallel)");
}

SignPair parse_signs(const std::string& s) {
  try {
    return SignPair::parse(s);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

DensityPart parse_part(const std::string& s) {
  if (s == "total") return DensityPart::Total;
  if (s == "local") return DensityPart::Local;
  if (s == "nonlocal") return DensityPart::NonLocal;
  throw UsageError("objective part must be total, local or nonlocal");
}

const char* part_name(DensityPart p) {
  switch (p) {
    case DensityPart::Local: return "local";
    case DensityPart::NonLocal: return "nonlocal";
    default: return "total";
  }
}

std::pair<std::string, std::string> split_binding(const std::string& text, const char* flag) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) {
    throw UsageError(std::string(flag) + " expects axis=value, got '" + text + "'");
  }
  return {text.substr(0, eq), text.substr(eq + 1)};
}

ScanAxis axis_or_usage(const std::string& name) {
  try {
    return parse_scan_axis(name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::array<double, 8> parse_population(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 8) throw UsageError("--pop needs exactly 8 comma-separated weights");
  std::array<double, 8> n{};
  for (int i = 0; i < 8; ++i) n[i] = parse_double(parts[i], "--pop");
  return n;
}

// ---------------------------------------------------------------------------
// JSON <-> spec

json direction_json(const Direction& d) {
  return {{"theta", round15(d.theta())}, {"phi", round15(d.phi())}};
}

json state_json(const EntangledState& s) {
  return {{"xi", round15(s.xi())},
          {"eta", round15(s.eta())},
          {"polarization", to_string(s.polarization())}};
}

json breakdown_json(const CorrelationBreakdown& c) {
  return {{"local", round15(c.local)}, {"nonlocal", round15(c.nonlocal)},
          {"total", round15(c.total)}};
}

json scan_json(const ScanSpec& spec) {
  json axes = json::object();
  for (int i = 0; i < 6; ++i) {
    const auto& b = spec.axes[i];
    const std::string name(kScanAxisNames[i]);
    switch (b.kind) {
      case AxisBinding::Kind::Fixed: axes[name] = {{"fixed", round15(b.value)}}; break;
      case AxisBinding::Kind::Grid: axes[name] = {{"grid", b.points}}; break;
      case AxisBinding::Kind::Tied:
        axes[name] = {{"tie", std::string(kScanAxisNames[static_cast<int>(b.target)])}};
        break;
    }
  }
  return {{"axes", axes}, {"max_rows", spec.max_rows}};
}

json inputs_json(const RunSpec& spec) {
  json in = json::object();
  const Command c = spec.command;
  const bool fixed_state = c != Command::Optimize || spec.search.fix_state;
  if (spec.state && fixed_state) in["state"] = state_json(*spec.state);
  if (!spec.directions.empty()) {
    json dirs = json::object();
    for (const auto& [name, d] : spec.directions) dirs[name] = direction_json(d);
    in["directions"] = dirs;
  }
  if (spec.signs) in["signs"] = spec.signs->str();
  if (c == Command::Sample || c == Command::Optimize) in["seed"] = spec.seed;
  if (c == Command::Sample) in["shots"] = spec.shots;
  if (c == Command::Optimize) {
    in["target"] = spec.target;
    in["search"] = {{"restarts", spec.search.restarts},
                    {"tolerance", spec.search.tolerance},
                    {"max_iterations", spec.search.max_iterations},
                    {"fix_state", spec.search.fix_state},
                    {"part", part_name(spec.search.objective_part)}};
  }
  if (c == Command::Scan) in["scan"] = scan_json(spec.scan);
  if (spec.population) in["population"] = *spec.population;
  return in;
}

void load_inputs(const json& doc, RunSpec& spec) {
  if (!doc.is_object() || !doc.contains("inputs")) {
    throw UsageError("input document has no \"inputs\" object");
  }
  if (doc.contains("schema_version") && doc["schema_version"] != kSchemaVersion) {
    throw UsageError("unsupported schema_version in input document");
  }
  if (doc.contains("command") && doc["command"] != command_name(spec.command)) {
    throw UsageError("input document was produced by '" + doc["command"].get<std::string>() +
                     "', not '" + command_name(spec.command) + "'");
  }
  const json& in = doc["inputs"];
  if (in.contains("state")) {
    const auto& s = in["state"];
    spec.state = EntangledState(s.at("xi").get<double>(), s.at("eta").get<double>(),
                                parse_polarization(s.at("polarization").get<std::string>()));
  }
  if (in.contains("directions")) {
    for (const auto& [name, d] : in["directions"].items()) {
      spec.directions[name] = Direction(d.at("theta").get<double>(), d.at("phi").get<double>());
    }
  }
  if (in.contains("signs")) spec.signs = parse_signs(in["signs"].get<std::string>());
  if (in.contains("seed")) spec.seed = in["seed"].get<std::uint64_t>();
  if (in.contains("shots")) spec.shots = in["shots"].get<std::uint64_t>();
  if (in.contains("target")) spec.target = in["target"].get<std::string>();
  if (in.contains("search")) {
    const auto& s = in["search"];
    spec.search.restarts = s.value("restarts", spec.search.restarts);
    spec.search.tolerance = s.value("tolerance", spec.search.tolerance);
    spec.search.max_iterations = s.value("max_iterations", spec.search.max_iterations);
    spec.search.fix_state = s.value("fix_state", spec.search.fix_state);
    spec.search.objective_part = parse_part(s.value("part", std::string("total")));
  }
  if (in.contains("scan")) {
    const auto& s = in["scan"];
    spec.scan.max_rows = s.value("max_rows", spec.scan.max_rows);
    for (const auto& [name, b] : s.at("axes").items()) {
      auto& slot = spec.scan[axis_or_usage(name)];
      if (b.contains("fixed")) {
        slot = AxisBinding::fixed(b["fixed"].get<double>());
      } else if (b.contains("grid")) {
        slot = AxisBinding::grid(b["grid"].get<int>());
      } else if (b.contains("tie")) {
        slot = AxisBinding::tied(axis_or_usage(b["tie"].get<std::string>()));
      } else {
        throw UsageError("scan axis '" + name + "' has no fixed/grid/tie binding");
      }
    }
  }
  if (in.contains("population")) spec.population = in["population"].get<std::array<double, 8>>();
}

// ---------------------------------------------------------------------------
// commands

const EntangledState& require_state(const RunSpec& spec) {
  if (!spec.state) throw UsageError("a state is required (--state or --xi/--eta/--polarization)");
  return *spec.state;
}

const Direction& require_direction(const RunSpec& spec, const std::string& name) {
  auto it = spec.directions.find(name);
  if (it == spec.directions.end()) throw UsageError("direction --" + name + " is required");
  return it->second;
}

json base_document(const RunSpec& spec) {
  return {{"schema_version", kSchemaVersion},
          {"command", command_name(spec.command)},
          {"inputs", inputs_json(spec)}};
}

void put_breakdown(json& doc, const CorrelationBreakdown& c) {
  doc["local"] = round15(c.local);
  doc["nonlocal"] = round15(c.nonlocal);
  doc["total"] = round15(c.total);
}

json do_correlate(const RunSpec& spec) {
  const auto& state = require_state(spec);
  const auto& a = require_direction(spec, "a");
  const auto& b = require_direction(spec, "b");
  json doc = base_document(spec);
  put_breakdown(doc, spin_correlation(state, a, b));
  json numbers = json::object();
  for (const char* s : {"++", "+-", "-+", "--"}) {
    const auto n = number_correlation(state, SignPair::parse(s), a, b);
    json entry = breakdown_json(n.value);
    entry["canonical"] = n.canonical;
    numbers[s] = entry;
  }
  doc["metadata"] = {{"dot", round15(dot(a, b))}, {"number_correlations", numbers}};
  return doc;
}

json do_chsh(const RunSpec& spec) {
  const auto& state = require_state(spec);
  const auto r = chsh(state, require_direction(spec, "a"), require_direction(spec, "b"),
                      require_direction(spec, "c"), require_direction(spec, "d"));
  json doc = base_document(spec);
  put_breakdown(doc, r.combination);
  doc["metadata"] = {{"value", round15(r.value())},
                     {"local_value", round15(r.local_value())},
                     {"local_bound", 2.0},
                     {"quantum_bound", round15(2.0 * std::sqrt(2.0))}};
  return doc;
}

json do_wigner(RunSpec spec) {
  const auto& state = require_state(spec);
  if (!spec.signs) spec.signs = canonical_signs(state.polarization());
  const auto& a = require_direction(spec, "a");
  const auto& b = require_direction(spec, "b");
  const auto& c = require_direction(spec, "c");
  const auto w = wigner_w(state, *spec.signs, a, b, c);
  json doc = base_document(spec);
  put_breakdown(doc, w.value);
  doc["metadata"] = {{"canonical", w.canonical},
                     {"bound_F", round15(wigner_bound_F(a.theta(), b.theta(), c.theta()))},
                     {"violation", w.value.total > 0.0}};
  return doc;
}

json do_optimize(const RunSpec& spec) {
  if (spec.target != "w" && spec.target != "chsh") {
    throw UsageError("--target must be 'w' or 'chsh'");
  }
  const EntangledState state =
      spec.search.fix_state ? require_state(spec) : spec.state.value_or(EntangledState::singlet());
  const bool is_w = spec.target == "w";
  const auto res = is_w ? maximize_w(state, spec.search) : maximize_chsh(state, spec.search);

  CorrelationBreakdown at_best;
  const auto& d = res.best_angles;
  if (is_w) {
    at_best = wigner_w(res.best_state, canonical_signs(res.best_state.polarization()), d[0], d[1],
                       d[2])
                  .value;
  } else {
    at_best = chsh(res.best_state, d[0], d[1], d[2], d[3]).combination;
  }

  json doc = base_document(spec);
  put_breakdown(doc, at_best);
  json angles = json::array();
  for (const auto& dir : d) angles.push_back(direction_json(dir));
  doc["metadata"] = {{"best_value", round15(res.best_value)},
                     {"best_angles", angles},
                     {"best_state", state_json(res.best_state)},
                     {"restarts_used", res.restarts_used},
                     {"best_restart", res.best_restart},
                     {"converged", res.converged}};
  return doc;
}

json do_sample(RunSpec spec) {
  const auto& state = require_state(spec);
  if (!spec.signs) spec.signs = canonical_signs(state.polarization());
  if (spec.shots == 0) throw ConfigError("--shots must be >= 1");
  const auto& a = require_direction(spec, "a");
  const auto& b = require_direction(spec, "b");
  json doc = base_document(spec);

  auto counts_json = [](const ShotCounts& c) {
    return json{{"counts", c.counts}, {"shots", c.shots}};
  };
  auto estimate_json = [](const Estimate& e) {
    return json{{"value", round15(e.value)},
                {"std_error", round15(e.std_error)},
                {"shots", e.shots}};
  };

  if (spec.directions.count("c")) {
    const auto& c = spec.directions.at("c");
    const auto est = estimate_wigner(state, *spec.signs, a, b, c, spec.shots, spec.seed);
    const auto w = wigner_w(state, *spec.signs, a, b, c);
    put_breakdown(doc, w.value);
    json experiments = json::array();
    for (const auto& e : est.experiments) experiments.push_back(counts_json(e));
    doc["metadata"] = {{"quantity", "wigner"},
                       {"estimate", estimate_json(est.estimate)},
                       {"experiments", experiments},
                       {"canonical", w.canonical}};
  } else {
    const auto counts = sample_outcomes(state, a, b, spec.shots, spec.seed);
    const auto n = number_correlation(state, *spec.signs, a, b);
    const double p = static_cast<double>(counts.counts[spec.signs->outcome_index()]) /
                     static_cast<double>(counts.shots);
    const Estimate e{p, std::sqrt(p * (1.0 - p) / static_cast<double>(counts.shots)),
                     counts.shots};
    put_breakdown(doc, n.value);
    doc["metadata"] = {{"quantity", "number_correlation"},
                       {"estimate", estimate_json(e)},
                       {"experiments", json::array({counts_json(counts)})},
                       {"canonical", n.canonical}};
  }
  return doc;
}

json do_lhv_check(RunSpec spec) {
  Polarization pol = Polarization::Parallel;
  std::optional<Population8> pop;
  if (spec.population) {
    try {
      pop.emplace(*spec.population);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  } else {
    const auto& state = require_state(spec);
    pol = state.polarization();
    pop.emplace(population_from_local_state(state, require_direction(spec, "a"),
                                            require_direction(spec, "b"),
                                            require_direction(spec, "c")));
    spec.population = pop->weights();
  }
  const auto report = verify_wigner(*pop);
  const SignPair signs = canonical_signs(pol);
  auto n = [&](Axis d1, Axis d2) {
    return population_correlation(*pop, signs.first, d1, signs.second, d2, pol);
  };
  const double w = n(Axis::A, Axis::B) - n(Axis::A, Axis::C) - n(Axis::C, Axis::B);

  json doc = base_document(spec);
  put_breakdown(doc, {w, 0.0, w});
  json weights = json::array();
  for (double x : pop->weights()) weights.push_back(round15(x));
  doc["metadata"] = {{"holds_plus_minus", report.holds_plus_minus},
                     {"holds_minus_plus", report.holds_minus_plus},
                     {"slack_plus_minus", round15(report.slack_plus_minus)},
                     {"slack_minus_plus", round15(report.slack_minus_plus)},
                     {"population", weights},
                     {"polarization", to_string(pol)}};
  return doc;
}

struct ScanOutput {
  json doc;
  std::vector<ScanRow> rows;
};

ScanOutput do_scan(RunSpec spec) {
  const auto& state = require_state(spec);
  if (!spec.signs) spec.signs = canonical_signs(state.polarization());
  ScanOutput out;
  out.rows = scan_w(state, *spec.signs, spec.scan);
  out.doc = base_document(spec);
  std::size_t best = 0;
  for (std::size_t i = 1; i < out.rows.size(); ++i) {
    if (out.rows[i].w.total > out.rows[best].w.total) best = i;
  }
  put_breakdown(out.doc, out.rows[best].w);
  out.doc["metadata"] = {{"row_count", out.rows.size()}, {"argmax_row", best}};
  return out;
}

// ---------------------------------------------------------------------------
// rendering

void flatten(const json& j, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
    }
  } else if (j.is_number_float()) {
    out.emplace_back(prefix, format_number(j.get<double>()));
  } else if (j.is_string()) {
    out.emplace_back(prefix, j.get<std::string>());
  } else {
    out.emplace_back(prefix, j.dump());
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

std::string render_document(const json& doc, Format format) {
  std::ostringstream os;
  if (format == Format::Json) {
    os << doc.dump(2) << '\n';
    return os.str();
  }
  std::vector<std::pair<std::string, std::string>> flat;
  flatten(doc, "", flat);
  if (format == Format::Csv) {
    for (std::size_t i = 0; i < flat.size(); ++i) os << (i ? "," : "") << csv_field(flat[i].first);
    os << '\n';
    for (std::size_t i = 0; i < flat.size(); ++i) {
      os << (i ? "," : "") << csv_field(flat[i].second);
    }
    os << '\n';
    return os.str();
  }
  std::size_t width = 0;
  for (const auto& [k, v] : flat) width = std::max(width, k.size());
  for (const auto& [k, v] : flat) os << std::left << std::setw(static_cast<int>(width + 2)) << k << v << '\n';
  return os.str();
}

std::string render_scan(const ScanOutput& scan, Format format) {
  std::ostringstream os;
  if (format == Format::Json) {
    json doc = scan.doc;
    json rows = json::array();
    for (const auto& r : scan.rows) {
      json row = json::object();
      for (int i = 0; i < 6; ++i) row[std::string(kScanAxisNames[i])] = round15(r.angles[i]);
      row["w_local"] = round15(r.w.local);
      row["w_nonlocal"] = round15(r.w.nonlocal);
      row["w_total"] = round15(r.w.total);
      rows.push_back(row);
    }
    doc["rows"] = rows;
    os << doc.dump(2) << '\n';
    return os.str();
  }
  const char sep = format == Format::Csv ? ',' : ' ';
  auto cell = [&](const std::string& s) {
    if (format == Format::Csv) return s;
    std::ostringstream c;
    c << std::left << std::setw(22) << s;
    return c.str();
  };
  for (int i = 0; i < 6; ++i) os << cell(std::string(kScanAxisNames[i])) << sep;
  os << cell("w_local") << sep << cell("w_nonlocal") << sep << cell("w_total") << '\n';
  for (const auto& r : scan.rows) {
    for (int i = 0; i < 6; ++i) os << cell(format_number(r.angles[i])) << sep;
    os << cell(format_number(r.w.local)) << sep << cell(format_number(r.w.nonlocal)) << sep
       << cell(format_number(r.w.total)) << '\n';
  }
  return os.str();
}

Format parse_format(const std::string& s) {
  if (s == "table") return Format::Table;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  throw UsageError("--format must be table, json or csv");
}

// ---------------------------------------------------------------------------
// argument parsing

struct RawOptions {
  std::string state, polarization = "antiparallel", format, signs, input, target = "w", part = "total";
  std::string pop;
  double xi = 0.0, eta = 0.0;
  std::map<std::string, std::string> dirs{{"a", ""}, {"b", ""}, {"c", ""}, {"d", ""}};
  bool degrees = false;
  bool free_state = false;
  std::uint64_t seed = 0, shots = 100000;
  int restarts = 32, max_iter = 2000;
  double tolerance = 1e-9;
  std::size_t max_rows = kDefaultScanCap;
  std::vector<std::string> fix, grid, tie;
};

struct Subcommand {
  Command command;
  CLI::App* app;
};

void add_state_options(CLI::App* sub, RawOptions& o) {
  auto* preset = sub->add_option("--state", o.state, "Named state: singlet, triplet, bell-parallel");
  auto* xi = sub->add_option("--xi", o.xi, "State parameter xi (radians)");
  sub->add_option("--eta", o.eta, "State parameter eta (radians)")->needs(xi);
  sub->add_option("--polarization", o.polarization, "antiparallel or parallel")->needs(xi);
  preset->excludes(xi);
}

void add_direction_options(CLI::App* sub, RawOptions& o, const std::string& names) {
  for (char n : names) {
    const std::string name(1, n);
    sub->add_option("--" + name, o.dirs[name], "Direction " + name + " as theta,phi");
  }
}

bool given(const CLI::App* sub, const std::string& opt) {
  return sub->get_option_no_throw(opt) != nullptr && sub->count(opt) > 0;
}

RunSpec build_spec(Command command, const CLI::App* sub, const RawOptions& o) {
  RunSpec spec;
  spec.command = command;
  if (const char* env = std::getenv(kSeedEnv); env && *env) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0') throw UsageError(std::string(kSeedEnv) + " must be an unsigned integer");
    spec.seed = v;
  }
  spec.format = command == Command::Scan ? Format::Csv : Format::Table;

  if (given(sub, "--input")) {
    std::ifstream in(o.input);
    if (!in) throw UsageError("cannot open input document '" + o.input + "'");
    json doc;
    try {
      doc = json::parse(in);
    } catch (const json::exception& e) {
      throw UsageError(std::string("input document: ") + e.what());
    }
    try {
      load_inputs(doc, spec);
    } catch (const json::exception& e) {
      throw UsageError(std::string("input document: ") + e.what());
    }
  }

  const double unit = angle_unit(o.degrees);
  if (given(sub, "--format")) spec.format = parse_format(o.format);
  if (given(sub, "--state")) spec.state = preset_state(o.state);
  if (given(sub, "--xi")) {
    spec.state = EntangledState(o.xi * unit, o.eta * unit, parse_polarization(o.polarization));
  }
  for (const auto& [name, text] : o.dirs) {
    if (given(sub, "--" + name)) spec.directions[name] = parse_direction(text, o.degrees, name);
  }
  if (given(sub, "--signs")) spec.signs = parse_signs(o.signs);
  if (given(sub, "--seed")) spec.seed = o.seed;
  if (given(sub, "--shots")) spec.shots = o.shots;
  if (given(sub, "--target")) spec.target = o.target;
  if (given(sub, "--restarts")) spec.search.restarts = o.restarts;
  if (given(sub, "--tolerance")) spec.search.tolerance = o.tolerance;
  if (given(sub, "--max-iter")) spec.search.max_iterations = o.max_iter;
  if (given(sub, "--free-state")) spec.search.fix_state = !o.free_state;
  if (given(sub, "--part")) spec.search.objective_part = parse_part(o.part);
  spec.search.seed = spec.seed;
  if (given(sub, "--max-rows")) spec.scan.max_rows = o.max_rows;
  if (given(sub, "--pop")) spec.population = parse_population(o.pop);

  if (command == Command::Scan) {
    std::array<bool, 6> bound{};
    if (given(sub, "--input")) bound.fill(true);
    for (const auto& f : o.fix) {
      const auto [axis, value] = split_binding(f, "--fix");
      const ScanAxis ax = axis_or_usage(axis);
      spec.scan[ax] = AxisBinding::fixed(parse_double(value, "--fix") * unit);
      bound[static_cast<int>(ax)] = true;
    }
    for (const auto& g : o.grid) {
      const auto [axis, value] = split_binding(g, "--grid");
      const ScanAxis ax = axis_or_usage(axis);
      const double pts = parse_double(value, "--grid");
      if (pts != std::floor(pts) || pts < 0 || pts > 1e9) {
        throw UsageError("--grid point count must be a non-negative integer");
      }
      spec.scan[ax] = AxisBinding::grid(static_cast<int>(pts));
      bound[static_cast<int>(ax)] = true;
    }
    for (const auto& t : o.tie) {
      const auto [axis, other] = split_binding(t, "--tie");
      const ScanAxis ax = axis_or_usage(axis);
      spec.scan[ax] = AxisBinding::tied(axis_or_usage(other));
      bound[static_cast<int>(ax)] = true;
    }
    for (int i = 0; i < 6; ++i) {
      if (!bound[i]) {
        throw UsageError("scan axis " + std::string(kScanAxisNames[i]) +
                         " needs --fix, --grid or --tie");
      }
    }
  }
  return spec;
}

std::string execute(const RunSpec& spec) {
  switch (spec.command) {
    case Command::Correlate: return render_document(do_correlate(spec), spec.format);
    case Command::Chsh: return render_document(do_chsh(spec), spec.format);
    case Command::Wigner: return render_document(do_wigner(spec), spec.format);
    case Command::Optimize: return render_document(do_optimize(spec), spec.format);
    case Command::Sample: return render_document(do_sample(spec), spec.format);
    case Command::LhvCheck: return render_document(do_lhv_check(spec), spec.format);
    case Command::Scan: return render_scan(do_scan(spec), spec.format);
  }
  throw std::logic_error("unhandled command");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bell/CHSH and Wigner correlations of two-spin entangled states", "spinbell"};
  app.require_subcommand(1);
  RawOptions o;

  std::vector<Subcommand> subs;
  auto add = [&](Command c, const char* help) {
    CLI::App* sub = app.add_subcommand(command_name(c), help);
    sub->add_option("--format", o.format, "table, json or csv");
    sub->add_option("--input", o.input, "Replay the inputs of a JSON document from a previous run");
    sub->add_flag("--degrees", o.degrees, "Angles on the command line are in degrees");
    subs.push_back({c, sub});
    return sub;
  };

  auto* correlate = add(Command::Correlate, "Spin correlation P(a,b) with local/non-local split");
  add_state_options(correlate, o);
  add_direction_options(correlate, o, "ab");

  auto* chsh_cmd = add(Command::Chsh, "CHSH combination P(a,b)+P(a,c)+P(d,b)-P(d,c)");
  add_state_options(chsh_cmd, o);
  add_direction_options(chsh_cmd, o, "abcd");

  auto* wigner = add(Command::Wigner, "Wigner correlator W for directions a, b, c");
  add_state_options(wigner, o);
  add_direction_options(wigner, o, "abc");
  wigner->add_option("--signs", o.signs, "Detected sign pair: ++, +-, -+, --");

  auto* optimize = add(Command::Optimize, "Maximize W or the CHSH combination");
  add_state_options(optimize, o);
  optimize->add_option("--target", o.target, "w or chsh");
  optimize->add_flag("--free-state", o.free_state, "Search over xi, eta and both polarizations");
  optimize->add_option("--restarts", o.restarts, "Number of simplex restarts");
  optimize->add_option("--tolerance", o.tolerance, "Simplex diameter tolerance");
  optimize->add_option("--max-iter", o.max_iter, "Iterations per restart");
  optimize->add_option("--seed", o.seed, "Seed of the start-point sequence");
  optimize->add_option("--part", o.part, "Objective part: total, local or nonlocal");

  auto* scan = add(Command::Scan, "Evaluate W on an angle grid");
  add_state_options(scan, o);
  scan->add_option("--signs", o.signs, "Detected sign pair");
  scan->add_option("--fix", o.fix, "axis=value (radians)");
  scan->add_option("--grid", o.grid, "axis=points");
  scan->add_option("--tie", o.tie, "axis=other_axis");
  scan->add_option("--max-rows", o.max_rows, "Row cap");

  auto* sample = add(Command::Sample, "Finite-shot estimate of N(a,b) or, with --c, of W");
  add_state_options(sample, o);
  add_direction_options(sample, o, "abc");
  sample->add_option("--signs", o.signs, "Detected sign pair");
  sample->add_option("--shots", o.shots, "Shots per experiment");
  sample->add_option("--seed", o.seed, "Generator seed");

  auto* lhv = add(Command::LhvCheck, "Check the Wigner inequality on an eight-population model");
  add_state_options(lhv, o);
  add_direction_options(lhv, o, "abc");
  lhv->add_option("--pop", o.pop, "Eight comma-separated non-negative weights n1..n8");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "spinbell: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    for (const auto& s : subs) {
      if (s.app->parsed()) {
        const RunSpec spec = build_spec(s.command, s.app, o);
        const std::string text = execute(spec);
        out << text;
        return kExitOk;
      }
    }
    err << "spinbell: no command given\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "spinbell: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "spinbell: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    err << "spinbell: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "spinbell: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace spinbell::cli
