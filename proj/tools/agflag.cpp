// Command-line frontend: curve configs in, deterministic JSON/CSV tables and
// verdicts out. Exit codes: 0 ok, 2 config, 3 precondition, 4 internal
// disagreement, 5 golden mismatch.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "agflag/config.hpp"
#include "agflag/isodual.hpp"

namespace {

using nlohmann::json;
using namespace agflag;
using semigroups::BasePlace;
using semigroups::FlagParams;
using semigroups::Method;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitDisagreement = 4;
constexpr int kExitGoldenMismatch = 5;

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::ConfigError:
    case Errc::GcdViolation:
    case Errc::DegreeRange:
    case Errc::NotSeparable:
    case Errc::KummerConditionFailed:
      return kExitConfig;
    case Errc::InternalDisagreement:
    case Errc::CardinalityMismatch:
      return kExitDisagreement;
    default:
      return kExitPrecondition;
  }
}

struct OutputSink {
  std::string path;  // empty = stdout

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path);
    if (!out) fail(Errc::ConfigError, "cannot open output path: " + path);
    out << text;
  }
};

std::vector<std::int64_t> parse_beta_csv(const std::string& csv) {
  std::vector<std::int64_t> beta;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      beta.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      fail(Errc::ConfigError, "bad beta entry: '" + item + "'");
    }
  }
  if (beta.empty()) fail(Errc::ConfigError, "empty beta list");
  return beta;
}

BasePlace parse_base(const std::string& s) {
  if (s == "infinity") return BasePlace::Infinity;
  if (s == "q1") return BasePlace::FirstRamified;
  fail(Errc::ConfigError, "p-place must be 'infinity' or 'q1'");
}

Method parse_method(const std::string& s) {
  if (s == "closed") return Method::Closed;
  if (s == "generic") return Method::Generic;
  if (s == "code-oracle") return Method::CodeOracle;
  fail(Errc::ConfigError, "unknown method: " + s);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------- curve-info

int cmd_curve_info(const std::string& curve_path, const std::string& format, const OutputSink& sink) {
  const kummer::KummerCurve curve(config::load_curve_config(curve_path));
  json n_by_t = json::object();
  for (int t = 1; t <= curve.r(); ++t) n_by_t[std::to_string(t)] = curve.n_for(t);
  json out{{"q", curve.field().q()},
           {"p", curve.field().p()},
           {"k", curve.field().k()},
           {"m", curve.m()},
           {"r", curve.r()},
           {"genus", curve.genus()},
           {"r_tilde", curve.r_tilde()},
           {"split_lines", curve.split_lines()},
           {"split_line_count", curve.split_lines().size()},
           {"rational_places", curve.rational_place_count()},
           {"n_by_t", n_by_t}};
  if (format == "csv") {
    std::ostringstream csv;
    csv << "key,value\n";
    for (const auto& [key, value] : out.items()) csv << key << "," << value.dump() << "\n";
    sink.write(csv.str());
  } else {
    sink.write(dump(out));
  }
  return kExitOk;
}

// --------------------------------------------------------------------- hstar

json jump_set_json(const semigroups::JumpSet& set) {
  return json{{"a0", set.a0}, {"set", set.values}, {"n", set.n}};
}

int cmd_hstar(const std::string& curve_path, int t, const std::string& p_place,
              const std::string& beta_csv, const std::string& method, const std::string& format,
              const OutputSink& sink) {
  const kummer::KummerCurve curve(config::load_curve_config(curve_path));
  const FlagParams params{t, parse_base(p_place), parse_beta_csv(beta_csv)};

  if (method == "all") {
    const auto closed = semigroups::code_jump_set(curve, params, Method::Closed);
    const auto generic = semigroups::code_jump_set(curve, params, Method::Generic);
    const auto oracle = semigroups::code_jump_set(curve, params, Method::CodeOracle);
    const bool agree = closed == generic && generic == oracle;
    json out = jump_set_json(closed);
    out["methods"] = {{"closed", closed.values}, {"generic", generic.values}, {"code-oracle", oracle.values}};
    out["agree"] = agree;
    if (format == "csv") {
      std::ostringstream csv;
      csv << "method,member\n";
      for (const auto& [name, set] :
           {std::pair<std::string, const semigroups::JumpSet*>{"closed", &closed},
            {"generic", &generic},
            {"code-oracle", &oracle}})
        for (std::int64_t v : set->values) csv << name << "," << v << "\n";
      sink.write(csv.str());
    } else {
      sink.write(dump(out));
    }
    if (!agree) {
      std::cerr << "method disagreement detected\n";
      return kExitDisagreement;
    }
    return kExitOk;
  }

  const auto set = semigroups::code_jump_set(curve, params, parse_method(method));
  if (format == "csv") {
    std::ostringstream csv;
    csv << "member\n";
    for (std::int64_t v : set.values) csv << v << "\n";
    sink.write(csv.str());
  } else {
    sink.write(dump(jump_set_json(set)));
  }
  return kExitOk;
}

// ---------------------------------------------------------------- flag-check

int cmd_flag_check(const std::string& curve_path, int t, const std::string& p_place,
                   const std::string& beta_csv, const std::string& format, const OutputSink& sink) {
  const kummer::KummerCurve curve(config::load_curve_config(curve_path));
  const FlagParams params{t, parse_base(p_place), parse_beta_csv(beta_csv)};
  const isodual::FlagReport report = isodual::analyze_flag(curve, params);

  json out{{"verdicts",
            {{"canonical_route", isodual::to_string(report.canonical_route)},
             {"closed_form_route", isodual::to_string(report.closed_form_route)},
             {"oracle_route", isodual::to_string(report.oracle_route)}}},
           {"jump_set", report.jumps.values},
           {"a0", report.jumps.a0},
           {"x", report.x.has_value() ? json(*report.x) : json(nullptr)},
           {"symmetry_ok", report.symmetry_ok},
           {"routes_agree", report.routes_agree}};
  if (format == "csv") {
    std::ostringstream csv;
    csv << "key,value\n";
    for (const auto& [key, value] : out.items()) csv << key << "," << value.dump() << "\n";
    sink.write(csv.str());
  } else {
    sink.write(dump(out));
  }
  return kExitOk;  // the verdict is data, not an error
}

// --------------------------------------------------------------- code-matrix

int cmd_code_matrix(const std::string& curve_path, int t, const std::string& p_place,
                    const std::string& beta_csv, std::int64_t a, const OutputSink& sink) {
  const kummer::KummerCurve curve(config::load_curve_config(curve_path));
  const FlagParams params{t, parse_base(p_place), parse_beta_csv(beta_csv)};
  const auto code = codes::build_code(curve, kummer::standard_D(curve, t),
                                      semigroups::flag_divisor(curve, params, a));
  json rows = json::array();
  for (std::size_t i = 0; i < static_cast<std::size_t>(code.k); ++i) rows.push_back(code.generator.row(i));
  sink.write(dump(json{{"n", code.n},
                       {"k", code.k},
                       {"designed_distance", codes::designed_distance(code)},
                       {"rows", rows}}));
  return kExitOk;
}

// --------------------------------------------------------- reproduce-example

struct GoldenCase {
  int t;
  std::vector<std::int64_t> beta;
  std::int64_t a0;
  std::vector<std::int64_t> head;
  std::int64_t mid_lo, mid_hi;
  std::vector<std::int64_t> tail;

  std::vector<std::int64_t> full_set() const {
    std::vector<std::int64_t> out = head;
    for (std::int64_t a = mid_lo; a <= mid_hi; ++a) out.push_back(a);
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
  }
};

std::vector<GoldenCase> builtin_golden() {
  return {
      {4, {1, 1, 1, 1}, -5, {-4, 0, 1, 4, 5, 6}, 8, 55, {57, 58, 59, 62, 63, 67}},
      {4, {2, 2, -1, -1}, 1, {2, 4, 6, 7, 8, 9}, 10, 57, {58, 59, 60, 61, 63, 65}},
      {3, {2, 2, 2}, -4, {-3, 0, 1, 2, 4, 5}, 6, 54, {55, 56, 58, 59, 60, 63}},
      {3, {-3, -3, 7}, 1, {2, 5, 6, 7, 9, 10}, 11, 59, {60, 61, 63, 64, 65, 68}},
      {3, {-3, 7, 7}, -9, {-8, -5, -4, -3, -1, 0}, 1, 49, {50, 51, 53, 54, 55, 58}},
  };
}

struct GoldenEntry {
  int t;
  std::vector<std::int64_t> beta;
  std::int64_t a0;
  std::vector<std::int64_t> set;
};

std::vector<GoldenEntry> load_golden(const std::string& path) {
  if (path.empty()) {
    std::vector<GoldenEntry> out;
    for (const auto& g : builtin_golden()) out.push_back({g.t, g.beta, g.a0, g.full_set()});
    return out;
  }
  std::ifstream in(path);
  if (!in) fail(Errc::ConfigError, "cannot open golden file: " + path);
  json j;
  try {
    in >> j;
    std::vector<GoldenEntry> out;
    for (const auto& entry : j) {
      out.push_back({entry.at("t").get<int>(), entry.at("beta").get<std::vector<std::int64_t>>(),
                     entry.at("a0").get<std::int64_t>(),
                     entry.at("set").get<std::vector<std::int64_t>>()});
    }
    return out;
  } catch (const json::exception& e) {
    fail(Errc::ConfigError, std::string("malformed golden file: ") + e.what());
  }
}

std::string render_set(const std::vector<std::int64_t>& values) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i];
  out << "}";
  return out.str();
}

int cmd_reproduce_example(const std::string& method, const std::string& golden_path,
                          const OutputSink& sink) {
  const kummer::KummerCurve curve(config::hermitian16_config());
  const auto golden = load_golden(golden_path);
  const Method m = parse_method(method);

  std::ostringstream report;
  int matched = 0;
  std::ostringstream diff;
  for (const auto& expect : golden) {
    const FlagParams params{expect.t, BasePlace::Infinity, expect.beta};
    const auto got = semigroups::code_jump_set(curve, params, m);
    const bool ok = got.values == expect.set && got.a0 == expect.a0;
    report << "case t=" << expect.t << " beta=" << render_set(expect.beta) << ": "
           << (ok ? "match" : "MISMATCH") << "\n";
    if (ok) {
      ++matched;
    } else {
      diff << "--- expected t=" << expect.t << " beta=" << render_set(expect.beta) << "\n"
           << "+++ computed\n"
           << "- a0=" << expect.a0 << " set=" << render_set(expect.set) << "\n"
           << "+ a0=" << got.a0 << " set=" << render_set(got.values) << "\n";
    }
  }
  report << matched << "/" << golden.size() << " match\n";
  if (matched != static_cast<int>(golden.size())) report << diff.str();
  sink.write(report.str());
  return matched == static_cast<int>(golden.size()) ? kExitOk : kExitGoldenMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"flags of many-point evaluation codes over Kummer curves"};
  app.require_subcommand(1);

  std::string curve_path, p_place = "infinity", beta_csv, method = "closed", format = "json";
  std::string out_path, golden_path;
  int t = 1;
  std::int64_t a_value = 0;

  auto* info = app.add_subcommand("curve-info", "curve invariants and place counts");
  info->add_option("--curve", curve_path)->required();
  info->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  info->add_option("--out", out_path);

  auto* hstar = app.add_subcommand("hstar", "code jump set for a beta vector");
  hstar->add_option("--curve", curve_path)->required();
  hstar->add_option("--t", t)->required();
  hstar->add_option("--p-place", p_place)->check(CLI::IsMember({"infinity", "q1"}));
  hstar->add_option("--beta", beta_csv)->required();
  hstar->add_option("--method", method)->check(CLI::IsMember({"closed", "generic", "code-oracle", "all"}));
  hstar->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  hstar->add_option("--out", out_path);

  auto* flag = app.add_subcommand("flag-check", "isometry-dual verdicts for a flag");
  flag->add_option("--curve", curve_path)->required();
  flag->add_option("--t", t)->required();
  flag->add_option("--p-place", p_place)->check(CLI::IsMember({"infinity", "q1"}));
  flag->add_option("--beta", beta_csv)->required();
  flag->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  flag->add_option("--out", out_path);

  auto* matrix = app.add_subcommand("code-matrix", "generator matrix of one code in the flag");
  matrix->add_option("--curve", curve_path)->required();
  matrix->add_option("--t", t)->required();
  matrix->add_option("--p-place", p_place)->check(CLI::IsMember({"infinity", "q1"}));
  matrix->add_option("--beta", beta_csv)->required();
  matrix->add_option("--a", a_value)->required();
  matrix->add_option("--out", out_path);

  auto* repro = app.add_subcommand("reproduce-example", "recompute the five built-in F_16 jump sets");
  repro->add_option("--method", method)->check(CLI::IsMember({"closed", "generic", "code-oracle"}));
  repro->add_option("--golden", golden_path, "override the built-in golden sets (JSON)");
  repro->add_option("--out", out_path);

  CLI11_PARSE(app, argc, argv);

  try {
    const OutputSink sink{out_path};
    if (info->parsed()) return cmd_curve_info(curve_path, format, sink);
    if (hstar->parsed()) return cmd_hstar(curve_path, t, p_place, beta_csv, method, format, sink);
    if (flag->parsed()) return cmd_flag_check(curve_path, t, p_place, beta_csv, format, sink);
    if (matrix->parsed()) return cmd_code_matrix(curve_path, t, p_place, beta_csv, a_value, sink);
    if (repro->parsed()) return cmd_reproduce_example(method, golden_path, sink);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitOk;
}
