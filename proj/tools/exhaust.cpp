#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "exh/analysis.hpp"
#include "exh/errors.hpp"

namespace {

using namespace exh;

struct Flags {
  double tol = kTol;
  double oracle_tol = 1e-3;
  int samples = 720;
  std::uint64_t seed = 0;
  std::size_t max_combinations = 1'000'000;
  std::string conditions;
  std::string svg;
  std::string format = "json";
  bool timing = false;
  bool serial = false;
};

AnalyzeOptions to_options(const Flags& fl) {
  if (fl.samples < 1) throw Error("--samples must be at least 1");
  if (!(fl.tol > 0.0)) throw Error("--tol must be positive");
  AnalyzeOptions o;
  o.tol = fl.tol;
  o.samples = fl.samples;
  o.seed = fl.seed;
  o.max_combinations = fl.max_combinations;
  o.parallel = !fl.serial;
  if (!fl.conditions.empty()) o.conditions = parse_condition_list(fl.conditions);
  return o;
}

ReportFormat to_format(const std::string& s) { return s == "text" ? ReportFormat::Text : ReportFormat::Json; }

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << content;
}

int cmd_analyze(const std::string& path, const Flags& fl) {
  const auto start = std::chrono::steady_clock::now();
  const AnalyzeOptions opts = to_options(fl);
  ProblemSpec spec = problem_from_json(read_json_file(path));
  AnalysisReport report = analyze_problem(spec, opts);
  if (fl.timing) {
    ReportBody body = report.body();
    body.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report = AnalysisReport(std::move(body));
  }
  std::cout << render_report(report, to_format(fl.format));
  if (!fl.svg.empty()) write_file(fl.svg, render_svg(figure_items(report)));
  return exit_code_for(report.body().verdicts);
}

int cmd_check(const std::string& f_path, const std::string& u_path, const Flags& fl) {
  if (fl.conditions.empty()) throw Error("--conditions is required");
  const AnalyzeOptions opts = to_options(fl);
  const Exhauster ef = exhauster_from_json(read_json_file(f_path));
  std::optional<Exhauster> eu;
  if (!u_path.empty()) eu = exhauster_from_json(read_json_file(u_path));

  std::vector<std::pair<ConditionId, Verdict>> verdicts;
  for (ConditionId id : *opts.conditions) {
    verdicts.emplace_back(id, run_condition(id, ef, eu ? &*eu : nullptr, opts));
  }

  if (fl.format == "text") {
    for (const auto& [id, v] : verdicts) {
      std::cout << to_string(id) << ": " << to_string(v.status) << " [" << to_string(v.method) << "]\n";
      if (v.witness) {
        std::cout << "    witness:";
        for (double x : *v.witness) std::cout << ' ' << x;
        std::cout << "\n";
      }
      std::cout << "    certificate: " << v.certificate << "\n";
      std::cout << "    reading: " << reading_of(id) << "\n";
    }
  } else {
    json out = json::object();
    out["f"] = to_json(ef);
    out["u"] = eu ? to_json(*eu) : json(nullptr);
    json conds = json::object();
    for (const auto& [id, v] : verdicts) {
      json j = to_json(v, id);
      j["reading"] = reading_of(id);
      conds[std::string(to_string(id))] = j;
    }
    out["conditions"] = conds;
    std::cout << out.dump(2) << "\n";
  }
  return exit_code_for(verdicts);
}

struct DeviationRow {
  std::string name;
  double upper = 0.0;
  double lower = 0.0;
};

DeviationRow deviation_row(const std::string& name, const Expr& e, const Vector& x,
                           const std::vector<Vector>& dirs, const AnalyzeOptions& opts) {
  const MinMaxTree t = directional_derivative_tree(e, x);
  const ExhausterPair ep = derive_exhausters(t, opts);
  DeviationRow row{name};
  for (const auto& g : dirs) {
    const double fd = fd_directional_derivative(e, x, g);
    row.upper = std::max(row.upper, std::abs(fd - eval_exhauster(ep.upper, g)));
    row.lower = std::max(row.lower, std::abs(fd - eval_exhauster(ep.lower, g)));
  }
  return row;
}

int cmd_oracle(const std::string& path, const Flags& fl) {
  const AnalyzeOptions opts = to_options(fl);
  ProblemSpec spec = problem_from_json(read_json_file(path));
  const auto dirs = sample_directions(spec.dim, opts.samples, opts.seed);
  std::vector<DeviationRow> rows{deviation_row("f", spec.objective, spec.point, dirs, opts)};
  if (spec.constraint) rows.push_back(deviation_row("u", *spec.constraint, spec.point, dirs, opts));

  double worst = 0.0;
  for (const auto& r : rows) worst = std::max({worst, r.upper, r.lower});
  const bool ok = worst <= fl.oracle_tol;

  if (fl.format == "text") {
    std::cout << "function  directions  max|fd-upper|  max|fd-lower|\n";
    for (const auto& r : rows) {
      std::cout << std::left << std::setw(10) << r.name << std::setw(12) << dirs.size()
                << std::scientific << std::setprecision(3) << std::setw(15) << r.upper << r.lower
                << std::defaultfloat << "\n";
    }
    std::cout << "max deviation " << std::scientific << worst << (ok ? " within " : " exceeds ")
              << fl.oracle_tol << "\n";
  } else {
    json out = json::object();
    json fns = json::array();
    for (const auto& r : rows) {
      fns.push_back({{"function", r.name}, {"upper", r.upper}, {"lower", r.lower}});
    }
    out["directions"] = dirs.size();
    out["functions"] = fns;
    out["max_deviation"] = worst;
    out["oracle_tol"] = fl.oracle_tol;
    out["within_tolerance"] = ok;
    std::cout << out.dump(2) << "\n";
  }
  return ok ? 0 : 1;
}

void add_common(CLI::App* sub, Flags& fl) {
  sub->add_option("--tol", fl.tol, "numerical tolerance")->capture_default_str();
  sub->add_option("--samples", fl.samples, "sampled directions")->capture_default_str();
  sub->add_option("--seed", fl.seed, "seed for all randomized steps")->capture_default_str();
  sub->add_option("--max-combinations", fl.max_combinations, "cap on enumerated systems")
      ->capture_default_str();
  sub->add_option("--format", fl.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  sub->add_flag("--serial", fl.serial, "disable OpenMP kernels");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exhauster-based optimality condition checker"};
  app.require_subcommand(1);
  Flags fl;
  std::string problem, f_path, u_path;

  auto* analyze = app.add_subcommand("analyze", "analyze a problem file at its point");
  analyze->add_option("problem", problem, "problem JSON")->required();
  add_common(analyze, fl);
  analyze->add_option("--conditions", fl.conditions, "comma list of condition ids");
  analyze->add_option("--svg", fl.svg, "write a figure to this path");
  analyze->add_flag("--timing", fl.timing, "include elapsed_ms in the report");

  auto* check = app.add_subcommand("check", "check conditions on given exhauster files");
  check->add_option("--f", f_path, "exhauster JSON of the objective")->required();
  check->add_option("--u", u_path, "exhauster JSON of the constraint");
  check->add_option("--conditions", fl.conditions, "comma list of condition ids")->required();
  add_common(check, fl);

  auto* oracle = app.add_subcommand("oracle", "compare exhausters with finite differences");
  oracle->add_option("problem", problem, "problem JSON")->required();
  oracle->add_option("--oracle-tol", fl.oracle_tol, "allowed max deviation")->capture_default_str();
  add_common(oracle, fl);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*analyze) return cmd_analyze(problem, fl);
    if (*check) return cmd_check(f_path, u_path, fl);
    return cmd_oracle(problem, fl);
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
