#include "exh/analysis.hpp"

#include <algorithm>
#include <sstream>

#include "exh/errors.hpp"

namespace exh {

std::vector<ConditionId> default_conditions(ProblemSense sense, bool constrained) {
  std::vector<ConditionId> out;
  for (ConditionId id : kAllConditions) {
    if (is_constrained(id) != constrained) continue;
    if (sense == ProblemSense::Min && sense_of(id) != OptSense::Min) continue;
    if (sense == ProblemSense::Max && sense_of(id) != OptSense::Max) continue;
    out.push_back(id);
  }
  return out;
}

std::vector<ConditionId> parse_condition_list(const std::string& comma_list) {
  std::vector<ConditionId> out;
  std::stringstream ss(comma_list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) continue;
    ConditionId id = condition_from_string(item);
    if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
  }
  if (out.empty()) throw ParseError("empty condition list");
  return out;
}

ExhausterPair derive_exhausters(const MinMaxTree& t, const AnalyzeOptions& options) {
  const int samples = default_reduction_samples(t.dim());
  ReductionOptions ro{options.tol, options.max_combinations};
  return {reduce_exhauster(exhauster_from_tree(t, ExhausterKind::Upper), samples, options.seed, ro),
          reduce_exhauster(exhauster_from_tree(t, ExhausterKind::Lower), samples, options.seed, ro)};
}

Verdict run_condition(ConditionId id, const Exhauster& ef, const Exhauster* eu,
                      const AnalyzeOptions& options) {
  CheckOptions co;
  co.tol = options.tol;
  co.max_combinations = options.max_combinations;
  co.parallel = options.parallel;
  Verdict v = check_condition(id, ef, eu, co);
  if (!is_constrained(id) || ef.dim() != 2) return v;

  co.method = v.method == Method::Exact2d ? InclusionMethod::LpEnumeration : InclusionMethod::Exact2d;
  Verdict other = check_condition(id, ef, eu, co);
  if (other.status == v.status) {
    v.certificate += "; " + std::string(to_string(other.method)) + " agrees";
  } else if (v.status != Status::Inconclusive && other.status != Status::Inconclusive) {
    v.certificate += "; " + std::string(to_string(other.method)) + " disagrees (" +
                     std::string(to_string(other.status)) + ")";
    v.status = Status::Inconclusive;
  }
  return v;
}

int exit_code_for(const std::vector<std::pair<ConditionId, Verdict>>& verdicts) {
  bool inconclusive = false;
  for (const auto& [id, v] : verdicts) {
    if (v.status == Status::Violated) return 1;
    if (v.status == Status::Inconclusive) inconclusive = true;
  }
  return inconclusive ? 3 : 0;
}

namespace {

std::vector<OptSense> senses_of(const std::vector<ConditionId>& ids) {
  std::vector<OptSense> out;
  for (OptSense s : {OptSense::Min, OptSense::Max}) {
    if (std::any_of(ids.begin(), ids.end(), [&](ConditionId id) { return sense_of(id) == s; })) {
      out.push_back(s);
    }
  }
  return out;
}

const Exhauster* find_family(const ReportBody& b, const std::string& name) {
  for (const auto& e : b.exhausters) {
    if (e.name == name) return &e.family;
  }
  return nullptr;
}

}  // namespace

AnalysisReport analyze_problem(const ProblemSpec& problem, const AnalyzeOptions& options) {
  const bool constrained = problem.constraint.has_value();
  std::vector<ConditionId> ids =
      options.conditions ? *options.conditions : default_conditions(problem.sense, constrained);
  for (ConditionId id : ids) {
    if (is_constrained(id) && !constrained) {
      throw KindMismatch(std::string(to_string(id)) + " needs a constraint");
    }
  }

  ReportBody body;
  body.problem = problem.source;
  body.point = problem.point;
  body.f_value = eval_expr(problem.objective, problem.point);
  body.settings = {options.tol, options.samples, options.seed, options.max_combinations};

  const MinMaxTree hf = directional_derivative_tree(problem.objective, problem.point);
  const ExhausterPair ef = derive_exhausters(hf, options);
  body.exhausters.push_back({"f_upper", ef.upper});
  body.exhausters.push_back({"f_lower", ef.lower});

  std::optional<MinMaxTree> hu;
  std::optional<ExhausterPair> eu;
  if (constrained) {
    body.u_value = eval_expr(*problem.constraint, problem.point);
    hu = directional_derivative_tree(*problem.constraint, problem.point);
    eu = derive_exhausters(*hu, options);
    body.exhausters.push_back({"u_upper", eu->upper});
    body.exhausters.push_back({"u_lower", eu->lower});
    if (*body.u_value < -options.tol) {
      body.notes.push_back("u(x) < 0: the constraint is inactive at the point");
    } else if (*body.u_value > options.tol) {
      body.notes.push_back("u(x) > 0: the point is infeasible");
    }
  }

  for (ConditionId id : ids) {
    const Exhauster& f = objective_kind(id) == ExhausterKind::Upper ? ef.upper : ef.lower;
    const Exhauster* u = nullptr;
    if (auto k = constraint_kind(id)) u = *k == ExhausterKind::Upper ? &eu->upper : &eu->lower;
    body.verdicts.emplace_back(id, run_condition(id, f, u, options));
  }

  if (hu) {
    RegularityOptions ro;
    ro.tol = options.tol;
    ro.seed = options.seed;
    body.regularity = regularity_check(*hu, ro);
  }

  const MinMaxTree u_tree = hu ? *hu : MinMaxTree::leaf(Vector(problem.dim, 0.0));
  OracleOptions oo;
  oo.tol = options.tol;
  oo.parallel = options.parallel;
  for (OptSense s : senses_of(ids)) {
    std::vector<Vector> extra;
    for (const auto& [id, v] : body.verdicts) {
      if (sense_of(id) == s && v.witness) extra.push_back(*v.witness);
    }
    Verdict ov = necessary_condition_oracle(hf, u_tree, s, options.samples, options.seed, extra, oo);
    bool any_violated = std::any_of(body.verdicts.begin(), body.verdicts.end(), [&](const auto& p) {
      return sense_of(p.first) == s && p.second.status == Status::Violated;
    });
    if (ov.status == Status::Violated && !any_violated) {
      body.notes.push_back(std::string("sampled oracle found a violating direction for ") +
                           (s == OptSense::Min ? "min" : "max") +
                           " although no checked condition is violated");
    }
    body.oracle.emplace_back(s, std::move(ov));
  }

  return AnalysisReport(std::move(body));
}

std::vector<SvgItem> figure_items(const AnalysisReport& report) {
  const ReportBody& b = report.body();
  if (b.point.size() != 2) throw DimensionError("figures need a planar problem");
  std::vector<SvgItem> items;
  const std::pair<const char*, const char*> palette[] = {
      {"f_upper", "#1f4e9c"}, {"f_lower", "#2e8b57"}, {"u_upper", "#b8860b"}, {"u_lower", "#c0392b"}};

  const ConditionId first = b.verdicts.front().first;
  const Verdict& v = b.verdicts.front().second;
  const Exhauster* f = find_family(b, objective_kind(first) == ExhausterKind::Upper ? "f_upper" : "f_lower");
  const Exhauster* u = nullptr;
  if (auto k = constraint_kind(first)) u = find_family(b, *k == ExhausterKind::Upper ? "u_upper" : "u_lower");
  if (f && is_constrained(first)) {
    auto built = build_condition(first, *f, u);
    items.push_back({arcs_from_region(built.sides->lhs),
                     {"none", "#7fb3d5", 0.35, 0.0, std::string(to_string(first)) + " lhs"}});
    items.push_back({arcs_from_region(built.sides->rhs),
                     {"none", "#f5b041", 0.35, 0.0, std::string(to_string(first)) + " rhs"}});
  }

  for (const auto& [name, color] : palette) {
    if (const Exhauster* e = find_family(b, name)) {
      for (std::size_t i = 0; i < e->sets().size(); ++i) {
        items.push_back({e->sets()[i], {color, "none", 0.9, 3.0, std::string(name) + " #" + std::to_string(i)}});
      }
    }
  }
  if (v.witness && norm2(*v.witness) > 0.0) {
    items.push_back({*v.witness, {"#000000", "none", 1.0, 2.0, "witness"}});
  }
  return items;
}

}  // namespace exh
