#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "exh/conditions.hpp"
#include "exh/json_io.hpp"
#include "exh/report.hpp"

namespace exh {

struct AnalyzeOptions {
  double tol = kTol;
  int samples = 720;  // oracle directions
  std::uint64_t seed = 0;
  std::size_t max_combinations = 1'000'000;
  std::optional<std::vector<ConditionId>> conditions;
  bool parallel = true;
};

// All ids applicable to the sense: constrained ones when there is a
// constraint, the UNC_* ones otherwise.
std::vector<ConditionId> default_conditions(ProblemSense sense, bool constrained);

std::vector<ConditionId> parse_condition_list(const std::string& comma_list);

// Upper and lower exhausters of a tree, each normalized and then reduced.
struct ExhausterPair {
  Exhauster upper;
  Exhauster lower;
};
ExhausterPair derive_exhausters(const MinMaxTree& t, const AnalyzeOptions& options);

// Runs one condition; in dim 2 constrained ids are also checked by the other
// method and a disagreement turns the verdict inconclusive.
Verdict run_condition(ConditionId id, const Exhauster& ef, const Exhauster* eu,
                      const AnalyzeOptions& options);

AnalysisReport analyze_problem(const ProblemSpec& problem, const AnalyzeOptions& options);

// 0 all requested conditions hold, 1 any violated, 3 otherwise.
int exit_code_for(const std::vector<std::pair<ConditionId, Verdict>>& verdicts);

// Exhauster sets of the report plus the cone regions and witness of the
// first requested condition. Planar problems only.
std::vector<SvgItem> figure_items(const AnalysisReport& report);

}  // namespace exh
