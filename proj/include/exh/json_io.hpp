#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "exh/conditions.hpp"
#include "exh/exhauster.hpp"
#include "exh/expr.hpp"
#include "exh/geometry.hpp"

namespace exh {

using json = nlohmann::ordered_json;

// [[1,1],[1,-1]]
json to_json(const Polytope& p);
Polytope polytope_from_json(const json& j);

// {"op":"max"|"min"|"sum","args":[...]} | {"op":"scale","coef":r,"arg":...}
// | {"atom":{"terms":[{"c":r,"e":[i,j,...]}]}}
// Every exponent list must have length `dim`.
json to_json(const Expr& e);
Expr expr_from_json(const json& j, int dim);

// {"kind":"upper","dim":2,"sets":[...]}
json to_json(const Exhauster& e);
Exhauster exhauster_from_json(const json& j);

// {"condition":..., "status":..., "method":..., "witness":[...]|null,
//  "certificate":"...", "warnings":[...]}; "condition" is omitted when empty.
json to_json(const Verdict& v, std::optional<ConditionId> id = std::nullopt);
Verdict verdict_from_json(const json& j);

enum class ProblemSense { Min, Max, Both };

struct ProblemSpec {
  int dim = 0;
  Expr objective;
  std::optional<Expr> constraint;
  Vector point;
  ProblemSense sense = ProblemSense::Min;
  json source;
};

ProblemSpec problem_from_json(const json& j);
std::string_view to_string(ProblemSense s);

// Reads and parses a file; throws ParseError with the path on failure.
json read_json_file(const std::string& path);

}  // namespace exh
