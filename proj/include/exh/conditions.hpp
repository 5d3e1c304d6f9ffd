#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "exh/deriv.hpp"
#include "exh/exhauster.hpp"
#include "exh/kernels.hpp"
#include "exh/region.hpp"

namespace exh {

// First tag: exhauster of the objective f; second: exhauster of the
// constraint u. The UNC_* ids are the unconstrained tests on f alone.
enum class ConditionId {
  MinUpperLower,
  MinUpperUpper,
  MinLowerLower,
  MinLowerUpper,
  MaxLowerLower,
  MaxLowerUpper,
  MaxUpperLower,
  MaxUpperUpper,
  UncMinUpper,
  UncMinLower,
  UncMaxLower,
  UncMaxUpper,
};

inline constexpr std::array<ConditionId, 12> kAllConditions = {
    ConditionId::MinUpperLower, ConditionId::MinUpperUpper, ConditionId::MinLowerLower,
    ConditionId::MinLowerUpper, ConditionId::MaxLowerLower, ConditionId::MaxLowerUpper,
    ConditionId::MaxUpperLower, ConditionId::MaxUpperUpper, ConditionId::UncMinUpper,
    ConditionId::UncMinLower,   ConditionId::UncMaxLower,   ConditionId::UncMaxUpper,
};

std::string_view to_string(ConditionId id);
ConditionId condition_from_string(std::string_view s);

bool is_constrained(ConditionId id);
OptSense sense_of(ConditionId id);
ExhausterKind objective_kind(ConditionId id);
std::optional<ExhausterKind> constraint_kind(ConditionId id);
// "minimum; proper (upper) exhauster of f, lower exhauster of u" and the like.
std::string reading_of(ConditionId id);

enum class Status { Holds, Violated, Inconclusive };
enum class Method { Exact2d, LpEnumeration, Sampled };

std::string_view to_string(Status s);
std::string_view to_string(Method m);
Status status_from_string(std::string_view s);
Method method_from_string(std::string_view s);

struct Verdict {
  Status status = Status::Inconclusive;
  // Unit direction (or the zero vector for an empty strict cone) when violated.
  std::optional<Vector> witness;
  std::string certificate;
  Method method = Method::LpEnumeration;
  std::vector<std::string> warnings;
};

struct ConditionSides {
  RegionExpr lhs;
  RegionExpr rhs;
};

struct BuiltCondition {
  ConditionId id;
  std::optional<ConditionSides> sides;  // empty for the UNC_* ids
  std::string description;
};

// Throws KindMismatch when an exhauster kind does not fit the id, or when a
// constrained id gets no constraint exhauster.
BuiltCondition build_condition(ConditionId id, const Exhauster& ef, const Exhauster* eu);

enum class InclusionMethod { Auto, Exact2d, LpEnumeration };

struct CheckOptions {
  double tol = kTol;
  std::size_t max_combinations = 1'000'000;
  InclusionMethod method = InclusionMethod::Auto;
  bool parallel = true;
};

// Decides lhs subset-of rhs. Exact2d compares angular traces; LpEnumeration
// searches lhs \ rhs system by system (lexicographic, first feasible wins).
// More than max_combinations systems gives an inconclusive verdict.
Verdict inclusion_check(const RegionExpr& lhs, const RegionExpr& rhs,
                        const CheckOptions& options = {});

Verdict check_unconstrained(ConditionId id, const Exhauster& e, const CheckOptions& options = {});

// build_condition followed by inclusion_check or check_unconstrained.
Verdict check_condition(ConditionId id, const Exhauster& ef, const Exhauster* eu,
                        const CheckOptions& options = {});

struct RegularityOptions {
  double tol = kTol;
  int samples = 2000;       // dim >= 3 only
  std::uint64_t seed = 0;   // dim >= 3 only
};

// cl{g : h_u(g) < 0} == {g : h_u(g) <= 0}. Exact in dim 2, sampled otherwise.
Verdict regularity_check(const MinMaxTree& u, const RegularityOptions& options = {});

struct OracleOptions {
  double tol = kTol;
  double margin = 1e-6;
  bool parallel = true;
};

// Direct check of h_f >= 0 (min) or h_f <= 0 (max) on {h_u <= 0} over the
// `extra` directions followed by `samples` seeded unit directions. Never
// reports holds: a clean scan is inconclusive.
Verdict necessary_condition_oracle(const MinMaxTree& f, const MinMaxTree& u, OptSense sense,
                                   int samples, std::uint64_t seed,
                                   std::span<const Vector> extra = {},
                                   const OracleOptions& options = {});

}  // namespace exh
