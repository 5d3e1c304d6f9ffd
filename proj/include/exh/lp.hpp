#pragma once

#include <span>
#include <vector>

#include "exh/geometry.hpp"

namespace exh {

// Homogeneous comparison of <normal, g> against 0 or a unit margin. Strict
// inequalities <normal, g> < 0 are written as <= -1 (and > 0 as >= 1), which
// is lossless for cone predicates since every region is scale invariant.
enum class Sense { LeZero, LeMinusOne, GeZero, GeOne };

struct LinearConstraint {
  Vector normal;
  Sense sense = Sense::LeZero;
};

struct LpOptions {
  int max_pivots = 20000;
  double tol = kTol;
};

struct FeasibilityResult {
  bool feasible = false;
  // Minimal-L1 point satisfying every constraint (feasible only).
  Vector witness;
  // Farkas multipliers, one per constraint (infeasible only). Writing every
  // constraint as <a_i, g> <= b_i, they satisfy mu >= 0, sum mu_i a_i = 0 and
  // sum mu_i b_i < 0; verify_infeasibility re-checks this.
  std::vector<double> farkas;
};

// Decides the system by a two-phase simplex over g = p - q with Bland's rule,
// so the witness is a deterministic function of the input order.
// Throws CapExceeded when the pivot bound is reached.
FeasibilityResult linear_feasibility(std::span<const LinearConstraint> constraints, int dim,
                                     const LpOptions& options = {});

bool satisfies(const LinearConstraint& c, std::span<const double> g, double tol = kTol);
bool verify_infeasibility(std::span<const LinearConstraint> constraints,
                          std::span<const double> farkas, double tol = 1e-7);

namespace lp {

struct StandardResult {
  bool feasible = false;
  Vector x;
  // Phase-one dual y with A^T y <= 0 and b^T y > 0 when infeasible.
  Vector dual;
  double infeasibility = 0.0;
};

// min cost.x  s.t.  A x = b, x >= 0. An empty cost vector stops after phase one.
StandardResult solve_standard(const std::vector<Vector>& a, const Vector& b, const Vector& cost,
                              const LpOptions& options = {});

}  // namespace lp
}  // namespace exh
