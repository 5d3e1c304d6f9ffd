#pragma once

// Data-parallel inner loops. Each kernel has a serial reference and an OpenMP
// version; both return identical results for identical inputs (the parallel
// reductions pick the lowest index among equals).

#include <cstddef>
#include <span>
#include <vector>

#include "exh/deriv.hpp"
#include "exh/lp.hpp"

namespace exh {

// A disjunction of linear systems written as a product of choice groups:
// choosing one alternative per group and concatenating gives one system.
struct ChoiceGroup {
  std::vector<std::vector<LinearConstraint>> alternatives;
};
using ChoiceProduct = std::vector<ChoiceGroup>;

// Number of systems, saturated at `cap + 1`.
std::size_t combination_count(const ChoiceProduct& p, std::size_t cap);
// Mixed-radix decode; group 0 is the most significant digit.
std::vector<LinearConstraint> combination(const ChoiceProduct& p, std::size_t index);

struct SearchResult {
  bool found = false;
  std::size_t index = 0;
  Vector witness;
  std::size_t examined = 0;
  // Every infeasible system examined carried a Farkas certificate that re-verified.
  bool certified = true;
};

// First feasible system in lexicographic order. The caller checks the count
// against its cap first.
SearchResult first_feasible_serial(const ChoiceProduct& p, int dim, const LpOptions& lp = {});
SearchResult first_feasible_parallel(const ChoiceProduct& p, int dim, const LpOptions& lp = {});
SearchResult first_feasible(const ChoiceProduct& p, int dim, const LpOptions& lp, bool parallel);

enum class OptSense { Min, Max };

struct OracleScan {
  bool violated = false;
  std::size_t index = 0;  // direction with the largest violation
  double f_value = 0.0;
  double u_value = 0.0;
};

// Over `dirs`, find g with h_u(g) <= tol and h_f(g) < -margin (Min) or
// > margin (Max), keeping the largest |h_f|.
OracleScan oracle_scan_serial(const MinMaxTree& f, const MinMaxTree& u,
                              std::span<const Vector> dirs, OptSense sense, double tol,
                              double margin);
OracleScan oracle_scan_parallel(const MinMaxTree& f, const MinMaxTree& u,
                                std::span<const Vector> dirs, OptSense sense, double tol,
                                double margin);

struct DeviationScan {
  double max_deviation = 0.0;
  std::size_t index = 0;
};

// max |fd_directional_derivative(e, x, g) - eval_minmax(t, g)| over `dirs`.
DeviationScan fd_deviation_serial(const Expr& e, std::span<const double> x, const MinMaxTree& t,
                                  std::span<const Vector> dirs);
DeviationScan fd_deviation_parallel(const Expr& e, std::span<const double> x, const MinMaxTree& t,
                                    std::span<const Vector> dirs);

}  // namespace exh
