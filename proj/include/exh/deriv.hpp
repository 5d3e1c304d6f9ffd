#pragma once

#include <span>
#include <vector>

#include "exh/expr.hpp"
#include "exh/geometry.hpp"

namespace exh {

// Positively homogeneous piecewise-linear function of a direction g, built
// from linear forms <l, g> under max and min.
class MinMaxTree {
 public:
  enum class Kind { Leaf, Max, Min };

  static MinMaxTree leaf(Vector form);
  static MinMaxTree max(std::vector<MinMaxTree> children);
  static MinMaxTree min(std::vector<MinMaxTree> children);

  Kind kind() const { return kind_; }
  int dim() const { return dim_; }
  const Vector& form() const { return form_; }
  const std::vector<MinMaxTree>& children() const { return children_; }

  std::size_t leaf_count() const;
  // Every leaf form, left to right.
  std::vector<Vector> leaves() const;

  friend bool operator==(const MinMaxTree&, const MinMaxTree&) = default;

 private:
  MinMaxTree(Kind k, int dim) : kind_(k), dim_(dim) {}
  static MinMaxTree node(Kind k, std::vector<MinMaxTree> children);

  Kind kind_;
  int dim_;
  Vector form_;
  std::vector<MinMaxTree> children_;
};

double eval_minmax(const MinMaxTree& t, std::span<const double> g);

// Leaf-wise scaling; a negative factor swaps every max and min.
MinMaxTree scale_tree(const MinMaxTree& t, double lambda);
// Pointwise sum, materialized by distributing one tree over the other's leaves.
MinMaxTree add_trees(const MinMaxTree& a, const MinMaxTree& b, std::size_t leaf_cap);

struct DerivOptions {
  // |child - node| <= activity_tol * (1 + |node|) marks a max/min child active.
  double activity_tol = 1e-9;
  std::size_t leaf_cap = 1'000'000;
};

// h(g) = f'(x, g) for f built from polynomial atoms. Max/min nodes keep only
// the children active at x. Throws CapExceeded past the leaf cap.
MinMaxTree directional_derivative_tree(const Expr& e, std::span<const double> x,
                                       const DerivOptions& options = {});

// 0.1 * 2^-k for k = 0..12.
std::vector<double> default_fd_steps();

// One-sided difference quotients (f(x + a g) - f(x)) / a at the given steps,
// extrapolated to a = 0 by a least-squares line through the last three.
double fd_directional_derivative(const Expr& e, std::span<const double> x,
                                 std::span<const double> g, std::span<const double> steps);
double fd_directional_derivative(const Expr& e, std::span<const double> x,
                                 std::span<const double> g);

}  // namespace exh
