#include "exh/deriv.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "exh/errors.hpp"

namespace exh {

MinMaxTree MinMaxTree::leaf(Vector form) {
  if (form.empty()) throw DimensionError("minmax: empty linear form");
  MinMaxTree t(Kind::Leaf, static_cast<int>(form.size()));
  t.form_ = std::move(form);
  return t;
}

MinMaxTree MinMaxTree::node(Kind k, std::vector<MinMaxTree> children) {
  if (children.empty()) throw DimensionError("minmax: node without children");
  if (children.size() == 1) return std::move(children.front());
  MinMaxTree t(k, children.front().dim());
  for (const auto& c : children) check_same_dim(c.dim(), t.dim_, "minmax children");
  t.children_ = std::move(children);
  return t;
}

MinMaxTree MinMaxTree::max(std::vector<MinMaxTree> children) {
  return node(Kind::Max, std::move(children));
}

MinMaxTree MinMaxTree::min(std::vector<MinMaxTree> children) {
  return node(Kind::Min, std::move(children));
}

std::size_t MinMaxTree::leaf_count() const {
  if (kind_ == Kind::Leaf) return 1;
  std::size_t n = 0;
  for (const auto& c : children_) n += c.leaf_count();
  return n;
}

std::vector<Vector> MinMaxTree::leaves() const {
  std::vector<Vector> out;
  if (kind_ == Kind::Leaf) {
    out.push_back(form_);
    return out;
  }
  for (const auto& c : children_) {
    auto sub = c.leaves();
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

double eval_minmax(const MinMaxTree& t, std::span<const double> g) {
  if (t.kind() == MinMaxTree::Kind::Leaf) return dot(t.form(), g);
  double best = eval_minmax(t.children().front(), g);
  for (const auto& c : t.children()) {
    double v = eval_minmax(c, g);
    best = t.kind() == MinMaxTree::Kind::Max ? std::max(best, v) : std::min(best, v);
  }
  return best;
}

MinMaxTree scale_tree(const MinMaxTree& t, double lambda) {
  if (t.kind() == MinMaxTree::Kind::Leaf) {
    Vector f = t.form();
    for (double& v : f) v *= lambda;
    return MinMaxTree::leaf(std::move(f));
  }
  std::vector<MinMaxTree> kids;
  kids.reserve(t.children().size());
  for (const auto& c : t.children()) kids.push_back(scale_tree(c, lambda));
  bool is_max = t.kind() == MinMaxTree::Kind::Max;
  if (lambda < 0.0) is_max = !is_max;
  return is_max ? MinMaxTree::max(std::move(kids)) : MinMaxTree::min(std::move(kids));
}

namespace {

MinMaxTree shift_leaves(const MinMaxTree& t, const Vector& offset) {
  if (t.kind() == MinMaxTree::Kind::Leaf) {
    Vector f = t.form();
    for (std::size_t i = 0; i < f.size(); ++i) f[i] += offset[i];
    return MinMaxTree::leaf(std::move(f));
  }
  std::vector<MinMaxTree> kids;
  kids.reserve(t.children().size());
  for (const auto& c : t.children()) kids.push_back(shift_leaves(c, offset));
  return t.kind() == MinMaxTree::Kind::Max ? MinMaxTree::max(std::move(kids))
                                           : MinMaxTree::min(std::move(kids));
}

MinMaxTree distribute(const MinMaxTree& a, const MinMaxTree& b) {
  if (a.kind() == MinMaxTree::Kind::Leaf) return shift_leaves(b, a.form());
  std::vector<MinMaxTree> kids;
  kids.reserve(a.children().size());
  for (const auto& c : a.children()) kids.push_back(distribute(c, b));
  return a.kind() == MinMaxTree::Kind::Max ? MinMaxTree::max(std::move(kids))
                                           : MinMaxTree::min(std::move(kids));
}

}  // namespace

MinMaxTree add_trees(const MinMaxTree& a, const MinMaxTree& b, std::size_t leaf_cap) {
  check_same_dim(a.dim(), b.dim(), "add_trees");
  std::size_t na = a.leaf_count();
  std::size_t nb = b.leaf_count();
  if (na > leaf_cap / std::max<std::size_t>(nb, 1) || na * nb > leaf_cap) {
    throw CapExceeded("sum of derivative trees needs " + std::to_string(na) + " x " +
                      std::to_string(nb) + " leaves, cap is " + std::to_string(leaf_cap));
  }
  return distribute(a, b);
}

MinMaxTree directional_derivative_tree(const Expr& e, std::span<const double> x,
                                       const DerivOptions& options) {
  check_same_dim(x.size(), e.dim(), "directional_derivative_tree");
  switch (e.op()) {
    case Expr::Op::Atom:
      return MinMaxTree::leaf(e.smooth().gradient(x));
    case Expr::Op::Scale:
      return scale_tree(directional_derivative_tree(e.args().front(), x, options), e.coef());
    case Expr::Op::Sum: {
      MinMaxTree acc = directional_derivative_tree(e.args().front(), x, options);
      for (std::size_t i = 1; i < e.args().size(); ++i) {
        acc = add_trees(acc, directional_derivative_tree(e.args()[i], x, options),
                        options.leaf_cap);
      }
      return acc;
    }
    case Expr::Op::Max:
    case Expr::Op::Min: {
      const bool is_max = e.op() == Expr::Op::Max;
      std::vector<double> values;
      values.reserve(e.args().size());
      for (const auto& a : e.args()) values.push_back(eval_expr(a, x));
      double node = is_max ? *std::max_element(values.begin(), values.end())
                           : *std::min_element(values.begin(), values.end());
      double band = options.activity_tol * (1.0 + std::abs(node));
      std::vector<MinMaxTree> active;
      for (std::size_t i = 0; i < values.size(); ++i) {
        if (std::abs(values[i] - node) <= band) {
          active.push_back(directional_derivative_tree(e.args()[i], x, options));
        }
      }
      if (active.empty()) throw Error("directional_derivative_tree: empty active set");
      return is_max ? MinMaxTree::max(std::move(active)) : MinMaxTree::min(std::move(active));
    }
  }
  throw Error("directional_derivative_tree: unknown node");
}

std::vector<double> default_fd_steps() {
  std::vector<double> steps;
  for (int k = 0; k <= 12; ++k) steps.push_back(0.1 * std::ldexp(1.0, -k));
  return steps;
}

double fd_directional_derivative(const Expr& e, std::span<const double> x,
                                 std::span<const double> g, std::span<const double> steps) {
  check_same_dim(x.size(), e.dim(), "fd_directional_derivative");
  check_same_dim(g.size(), e.dim(), "fd_directional_derivative");
  if (steps.size() < 3) throw Error("fd_directional_derivative: need at least three steps");
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (!(steps[i] > 0.0) || (i > 0 && !(steps[i] < steps[i - 1]))) {
      throw Error("fd_directional_derivative: steps must be positive and strictly decreasing");
    }
  }
  const double f0 = eval_expr(e, x);
  Vector probe(x.size());
  double a[3];
  double q[3];
  for (int k = 0; k < 3; ++k) {
    double alpha = steps[steps.size() - 3 + k];
    for (std::size_t i = 0; i < x.size(); ++i) probe[i] = x[i] + alpha * g[i];
    a[k] = alpha;
    q[k] = (eval_expr(e, probe) - f0) / alpha;
  }
  double am = (a[0] + a[1] + a[2]) / 3.0;
  double qm = (q[0] + q[1] + q[2]) / 3.0;
  double sxy = 0.0;
  double sxx = 0.0;
  for (int k = 0; k < 3; ++k) {
    sxy += (a[k] - am) * (q[k] - qm);
    sxx += (a[k] - am) * (a[k] - am);
  }
  double slope = sxx > 0.0 ? sxy / sxx : 0.0;
  return qm - slope * am;
}

double fd_directional_derivative(const Expr& e, std::span<const double> x,
                                 std::span<const double> g) {
  auto steps = default_fd_steps();
  return fd_directional_derivative(e, x, g, steps);
}

}  // namespace exh
