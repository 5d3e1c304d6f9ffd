#include "exh/lp.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "exh/errors.hpp"

namespace exh {
namespace lp {
namespace {

constexpr double kPivotEps = 1e-11;

// Dense tableau. Column layout: [0, n) structural, [n, n + m) artificial.
class Tableau {
 public:
  Tableau(const std::vector<Vector>& a, const Vector& b, int max_pivots)
      : m_(static_cast<int>(a.size())),
        n_(a.empty() ? 0 : static_cast<int>(a.front().size())),
        cols_(n_ + m_),
        rows_(m_, Vector(cols_ + 1, 0.0)),
        sign_(m_, 1.0),
        basis_(m_),
        reduced_(cols_, 0.0),
        max_pivots_(max_pivots) {
    for (int i = 0; i < m_; ++i) {
      if (static_cast<int>(a[i].size()) != n_) throw DimensionError("lp: ragged constraint matrix");
      sign_[i] = b[i] < 0.0 ? -1.0 : 1.0;
      for (int j = 0; j < n_; ++j) rows_[i][j] = sign_[i] * a[i][j];
      rows_[i][n_ + i] = 1.0;
      rows_[i][cols_] = sign_[i] * b[i];
      basis_[i] = n_ + i;
    }
  }

  // Phase one: minimize the sum of artificials. Returns that minimum.
  double phase_one() {
    std::fill(reduced_.begin(), reduced_.end(), 0.0);
    objective_ = 0.0;
    for (int i = 0; i < m_; ++i) reduced_[n_ + i] = 1.0;
    for (int i = 0; i < m_; ++i) eliminate_basic(i);
    run(cols_);
    return -objective_;
  }

  Vector phase_one_dual() const {
    Vector y(m_);
    for (int i = 0; i < m_; ++i) y[i] = sign_[i] * (1.0 - reduced_[n_ + i]);
    return y;
  }

  void phase_two(const Vector& cost) {
    drive_out_artificials();
    std::fill(reduced_.begin(), reduced_.end(), 0.0);
    objective_ = 0.0;
    for (int j = 0; j < n_; ++j) reduced_[j] = cost[j];
    for (int i = 0; i < m_; ++i) {
      int bj = basis_[i];
      double cb = bj < n_ ? cost[bj] : 0.0;
      if (cb == 0.0) continue;
      for (int j = 0; j < cols_; ++j) reduced_[j] -= cb * rows_[i][j];
      objective_ -= cb * rows_[i][cols_];
    }
    run(n_);
  }

  Vector solution() const {
    Vector x(n_, 0.0);
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < n_) x[basis_[i]] = std::max(0.0, rows_[i][cols_]);
    }
    return x;
  }

 private:
  void eliminate_basic(int row) {
    int bj = basis_[row];
    double d = reduced_[bj];
    if (d == 0.0) return;
    for (int j = 0; j < cols_; ++j) reduced_[j] -= d * rows_[row][j];
    objective_ -= d * rows_[row][cols_];
  }

  void pivot(int r, int c) {
    double p = rows_[r][c];
    for (double& v : rows_[r]) v /= p;
    for (int i = 0; i < m_; ++i) {
      if (i == r) continue;
      double f = rows_[i][c];
      if (f == 0.0) continue;
      for (int j = 0; j <= cols_; ++j) rows_[i][j] -= f * rows_[r][j];
      rows_[i][c] = 0.0;
    }
    double f = reduced_[c];
    if (f != 0.0) {
      for (int j = 0; j < cols_; ++j) reduced_[j] -= f * rows_[r][j];
      objective_ -= f * rows_[r][cols_];
      reduced_[c] = 0.0;
    }
    basis_[r] = c;
    if (++pivots_ > max_pivots_) {
      throw CapExceeded("lp: pivot bound of " + std::to_string(max_pivots_) + " exceeded");
    }
  }

  // Bland's rule over entering columns [0, allowed).
  void run(int allowed) {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < allowed; ++j) {
        if (reduced_[j] < -kPivotEps) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return;
      int leave = -1;
      double best = 0.0;
      for (int i = 0; i < m_; ++i) {
        double a = rows_[i][enter];
        if (a <= kPivotEps) continue;
        double ratio = rows_[i][cols_] / a;
        if (leave < 0 || ratio < best - kPivotEps) {
          leave = i;
          best = ratio;
        } else if (ratio <= best + kPivotEps && basis_[i] < basis_[leave]) {
          leave = i;
          best = std::min(best, ratio);
        }
      }
      if (leave < 0) return;  // unbounded direction; callers only use bounded objectives
      pivot(leave, enter);
    }
  }

  void drive_out_artificials() {
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      for (int j = 0; j < n_; ++j) {
        if (std::abs(rows_[i][j]) > 1e-9) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  int m_;
  int n_;
  int cols_;
  std::vector<Vector> rows_;
  Vector sign_;
  std::vector<int> basis_;
  Vector reduced_;
  double objective_ = 0.0;
  int pivots_ = 0;
  int max_pivots_;
};

}  // namespace

StandardResult solve_standard(const std::vector<Vector>& a, const Vector& b, const Vector& cost,
                              const LpOptions& options) {
  if (a.size() != b.size()) throw DimensionError("lp: row count mismatch");
  Tableau t(a, b, options.max_pivots);
  StandardResult out;
  double scale = 1.0;
  for (double v : b) scale = std::max(scale, std::abs(v));
  out.infeasibility = t.phase_one();
  if (out.infeasibility > options.tol * scale) {
    out.feasible = false;
    out.dual = t.phase_one_dual();
    return out;
  }
  out.feasible = true;
  if (!cost.empty()) t.phase_two(cost);
  out.x = t.solution();
  return out;
}

}  // namespace lp

namespace {

bool is_ge(Sense s) { return s == Sense::GeZero || s == Sense::GeOne; }

double bound_of(Sense s) {
  switch (s) {
    case Sense::LeZero:
    case Sense::GeZero:
      return 0.0;
    case Sense::LeMinusOne:
      return -1.0;
    case Sense::GeOne:
      return 1.0;
  }
  return 0.0;
}

}  // namespace

bool satisfies(const LinearConstraint& c, std::span<const double> g, double tol) {
  double v = dot(c.normal, g);
  double b = bound_of(c.sense);
  return is_ge(c.sense) ? v >= b - tol : v <= b + tol;
}

FeasibilityResult linear_feasibility(std::span<const LinearConstraint> constraints, int dim,
                                     const LpOptions& options) {
  const int m = static_cast<int>(constraints.size());
  for (const auto& c : constraints) check_same_dim(c.normal.size(), dim, "linear_feasibility");

  FeasibilityResult out;
  if (m == 0) {
    out.feasible = true;
    out.witness.assign(dim, 0.0);
    return out;
  }

  // Variables: p (dim), q (dim), one slack per row.
  const int n = 2 * dim + m;
  std::vector<Vector> a(m, Vector(n, 0.0));
  Vector b(m);
  for (int i = 0; i < m; ++i) {
    const auto& c = constraints[i];
    for (int k = 0; k < dim; ++k) {
      a[i][k] = c.normal[k];
      a[i][dim + k] = -c.normal[k];
    }
    a[i][2 * dim + i] = is_ge(c.sense) ? -1.0 : 1.0;
    b[i] = bound_of(c.sense);
  }
  Vector cost(n, 0.0);
  std::fill(cost.begin(), cost.begin() + 2 * dim, 1.0);

  lp::StandardResult r = lp::solve_standard(a, b, cost, options);
  out.feasible = r.feasible;
  if (r.feasible) {
    out.witness.resize(dim);
    for (int k = 0; k < dim; ++k) out.witness[k] = r.x[k] - r.x[dim + k];
  } else {
    out.farkas.resize(m);
    for (int i = 0; i < m; ++i) {
      double mu = is_ge(constraints[i].sense) ? r.dual[i] : -r.dual[i];
      out.farkas[i] = std::max(0.0, mu);
    }
  }
  return out;
}

bool verify_infeasibility(std::span<const LinearConstraint> constraints,
                          std::span<const double> farkas, double tol) {
  if (farkas.size() != constraints.size() || constraints.empty()) return false;
  const std::size_t dim = constraints.front().normal.size();
  Vector combo(dim, 0.0);
  double rhs = 0.0;
  double mass = 0.0;
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    double mu = farkas[i];
    if (mu < 0.0) return false;
    double flip = is_ge(constraints[i].sense) ? -1.0 : 1.0;
    for (std::size_t k = 0; k < dim; ++k) combo[k] += mu * flip * constraints[i].normal[k];
    rhs += mu * flip * bound_of(constraints[i].sense);
    mass += mu;
  }
  if (mass <= 0.0 || rhs >= 0.0) return false;
  // Scale so the contradiction reads 0 <= -1.
  for (double v : combo) {
    if (std::abs(v / rhs) > tol) return false;
  }
  return true;
}

}  // namespace exh
