#include "exh/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "exh/errors.hpp"
#include "exh/lp.hpp"

namespace exh {

double dot(std::span<const double> a, std::span<const double> b) {
  check_same_dim(a.size(), b.size(), "dot");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

Vector normalized(std::span<const double> a) {
  Vector out(a.begin(), a.end());
  double n = norm2(a);
  if (n > 0.0) {
    for (double& v : out) v /= n;
  }
  return out;
}

void check_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionError(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                         " vs " + std::to_string(b) + ")");
  }
}

Polytope::Polytope(std::vector<Vector> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw DimensionError("polytope: empty vertex list");
  dim_ = static_cast<int>(vertices_.front().size());
  if (dim_ <= 0) throw DimensionError("polytope: zero-dimensional vertex");
  for (const auto& v : vertices_) {
    check_same_dim(v.size(), dim_, "polytope");
    for (double x : v) {
      if (!std::isfinite(x)) throw DimensionError("polytope: non-finite coordinate");
    }
  }
}

Polytope Polytope::with_vertex(Vector v) const {
  auto vs = vertices_;
  vs.push_back(std::move(v));
  return Polytope(std::move(vs));
}

double support_value(const Polytope& c, std::span<const double> g, SupportMode mode) {
  check_same_dim(g.size(), c.dim(), "support_value");
  double best = dot(c.vertices().front(), g);
  for (const auto& v : c.vertices()) {
    double d = dot(v, g);
    best = mode == SupportMode::Max ? std::max(best, d) : std::min(best, d);
  }
  return best;
}

bool hull_contains(const Polytope& c, std::span<const double> p, double tol) {
  check_same_dim(p.size(), c.dim(), "hull_contains");
  const int dim = c.dim();
  const int m = static_cast<int>(c.size());
  std::vector<Vector> a(dim + 1, Vector(m, 0.0));
  Vector b(dim + 1, 0.0);
  for (int j = 0; j < m; ++j) {
    for (int k = 0; k < dim; ++k) a[k][j] = c.vertices()[j][k];
    a[dim][j] = 1.0;
  }
  for (int k = 0; k < dim; ++k) b[k] = p[k];
  b[dim] = 1.0;
  LpOptions opts;
  opts.tol = tol;
  return lp::solve_standard(a, b, {}, opts).feasible;
}

bool contains_origin(const Polytope& c, double tol) {
  Vector zero(c.dim(), 0.0);
  return hull_contains(c, zero, tol);
}

bool conjugate_membership(const Polytope& c, std::span<const double> g, double tol) {
  return support_value(c, g, SupportMode::Min) >= -tol;
}

}  // namespace exh
