#pragma once

#include <span>
#include <vector>

namespace exh {

// Sign-decision tolerance used throughout unless a caller overrides it.
inline constexpr double kTol = 1e-9;

using Vector = std::vector<double>;

double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> a);
// Unit vector in the direction of `a`; the zero vector is returned unchanged.
Vector normalized(std::span<const double> a);
void check_same_dim(std::size_t a, std::size_t b, const char* what);

// Convex hull of a finite, nonempty vertex list. Vertex lists may carry
// duplicates or interior points; equality is decided on hulls
// (see polytopes_equal), never on the lists themselves.
class Polytope {
 public:
  explicit Polytope(std::vector<Vector> vertices);

  int dim() const { return dim_; }
  const std::vector<Vector>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }

  // Same vertex list, plus `v` appended.
  Polytope with_vertex(Vector v) const;

 private:
  int dim_;
  std::vector<Vector> vertices_;
};

enum class SupportMode { Max, Min };

// max (or min) of <v, g> over the vertices; equals the value over the hull.
double support_value(const Polytope& c, std::span<const double> g, SupportMode mode);

// Whether `p` lies in the convex hull of `c`, by feasibility of the
// convex-combination weights (sum w_j v_j = p, sum w_j = 1, w >= 0).
bool hull_contains(const Polytope& c, std::span<const double> p, double tol = kTol);

bool contains_origin(const Polytope& c, double tol = kTol);

// g in K^+(C) where K(C) is the conic hull of C.
bool conjugate_membership(const Polytope& c, std::span<const double> g, double tol = kTol);

}  // namespace exh
