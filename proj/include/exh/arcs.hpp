#pragma once

#include <numbers>
#include <optional>
#include <vector>

#include "exh/geometry.hpp"

namespace exh {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kAngularTol = 1e-9;

double wrap_angle(double theta);  // into [0, 2pi)
Vector direction(double theta);   // (cos, sin)
double angle_of(std::span<const double> g);

// Closed, scale-invariant subset of R^2 \ {0}, stored as its trace on the unit
// circle: sorted, pairwise disjoint closed intervals inside [0, 2pi]. An arc
// through angle 0 is kept as the two pieces [a, 2pi] and [0, b]. Zero-length
// intervals are rays.
class ArcSet {
 public:
  struct Interval {
    double lo;
    double hi;
  };

  ArcSet() = default;
  static ArcSet empty() { return {}; }
  static ArcSet full();
  // Counterclockwise closed arc from `start` spanning `length` radians.
  static ArcSet arc(double start, double length);
  // {g : <v, g> >= 0} (or <= 0 when `nonpositive`); a zero v yields the full circle.
  static ArcSet halfplane(std::span<const double> v, bool nonpositive);

  ArcSet unite(const ArcSet& other) const;
  ArcSet intersect(const ArcSet& other) const;

  bool contains(double theta, double tol = kAngularTol) const;
  bool is_empty() const { return pieces_.empty(); }
  bool is_full(double tol = kAngularTol) const;
  double measure() const;
  const std::vector<Interval>& pieces() const { return pieces_; }

  // Arcs with wraparound pieces joined: each entry is [lo, hi] with
  // 0 <= lo < 2pi and hi possibly above 2pi.
  std::vector<Interval> arcs() const;

 private:
  explicit ArcSet(std::vector<Interval> raw);
  std::vector<Interval> pieces_;
};

struct ArcSubsetResult {
  bool holds = true;
  // An angle of `a` that `b` misses by more than the tolerance.
  std::optional<double> witness;
};

ArcSubsetResult arcset_subset(const ArcSet& a, const ArcSet& b, double tol = kAngularTol);

}  // namespace exh
