#include "exh/arcs.hpp"

#include <algorithm>
#include <cmath>

#include "exh/errors.hpp"

namespace exh {

double wrap_angle(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  if (t >= kTwoPi) t -= kTwoPi;
  return t;
}

Vector direction(double theta) { return {std::cos(theta), std::sin(theta)}; }

double angle_of(std::span<const double> g) {
  check_same_dim(g.size(), 2, "angle_of");
  return wrap_angle(std::atan2(g[1], g[0]));
}

ArcSet::ArcSet(std::vector<Interval> raw) {
  std::vector<Interval> split;
  for (const auto& r : raw) {
    double len = r.hi - r.lo;
    if (len < 0.0) continue;
    if (len >= kTwoPi - kAngularTol) {
      pieces_ = {{0.0, kTwoPi}};
      return;
    }
    double lo = wrap_angle(r.lo);
    double hi = lo + len;
    if (hi > kTwoPi) {
      split.push_back({lo, kTwoPi});
      split.push_back({0.0, hi - kTwoPi});
    } else {
      split.push_back({lo, hi});
    }
  }
  std::sort(split.begin(), split.end(),
            [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
  for (const auto& s : split) {
    if (!pieces_.empty() && s.lo <= pieces_.back().hi + kAngularTol) {
      pieces_.back().hi = std::max(pieces_.back().hi, s.hi);
    } else {
      pieces_.push_back(s);
    }
  }
  if (pieces_.size() == 1 && pieces_.front().lo <= kAngularTol &&
      pieces_.front().hi >= kTwoPi - kAngularTol) {
    pieces_ = {{0.0, kTwoPi}};
  }
}

ArcSet ArcSet::full() { return ArcSet(std::vector<Interval>{{0.0, kTwoPi}}); }

ArcSet ArcSet::arc(double start, double length) {
  return ArcSet(std::vector<Interval>{{start, start + length}});
}

ArcSet ArcSet::halfplane(std::span<const double> v, bool nonpositive) {
  check_same_dim(v.size(), 2, "ArcSet::halfplane");
  if (v[0] == 0.0 && v[1] == 0.0) return full();
  double phi = std::atan2(v[1], v[0]);
  double half = std::numbers::pi / 2.0;
  return nonpositive ? arc(phi + half, std::numbers::pi) : arc(phi - half, std::numbers::pi);
}

ArcSet ArcSet::unite(const ArcSet& other) const {
  std::vector<Interval> raw = pieces_;
  raw.insert(raw.end(), other.pieces_.begin(), other.pieces_.end());
  return ArcSet(std::move(raw));
}

ArcSet ArcSet::intersect(const ArcSet& other) const {
  std::vector<Interval> raw;
  for (const auto& x : pieces_) {
    for (const auto& y : other.pieces_) {
      double lo = std::max(x.lo, y.lo);
      double hi = std::min(x.hi, y.hi);
      if (lo <= hi) {
        raw.push_back({lo, hi});
      } else if (lo - hi <= kAngularTol) {
        double mid = 0.5 * (lo + hi);
        raw.push_back({mid, mid});
      }
    }
  }
  // Rays at 0 and 2pi coincide; keep one.
  if (raw.size() >= 2) {
    bool at_zero = false;
    for (const auto& r : raw) at_zero = at_zero || (r.lo <= kAngularTol);
    if (at_zero) {
      std::erase_if(raw, [](const Interval& r) {
        return r.lo >= kTwoPi - kAngularTol && r.hi - r.lo <= kAngularTol;
      });
    }
  }
  return ArcSet(std::move(raw));
}

bool ArcSet::contains(double theta, double tol) const {
  double t = wrap_angle(theta);
  for (double shift : {0.0, -kTwoPi, kTwoPi}) {
    double s = t + shift;
    for (const auto& p : pieces_) {
      if (s >= p.lo - tol && s <= p.hi + tol) return true;
    }
  }
  return false;
}

bool ArcSet::is_full(double tol) const {
  return pieces_.size() == 1 && pieces_.front().lo <= tol && pieces_.front().hi >= kTwoPi - tol;
}

std::vector<ArcSet::Interval> ArcSet::arcs() const {
  std::vector<Interval> out = pieces_;
  if (is_full()) return out;
  if (out.size() >= 2 && out.front().lo <= kAngularTol && out.back().hi >= kTwoPi - kAngularTol) {
    out.back().hi = out.front().hi + kTwoPi;
    out.erase(out.begin());
  }
  return out;
}

double ArcSet::measure() const {
  double m = 0.0;
  for (const auto& p : pieces_) m += p.hi - p.lo;
  return m;
}

ArcSubsetResult arcset_subset(const ArcSet& a, const ArcSet& b, double tol) {
  ArcSubsetResult out;
  if (a.is_empty() || b.is_full(tol)) return out;

  std::vector<ArcSet::Interval> gaps;
  const auto barcs = b.arcs();
  if (barcs.empty()) {
    gaps.push_back({-kTwoPi, 2.0 * kTwoPi});
  } else {
    for (std::size_t i = 0; i + 1 < barcs.size(); ++i) {
      gaps.push_back({barcs[i].hi + tol, barcs[i + 1].lo - tol});
    }
    gaps.push_back({barcs.back().hi + tol, barcs.front().lo + kTwoPi - tol});
  }

  double best_len = -1.0;
  double best_mid = kTwoPi;
  for (const auto& arc : a.arcs()) {
    for (double shift : {-kTwoPi, 0.0, kTwoPi}) {
      double lo = arc.lo + shift;
      double hi = arc.hi + shift;
      for (const auto& gap : gaps) {
        if (gap.lo > gap.hi) continue;
        double plo = std::max(lo, gap.lo);
        double phi = std::min(hi, gap.hi);
        if (plo > phi) continue;
        const double len = phi - plo;
        const double mid = wrap_angle(0.5 * (plo + phi));
        // Equal lengths: smallest angle wins.
        if (len > best_len + 1e-12 || (len >= best_len - 1e-12 && mid < best_mid)) {
          best_len = std::max(best_len, len);
          best_mid = mid;
        }
      }
    }
  }
  if (best_len >= 0.0) {
    out.holds = false;
    out.witness = best_mid;
  }
  return out;
}

}  // namespace exh
