#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "exh/arcs.hpp"
#include "exh/errors.hpp"
#include "exh/geometry.hpp"
#include "exh/lp.hpp"
#include "exh/region.hpp"
#include "support.hpp"

using namespace exh;
using std::numbers::pi;

namespace {

// Brute-force hull membership: smallest distance from p to a grid of convex
// combinations of the vertices (step 1/200). Valid for up to three vertices.
double grid_distance(const Polytope& c, const Vector& p) {
  const auto& v = c.vertices();
  const int n = 200;
  double best = 1e300;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n - i; ++j) {
      double w[3] = {i / double(n), j / double(n), (n - i - j) / double(n)};
      if (v.size() < 3 && w[2] > 0) continue;
      if (v.size() < 2 && w[1] > 0) continue;
      double x = 0, y = 0;
      for (std::size_t k = 0; k < v.size(); ++k) {
        x += w[k] * v[k][0];
        y += w[k] * v[k][1];
      }
      best = std::min(best, std::hypot(x - p[0], y - p[1]));
    }
  }
  return best;
}

}  // namespace

TEST_CASE("support values") {
  CHECK(support_value(fx::c3(), Vector{1, 0}, SupportMode::Max) == 1.0);
  CHECK(support_value(fx::c1(), Vector{1, 0}, SupportMode::Min) == -1.0);
  CHECK(support_value(fx::c1(), Vector{0, 0}, SupportMode::Max) == 0.0);
  CHECK_THROWS_AS(support_value(fx::c1(), Vector{1, 0, 0}, SupportMode::Max), DimensionError);
}

TEST_CASE("polytope validation") {
  CHECK_THROWS_AS(Polytope({}), DimensionError);
  CHECK_THROWS_AS(Polytope({{1, 2}, {1}}), DimensionError);
  CHECK_THROWS_AS(Polytope(std::vector<Vector>{Vector{}}), DimensionError);
  CHECK(fx::c1().with_vertex({0, 0}).size() == 3);
}

TEST_CASE("origin containment") {
  CHECK_FALSE(contains_origin(fx::c1()));
  CHECK(contains_origin(Polytope({{1, 1}, {-1, -1}})));
  CHECK(contains_origin(Polytope({{1, 0}, {0, 1}, {-1, -1}})));
  CHECK(contains_origin(Polytope({{0, 0}})));
  CHECK_FALSE(contains_origin(Polytope({{1e-3, 0}})));
}

TEST_CASE("hull containment agrees with a convex-weight grid") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  int decided = 0;
  for (int trial = 0; trial < 200; ++trial) {
    Polytope c = fx::random_polytope(rng, 2, 1, 3, -3, 3);
    Vector p{u(rng), u(rng)};
    double d = grid_distance(c, p);
    bool lp_in = hull_contains(c, p);
    if (d < 1e-12) {
      CHECK(lp_in);
      ++decided;
    } else if (d > 0.05) {
      CHECK_FALSE(lp_in);
      ++decided;
    }
    // The vertex centroid is always a member.
    const auto& v = c.vertices();
    Vector mid(2, 0.0);
    for (const auto& x : v)
      for (int k = 0; k < 2; ++k) mid[k] += x[k] / v.size();
    CHECK(hull_contains(c, mid));
  }
  CHECK(decided > 100);
}

TEST_CASE("conjugate cone membership") {
  CHECK(conjugate_membership(fx::c3(), Vector{1, 0}));
  CHECK_FALSE(conjugate_membership(fx::c3(), Vector{-1, 0}));
  CHECK(conjugate_membership(fx::c1(), Vector{0, 1}));
}

TEST_CASE("homogeneity, duality and origin bounds on random inputs") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> lam(0.01, 50.0);
  for (int t = 0; t < 300; ++t) {
    int dim = 2 + t % 3;
    Polytope c = fx::random_polytope(rng, dim, 1, 5, -3, 3);
    Vector g = fx::random_unit(rng, dim);
    double l = lam(rng);
    Vector lg = g;
    for (auto& x : lg) x *= l;
    for (auto mode : {SupportMode::Max, SupportMode::Min}) {
      CHECK(support_value(c, lg, mode) == doctest::Approx(l * support_value(c, g, mode)).epsilon(1e-12));
    }
    CHECK(conjugate_membership(c, g) == (support_value(c, g, SupportMode::Min) >= -kTol));
    if (contains_origin(c)) {
      CHECK(support_value(c, g, SupportMode::Min) <= kTol);
      CHECK(support_value(c, g, SupportMode::Max) >= -kTol);
    }
  }
}

TEST_CASE("linear feasibility examples") {
  auto r = linear_feasibility(std::vector<LinearConstraint>{{{1, 0}, Sense::LeMinusOne}}, 2);
  REQUIRE(r.feasible);
  CHECK(r.witness[0] <= -1.0 + 1e-12);

  std::vector<LinearConstraint> bad{{{1, 0}, Sense::LeMinusOne}, {{-1, 0}, Sense::LeMinusOne}};
  r = linear_feasibility(bad, 2);
  CHECK_FALSE(r.feasible);
  CHECK(verify_infeasibility(bad, r.farkas));

  std::vector<LinearConstraint> wedge{{{1, 1}, Sense::LeZero}, {{1, -1}, Sense::LeZero}, {{0, 1}, Sense::GeOne}};
  r = linear_feasibility(wedge, 2);
  REQUIRE(r.feasible);
  for (const auto& c : wedge) CHECK(satisfies(c, r.witness));

  CHECK(linear_feasibility(std::vector<LinearConstraint>{}, 3).witness == Vector(3, 0.0));
  CHECK_THROWS_AS(linear_feasibility(std::vector<LinearConstraint>{{{1, 0, 0}, Sense::LeZero}}, 2),
                  DimensionError);
}

TEST_CASE("linear feasibility is deterministic and the L1-smallest on a simple system") {
  std::vector<LinearConstraint> cs{{{1, 0}, Sense::GeOne}};
  auto a = linear_feasibility(cs, 2);
  auto b = linear_feasibility(cs, 2);
  CHECK(a.witness == b.witness);
  CHECK(a.witness == Vector{1, 0});
}

TEST_CASE("random systems: witnesses re-substitute and Farkas certificates verify") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> ci(-3, 3), nc(1, 6), sense(0, 3), dimd(2, 4);
  int feasible = 0, infeasible = 0;
  for (int t = 0; t < 400; ++t) {
    int dim = dimd(rng);
    std::vector<LinearConstraint> cs(nc(rng));
    for (auto& c : cs) {
      c.normal.resize(dim);
      for (auto& x : c.normal) x = ci(rng);
      c.sense = static_cast<Sense>(sense(rng));
    }
    auto r = linear_feasibility(cs, dim);
    if (r.feasible) {
      ++feasible;
      for (const auto& c : cs) {
        double v = dot(c.normal, r.witness);
        switch (c.sense) {
          case Sense::LeZero:
            CHECK(v <= 1e-9);
            break;
          case Sense::GeZero:
            CHECK(v >= -1e-9);
            break;
          case Sense::LeMinusOne:
            CHECK(v <= -1.0 + 1e-9);
            break;
          case Sense::GeOne:
            CHECK(v >= 1.0 - 1e-9);
            break;
        }
      }
    } else {
      ++infeasible;
      CHECK(verify_infeasibility(cs, r.farkas));
    }
  }
  CHECK(feasible > 50);
  CHECK(infeasible > 50);
}

TEST_CASE("2D systems agree with a dense angular scan") {
  // Homogeneous systems: feasible iff some direction satisfies every
  // constraint with the >= 1 / <= -1 rows scaled to strictness.
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> ci(-3, 3), nc(1, 4), sense(0, 3);
  for (int t = 0; t < 200; ++t) {
    std::vector<LinearConstraint> cs(nc(rng));
    for (auto& c : cs) {
      c.normal = {double(ci(rng)), double(ci(rng))};
      c.sense = static_cast<Sense>(sense(rng));
    }
    bool scan = false;
    bool any_strict = false;
    for (const auto& c : cs) any_strict |= c.sense == Sense::LeMinusOne || c.sense == Sense::GeOne;
    if (!any_strict) {
      scan = true;  // g = 0
    } else {
      // Dense circle plus the exact rays along each constraint boundary, so
      // cones that degenerate to a single ray are found too.
      auto dirs = fx::circle(20000, 1e-4);
      for (const auto& c : cs) {
        dirs.push_back({-c.normal[1], c.normal[0]});
        dirs.push_back({c.normal[1], -c.normal[0]});
      }
      for (const auto& g : dirs) {
        bool ok = true;
        for (const auto& c : cs) {
          double v = dot(c.normal, g);
          bool strict = c.sense == Sense::LeMinusOne || c.sense == Sense::GeOne;
          bool le = c.sense == Sense::LeZero || c.sense == Sense::LeMinusOne;
          double m = strict ? 1e-9 : 0.0;
          ok &= le ? v <= -m : v >= m;
        }
        if (ok) {
          scan = true;
          break;
        }
      }
    }
    CHECK(linear_feasibility(cs, 2).feasible == scan);
  }
}

TEST_CASE("arc examples") {
  auto kplus = arcs_from_atom({AtomKind::KPlus, fx::c3()});
  auto arcs = kplus.arcs();
  REQUIRE(arcs.size() == 1);
  CHECK(arcs[0].lo == doctest::Approx(7 * pi / 4));
  CHECK(arcs[0].hi == doctest::Approx(9 * pi / 4));

  auto neg = arcs_from_atom({AtomKind::NegKPlus, fx::c3()}).arcs();
  REQUIRE(neg.size() == 1);
  CHECK(neg[0].lo == doctest::Approx(3 * pi / 4));
  CHECK(neg[0].hi == doctest::Approx(5 * pi / 4));

  auto notk = arcs_from_atom({AtomKind::NotKPlus, fx::c1()});
  CHECK(notk.measure() == doctest::Approx(2 * pi - pi / 2));
  CHECK_FALSE(notk.contains(pi / 2));
  CHECK(notk.contains(pi / 4));
  CHECK(notk.contains(3 * pi / 4));

  CHECK_THROWS_AS(arcs_from_atom({AtomKind::KPlus, Polytope({{1, 0, 0}})}), DimensionError);
}

TEST_CASE("arc subset examples") {
  CHECK(arcset_subset(ArcSet::arc(0, pi), ArcSet::full()).holds);
  auto r = arcset_subset(ArcSet::arc(0, pi), ArcSet::arc(0, pi / 2));
  REQUIRE_FALSE(r.holds);
  CHECK(*r.witness == doctest::Approx(3 * pi / 4));
  auto both = ArcSet::arc(-pi / 4, pi / 2).unite(ArcSet::arc(3 * pi / 4, pi / 2));
  CHECK(arcset_subset(both, both).holds);
  CHECK(arcset_subset(ArcSet::empty(), ArcSet::empty()).holds);
  CHECK_FALSE(arcset_subset(ArcSet::full(), ArcSet::empty()).holds);
}

TEST_CASE("arc set algebra") {
  auto a = ArcSet::arc(0.5, 1.0);
  CHECK(a.unite(a).pieces().size() == a.pieces().size());
  CHECK(a.intersect(ArcSet::empty()).is_empty());
  CHECK(a.unite(ArcSet::full()).is_full());
  // Touching closed arcs meet in a single ray.
  auto touch = ArcSet::arc(0, 1).intersect(ArcSet::arc(1, 1));
  REQUIRE(touch.pieces().size() == 1);
  CHECK(touch.pieces()[0].lo == doctest::Approx(1.0));
  CHECK(touch.measure() == doctest::Approx(0.0));
  CHECK(ArcSet::halfplane(Vector{0, 0}, false).is_full());
  CHECK(ArcSet::arc(6.0, 1.0).contains(0.1));
  CHECK(wrap_angle(-0.5) == doctest::Approx(2 * pi - 0.5));
}

TEST_CASE("1000 random angles: arc membership matches the direct predicate") {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> th(0.0, 2 * pi);
  int compared = 0;
  for (int t = 0; t < 40; ++t) {
    Polytope c = fx::random_polytope(rng, 2, 1, 4, -3, 3);
    for (auto kind : {AtomKind::NotKPlus, AtomKind::NotNegKPlus, AtomKind::KPlus, AtomKind::NegKPlus}) {
      RegionAtom atom{kind, c};
      ArcSet arcs = arcs_from_atom(atom);
      for (int k = 0; k < 25; ++k) {
        double theta = th(rng);
        Vector g{std::cos(theta), std::sin(theta)};
        double lo = support_value(c, g, SupportMode::Min);
        double hi = support_value(c, g, SupportMode::Max);
        // Skip angles within 1e-7 of a boundary root.
        double near = 1e300;
        for (const auto& v : c.vertices()) near = std::min(near, std::abs(dot(v, g)));
        if (near < 1e-7) continue;
        bool direct = kind == AtomKind::NotKPlus      ? lo <= 0
                      : kind == AtomKind::NotNegKPlus ? hi >= 0
                      : kind == AtomKind::KPlus       ? lo >= 0
                                                      : hi <= 0;
        CHECK(arcs.contains(theta) == direct);
        CHECK(atom_membership(atom, g) == direct);
        ++compared;
      }
    }
  }
  CHECK(compared >= 1000);
}
