#pragma once

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "exh/deriv.hpp"
#include "exh/exhauster.hpp"
#include "exh/expr.hpp"
#include "exh/geometry.hpp"

namespace fx {

using namespace exh;

// The four segments of the worked plane example.
inline Polytope c1() { return Polytope({{1, 1}, {-1, 1}}); }
inline Polytope c2() { return Polytope({{1, -1}, {-1, -1}}); }
inline Polytope c3() { return Polytope({{1, 1}, {1, -1}}); }
inline Polytope c4() { return Polytope({{-1, 1}, {-1, -1}}); }

inline Expr lin(Vector c) { return Expr::atom(SmoothAtom::linear(c)); }

// 0.5 x1^2 + 0.5 x2^2 + s1 x1 + s2 x2
inline SmoothAtom quad(double s1, double s2) {
  return SmoothAtom(2, {{0.5, {2, 0}}, {0.5, {0, 2}}, {s1, {1, 0}}, {s2, {0, 1}}});
}

// |x1| - |x2|
inline Expr f_example() {
  return Expr::sum({Expr::max({lin({1, 0}), lin({-1, 0})}), Expr::min({lin({0, 1}), lin({0, -1})})});
}

inline Expr u_example() {
  return Expr::min({Expr::max({Expr::atom(quad(-1, -1)), Expr::atom(quad(-1, 1))}),
                    Expr::max({Expr::atom(quad(1, -1)), Expr::atom(quad(1, 1))})});
}

inline Vector origin() { return {0.0, 0.0}; }

inline std::vector<Vector> circle(int n, double offset = 0.0) {
  std::vector<Vector> out;
  for (int i = 0; i < n; ++i) {
    double t = offset + 2.0 * std::numbers::pi * i / n;
    out.push_back({std::cos(t), std::sin(t)});
  }
  return out;
}

inline Vector random_unit(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> n(0.0, 1.0);
  Vector g(dim);
  double s = 0.0;
  do {
    s = 0.0;
    for (auto& x : g) {
      x = n(rng);
      s += x * x;
    }
  } while (s < 1e-12);
  for (auto& x : g) x /= std::sqrt(s);
  return g;
}

inline Polytope random_polytope(std::mt19937_64& rng, int dim, int min_v, int max_v, int lo, int hi) {
  std::uniform_int_distribution<int> nv(min_v, max_v), c(lo, hi);
  std::vector<Vector> vs(nv(rng), Vector(dim));
  for (auto& v : vs)
    for (auto& x : v) x = c(rng);
  return Polytope(std::move(vs));
}

inline Exhauster random_family(std::mt19937_64& rng, ExhausterKind kind, int min_s, int max_s,
                               int max_v, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> ns(min_s, max_s);
  std::vector<Polytope> sets;
  int n = ns(rng);
  for (int i = 0; i < n; ++i) sets.push_back(random_polytope(rng, 2, 1, max_v, lo, hi));
  return Exhauster(kind, std::move(sets));
}

// Polynomial atom of degree <= 2 in `dim` variables, shifted to vanish at p
// when `tie` so that max/min nodes see ties there.
inline SmoothAtom random_atom(std::mt19937_64& rng, const Vector& p, bool tie) {
  const int dim = static_cast<int>(p.size());
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::vector<Monomial> terms;
  for (int i = 0; i < dim; ++i) {
    std::vector<int> e(dim, 0);
    e[i] = 1;
    terms.push_back({std::round(u(rng) * 4) / 4, e});
    e[i] = 2;
    terms.push_back({std::round(u(rng) * 2) / 4, e});
  }
  SmoothAtom probe(dim, terms);
  double c = tie ? -probe.eval(p) : u(rng);
  terms.push_back({c, std::vector<int>(dim, 0)});
  return SmoothAtom(dim, std::move(terms));
}

inline Expr random_expr(std::mt19937_64& rng, const Vector& p, int depth, int& atoms) {
  std::uniform_int_distribution<int> op(0, 4);
  std::bernoulli_distribution tie(0.8);
  if (depth <= 1 || atoms <= 1) {
    --atoms;
    return Expr::atom(random_atom(rng, p, tie(rng)));
  }
  int o = op(rng);
  if (o == 0) {
    --atoms;
    return Expr::atom(random_atom(rng, p, tie(rng)));
  }
  if (o == 1) {
    std::uniform_real_distribution<double> s(-2.0, 2.0);
    return Expr::scale(std::round(s(rng) * 4) / 4, random_expr(rng, p, depth - 1, atoms));
  }
  std::vector<Expr> kids;
  kids.push_back(random_expr(rng, p, depth - 1, atoms));
  if (atoms > 0) kids.push_back(random_expr(rng, p, depth - 1, atoms));
  if (o == 2) return Expr::sum(std::move(kids));
  if (o == 3) return Expr::max(std::move(kids));
  return Expr::min(std::move(kids));
}

// Depth <= 4 and at most 6 atoms.
inline Expr random_expr(std::mt19937_64& rng, const Vector& p) {
  int atoms = 6;
  return random_expr(rng, p, 4, atoms);
}

// Independent directional derivative of a piecewise-smooth function by a
// tiny one-sided quotient; exact up to O(a) for these expressions.
inline double tiny_quotient(const Expr& e, const Vector& x, const Vector& g, double a = 1e-7) {
  Vector y = x;
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * g[i];
  return (eval_expr(e, y) - eval_expr(e, x)) / a;
}

}  // namespace fx
