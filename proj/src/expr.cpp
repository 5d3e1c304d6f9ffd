#include "exh/expr.hpp"

#include <algorithm>
#include <cmath>

#include "exh/errors.hpp"

namespace exh {

SmoothAtom::SmoothAtom(int dim, std::vector<Monomial> terms) : dim_(dim), terms_(std::move(terms)) {
  if (dim_ <= 0) throw DimensionError("atom: dimension must be positive");
  for (const auto& t : terms_) {
    check_same_dim(t.exponents.size(), dim_, "atom exponents");
    if (!std::isfinite(t.coef)) throw DimensionError("atom: non-finite coefficient");
    for (int e : t.exponents) {
      if (e < 0) throw DimensionError("atom: negative exponent");
    }
  }
}

SmoothAtom SmoothAtom::linear(std::span<const double> c) {
  const int n = static_cast<int>(c.size());
  std::vector<Monomial> terms;
  for (int i = 0; i < n; ++i) {
    if (c[i] == 0.0) continue;
    std::vector<int> e(n, 0);
    e[i] = 1;
    terms.push_back({c[i], std::move(e)});
  }
  return SmoothAtom(n, std::move(terms));
}

namespace {

double ipow(double x, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

}  // namespace

double SmoothAtom::eval(std::span<const double> x) const {
  check_same_dim(x.size(), dim_, "atom eval");
  double s = 0.0;
  for (const auto& t : terms_) {
    double m = t.coef;
    for (int i = 0; i < dim_; ++i) m *= ipow(x[i], t.exponents[i]);
    s += m;
  }
  return s;
}

Vector SmoothAtom::gradient(std::span<const double> x) const {
  check_same_dim(x.size(), dim_, "atom gradient");
  Vector g(dim_, 0.0);
  for (const auto& t : terms_) {
    for (int k = 0; k < dim_; ++k) {
      int ek = t.exponents[k];
      if (ek == 0) continue;
      double m = t.coef * ek;
      for (int i = 0; i < dim_; ++i) m *= ipow(x[i], i == k ? ek - 1 : t.exponents[i]);
      g[k] += m;
    }
  }
  return g;
}

Vector gradient(const SmoothAtom& a, std::span<const double> x) { return a.gradient(x); }

Expr Expr::atom(SmoothAtom a) {
  Expr e(Op::Atom, a.dim());
  e.atom_.push_back(std::move(a));
  return e;
}

Expr Expr::nary(Op op, std::vector<Expr> args) {
  if (args.empty()) throw DimensionError("expr: sum/max/min needs at least one argument");
  Expr e(op, args.front().dim());
  for (const auto& a : args) check_same_dim(a.dim(), e.dim_, "expr children");
  e.args_ = std::move(args);
  return e;
}

Expr Expr::sum(std::vector<Expr> args) { return nary(Op::Sum, std::move(args)); }
Expr Expr::max(std::vector<Expr> args) { return nary(Op::Max, std::move(args)); }
Expr Expr::min(std::vector<Expr> args) { return nary(Op::Min, std::move(args)); }

Expr Expr::scale(double coef, Expr arg) {
  if (!std::isfinite(coef)) throw DimensionError("expr: non-finite scale");
  Expr e(Op::Scale, arg.dim());
  e.coef_ = coef;
  e.args_.push_back(std::move(arg));
  return e;
}

const SmoothAtom& Expr::smooth() const {
  if (op_ != Op::Atom) throw Error("expr: not an atom");
  return atom_.front();
}

std::size_t Expr::atom_count() const {
  if (op_ == Op::Atom) return 1;
  std::size_t n = 0;
  for (const auto& a : args_) n += a.atom_count();
  return n;
}

std::size_t Expr::depth() const {
  std::size_t d = 0;
  for (const auto& a : args_) d = std::max(d, a.depth());
  return d + 1;
}

double eval_expr(const Expr& e, std::span<const double> x) {
  check_same_dim(x.size(), e.dim(), "eval_expr");
  switch (e.op()) {
    case Expr::Op::Atom:
      return e.smooth().eval(x);
    case Expr::Op::Scale:
      return e.coef() * eval_expr(e.args().front(), x);
    case Expr::Op::Sum: {
      double s = 0.0;
      for (const auto& a : e.args()) s += eval_expr(a, x);
      return s;
    }
    case Expr::Op::Max:
    case Expr::Op::Min: {
      double best = eval_expr(e.args().front(), x);
      for (const auto& a : e.args()) {
        double v = eval_expr(a, x);
        best = e.op() == Expr::Op::Max ? std::max(best, v) : std::min(best, v);
      }
      return best;
    }
  }
  return 0.0;
}

}  // namespace exh
