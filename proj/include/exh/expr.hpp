#pragma once

#include <span>
#include <vector>

#include "exh/geometry.hpp"

namespace exh {

struct Monomial {
  double coef = 0.0;
  std::vector<int> exponents;
};

// Polynomial in `dim` variables.
class SmoothAtom {
 public:
  SmoothAtom(int dim, std::vector<Monomial> terms);

  // Linear form <c, x>.
  static SmoothAtom linear(std::span<const double> c);

  int dim() const { return dim_; }
  const std::vector<Monomial>& terms() const { return terms_; }

  double eval(std::span<const double> x) const;
  Vector gradient(std::span<const double> x) const;

 private:
  int dim_;
  std::vector<Monomial> terms_;
};

Vector gradient(const SmoothAtom& a, std::span<const double> x);

// Expression over polynomial atoms closed under sum, scaling, max and min.
class Expr {
 public:
  enum class Op { Atom, Sum, Scale, Max, Min };

  static Expr atom(SmoothAtom a);
  static Expr sum(std::vector<Expr> args);
  static Expr scale(double coef, Expr arg);
  static Expr max(std::vector<Expr> args);
  static Expr min(std::vector<Expr> args);

  Op op() const { return op_; }
  int dim() const { return dim_; }
  const SmoothAtom& smooth() const;
  double coef() const { return coef_; }
  const std::vector<Expr>& args() const { return args_; }

  std::size_t atom_count() const;
  std::size_t depth() const;

 private:
  Expr(Op op, int dim) : op_(op), dim_(dim) {}
  static Expr nary(Op op, std::vector<Expr> args);

  Op op_;
  int dim_;
  double coef_ = 1.0;
  std::vector<SmoothAtom> atom_;  // exactly one element when op_ == Atom
  std::vector<Expr> args_;
};

double eval_expr(const Expr& e, std::span<const double> x);

}  // namespace exh
