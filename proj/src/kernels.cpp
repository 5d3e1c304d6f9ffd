#include "exh/kernels.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>

#include "exh/errors.hpp"

namespace exh {

std::size_t combination_count(const ChoiceProduct& p, std::size_t cap) {
  std::size_t n = 1;
  for (const auto& g : p) {
    std::size_t k = g.alternatives.size();
    if (k == 0) return 0;
    if (n > (cap + 1) / k) return cap + 1;
    n *= k;
    if (n > cap) return cap + 1;
  }
  return n;
}

std::vector<LinearConstraint> combination(const ChoiceProduct& p, std::size_t index) {
  std::vector<std::size_t> digits(p.size());
  for (std::size_t k = p.size(); k-- > 0;) {
    std::size_t radix = p[k].alternatives.size();
    digits[k] = index % radix;
    index /= radix;
  }
  std::vector<LinearConstraint> out;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const auto& alt = p[k].alternatives[digits[k]];
    out.insert(out.end(), alt.begin(), alt.end());
  }
  return out;
}

namespace {

std::size_t full_count(const ChoiceProduct& p) {
  return combination_count(p, std::numeric_limits<std::size_t>::max() - 1);
}

void atomic_min(std::atomic<std::size_t>& a, std::size_t v) {
  std::size_t cur = a.load();
  while (v < cur && !a.compare_exchange_weak(cur, v)) {
  }
}

}  // namespace

SearchResult first_feasible_serial(const ChoiceProduct& p, int dim, const LpOptions& lp) {
  SearchResult out;
  const std::size_t n = full_count(p);
  for (std::size_t i = 0; i < n; ++i) {
    auto sys = combination(p, i);
    auto r = linear_feasibility(sys, dim, lp);
    if (r.feasible) {
      out.found = true;
      out.index = i;
      out.witness = std::move(r.witness);
      out.examined = i + 1;
      return out;
    }
    if (!verify_infeasibility(sys, r.farkas)) out.certified = false;
  }
  out.examined = n;
  return out;
}

SearchResult first_feasible_parallel(const ChoiceProduct& p, int dim, const LpOptions& lp) {
  const std::size_t n = full_count(p);
  std::atomic<std::size_t> best{n};
  std::atomic<std::size_t> first_uncertified{n};
  std::exception_ptr error;
  std::mutex error_mutex;

  const long long total = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 8)
  for (long long ii = 0; ii < total; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    if (i >= best.load()) continue;
    try {
      auto sys = combination(p, i);
      auto r = linear_feasibility(sys, dim, lp);
      if (r.feasible) {
        atomic_min(best, i);
      } else if (!verify_infeasibility(sys, r.farkas)) {
        atomic_min(first_uncertified, i);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);

  SearchResult out;
  const std::size_t b = best.load();
  out.certified = first_uncertified.load() >= b;
  if (b < n) {
    out.found = true;
    out.index = b;
    out.examined = b + 1;
    out.witness = linear_feasibility(combination(p, b), dim, lp).witness;
  } else {
    out.examined = n;
  }
  return out;
}

SearchResult first_feasible(const ChoiceProduct& p, int dim, const LpOptions& lp, bool parallel) {
  return parallel ? first_feasible_parallel(p, dim, lp) : first_feasible_serial(p, dim, lp);
}

namespace {

// Violation magnitude at one direction, or a negative value for none.
double violation_at(const MinMaxTree& f, const MinMaxTree& u, const Vector& g, OptSense sense,
                    double tol, double margin, double& fv, double& uv) {
  uv = eval_minmax(u, g);
  if (uv > tol) return -1.0;
  fv = eval_minmax(f, g);
  double amount = sense == OptSense::Min ? -fv : fv;
  return amount > margin ? amount : -1.0;
}

}  // namespace

OracleScan oracle_scan_serial(const MinMaxTree& f, const MinMaxTree& u,
                              std::span<const Vector> dirs, OptSense sense, double tol,
                              double margin) {
  OracleScan out;
  double best = -1.0;
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    double fv = 0.0;
    double uv = 0.0;
    double v = violation_at(f, u, dirs[i], sense, tol, margin, fv, uv);
    if (v > best) {
      best = v;
      out = {true, i, fv, uv};
    }
  }
  return out;
}

OracleScan oracle_scan_parallel(const MinMaxTree& f, const MinMaxTree& u,
                                std::span<const Vector> dirs, OptSense sense, double tol,
                                double margin) {
  const long long n = static_cast<long long>(dirs.size());
  std::vector<double> amount(dirs.size(), -1.0);
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < n; ++i) {
    double fv = 0.0;
    double uv = 0.0;
    amount[i] = violation_at(f, u, dirs[i], sense, tol, margin, fv, uv);
  }
  OracleScan out;
  double best = -1.0;
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    if (amount[i] > best) {
      best = amount[i];
      out.violated = true;
      out.index = i;
    }
  }
  if (out.violated) {
    out.u_value = eval_minmax(u, dirs[out.index]);
    out.f_value = eval_minmax(f, dirs[out.index]);
  }
  return out;
}

DeviationScan fd_deviation_serial(const Expr& e, std::span<const double> x, const MinMaxTree& t,
                                  std::span<const Vector> dirs) {
  DeviationScan out;
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    double d = std::abs(fd_directional_derivative(e, x, dirs[i]) - eval_minmax(t, dirs[i]));
    if (d > out.max_deviation) out = {d, i};
  }
  return out;
}

DeviationScan fd_deviation_parallel(const Expr& e, std::span<const double> x, const MinMaxTree& t,
                                    std::span<const Vector> dirs) {
  const long long n = static_cast<long long>(dirs.size());
  std::vector<double> dev(dirs.size(), 0.0);
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < n; ++i) {
    dev[i] = std::abs(fd_directional_derivative(e, x, dirs[i]) - eval_minmax(t, dirs[i]));
  }
  DeviationScan out;
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    if (dev[i] > out.max_deviation) out = {dev[i], i};
  }
  return out;
}

}  // namespace exh
