#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "exh/deriv.hpp"
#include "exh/geometry.hpp"

namespace exh {

enum class ExhausterKind { Upper, Lower };

std::string_view to_string(ExhausterKind k);
ExhausterKind exhauster_kind_from_string(std::string_view s);

// Upper: h(g) = min over sets of max over vertices of <v, g>.
// Lower: h(g) = max over sets of min over vertices of <v, g>.
class Exhauster {
 public:
  Exhauster(ExhausterKind kind, std::vector<Polytope> sets);

  ExhausterKind kind() const { return kind_; }
  int dim() const { return dim_; }
  const std::vector<Polytope>& sets() const { return sets_; }

 private:
  ExhausterKind kind_;
  int dim_;
  std::vector<Polytope> sets_;
};

enum class NormalForm { Cnf, Dnf };

using Clause = std::vector<Vector>;

// Cnf: clauses whose pointwise min of max equals `t`. Dnf: max of min.
// Throws CapExceeded when more than `clause_cap` clauses would be produced.
std::vector<Clause> normalize(const MinMaxTree& t, NormalForm target,
                              std::size_t clause_cap = 10'000);

Exhauster exhauster_from_tree(const MinMaxTree& t, ExhausterKind kind,
                              std::size_t clause_cap = 10'000);

double eval_exhauster(const Exhauster& e, std::span<const double> g);

bool polytopes_equal(const Polytope& a, const Polytope& b, double tol = kTol);
// Set-wise family comparison: same size and a perfect matching under polytopes_equal.
bool families_equal(std::span<const Polytope> a, std::span<const Polytope> b, double tol = kTol);

// 720 for dim 2, otherwise 10 * dim^2.
int default_reduction_samples(int dim);

// Seeded unit directions: evenly spaced on the circle (rotated by a seeded
// offset) for dim 2, normalized Gaussian draws otherwise.
std::vector<Vector> sample_directions(int dim, int count, std::uint64_t seed);

struct ReductionOptions {
  double tol = kTol;
  std::size_t max_combinations = 1'000'000;
};

// Greedy removal in index order. A set is dropped only if the sampled
// evaluation is unchanged and an exhaustive feasibility search finds no
// direction where the set was the unique minimizer (upper) or maximizer (lower).
Exhauster reduce_exhauster(const Exhauster& e, int samples, std::uint64_t seed,
                           const ReductionOptions& options = {});

}  // namespace exh
