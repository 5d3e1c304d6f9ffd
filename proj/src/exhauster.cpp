#include "exh/exhauster.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <string>

#include "exh/arcs.hpp"
#include "exh/errors.hpp"
#include "exh/kernels.hpp"

namespace exh {

std::string_view to_string(ExhausterKind k) { return k == ExhausterKind::Upper ? "upper" : "lower"; }

ExhausterKind exhauster_kind_from_string(std::string_view s) {
  if (s == "upper") return ExhausterKind::Upper;
  if (s == "lower") return ExhausterKind::Lower;
  throw ParseError("exhauster kind must be \"upper\" or \"lower\", got \"" + std::string(s) + "\"");
}

Exhauster::Exhauster(ExhausterKind kind, std::vector<Polytope> sets)
    : kind_(kind), sets_(std::move(sets)) {
  if (sets_.empty()) throw DimensionError("exhauster: empty family");
  dim_ = sets_.front().dim();
  for (const auto& s : sets_) check_same_dim(s.dim(), dim_, "exhauster sets");
}

namespace {

// Clauses of the lattice normal form. `splits` is the node kind whose
// children concatenate; the other kind takes the product of children.
std::vector<Clause> normal_form(const MinMaxTree& t, MinMaxTree::Kind concat, std::size_t cap) {
  if (t.kind() == MinMaxTree::Kind::Leaf) return {Clause{t.form()}};
  if (t.kind() == concat) {
    std::vector<Clause> out;
    for (const auto& c : t.children()) {
      auto sub = normal_form(c, concat, cap);
      if (out.size() + sub.size() > cap) {
        throw CapExceeded("normalize: more than " + std::to_string(cap) + " clauses");
      }
      out.insert(out.end(), sub.begin(), sub.end());
    }
    return out;
  }
  std::vector<Clause> acc{Clause{}};
  for (const auto& c : t.children()) {
    auto sub = normal_form(c, concat, cap);
    if (acc.size() > cap / sub.size()) {
      throw CapExceeded("normalize: more than " + std::to_string(cap) + " clauses");
    }
    std::vector<Clause> next;
    next.reserve(acc.size() * sub.size());
    for (const auto& a : acc) {
      for (const auto& s : sub) {
        Clause merged = a;
        merged.insert(merged.end(), s.begin(), s.end());
        next.push_back(std::move(merged));
      }
    }
    acc = std::move(next);
  }
  return acc;
}

}  // namespace

std::vector<Clause> normalize(const MinMaxTree& t, NormalForm target, std::size_t clause_cap) {
  return normal_form(t, target == NormalForm::Cnf ? MinMaxTree::Kind::Min : MinMaxTree::Kind::Max,
                     clause_cap);
}

Exhauster exhauster_from_tree(const MinMaxTree& t, ExhausterKind kind, std::size_t clause_cap) {
  auto clauses =
      normalize(t, kind == ExhausterKind::Upper ? NormalForm::Cnf : NormalForm::Dnf, clause_cap);
  std::vector<Polytope> sets;
  sets.reserve(clauses.size());
  for (auto& c : clauses) sets.emplace_back(std::move(c));
  return Exhauster(kind, std::move(sets));
}

namespace {

double eval_family(ExhausterKind kind, const std::vector<const Polytope*>& sets,
                   std::span<const double> g) {
  const bool upper = kind == ExhausterKind::Upper;
  double best = 0.0;
  bool first = true;
  for (const Polytope* c : sets) {
    double v = support_value(*c, g, upper ? SupportMode::Max : SupportMode::Min);
    if (first) {
      best = v;
      first = false;
    } else {
      best = upper ? std::min(best, v) : std::max(best, v);
    }
  }
  return best;
}

}  // namespace

double eval_exhauster(const Exhauster& e, std::span<const double> g) {
  check_same_dim(g.size(), e.dim(), "eval_exhauster");
  std::vector<const Polytope*> sets;
  for (const auto& s : e.sets()) sets.push_back(&s);
  return eval_family(e.kind(), sets, g);
}

bool polytopes_equal(const Polytope& a, const Polytope& b, double tol) {
  if (a.dim() != b.dim()) return false;
  for (const auto& v : a.vertices()) {
    if (!hull_contains(b, v, tol)) return false;
  }
  for (const auto& v : b.vertices()) {
    if (!hull_contains(a, v, tol)) return false;
  }
  return true;
}

bool families_equal(std::span<const Polytope> a, std::span<const Polytope> b, double tol) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  std::function<bool(std::size_t)> match = [&](std::size_t i) {
    if (i == a.size()) return true;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (used[j] || !polytopes_equal(a[i], b[j], tol)) continue;
      used[j] = true;
      if (match(i + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  return match(0);
}

int default_reduction_samples(int dim) { return dim == 2 ? 720 : 10 * dim * dim; }

std::vector<Vector> sample_directions(int dim, int count, std::uint64_t seed) {
  std::vector<Vector> out;
  if (count <= 0) return out;
  out.reserve(count);
  std::mt19937_64 rng(seed);
  if (dim == 2) {
    std::uniform_real_distribution<double> u(0.0, kTwoPi / count);
    double offset = u(rng);
    for (int k = 0; k < count; ++k) out.push_back(direction(offset + kTwoPi * k / count));
    return out;
  }
  std::normal_distribution<double> n(0.0, 1.0);
  while (static_cast<int>(out.size()) < count) {
    Vector g(dim);
    for (double& v : g) v = n(rng);
    if (norm2(g) < 1e-12) continue;
    out.push_back(normalized(g));
  }
  return out;
}

namespace {

// Systems whose feasibility means dropping `d` from the family changes h.
ChoiceProduct removal_counterexample(ExhausterKind kind, const Polytope& d,
                                     const std::vector<const Polytope*>& rest) {
  ChoiceProduct p;
  for (const Polytope* c : rest) {
    ChoiceGroup group;
    for (const auto& w : c->vertices()) {
      std::vector<LinearConstraint> sys;
      for (const auto& v : d.vertices()) {
        Vector n(w.size());
        for (std::size_t k = 0; k < w.size(); ++k) {
          n[k] = kind == ExhausterKind::Upper ? w[k] - v[k] : v[k] - w[k];
        }
        sys.push_back({std::move(n), Sense::GeOne});
      }
      group.alternatives.push_back(std::move(sys));
    }
    p.push_back(std::move(group));
  }
  return p;
}

}  // namespace

Exhauster reduce_exhauster(const Exhauster& e, int samples, std::uint64_t seed,
                           const ReductionOptions& options) {
  if (samples < 1) throw Error("reduce_exhauster: samples must be at least 1");
  const auto dirs = sample_directions(e.dim(), samples, seed);
  std::vector<double> reference;
  reference.reserve(dirs.size());
  for (const auto& g : dirs) reference.push_back(eval_exhauster(e, g));

  std::vector<bool> kept(e.sets().size(), true);
  for (std::size_t d = 0; d < e.sets().size(); ++d) {
    std::vector<const Polytope*> rest;
    for (std::size_t j = 0; j < e.sets().size(); ++j) {
      if (j != d && kept[j]) rest.push_back(&e.sets()[j]);
    }
    if (rest.empty()) continue;

    bool unchanged = true;
    for (std::size_t i = 0; i < dirs.size() && unchanged; ++i) {
      double v = eval_family(e.kind(), rest, dirs[i]);
      unchanged = std::abs(v - reference[i]) <= options.tol * (1.0 + std::abs(reference[i]));
    }
    if (!unchanged) continue;

    auto product = removal_counterexample(e.kind(), e.sets()[d], rest);
    if (combination_count(product, options.max_combinations) > options.max_combinations) continue;
    LpOptions lp;
    lp.tol = options.tol;
    auto r = first_feasible(product, e.dim(), lp, true);
    if (!r.found && r.certified) kept[d] = false;
  }

  std::vector<Polytope> sets;
  for (std::size_t j = 0; j < e.sets().size(); ++j) {
    if (kept[j]) sets.push_back(e.sets()[j]);
  }
  return Exhauster(e.kind(), std::move(sets));
}

}  // namespace exh
