#include "exh/conditions.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "exh/errors.hpp"

namespace exh {
namespace {

struct CatalogEntry {
  ConditionId id;
  std::string_view name;
  OptSense sense;
  ExhausterKind f;
  std::optional<ExhausterKind> u;
};

constexpr auto U = ExhausterKind::Upper;
constexpr auto L = ExhausterKind::Lower;

const std::array<CatalogEntry, 12> kCatalog = {{
    {ConditionId::MinUpperLower, "MIN_UPPER_LOWER", OptSense::Min, U, L},
    {ConditionId::MinUpperUpper, "MIN_UPPER_UPPER", OptSense::Min, U, U},
    {ConditionId::MinLowerLower, "MIN_LOWER_LOWER", OptSense::Min, L, L},
    {ConditionId::MinLowerUpper, "MIN_LOWER_UPPER", OptSense::Min, L, U},
    {ConditionId::MaxLowerLower, "MAX_LOWER_LOWER", OptSense::Max, L, L},
    {ConditionId::MaxLowerUpper, "MAX_LOWER_UPPER", OptSense::Max, L, U},
    {ConditionId::MaxUpperLower, "MAX_UPPER_LOWER", OptSense::Max, U, L},
    {ConditionId::MaxUpperUpper, "MAX_UPPER_UPPER", OptSense::Max, U, U},
    {ConditionId::UncMinUpper, "UNC_MIN_UPPER", OptSense::Min, U, std::nullopt},
    {ConditionId::UncMinLower, "UNC_MIN_LOWER", OptSense::Min, L, std::nullopt},
    {ConditionId::UncMaxLower, "UNC_MAX_LOWER", OptSense::Max, L, std::nullopt},
    {ConditionId::UncMaxUpper, "UNC_MAX_UPPER", OptSense::Max, U, std::nullopt},
}};

const CatalogEntry& entry(ConditionId id) { return kCatalog[static_cast<std::size_t>(id)]; }

std::string family_name(ExhausterKind k, char fn) {
  return std::string(k == U ? "E^*(" : "E_*(") + fn + ")";
}

std::string format_vector(const Vector& v) {
  std::ostringstream os;
  os.precision(12);
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ")";
  return os.str();
}

}  // namespace

std::string_view to_string(ConditionId id) { return entry(id).name; }

ConditionId condition_from_string(std::string_view s) {
  for (const auto& e : kCatalog) {
    if (e.name == s) return e.id;
  }
  throw ParseError("unknown condition id \"" + std::string(s) + "\"");
}

bool is_constrained(ConditionId id) { return entry(id).u.has_value(); }
OptSense sense_of(ConditionId id) { return entry(id).sense; }
ExhausterKind objective_kind(ConditionId id) { return entry(id).f; }
std::optional<ExhausterKind> constraint_kind(ConditionId id) { return entry(id).u; }

std::string reading_of(ConditionId id) {
  const auto& e = entry(id);
  const bool min = e.sense == OptSense::Min;
  // Upper exhausters are proper for minimization, lower ones for maximization.
  const bool proper = (e.f == U) == min;
  std::string out = min ? "minimum; " : "maximum; ";
  out += proper ? "proper (" : "adjoint (";
  out += std::string(to_string(e.f)) + ") exhauster of f";
  if (e.u) {
    out += ", " + std::string(to_string(*e.u)) + " exhauster of u";
  } else {
    out += ", unconstrained";
  }
  return out;
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Holds:
      return "holds";
    case Status::Violated:
      return "violated";
    case Status::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::Exact2d:
      return "exact2d";
    case Method::LpEnumeration:
      return "lp_enumeration";
    case Method::Sampled:
      return "sampled";
  }
  return "?";
}

Status status_from_string(std::string_view s) {
  for (Status v : {Status::Holds, Status::Violated, Status::Inconclusive}) {
    if (to_string(v) == s) return v;
  }
  throw ParseError("unknown status \"" + std::string(s) + "\"");
}

Method method_from_string(std::string_view s) {
  for (Method v : {Method::Exact2d, Method::LpEnumeration, Method::Sampled}) {
    if (to_string(v) == s) return v;
  }
  throw ParseError("unknown method \"" + std::string(s) + "\"");
}

BuiltCondition build_condition(ConditionId id, const Exhauster& ef, const Exhauster* eu) {
  const auto& e = entry(id);
  if (ef.kind() != e.f) {
    throw KindMismatch(std::string(e.name) + " needs the " + std::string(to_string(e.f)) +
                       " exhauster of f, got " + std::string(to_string(ef.kind())));
  }
  BuiltCondition out{id, std::nullopt, {}};
  if (!e.u) {
    const bool origin_test = (e.sense == OptSense::Min) == (e.f == U);
    if (origin_test) {
      out.description = "0 in C for every C in " + family_name(e.f, 'f');
    } else {
      out.description = "for every g there is C in " + family_name(e.f, 'f') + " with <v,g> " +
                        (e.sense == OptSense::Min ? ">= 0" : "<= 0") + " for all v in C";
    }
    return out;
  }
  if (eu == nullptr) throw KindMismatch(std::string(e.name) + " needs an exhauster of u");
  if (eu->kind() != *e.u) {
    throw KindMismatch(std::string(e.name) + " needs the " + std::string(to_string(*e.u)) +
                       " exhauster of u, got " + std::string(to_string(eu->kind())));
  }
  check_same_dim(ef.dim(), eu->dim(), "build_condition");

  ConditionSides sides{{Combinator::Intersection, {}}, {Combinator::Intersection, {}}};
  std::string lhs_text;
  std::string rhs_text;
  if (*e.u == L) {
    for (const auto& c : eu->sets()) sides.lhs.atoms.push_back({AtomKind::NotKPlus, c});
    lhs_text = "intersection over E_*(u) of cl{R^n \\ K+(C)}";
  } else {
    sides.lhs.combinator = Combinator::Union;
    for (const auto& c : eu->sets()) sides.lhs.atoms.push_back({AtomKind::NegKPlus, c});
    lhs_text = "union over E^*(u) of -K+(C)";
  }
  AtomKind rhs_atom = AtomKind::NotNegKPlus;
  if (e.sense == OptSense::Min && e.f == U) {
    rhs_atom = AtomKind::NotNegKPlus;
    rhs_text = "intersection over E^*(f) of cl{R^n \\ (-K+(C))}";
  } else if (e.sense == OptSense::Min) {
    rhs_atom = AtomKind::KPlus;
    sides.rhs.combinator = Combinator::Union;
    rhs_text = "union over E_*(f) of K+(C)";
  } else if (e.f == L) {
    rhs_atom = AtomKind::NotKPlus;
    rhs_text = "intersection over E_*(f) of cl{R^n \\ K+(C)}";
  } else {
    rhs_atom = AtomKind::NegKPlus;
    sides.rhs.combinator = Combinator::Union;
    rhs_text = "union over E^*(f) of -K+(C)";
  }
  for (const auto& c : ef.sets()) sides.rhs.atoms.push_back({rhs_atom, c});
  out.sides = std::move(sides);
  out.description = lhs_text + " is contained in " + rhs_text;
  return out;
}

namespace {

// Membership systems (nonstrict) for one atom, one alternative per way the
// predicate can be met.
std::vector<std::vector<LinearConstraint>> member_alternatives(const RegionAtom& a) {
  std::vector<std::vector<LinearConstraint>> alts;
  const auto& vs = a.set.vertices();
  switch (a.kind) {
    case AtomKind::NotKPlus:
      for (const auto& v : vs) alts.push_back({{v, Sense::LeZero}});
      break;
    case AtomKind::NotNegKPlus:
      for (const auto& v : vs) alts.push_back({{v, Sense::GeZero}});
      break;
    case AtomKind::KPlus: {
      std::vector<LinearConstraint> sys;
      for (const auto& v : vs) sys.push_back({v, Sense::GeZero});
      alts.push_back(std::move(sys));
      break;
    }
    case AtomKind::NegKPlus: {
      std::vector<LinearConstraint> sys;
      for (const auto& v : vs) sys.push_back({v, Sense::LeZero});
      alts.push_back(std::move(sys));
      break;
    }
  }
  return alts;
}

// Systems for the complement of one atom, with unit margins.
std::vector<std::vector<LinearConstraint>> complement_alternatives(const RegionAtom& a) {
  std::vector<std::vector<LinearConstraint>> alts;
  const auto& vs = a.set.vertices();
  switch (a.kind) {
    case AtomKind::NotKPlus: {
      std::vector<LinearConstraint> sys;
      for (const auto& v : vs) sys.push_back({v, Sense::GeOne});
      alts.push_back(std::move(sys));
      break;
    }
    case AtomKind::NotNegKPlus: {
      std::vector<LinearConstraint> sys;
      for (const auto& v : vs) sys.push_back({v, Sense::LeMinusOne});
      alts.push_back(std::move(sys));
      break;
    }
    case AtomKind::KPlus:
      for (const auto& v : vs) alts.push_back({{v, Sense::LeMinusOne}});
      break;
    case AtomKind::NegKPlus:
      for (const auto& v : vs) alts.push_back({{v, Sense::GeOne}});
      break;
  }
  return alts;
}

void append_product(ChoiceProduct& p, const RegionExpr& r, bool complement) {
  // Intersection of members (or union of complements) multiplies groups;
  // the dual pairing puts every alternative into a single group.
  const bool per_atom = (r.combinator == Combinator::Intersection) != complement;
  if (per_atom) {
    for (const auto& a : r.atoms) {
      p.push_back({complement ? complement_alternatives(a) : member_alternatives(a)});
    }
    return;
  }
  ChoiceGroup group;
  for (const auto& a : r.atoms) {
    auto alts = complement ? complement_alternatives(a) : member_alternatives(a);
    for (auto& s : alts) group.alternatives.push_back(std::move(s));
  }
  p.push_back(std::move(group));
}

std::vector<std::string> degeneracy_warnings(const RegionExpr& r, const char* side,
                                             double tol) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < r.atoms.size(); ++i) {
    const auto& a = r.atoms[i];
    if (a.kind != AtomKind::NotKPlus && a.kind != AtomKind::NotNegKPlus) continue;
    if (contains_origin(a.set, tol)) {
      out.push_back(std::string(side) + " set #" + std::to_string(i) +
                    " contains the origin; its closure-of-complement atom covers every direction");
    }
  }
  return out;
}

// lhs true and rhs false at g, both under the tolerant predicates.
bool witness_rechecks(const RegionExpr& lhs, const RegionExpr& rhs, const Vector& g, double tol) {
  return region_membership(lhs, g, tol) && !region_membership(rhs, g, tol);
}

Verdict inclusion_exact2d(const RegionExpr& lhs, const RegionExpr& rhs, const CheckOptions& opt) {
  Verdict v;
  v.method = Method::Exact2d;
  ArcSet a = arcs_from_region(lhs);
  ArcSet b = arcs_from_region(rhs);
  auto r = arcset_subset(a, b);
  if (r.holds) {
    v.status = Status::Holds;
    v.certificate = "angular trace of lhs (" + std::to_string(a.arcs().size()) +
                    " arcs) is covered by rhs (" + std::to_string(b.arcs().size()) + " arcs)";
    return v;
  }
  Vector g = direction(*r.witness);
  v.witness = g;
  if (witness_rechecks(lhs, rhs, g, opt.tol)) {
    v.status = Status::Violated;
    v.certificate = "direction at angle " + std::to_string(*r.witness) +
                    " lies in lhs but not in rhs";
  } else {
    v.status = Status::Inconclusive;
    v.certificate = "uncovered angle " + std::to_string(*r.witness) + " failed the membership re-check";
  }
  return v;
}

Verdict inclusion_lp(const RegionExpr& lhs, const RegionExpr& rhs, const CheckOptions& opt) {
  Verdict v;
  v.method = Method::LpEnumeration;
  ChoiceProduct p;
  append_product(p, lhs, false);
  append_product(p, rhs, true);
  std::size_t n = combination_count(p, opt.max_combinations);
  if (n > opt.max_combinations) {
    v.status = Status::Inconclusive;
    v.certificate = "more than " + std::to_string(opt.max_combinations) +
                    " witness systems; raise --max-combinations";
    return v;
  }
  LpOptions lp;
  lp.tol = opt.tol;
  auto r = first_feasible(p, lhs.dim(), lp, opt.parallel);
  if (!r.found) {
    v.status = r.certified ? Status::Holds : Status::Inconclusive;
    v.certificate = "all " + std::to_string(r.examined) + " systems for lhs \\ rhs are infeasible" +
                    (r.certified ? " (Farkas certificates verified)"
                                 : " (some Farkas certificates did not verify)");
    return v;
  }
  Vector g = normalized(r.witness);
  v.witness = g;
  if (witness_rechecks(lhs, rhs, g, opt.tol)) {
    v.status = Status::Violated;
    v.certificate = "system #" + std::to_string(r.index) + " of " + std::to_string(n) +
                    " is feasible; witness " + format_vector(r.witness);
  } else {
    v.status = Status::Inconclusive;
    v.certificate = "feasible system #" + std::to_string(r.index) +
                    " produced a witness that failed the membership re-check";
  }
  return v;
}

}  // namespace

Verdict inclusion_check(const RegionExpr& lhs, const RegionExpr& rhs, const CheckOptions& options) {
  check_same_dim(lhs.dim(), rhs.dim(), "inclusion_check");
  for (const auto& a : lhs.atoms) check_same_dim(a.set.dim(), lhs.dim(), "inclusion_check");
  for (const auto& a : rhs.atoms) check_same_dim(a.set.dim(), lhs.dim(), "inclusion_check");
  InclusionMethod m = options.method;
  if (m == InclusionMethod::Auto) {
    m = lhs.dim() == 2 ? InclusionMethod::Exact2d : InclusionMethod::LpEnumeration;
  }
  if (m == InclusionMethod::Exact2d && lhs.dim() != 2) {
    throw DimensionError("inclusion_check: exact2d needs dimension 2");
  }
  Verdict v = m == InclusionMethod::Exact2d ? inclusion_exact2d(lhs, rhs, options)
                                            : inclusion_lp(lhs, rhs, options);
  for (auto& w : degeneracy_warnings(lhs, "lhs", options.tol)) v.warnings.push_back(std::move(w));
  for (auto& w : degeneracy_warnings(rhs, "rhs", options.tol)) v.warnings.push_back(std::move(w));
  return v;
}

Verdict check_unconstrained(ConditionId id, const Exhauster& e, const CheckOptions& options) {
  if (is_constrained(id)) throw KindMismatch(std::string(to_string(id)) + " is constrained");
  build_condition(id, e, nullptr);  // kind check
  const auto& ent = entry(id);
  Verdict v;
  v.method = Method::LpEnumeration;
  LpOptions lp;
  lp.tol = options.tol;

  const bool origin_test = (ent.sense == OptSense::Min) == (ent.f == U);
  if (origin_test) {
    for (std::size_t i = 0; i < e.sets().size(); ++i) {
      const auto& c = e.sets()[i];
      if (contains_origin(c, options.tol)) continue;
      std::vector<LinearConstraint> sep;
      for (const auto& vtx : c.vertices()) sep.push_back({vtx, Sense::GeOne});
      auto r = linear_feasibility(sep, c.dim(), lp);
      v.status = Status::Violated;
      v.witness = normalized(r.witness);
      v.certificate = "0 is not in set #" + std::to_string(i) + "; <v,g> >= 1 on all its vertices for g = " +
                      format_vector(r.witness);
      return v;
    }
    v.status = Status::Holds;
    v.certificate = "0 lies in all " + std::to_string(e.sets().size()) + " sets";
    return v;
  }

  // Counterexample: a direction where every set has a vertex strictly on the
  // wrong side.
  const Sense wrong = ent.sense == OptSense::Min ? Sense::LeMinusOne : Sense::GeOne;
  ChoiceProduct p;
  for (const auto& c : e.sets()) {
    ChoiceGroup g;
    for (const auto& vtx : c.vertices()) g.alternatives.push_back({{vtx, wrong}});
    p.push_back(std::move(g));
  }
  std::size_t n = combination_count(p, options.max_combinations);
  if (n > options.max_combinations) {
    v.status = Status::Inconclusive;
    v.certificate = "more than " + std::to_string(options.max_combinations) + " vertex selections";
    return v;
  }
  auto r = first_feasible(p, e.dim(), lp, options.parallel);
  if (r.found) {
    v.status = Status::Violated;
    v.witness = normalized(r.witness);
    v.certificate = "selection #" + std::to_string(r.index) + " is feasible: every set has a vertex with <v,g> " +
                    (ent.sense == OptSense::Min ? "< 0" : "> 0") + " at g = " + format_vector(r.witness);
  } else {
    v.status = r.certified ? Status::Holds : Status::Inconclusive;
    v.certificate = "all " + std::to_string(r.examined) + " vertex selections are infeasible" +
                    (r.certified ? " (Farkas certificates verified)" : " (unverified certificates)");
  }
  return v;
}

Verdict check_condition(ConditionId id, const Exhauster& ef, const Exhauster* eu,
                        const CheckOptions& options) {
  if (!is_constrained(id)) return check_unconstrained(id, ef, options);
  auto built = build_condition(id, ef, eu);
  return inclusion_check(built.sides->lhs, built.sides->rhs, options);
}

namespace {

int sign_of(double v, double tol) { return v < -tol ? -1 : (v > tol ? 1 : 0); }

Verdict regularity_exact2d(const MinMaxTree& u, double tol) {
  Verdict v;
  v.method = Method::Exact2d;
  std::vector<double> cuts;
  for (const auto& l : u.leaves()) {
    if (l[0] == 0.0 && l[1] == 0.0) continue;
    double phi = std::atan2(l[1], l[0]);
    cuts.push_back(wrap_angle(phi + std::numbers::pi / 2.0));
    cuts.push_back(wrap_angle(phi - std::numbers::pi / 2.0));
  }
  std::sort(cuts.begin(), cuts.end());
  std::vector<double> uniq;
  for (double c : cuts) {
    if (uniq.empty() || c - uniq.back() > kAngularTol) uniq.push_back(c);
  }
  if (uniq.size() >= 2 && uniq.front() + kTwoPi - uniq.back() <= kAngularTol) uniq.pop_back();

  auto sign_at = [&](double theta) { return sign_of(eval_minmax(u, direction(theta)), tol); };

  if (uniq.empty()) {
    int s = sign_at(0.0);
    if (s < 0) {
      v.status = Status::Holds;
      v.certificate = "h_u < 0 on every direction";
    } else if (s == 0) {
      v.status = Status::Violated;
      v.witness = direction(0.0);
      v.certificate = "h_u vanishes identically; K_< is empty while K_<= is the whole space";
    } else {
      v.status = Status::Violated;
      v.witness = Vector(2, 0.0);
      v.certificate = "h_u > 0 on every direction; K_< is empty while K_<= = {0}";
    }
    return v;
  }

  const std::size_t n = uniq.size();
  std::vector<int> sector(n);  // sector k spans (uniq[k], uniq[k+1])
  for (std::size_t k = 0; k < n; ++k) {
    double lo = uniq[k];
    double hi = k + 1 < n ? uniq[k + 1] : uniq.front() + kTwoPi;
    sector[k] = sign_at(0.5 * (lo + hi));
    if (sector[k] == 0) {
      v.status = Status::Violated;
      v.witness = direction(0.5 * (lo + hi));
      v.certificate = "h_u vanishes on the open sector (" + std::to_string(lo) + ", " +
                      std::to_string(hi) + ")";
      return v;
    }
  }
  bool any_negative = false;
  for (std::size_t k = 0; k < n; ++k) {
    int s = sign_at(uniq[k]);
    int before = sector[(k + n - 1) % n];
    int after = sector[k];
    any_negative = any_negative || s < 0 || after < 0;
    if (s == 0 && before > 0 && after > 0) {
      v.status = Status::Violated;
      v.witness = direction(uniq[k]);
      v.certificate = "h_u = 0 at angle " + std::to_string(uniq[k]) +
                      " with h_u > 0 on both neighbouring sectors";
      return v;
    }
  }
  if (!any_negative) {
    v.status = Status::Violated;
    v.witness = Vector(2, 0.0);
    v.certificate = "h_u > 0 on every direction; K_< is empty while K_<= = {0}";
    return v;
  }
  v.status = Status::Holds;
  v.certificate = "every zero of h_u among " + std::to_string(n) +
                  " breakpoints borders a sector where h_u < 0";
  return v;
}

// Orthonormal basis of the complement of g (Gram-Schmidt on the axes).
std::vector<Vector> tangent_basis(const Vector& g) {
  std::vector<Vector> basis;
  const std::size_t n = g.size();
  for (std::size_t i = 0; i < n && basis.size() + 1 < n; ++i) {
    Vector e(n, 0.0);
    e[i] = 1.0;
    double d = dot(e, g);
    for (std::size_t k = 0; k < n; ++k) e[k] -= d * g[k];
    for (const auto& b : basis) {
      double c = dot(e, b);
      for (std::size_t k = 0; k < n; ++k) e[k] -= c * b[k];
    }
    if (norm2(e) > 1e-8) basis.push_back(normalized(e));
  }
  return basis;
}

Verdict regularity_sampled(const MinMaxTree& u, const RegularityOptions& opt) {
  Verdict v;
  v.method = Method::Sampled;
  const int dim = u.dim();
  auto samples = sample_directions(dim, opt.samples, opt.seed);
  // h_u equals one of its leaf forms everywhere, so its zeros lie on the
  // leaf kernels; project part of the sample onto each of them.
  std::vector<Vector> candidates;
  for (const auto& l : u.leaves()) {
    double ll = dot(l, l);
    if (ll == 0.0) continue;
    for (std::size_t i = 0; i < samples.size() && i < 64; ++i) {
      Vector g = samples[i];
      double c = dot(g, l) / ll;
      for (int k = 0; k < dim; ++k) g[k] -= c * l[k];
      if (norm2(g) > 1e-8) candidates.push_back(normalized(g));
    }
  }
  candidates.insert(candidates.end(), samples.begin(), samples.end());

  std::mt19937_64 rng(opt.seed ^ 0x9e3779b97f4a7c15ULL);
  std::normal_distribution<double> normal(0.0, 1.0);
  bool any_negative = false;
  std::size_t zeros = 0;
  for (const auto& g : candidates) {
    double h = eval_minmax(u, g);
    if (h < -opt.tol) any_negative = true;
    if (std::abs(h) > opt.tol) continue;
    ++zeros;
    std::vector<Vector> moves;
    for (const auto& b : tangent_basis(g)) {
      moves.push_back(b);
      Vector m = b;
      for (double& x : m) x = -x;
      moves.push_back(std::move(m));
    }
    for (int r = 0; r < 2 * dim; ++r) {
      Vector m(dim);
      for (double& x : m) x = normal(rng);
      moves.push_back(normalized(m));
    }
    bool approached = true;
    for (double radius : {1e-4, 1e-6}) {
      bool found = false;
      for (const auto& m : moves) {
        Vector p = g;
        for (int k = 0; k < dim; ++k) p[k] += radius * m[k];
        // Homogeneity: compare against a threshold scaled with the radius.
        if (eval_minmax(u, p) < -opt.tol * radius) {
          found = true;
          break;
        }
      }
      approached = approached && found;
    }
    if (!approached) {
      v.status = Status::Violated;
      v.witness = g;
      v.certificate = "h_u(g) = 0 but no nearby direction with h_u < 0 was found";
      return v;
    }
  }
  if (!any_negative) {
    v.status = Status::Violated;
    v.witness = Vector(dim, 0.0);
    v.certificate = "no sampled direction has h_u < 0";
    return v;
  }
  v.status = Status::Inconclusive;
  v.certificate = "no violation among " + std::to_string(candidates.size()) + " directions (" +
                  std::to_string(zeros) + " on the zero set)";
  return v;
}

}  // namespace

Verdict regularity_check(const MinMaxTree& u, const RegularityOptions& options) {
  return u.dim() == 2 ? regularity_exact2d(u, options.tol) : regularity_sampled(u, options);
}

Verdict necessary_condition_oracle(const MinMaxTree& f, const MinMaxTree& u, OptSense sense,
                                   int samples, std::uint64_t seed, std::span<const Vector> extra,
                                   const OracleOptions& options) {
  if (samples < 1) throw Error("necessary_condition_oracle: samples must be at least 1");
  check_same_dim(f.dim(), u.dim(), "necessary_condition_oracle");
  std::vector<Vector> dirs;
  for (const auto& g : extra) {
    check_same_dim(g.size(), f.dim(), "necessary_condition_oracle");
    if (norm2(g) > 0.0) dirs.push_back(normalized(g));
  }
  auto sampled = sample_directions(f.dim(), samples, seed);
  dirs.insert(dirs.end(), sampled.begin(), sampled.end());

  auto scan = options.parallel
                  ? oracle_scan_parallel(f, u, dirs, sense, options.tol, options.margin)
                  : oracle_scan_serial(f, u, dirs, sense, options.tol, options.margin);
  Verdict v;
  v.method = Method::Sampled;
  if (scan.violated) {
    v.status = Status::Violated;
    v.witness = dirs[scan.index];
    std::ostringstream os;
    os.precision(12);
    os << "direction #" << scan.index << " of " << dirs.size() << ": h_u = " << scan.u_value
       << ", h_f = " << scan.f_value;
    v.certificate = os.str();
  } else {
    v.status = Status::Inconclusive;
    v.certificate = "no violating direction among " + std::to_string(dirs.size()) + " samples";
  }
  return v;
}

}  // namespace exh
