#include "exh/region.hpp"

#include "exh/errors.hpp"

namespace exh {

std::string_view to_string(AtomKind k) {
  switch (k) {
    case AtomKind::NotKPlus:
      return "NotKPlus";
    case AtomKind::NotNegKPlus:
      return "NotNegKPlus";
    case AtomKind::KPlus:
      return "KPlus";
    case AtomKind::NegKPlus:
      return "NegKPlus";
  }
  return "?";
}

int RegionExpr::dim() const {
  if (atoms.empty()) throw DimensionError("region: no atoms");
  return atoms.front().set.dim();
}

bool atom_membership(const RegionAtom& a, std::span<const double> g, double tol) {
  check_same_dim(g.size(), a.set.dim(), "atom_membership");
  switch (a.kind) {
    case AtomKind::NotKPlus:
      return support_value(a.set, g, SupportMode::Min) <= tol;
    case AtomKind::NotNegKPlus:
      return support_value(a.set, g, SupportMode::Max) >= -tol;
    case AtomKind::KPlus:
      return support_value(a.set, g, SupportMode::Min) >= -tol;
    case AtomKind::NegKPlus:
      return support_value(a.set, g, SupportMode::Max) <= tol;
  }
  return false;
}

bool region_membership(const RegionExpr& r, std::span<const double> g, double tol) {
  const bool all = r.combinator == Combinator::Intersection;
  for (const auto& a : r.atoms) {
    bool in = atom_membership(a, g, tol);
    if (all && !in) return false;
    if (!all && in) return true;
  }
  return all;
}

ArcSet arcs_from_atom(const RegionAtom& a) {
  if (a.set.dim() != 2) throw DimensionError("arcs_from_atom: polytope must have dim 2");
  // NotKPlus / NegKPlus use the halfplanes <v, g> <= 0; the other two use >= 0.
  const bool nonpositive = a.kind == AtomKind::NotKPlus || a.kind == AtomKind::NegKPlus;
  const bool any_vertex = a.kind == AtomKind::NotKPlus || a.kind == AtomKind::NotNegKPlus;
  ArcSet acc = any_vertex ? ArcSet::empty() : ArcSet::full();
  for (const auto& v : a.set.vertices()) {
    ArcSet h = ArcSet::halfplane(v, nonpositive);
    acc = any_vertex ? acc.unite(h) : acc.intersect(h);
  }
  return acc;
}

ArcSet arcs_from_region(const RegionExpr& r) {
  const bool all = r.combinator == Combinator::Intersection;
  ArcSet acc = all ? ArcSet::full() : ArcSet::empty();
  for (const auto& a : r.atoms) {
    ArcSet s = arcs_from_atom(a);
    acc = all ? acc.intersect(s) : acc.unite(s);
  }
  return acc;
}

}  // namespace exh
