#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "exh/arcs.hpp"
#include "exh/geometry.hpp"

namespace exh {

// Cone predicates on a direction g attached to one set C:
//   NotKPlus     min_v <v, g> <= 0   (closure of R^n \ K^+(C))
//   NotNegKPlus  max_v <v, g> >= 0   (closure of R^n \ -K^+(C))
//   KPlus        min_v <v, g> >= 0   (K^+(C))
//   NegKPlus     max_v <v, g> <= 0   (-K^+(C))
enum class AtomKind { NotKPlus, NotNegKPlus, KPlus, NegKPlus };

std::string_view to_string(AtomKind k);

struct RegionAtom {
  AtomKind kind;
  Polytope set;
};

enum class Combinator { Intersection, Union };

struct RegionExpr {
  Combinator combinator;
  std::vector<RegionAtom> atoms;

  int dim() const;
};

bool atom_membership(const RegionAtom& a, std::span<const double> g, double tol = kTol);
bool region_membership(const RegionExpr& r, std::span<const double> g, double tol = kTol);

// Exact angular trace of an atom (dim 2 only); boundary angles are
// atan2(v) +- pi/2 over the vertices.
ArcSet arcs_from_atom(const RegionAtom& a);
ArcSet arcs_from_region(const RegionExpr& r);

}  // namespace exh
