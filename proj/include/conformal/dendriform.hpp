#pragma once

// Dendriform conformal algebras: two products whose sum is associative and
// which split associativity into three axioms.

#include "conformal/ybe.hpp"

namespace conformal {

struct DendriformAlgebra {
  DendriformAlgebra() = default;
  DendriformAlgebra(FreeModule module, ActionTable prec, ActionTable succ);

  FreeModule module;
  ActionTable prec;
  ActionTable succ;

  std::size_t rank() const { return module.rank(); }
  friend bool operator==(const DendriformAlgebra&,
                         const DendriformAlgebra&) = default;
};

/// Identities "D1" (a<b)<c = a<(b*c), "D2" (a>b)<c = a>(b<c),
/// "D3" a>(b>c) = (a*b)>c.
Verdict check_dendriform(const DendriformAlgebra& d);

/// Product prec + succ; refuses unless check_dendriform passes.
ConformalAlgebra associated_associative(const DendriformAlgebra& d);

/// (A, L_succ, R_prec) over the associated algebra; refuses as above.
Bimodule dendriform_bimodule(const DendriformAlgebra& d);

/// u > v = l(T0 u)_L v, u < v = r(T0 v)_{-L-D} u on M. With `transport`,
/// the structure is moved to A along T0 (which must have a unit
/// determinant). Refuses unless T0 is an O-operator.
DendriformAlgebra dendriform_from_o_operator(const Bimodule& bm,
                                             const ModuleMap& T0,
                                             bool transport = false);

/// Ambient A x| A^{*c} over the dual of (A, L_succ, R_prec) and
/// r = sum e_i (x) e_i^* - e_i^* (x) e_i.
Solution canonical_solution(const DendriformAlgebra& d);

}  // namespace conformal
