#pragma once

// Small algebras used throughout the tests and by `examples`.

#include "conformal/dendriform.hpp"

namespace conformal::fixtures {

/// a _L a = (D^2 + L D + L^2) b, other products zero.
ConformalAlgebra hb2();
/// <a, b> = <b, a> = 1, <a, a> = <b, b> = 0.
ConformalBilinearForm hb2_form();

/// a _L a = p(L + D) b, other products zero; p is a polynomial in L.
ConformalAlgebra podd(const Poly& p);
/// Delta(a) = a (x) b, Delta(b) = b (x) b.
Coproduct podd_coproduct();

/// Rank one, a _L a = k a.
ConformalAlgebra rank1(const Rational& k);

/// Rank one, a > a = a and a < a = 0.
DendriformAlgebra dend_succ();
/// Rank one, a < a = a and a > a = 0.
DendriformAlgebra dend_prec();

/// Basis e1..en, all products zero.
ConformalAlgebra null(std::size_t n);

/// Cur of Q[x]/(x^2) on the basis u = 1, v = x.
ConformalAlgebra cur_dual2();

}  // namespace conformal::fixtures
