#pragma once

// r-matrices: coboundary coproducts, r.r and the conformal Yang-Baxter
// equation, the Chom correspondence and O-operators.

#include "conformal/bialgebra.hpp"

namespace conformal {

/// Delta(a) = (I (x) L(a)_L - R(a)_L (x) I) r at L = -(x1 + x2).
Coproduct coboundary_coproduct(const ConformalAlgebra& A,
                               const TensorElement& r);

/// r.r: term1 - term2 + term3 with the products in slots 3, 2, 1 at
/// mu = x1, -(x1 + x2), x2.
TensorElement r_bullet_r(const ConformalAlgebra& A, const TensorElement& r);

/// Parts "antisymmetric", "qw1", "cybe", "thq3"; all four are always
/// computed. cybe residuals are r.r restricted to x3 = -x1 - x2.
Report classify_r(const ConformalAlgebra& A, const TensorElement& r);

/// T^r on the dual of leg 1: T(e_p^*) = sum_q c_pq(-L-D, D) f_q.
ConformalLinearMap chom_from_tensor(const TensorElement& r);
/// The inverse: c_pq(x1, x2) = g_pq(-x1-x2, x2).
TensorElement tensor_from_chom(const ConformalLinearMap& T);

/// T(u)_L T(v) = T(l(Tu)_L v) + T(r(Tv)_{-L-D} u) on basis pairs of M.
/// Refuses unless bm passes check_bimodule.
Verdict check_o_operator(const ModuleMap& T0, const Bimodule& bm);
/// The regular-bimodule case.
Verdict check_rota_baxter(const ModuleMap& T0, const ConformalAlgebra& A);

struct Solution {
  ConformalAlgebra ambient;
  TensorElement r;
};

/// Ambient A x| M^{*c} for (M^{*c}, r^*, l^*) and r = r_T - tau r_T with
/// r_T = sum g_ij(-x1-x2, x1) e_j (x) v_i^*. Refuses unless T_0 is an
/// O-operator.
Solution solution_from_o_operator(const Bimodule& bm,
                                  const ConformalLinearMap& T);

struct RotaBaxterResult {
  ModuleMap p0;
  Verdict rota_baxter;
};

/// P_0 = T_0^r after phi(e_i) = sum_j B_ij(-D) e_j^*, with its Rota-Baxter
/// verdict. Refuses unless the form is a Frobenius form.
RotaBaxterResult p_from_r(const ConformalAlgebra& A,
                          const ConformalBilinearForm& form,
                          const TensorElement& r);

}  // namespace conformal
