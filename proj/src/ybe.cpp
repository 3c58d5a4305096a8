#include "conformal/ybe.hpp"

namespace conformal {

namespace {

const Poly& kL() {
  static const Poly p = Poly::variable(var::L);
  return p;
}

const Poly& kD() {
  static const Poly p = Poly::variable(var::D);
  return p;
}

const Poly& kX1() {
  static const Poly p = Poly::variable(var::x(1));
  return p;
}

const Poly& kX2() {
  static const Poly p = Poly::variable(var::x(2));
  return p;
}

void check_r(const ConformalAlgebra& A, const TensorElement& r) {
  if (r.ranks() != std::vector<std::size_t>{A.rank(), A.rank()}) {
    throw InputError("r must lie in A (x) A");
  }
}

// (I (x) L(a) - R(a) (x) I) t at pi, the coboundary operator.
TensorElement coboundary_op(const ActionTable& left, const ActionTable& right,
                            const TensorElement& t, const Element& a,
                            const Poly& pi) {
  return leg_action(t, 2, left, a, pi) - leg_action(t, 1, right, a, pi);
}

}  // namespace

Coproduct coboundary_coproduct(const ConformalAlgebra& A,
                               const TensorElement& r) {
  check_r(A, r);
  const std::size_t n = A.rank();
  const ActionTable right = regular_bimodule(A).right;
  std::vector<TensorElement> images;
  for (std::size_t k = 0; k < n; ++k) {
    images.push_back(
        coboundary_op(A.table(), right, r, Element::basis(n, k), -kX1() - kX2()));
  }
  return Coproduct(A.module(), std::move(images));
}

TensorElement r_bullet_r(const ConformalAlgebra& A, const TensorElement& r) {
  check_r(A, r);
  // r (x) r = r_i (x) l_i (x) r_j (x) l_j
  TensorElement rr = tensor_product(r, r);
  TensorElement term1 = leg_product(rr, 2, 4, 3, A.table(), kX1());
  TensorElement term2 = leg_product(rr, 3, 2, 2, A.table(), -kX1() - kX2());
  TensorElement term3 = leg_product(rr, 1, 3, 1, A.table(), kX2());
  return term1 - term2 + term3;
}

Report classify_r(const ConformalAlgebra& A, const TensorElement& r) {
  check_r(A, r);
  const std::size_t n = A.rank();
  const auto& mod = A.module();
  const ActionTable right = regular_bimodule(A).right;
  Report report;

  Verdict anti;
  anti.expect_equal("antisymmetric", {}, swap_legs(r, 1, 2), -r, {&mod, &mod});
  report.add("antisymmetric", std::move(anti));

  TensorElement rr = r_bullet_r(A, r);
  const Poly s3 = -slot_sum(3);
  Verdict qw1;
  for (std::size_t k = 0; k < n; ++k) {
    Element a = Element::basis(n, k);
    TensorElement t = leg_action(rr, 3, A.table(), a, s3) -
                      leg_action(rr, 1, right, a, s3);
    qw1.expect_equal("qw1", {mod.label(k)}, t, TensorElement(t.ranks()),
                     {&mod, &mod, &mod});
  }
  report.add("qw1", std::move(qw1));

  Verdict cybe;
  const std::vector<Var> slots{var::x(1), var::x(2), var::x(3)};
  for (const auto& [idx, c] : rr.terms()) {
    if (vanishes_on_hyperplane(c, slots)) continue;
    cybe.add({"cybe",
              {},
              {mod.label(idx[0]), mod.label(idx[1]), mod.label(idx[2])},
              restrict_to_hyperplane(c, slots)});
  }
  report.add("cybe", std::move(cybe));

  TensorElement s = r + swap_legs(r, 1, 2);
  const Poly outer = -kL() - kX1() - kX2();
  Verdict thq3;
  for (std::size_t i = 0; i < n; ++i) {
    TensorElement inner =
        coboundary_op(A.table(), right, s, Element::basis(n, i), -kX1() - kX2());
    for (std::size_t j = 0; j < n; ++j) {
      Element b = Element::basis(n, j);
      TensorElement t = leg_action(inner, 1, A.table(), b, outer) -
                        leg_action(inner, 2, right, b, outer);
      thq3.expect_equal("thq3", {mod.label(i), mod.label(j)}, t,
                        TensorElement({n, n}), {&mod, &mod});
    }
  }
  report.add("thq3", std::move(thq3));
  return report;
}

ConformalLinearMap chom_from_tensor(const TensorElement& r) {
  if (r.legs() != 2) throw InputError("Chom correspondence needs a 2-tensor");
  ConformalLinearMap T(r.ranks()[0], r.ranks()[1]);
  const Substitution s{{var::x(1), -kL() - kD()}, {var::x(2), kD()}};
  for (const auto& [idx, c] : r.terms()) T.at(idx[0], idx[1]) = c.substitute(s);
  return T;
}

TensorElement tensor_from_chom(const ConformalLinearMap& T) {
  TensorElement r({T.source_rank(), T.target_rank()});
  const Substitution s{{var::L, -kX1() - kX2()}, {var::D, kX2()}};
  for (std::size_t p = 0; p < T.source_rank(); ++p) {
    for (std::size_t q = 0; q < T.target_rank(); ++q) {
      r.add({p, q}, T.at(p, q).substitute(s));
    }
  }
  return r;
}

Verdict check_o_operator(const ModuleMap& T0, const Bimodule& bm) {
  const std::size_t n = bm.algebra.rank(), m = bm.module.rank();
  if (T0.source_rank() != m || T0.target_rank() != n) {
    throw InputError("O-operator must map the bimodule to the algebra");
  }
  require("not a bimodule", "bimodule", check_bimodule(bm));
  Verdict v;
  for (std::size_t p = 0; p < m; ++p) {
    Element u = Element::basis(m, p);
    Element tu = T0.row(p);
    for (std::size_t q = 0; q < m; ++q) {
      Element w = Element::basis(m, q);
      Element tw = T0.row(q);
      Element lhs = product(bm.algebra, tu, tw, kL());
      Element rhs = T0.apply(act(bm.left, tu, w, kL())) +
                    T0.apply(act(bm.right, tw, u, -kL() - kD()));
      v.expect_equal("o_operator", {bm.module.label(p), bm.module.label(q)},
                     lhs, rhs, bm.algebra.module());
    }
  }
  return v;
}

Verdict check_rota_baxter(const ModuleMap& T0, const ConformalAlgebra& A) {
  Verdict v = check_o_operator(T0, regular_bimodule(A));
  Verdict renamed;
  for (auto c : v.counterexamples()) {
    c.identity = "rota_baxter";
    renamed.add(std::move(c));
  }
  return renamed;
}

Solution solution_from_o_operator(const Bimodule& bm,
                                  const ConformalLinearMap& T) {
  const std::size_t n = bm.algebra.rank(), m = bm.module.rank();
  if (T.source_rank() != m || T.target_rank() != n) {
    throw InputError("T must map the bimodule to the algebra");
  }
  require("T_0 is not an O-operator", "o_operator",
          check_o_operator(T.at_zero(), bm));
  ConformalAlgebra ambient = semidirect(dual_bimodule(bm));
  TensorElement rt({n + m, n + m});
  const Substitution s{{var::L, -kX1() - kX2()}, {var::D, kX1()}};
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) rt.add({j, n + i}, T.at(i, j).substitute(s));
  }
  return Solution{std::move(ambient), rt - swap_legs(rt, 1, 2)};
}

RotaBaxterResult p_from_r(const ConformalAlgebra& A,
                          const ConformalBilinearForm& form,
                          const TensorElement& r) {
  check_r(A, r);
  require("the form is not a Frobenius form", check_frobenius(A, form));
  const std::size_t n = A.rank();
  ModuleMap phi(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      phi.at(i, j) = form.at(i, j).substitute({{var::L, -kD()}});
    }
  }
  ModuleMap p0 = phi.then(chom_from_tensor(r).at_zero());
  Verdict rb = check_rota_baxter(p0, A);
  return RotaBaxterResult{std::move(p0), std::move(rb)};
}

}  // namespace conformal
