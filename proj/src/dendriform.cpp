#include "conformal/dendriform.hpp"

namespace conformal {

namespace {

const Poly& kL() {
  static const Poly p = Poly::variable(var::L);
  return p;
}

const Poly& kM() {
  static const Poly p = Poly::variable(var::M);
  return p;
}

const Poly& kD() {
  static const Poly p = Poly::variable(var::D);
  return p;
}

ActionTable sum_table(const DendriformAlgebra& d) {
  ActionTable t = d.prec;
  const std::size_t n = d.rank();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) t.at(i, j, k) += d.succ.at(i, j, k);
    }
  }
  return t;
}

}  // namespace

DendriformAlgebra::DendriformAlgebra(FreeModule module_, ActionTable prec_,
                                     ActionTable succ_)
    : module(std::move(module_)), prec(std::move(prec_)), succ(std::move(succ_)) {
  const std::size_t n = module.rank();
  for (const ActionTable* t : {&prec, &succ}) {
    if (t->labels() != n || t->inputs() != n || t->outputs() != n) {
      throw InputError("dendriform table does not match the module rank");
    }
    check_table_variables(*t, var_set({var::L, var::D}), "dendriform table");
  }
}

Verdict check_dendriform(const DendriformAlgebra& d) {
  const std::size_t n = d.rank();
  const ActionTable star = sum_table(d);
  const auto& mod = d.module;
  Verdict v;
  for (std::size_t i = 0; i < n; ++i) {
    Element a = Element::basis(n, i);
    for (std::size_t j = 0; j < n; ++j) {
      Element b = Element::basis(n, j);
      for (std::size_t k = 0; k < n; ++k) {
        Element c = Element::basis(n, k);
        std::vector<std::string> idx{mod.label(i), mod.label(j), mod.label(k)};
        v.expect_equal("D1", idx, act(d.prec, act(d.prec, a, b, kL()), c, kL() + kM()),
                       act(d.prec, a, act(star, b, c, kM()), kL()), mod);
        v.expect_equal("D2", idx, act(d.prec, act(d.succ, a, b, kL()), c, kL() + kM()),
                       act(d.succ, a, act(d.prec, b, c, kM()), kL()), mod);
        v.expect_equal("D3", idx, act(d.succ, a, act(d.succ, b, c, kM()), kL()),
                       act(d.succ, act(star, a, b, kL()), c, kL() + kM()), mod);
      }
    }
  }
  return v;
}

ConformalAlgebra associated_associative(const DendriformAlgebra& d) {
  require("not a dendriform conformal algebra", "dendriform",
          check_dendriform(d));
  return ConformalAlgebra(d.module, sum_table(d));
}

Bimodule dendriform_bimodule(const DendriformAlgebra& d) {
  ConformalAlgebra A = associated_associative(d);
  const std::size_t n = d.rank();
  ActionTable right = ActionTable::square(n);
  const Substitution flip{{var::L, -kL() - kD()}};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = 0; q < n; ++q) {
        right.at(i, p, q) = d.prec.at(p, i, q).substitute(flip);
      }
    }
  }
  return Bimodule(A, d.module, d.succ, std::move(right));
}

DendriformAlgebra dendriform_from_o_operator(const Bimodule& bm,
                                             const ModuleMap& T0,
                                             bool transport) {
  require("T0 is not an O-operator", "o_operator", check_o_operator(T0, bm));
  const std::size_t m = bm.module.rank();
  if (!transport) {
    ActionTable prec = ActionTable::square(m), succ = ActionTable::square(m);
    for (std::size_t p = 0; p < m; ++p) {
      for (std::size_t q = 0; q < m; ++q) {
        Element gt = act(bm.left, T0.row(p), Element::basis(m, q), kL());
        Element lt = act(bm.right, T0.row(q), Element::basis(m, p), -kL() - kD());
        for (std::size_t k = 0; k < m; ++k) {
          succ.at(p, q, k) = gt[k];
          prec.at(p, q, k) = lt[k];
        }
      }
    }
    return DendriformAlgebra(bm.module, std::move(prec), std::move(succ));
  }

  if (!T0.is_invertible()) {
    throw InputError("transport needs T0 with a nonzero constant determinant");
  }
  const std::size_t n = bm.algebra.rank();
  ModuleMap inv = T0.inverse();
  ActionTable prec = ActionTable::square(n), succ = ActionTable::square(n);
  for (std::size_t i = 0; i < n; ++i) {
    Element a = Element::basis(n, i);
    for (std::size_t j = 0; j < n; ++j) {
      Element b = Element::basis(n, j);
      // a > b = T(l(a)_L T^{-1} b), a < b = T(r(b)_{-L-D} T^{-1} a)
      Element gt = T0.apply(act(bm.left, a, inv.row(j), kL()));
      Element lt = T0.apply(act(bm.right, b, inv.row(i), -kL() - kD()));
      for (std::size_t k = 0; k < n; ++k) {
        succ.at(i, j, k) = gt[k];
        prec.at(i, j, k) = lt[k];
      }
    }
  }
  return DendriformAlgebra(bm.algebra.module(), std::move(prec),
                           std::move(succ));
}

Solution canonical_solution(const DendriformAlgebra& d) {
  Bimodule bm = dendriform_bimodule(d);
  const std::size_t n = d.rank();
  ConformalAlgebra ambient = semidirect(dual_bimodule(bm));
  TensorElement r({2 * n, 2 * n});
  for (std::size_t i = 0; i < n; ++i) {
    r.add({i, n + i}, Poly(1));
    r.add({n + i, i}, Poly(-1));
  }
  return Solution{std::move(ambient), std::move(r)};
}

}  // namespace conformal
