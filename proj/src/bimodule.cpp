#include "conformal/bimodule.hpp"

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

void check_action_shape(const ActionTable& t, std::size_t labels,
                        std::size_t module_rank, const std::string& what) {
  if (t.labels() != labels || t.inputs() != module_rank ||
      t.outputs() != module_rank) {
    throw InputError(what + " table has the wrong shape");
  }
  check_table_variables(t, var_set({var::L, var::D}), what + " table");
}

}  // namespace

Bimodule::Bimodule(ConformalAlgebra algebra_, FreeModule module_,
                   ActionTable left_, ActionTable right_)
    : algebra(std::move(algebra_)),
      module(std::move(module_)),
      left(std::move(left_)),
      right(std::move(right_)) {
  check_action_shape(left, algebra.rank(), module.rank(), "left action");
  check_action_shape(right, algebra.rank(), module.rank(), "right action");
}

Bimodule zero_bimodule(const ConformalAlgebra& A, const FreeModule& module) {
  ActionTable z(A.rank(), module.rank(), module.rank());
  return Bimodule(A, module, z, z);
}

Verdict check_bimodule(const Bimodule& bm) {
  const std::size_t n = bm.algebra.rank();
  const std::size_t m = bm.module.rank();
  const auto& lab = bm.algebra.module();
  Verdict v;
  for (std::size_t i = 0; i < n; ++i) {
    Element a = Element::basis(n, i);
    for (std::size_t j = 0; j < n; ++j) {
      Element b = Element::basis(n, j);
      Element ab_l = product(bm.algebra, a, b, kL());
      Element ab_m = product(bm.algebra, a, b, kM());
      for (std::size_t p = 0; p < m; ++p) {
        Element w = Element::basis(m, p);
        std::vector<std::string> idx{lab.label(i), lab.label(j),
                                     bm.module.label(p)};
        // l(a _L b)_{L+M} v = l(a)_L (l(b)_M v)
        v.expect_equal("LM2", idx, act(bm.left, ab_l, w, kL() + kM()),
                       act(bm.left, a, act(bm.left, b, w, kM()), kL()), bm.module);
        // r(b)_{-L-M-D}(r(a)_{-L-D} v) = r(a _M b)_{-L-D} v
        v.expect_equal("RM2", idx,
                       act(bm.right, b, act(bm.right, a, w, -kL() - kD()),
                           -kL() - kM() - kD()),
                       act(bm.right, ab_m, w, -kL() - kD()), bm.module);
        // l(a)_L (r(b)_{-M-D} v) = r(b)_{-L-M-D}(l(a)_L v)
        v.expect_equal("LRM", idx,
                       act(bm.left, a, act(bm.right, b, w, -kM() - kD()), kL()),
                       act(bm.right, b, act(bm.left, a, w, kL()), -kL() - kM() - kD()),
                       bm.module);
      }
    }
  }
  return v;
}

Bimodule regular_bimodule(const ConformalAlgebra& A) {
  const std::size_t n = A.rank();
  ActionTable right = ActionTable::square(n);
  const Substitution flip{{var::L, -kL() - kD()}};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = 0; q < n; ++q) {
        right.at(i, p, q) = A.table().at(p, i, q).substitute(flip);
      }
    }
  }
  return Bimodule(A, A.module(), A.table(), std::move(right));
}

ActionTable dual_action(const ActionTable& table) {
  ActionTable out(table.labels(), table.outputs(), table.inputs());
  const Substitution flip{{var::D, -kL() - kD()}};
  for (std::size_t i = 0; i < table.labels(); ++i) {
    for (std::size_t p = 0; p < table.outputs(); ++p) {
      for (std::size_t q = 0; q < table.inputs(); ++q) {
        out.at(i, p, q) = table.at(i, q, p).substitute(flip);
      }
    }
  }
  return out;
}

Bimodule dual_bimodule(const Bimodule& bm) {
  return Bimodule(bm.algebra, bm.module.dual(), dual_action(bm.right),
                  dual_action(bm.left));
}

MatchedPair::MatchedPair(ConformalAlgebra a, ConformalAlgebra b,
                         ActionTable l_a, ActionTable r_a, ActionTable l_b,
                         ActionTable r_b)
    : A(std::move(a)),
      B(std::move(b)),
      l_A(std::move(l_a)),
      r_A(std::move(r_a)),
      l_B(std::move(l_b)),
      r_B(std::move(r_b)) {
  check_action_shape(l_A, A.rank(), B.rank(), "l_A");
  check_action_shape(r_A, A.rank(), B.rank(), "r_A");
  check_action_shape(l_B, B.rank(), A.rank(), "l_B");
  check_action_shape(r_B, B.rank(), A.rank(), "r_B");
}

namespace {

// Basis-tuple loops for the six identities; a, b range over A and x, y
// over B.
struct PairOps {
  const MatchedPair& mp;
  Element pA(const Element& a, const Element& b, const Poly& pi) const {
    return product(mp.A, a, b, pi);
  }
  Element pB(const Element& x, const Element& y, const Poly& pi) const {
    return product(mp.B, x, y, pi);
  }
  Element lA(const Element& a, const Element& x, const Poly& pi) const {
    return act(mp.l_A, a, x, pi);
  }
  Element rA(const Element& a, const Element& x, const Poly& pi) const {
    return act(mp.r_A, a, x, pi);
  }
  Element lB(const Element& x, const Element& a, const Poly& pi) const {
    return act(mp.l_B, x, a, pi);
  }
  Element rB(const Element& x, const Element& a, const Poly& pi) const {
    return act(mp.r_B, x, a, pi);
  }
};

template <typename F>
void for_triples(std::size_t n1, std::size_t n2, std::size_t n3, F f) {
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = 0; j < n2; ++j) {
      for (std::size_t k = 0; k < n3; ++k) f(i, j, k);
    }
  }
}

}  // namespace

Verdict check_es1(const MatchedPair& mp, const std::string& id) {
  PairOps o{mp};
  const std::size_t n = mp.A.rank(), m = mp.B.rank();
  const auto &la = mp.A.module(), &lb = mp.B.module();
  Verdict v;
  for_triples(n, m, m, [&](std::size_t i, std::size_t p, std::size_t q) {
    Element a = Element::basis(n, i), x = Element::basis(m, p),
            y = Element::basis(m, q);
    Element lhs = o.lA(a, o.pB(x, y, kM()), kL());
    Element rhs = o.pB(o.lA(a, x, kL()), y, kL() + kM()) +
                  o.lA(o.rB(x, a, -kL() - kD()), y, kL() + kM());
    v.expect_equal(id, {la.label(i), lb.label(p), lb.label(q)}, lhs, rhs, lb);
  });
  return v;
}

Verdict check_es5(const MatchedPair& mp, const std::string& id) {
  PairOps o{mp};
  const std::size_t n = mp.A.rank(), m = mp.B.rank();
  const auto &la = mp.A.module(), &lb = mp.B.module();
  Verdict v;
  for_triples(n, m, m, [&](std::size_t i, std::size_t p, std::size_t q) {
    Element a = Element::basis(n, i), x = Element::basis(m, p),
            y = Element::basis(m, q);
    Element lhs = o.rA(o.rB(y, a, -kM() - kD()), x, -kL() - kD()) +
                  o.pB(x, o.lA(a, y, kM()), kL());
    Element rhs = o.lA(o.lB(x, a, kL()), y, kL() + kM()) +
                  o.pB(o.rA(a, x, -kL() - kD()), y, kL() + kM());
    v.expect_equal(id, {la.label(i), lb.label(p), lb.label(q)}, lhs, rhs, lb);
  });
  return v;
}

Report check_matched_pair(const MatchedPair& mp) {
  PairOps o{mp};
  const std::size_t n = mp.A.rank(), m = mp.B.rank();
  const auto &la = mp.A.module(), &lb = mp.B.module();
  Report report;
  report.add("bimodule_B", check_bimodule(mp.b_over_a()));
  report.add("bimodule_A", check_bimodule(mp.a_over_b()));
  report.add("es1", check_es1(mp));

  Verdict es2;
  for_triples(m, n, n, [&](std::size_t p, std::size_t i, std::size_t j) {
    Element x = Element::basis(m, p), a = Element::basis(n, i),
            b = Element::basis(n, j);
    Element lhs = o.rB(x, o.pA(a, b, kL()), -kL() - kM() - kD());
    Element rhs = o.pA(a, o.rB(x, b, -kM() - kD()), kL()) +
                  o.rB(o.lA(b, x, kM()), a, -kL() - kD());
    es2.expect_equal("es2", {lb.label(p), la.label(i), la.label(j)}, lhs, rhs,
                     la);
  });
  report.add("es2", std::move(es2));

  Verdict es3;
  for_triples(m, n, n, [&](std::size_t p, std::size_t i, std::size_t j) {
    Element x = Element::basis(m, p), a = Element::basis(n, i),
            b = Element::basis(n, j);
    Element lhs = o.lB(x, o.pA(a, b, kM()), kL());
    Element rhs = o.pA(o.lB(x, a, kL()), b, kL() + kM()) +
                  o.lB(o.rA(a, x, -kL() - kD()), b, kL() + kM());
    es3.expect_equal("es3", {lb.label(p), la.label(i), la.label(j)}, lhs, rhs,
                     la);
  });
  report.add("es3", std::move(es3));

  Verdict es4;
  for_triples(n, m, m, [&](std::size_t i, std::size_t p, std::size_t q) {
    Element a = Element::basis(n, i), x = Element::basis(m, p),
            y = Element::basis(m, q);
    Element lhs = o.rA(o.lB(y, a, kM()), x, -kL() - kD()) +
                  o.pB(x, o.rA(a, y, -kM() - kD()), kL());
    Element rhs = o.rA(a, o.pB(x, y, kL()), -kL() - kM() - kD());
    es4.expect_equal("es4", {la.label(i), lb.label(p), lb.label(q)}, lhs, rhs,
                     lb);
  });
  report.add("es4", std::move(es4));

  report.add("es5", check_es5(mp));

  Verdict es6;
  for_triples(n, n, m, [&](std::size_t i, std::size_t j, std::size_t p) {
    Element a = Element::basis(n, i), b = Element::basis(n, j),
            x = Element::basis(m, p);
    Element lhs = o.pA(a, o.lB(x, b, kM()), kL()) +
                  o.rB(o.rA(b, x, -kM() - kD()), a, -kL() - kD());
    Element rhs = o.pA(o.rB(x, a, -kL() - kD()), b, kL() + kM()) +
                  o.lB(o.lA(a, x, kL()), b, kL() + kM());
    es6.expect_equal("es6", {la.label(i), la.label(j), lb.label(p)}, lhs, rhs,
                     la);
  });
  report.add("es6", std::move(es6));
  return report;
}

ConformalAlgebra bowtie_unchecked(const MatchedPair& mp) {
  const std::size_t n = mp.A.rank(), m = mp.B.rank();
  FreeModule sum = mp.A.module().direct_sum(mp.B.module());
  ActionTable t = ActionTable::square(n + m);
  const Poly back = -kL() - kD();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) t.at(i, j, k) = mp.A.table().at(i, j, k);
    }
  }
  for (std::size_t p = 0; p < m; ++p) {
    for (std::size_t q = 0; q < m; ++q) {
      for (std::size_t k = 0; k < m; ++k) {
        t.at(n + p, n + q, n + k) = mp.B.table().at(p, q, k);
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t p = 0; p < m; ++p) {
      // a _L y = r_B(y)_{-L-D} a + l_A(a)_L y
      Element a_side = act_basis(mp.r_B, p, i, back);
      Element b_side = act_basis(mp.l_A, i, p, kL());
      for (std::size_t k = 0; k < n; ++k) t.at(i, n + p, k) = a_side[k];
      for (std::size_t k = 0; k < m; ++k) t.at(i, n + p, n + k) = b_side[k];
      // x _L b = l_B(x)_L b + r_A(b)_{-L-D} x
      Element a_side2 = act_basis(mp.l_B, p, i, kL());
      Element b_side2 = act_basis(mp.r_A, i, p, back);
      for (std::size_t k = 0; k < n; ++k) t.at(n + p, i, k) = a_side2[k];
      for (std::size_t k = 0; k < m; ++k) t.at(n + p, i, n + k) = b_side2[k];
    }
  }
  return ConformalAlgebra(std::move(sum), std::move(t));
}

ConformalAlgebra bowtie(const MatchedPair& mp) {
  require("the data is not a matched pair", check_matched_pair(mp));
  return bowtie_unchecked(mp);
}

ConformalAlgebra semidirect(const Bimodule& bm) {
  require("not a bimodule", "bimodule", check_bimodule(bm));
  const std::size_t n = bm.algebra.rank(), m = bm.module.rank();
  MatchedPair mp(bm.algebra, ConformalAlgebra(bm.module), bm.left, bm.right,
                 ActionTable(m, n, n), ActionTable(m, n, n));
  return bowtie_unchecked(mp);
}

}  // namespace conformal
