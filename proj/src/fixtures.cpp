#include "conformal/fixtures.hpp"

namespace conformal::fixtures {

namespace {

const Poly& kL() {
  static const Poly p = Poly::variable(var::L);
  return p;
}

const Poly& kD() {
  static const Poly p = Poly::variable(var::D);
  return p;
}

}  // namespace

ConformalAlgebra hb2() {
  ActionTable t = ActionTable::square(2);
  t.at(0, 0, 1) = kD() * kD() + kL() * kD() + kL() * kL();
  return ConformalAlgebra(FreeModule({"a", "b"}), std::move(t));
}

ConformalBilinearForm hb2_form() {
  return ConformalBilinearForm(FreeModule({"a", "b"}),
                               {Poly(0), Poly(1), Poly(1), Poly(0)});
}

ConformalAlgebra podd(const Poly& p) {
  if ((p.variables() & ~var_set({var::L})).any()) {
    throw InputError("podd: p must be a polynomial in L");
  }
  ActionTable t = ActionTable::square(2);
  t.at(0, 0, 1) = p.substitute({{var::L, kL() + kD()}});
  return ConformalAlgebra(FreeModule({"a", "b"}), std::move(t));
}

Coproduct podd_coproduct() {
  std::vector<TensorElement> images{TensorElement::basis({2, 2}, {0, 1}),
                                    TensorElement::basis({2, 2}, {1, 1})};
  return Coproduct(FreeModule({"a", "b"}), std::move(images));
}

ConformalAlgebra rank1(const Rational& k) {
  ActionTable t = ActionTable::square(1);
  t.at(0, 0, 0) = Poly(k);
  return ConformalAlgebra(FreeModule({"a"}), std::move(t));
}

DendriformAlgebra dend_succ() {
  ActionTable succ = ActionTable::square(1);
  succ.at(0, 0, 0) = Poly(1);
  return DendriformAlgebra(FreeModule({"a"}), ActionTable::square(1),
                           std::move(succ));
}

DendriformAlgebra dend_prec() {
  ActionTable prec = ActionTable::square(1);
  prec.at(0, 0, 0) = Poly(1);
  return DendriformAlgebra(FreeModule({"a"}), std::move(prec),
                           ActionTable::square(1));
}

ConformalAlgebra null(std::size_t n) {
  return ConformalAlgebra(FreeModule::numbered(n));
}

ConformalAlgebra cur_dual2() {
  using R = Rational;
  // u u = u, u v = v u = v, v v = 0
  std::vector<std::vector<std::vector<R>>> c{
      {{R(1), R(0)}, {R(0), R(1)}},
      {{R(0), R(1)}, {R(0), R(0)}},
  };
  return current(FreeModule({"u", "v"}), c);
}

}  // namespace conformal::fixtures
