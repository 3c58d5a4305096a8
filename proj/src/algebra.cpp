#include "conformal/algebra.hpp"

namespace conformal {

void check_table_variables(const ActionTable& table, VarSet allowed,
                           const std::string& what) {
  VarSet extra = table.variables() & ~allowed;
  if (extra.any()) {
    for (std::size_t id = 0; id < kVarCount; ++id) {
      if (extra.test(id)) {
        throw InputError(what + " uses variable '" +
                         std::string(var_name(Var(static_cast<std::uint8_t>(id)))) +
                         "'");
      }
    }
  }
}

ConformalAlgebra::ConformalAlgebra(FreeModule module, ActionTable table)
    : module_(std::move(module)), table_(std::move(table)) {
  const std::size_t n = module_.rank();
  if (table_.labels() != n || table_.inputs() != n || table_.outputs() != n) {
    throw InputError("structure table does not match the module rank");
  }
  check_table_variables(table_, var_set({var::L, var::D}), "structure table");
}

ConformalAlgebra::ConformalAlgebra(FreeModule module)
    : module_(std::move(module)), table_(ActionTable::square(module_.rank())) {}

Element product(const ConformalAlgebra& A, const Element& a, const Element& b,
                const Poly& pi) {
  if (a.rank() != A.rank() || b.rank() != A.rank()) {
    throw InputError("product: element does not belong to the algebra");
  }
  return act(A.table(), a, b, pi);
}

Verdict check_associativity(const ConformalAlgebra& A) {
  const std::size_t n = A.rank();
  const Poly L = Poly::variable(var::L);
  const Poly M = Poly::variable(var::M);
  Verdict v;
  for (std::size_t i = 0; i < n; ++i) {
    Element ei = Element::basis(n, i);
    for (std::size_t l = 0; l < n; ++l) {
      Element el = Element::basis(n, l);
      Element il = product(A, ei, el, L);
      for (std::size_t r = 0; r < n; ++r) {
        Element er = Element::basis(n, r);
        Element lhs = product(A, il, er, L + M);
        Element rhs = product(A, ei, product(A, el, er, M), L);
        v.expect_equal("assoc",
                       {A.module().label(i), A.module().label(l),
                        A.module().label(r)},
                       lhs, rhs, A.module());
      }
    }
  }
  return v;
}

ConformalAlgebra current(
    const FreeModule& module,
    const std::vector<std::vector<std::vector<Rational>>>& constants) {
  const std::size_t n = module.rank();
  if (constants.size() != n) throw InputError("current: table shape");
  ActionTable t = ActionTable::square(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (constants[i].size() != n) throw InputError("current: table shape");
    for (std::size_t j = 0; j < n; ++j) {
      if (constants[i][j].size() != n) throw InputError("current: table shape");
      for (std::size_t k = 0; k < n; ++k) t.at(i, j, k) = Poly(constants[i][j][k]);
    }
  }
  return ConformalAlgebra(module, std::move(t));
}

ConformalAlgebra opposite(const ConformalAlgebra& A) {
  const std::size_t n = A.rank();
  const Poly L = Poly::variable(var::L);
  const Poly D = Poly::variable(var::D);
  const Substitution flip{{var::L, -L - D}};
  ActionTable t = ActionTable::square(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        t.at(i, j, k) = A.table().at(j, i, k).substitute(flip);
      }
    }
  }
  return ConformalAlgebra(A.module(), std::move(t));
}

}  // namespace conformal
