#include "conformal/bialgebra.hpp"

#include "conformal/ybe.hpp"

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

const Poly& kX1() {
  static const Poly p = Poly::variable(var::x(1));
  return p;
}

const Poly& kX2() {
  static const Poly p = Poly::variable(var::x(2));
  return p;
}

}  // namespace

Coproduct::Coproduct(FreeModule module_, std::vector<TensorElement> images_)
    : module(std::move(module_)), images(std::move(images_)) {
  const std::size_t n = module.rank();
  if (images.size() != n) throw InputError("coproduct: one image per basis element");
  const VarSet allowed = var_set({var::x(1), var::x(2)});
  for (const auto& t : images) {
    if (t.ranks() != std::vector<std::size_t>{n, n}) {
      throw InputError("coproduct: images must lie in M (x) M");
    }
    for (const auto& [idx, c] : t.terms()) {
      if ((c.variables() & ~allowed).any()) {
        throw InputError("coproduct coefficients may only use x1, x2");
      }
    }
  }
}

Coproduct::Coproduct(FreeModule module_)
    : module(std::move(module_)),
      images(module.rank(), TensorElement({module.rank(), module.rank()})) {}

TensorElement Coproduct::apply(const Element& v) const {
  if (v.rank() != module.rank()) throw InputError("coproduct: element rank");
  return push_element(v, images);
}

Coproduct Coproduct::negated() const {
  Coproduct c = *this;
  for (auto& t : c.images) t = -t;
  return c;
}

ConformalBilinearForm::ConformalBilinearForm(FreeModule module_,
                                             std::vector<Poly> entries_)
    : module(std::move(module_)), entries(std::move(entries_)) {
  if (entries.size() != module.rank() * module.rank()) {
    throw InputError("form table has the wrong shape");
  }
  for (const auto& e : entries) {
    if ((e.variables() & ~var_set({var::L})).any()) {
      throw InputError("form entries may only use L");
    }
  }
}

const Poly& ConformalBilinearForm::at(std::size_t i, std::size_t j) const {
  if (i >= module.rank() || j >= module.rank()) throw std::out_of_range("form index");
  return entries[i * module.rank() + j];
}

Poly ConformalBilinearForm::pair(const Element& a, const Element& b,
                                 const Poly& pi) const {
  const std::size_t n = module.rank();
  if (a.rank() != n || b.rank() != n) throw InputError("form: element rank");
  Poly out;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    Poly ai = a[i].substitute({{var::D, -pi}});
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j].is_zero() || at(i, j).is_zero()) continue;
      out += ai * b[j].substitute({{var::D, pi}}) *
             at(i, j).substitute({{var::L, pi}});
    }
  }
  return out;
}

Verdict check_coassociativity(const Coproduct& delta) {
  const auto& mod = delta.module;
  Verdict v;
  for (std::size_t k = 0; k < mod.rank(); ++k) {
    TensorElement lhs = split_leg(delta.images[k], 2, delta.images);
    TensorElement rhs = split_leg(delta.images[k], 1, delta.images);
    v.expect_equal("coassoc", {mod.label(k)}, lhs, rhs, {&mod, &mod, &mod});
  }
  return v;
}

Coproduct coproduct_from_algebra(const ConformalAlgebra& A) {
  const std::size_t n = A.rank();
  const Substitution to_slots{{var::L, kX1()}, {var::D, -kX1() - kX2()}};
  std::vector<TensorElement> images(n, TensorElement({n, n}));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        images[k].add({i, j}, A.table().at(i, j, k).substitute(to_slots));
      }
    }
  }
  return Coproduct(A.module().dual(), std::move(images));
}

ConformalAlgebra algebra_from_coproduct(const Coproduct& delta) {
  const std::size_t n = delta.module.rank();
  const Substitution from_slots{{var::x(1), kL()}, {var::x(2), -kD() - kL()}};
  ActionTable t = ActionTable::square(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (const auto& [idx, c] : delta.images[k].terms()) {
      t.at(idx[0], idx[1], k) = c.substitute(from_slots);
    }
  }
  return ConformalAlgebra(delta.module.dual(), std::move(t));
}

Report check_frobenius(const ConformalAlgebra& A,
                       const ConformalBilinearForm& form) {
  const std::size_t n = A.rank();
  if (form.module.rank() != n) throw InputError("form does not match the algebra");
  const auto& mod = A.module();
  Report report;

  Verdict sym;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      sym.expect_zero("symmetric", {mod.label(i), mod.label(j)}, {},
                      form.at(i, j) - form.at(j, i).substitute({{var::L, -kL()}}));
    }
  }
  report.add("symmetric", std::move(sym));

  // <e_i _L e_j, e_k>_M = <e_i, e_j _{M-D} e_k>_L
  Verdict inv;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        Poly lhs, rhs;
        for (std::size_t s = 0; s < n; ++s) {
          lhs += A.table().at(i, j, s).substitute({{var::D, -kM()}}) *
                 form.at(s, k).substitute({{var::L, kM()}});
          rhs += A.table().at(j, k, s).substitute(
                     {{var::L, kM() - kL()}, {var::D, kL()}}) *
                 form.at(i, s);
        }
        inv.expect_zero("invariant", {mod.label(i), mod.label(j), mod.label(k)},
                        {}, lhs - rhs);
      }
    }
  }
  report.add("invariant", std::move(inv));

  ModuleMap c(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      c.at(i, j) = form.at(i, j).substitute({{var::L, -kD()}});
    }
  }
  Verdict nondeg;
  Poly det = c.determinant();
  if (!det.is_constant() || det.is_zero()) {
    nondeg.add({"nondegenerate", {}, {"det"}, det});
  }
  report.add("nondegenerate", std::move(nondeg));
  return report;
}

MatchedPair induced_matched_pair(const ConformalAlgebra& A,
                                 const Coproduct& delta) {
  if (delta.module != A.module()) {
    throw InputError("coproduct and algebra have different bases");
  }
  ConformalAlgebra B = algebra_from_coproduct(delta);
  Bimodule dual_a = dual_bimodule(regular_bimodule(A));
  Bimodule dual_b = dual_bimodule(regular_bimodule(B));
  return MatchedPair(A, B, dual_a.left, dual_a.right, dual_b.left,
                     dual_b.right);
}

Report check_asi(const ConformalAlgebra& A, const Coproduct& delta,
                 AsiMode mode) {
  if (delta.module != A.module()) {
    throw InputError("coproduct and algebra have different bases");
  }
  Report pre;
  pre.add("assoc", check_associativity(A));
  pre.add("coassoc", check_coassociativity(delta));
  require("ASI check needs an associative algebra and a coassociative coproduct",
          pre);

  Report report;
  if (mode == AsiMode::reduced) {
    MatchedPair mp = induced_matched_pair(A, delta);
    report.add("es7", check_es1(mp, "es7"));
    report.add("es8", check_es5(mp, "es8"));
    return report;
  }

  const std::size_t n = A.rank();
  const auto& mod = A.module();
  const ActionTable& left = A.table();
  const ActionTable right = regular_bimodule(A).right;
  const Poly outer = -kL() - kX1() - kX2();
  Verdict thq1, thq2;
  for (std::size_t i = 0; i < n; ++i) {
    Element a = Element::basis(n, i);
    for (std::size_t j = 0; j < n; ++j) {
      Element b = Element::basis(n, j);
      std::vector<std::string> idx{mod.label(i), mod.label(j)};
      // Delta(a _L b) = (I (x) L(a)_L) Delta(b) + (R(b)_{-L-x1-x2} (x) I) Delta(a)
      TensorElement lhs = delta.apply(product(A, a, b, kL()));
      TensorElement rhs = leg_action(delta.images[j], 2, left, a, kL()) +
                          leg_action(delta.images[i], 1, right, b, outer);
      thq1.expect_equal("thq1", idx, lhs, rhs, {&mod, &mod});

      TensorElement first = leg_action(delta.images[i], 1, left, b, outer) -
                            leg_action(delta.images[i], 2, right, b, outer);
      TensorElement second = leg_action(delta.images[j], 1, left, a, kL()) -
                             leg_action(delta.images[j], 2, right, a, kL());
      TensorElement zero({n, n});
      thq2.expect_equal("thq2", idx, first + swap_legs(second, 1, 2), zero,
                        {&mod, &mod});
    }
  }
  report.add("thq1", std::move(thq1));
  report.add("thq2", std::move(thq2));
  return report;
}

Double build_double(const ConformalAlgebra& A, const Coproduct& delta) {
  require("the pair is not an ASI conformal bialgebra",
          check_asi(A, delta, AsiMode::full));
  const std::size_t n = A.rank();
  MatchedPair mp = induced_matched_pair(A, delta);
  ConformalAlgebra algebra = bowtie_unchecked(mp);

  std::vector<Poly> entries(4 * n * n);
  TensorElement r({2 * n, 2 * n});
  for (std::size_t i = 0; i < n; ++i) {
    entries[i * 2 * n + (n + i)] = Poly(1);
    entries[(n + i) * 2 * n + i] = Poly(1);
    r.add({i, n + i}, Poly(1));
  }
  ConformalBilinearForm form(algebra.module(), std::move(entries));
  Coproduct coproduct = coboundary_coproduct(algebra, r);
  return Double{std::move(algebra), std::move(form), std::move(r),
                std::move(coproduct)};
}

Verdict check_homomorphism(const ModuleMap& phi, const ConformalAlgebra& src,
                           const ConformalAlgebra& dst) {
  if (phi.source_rank() != src.rank() || phi.target_rank() != dst.rank()) {
    throw InputError("homomorphism: map shape does not match the algebras");
  }
  const std::size_t n = src.rank();
  Verdict v;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Element lhs = phi.apply(product(src, Element::basis(n, i),
                                      Element::basis(n, j), kL()));
      Element rhs = product(dst, phi.row(i), phi.row(j), kL());
      v.expect_equal("hom", {src.module().label(i), src.module().label(j)},
                     lhs, rhs, dst.module());
    }
  }
  return v;
}

Verdict check_homomorphism(const ModuleMap& phi, const ConformalAlgebra& src,
                           const ConformalAlgebra& dst,
                           const Coproduct& src_delta,
                           const Coproduct& dst_delta) {
  Verdict v = check_homomorphism(phi, src, dst);
  if (src_delta.module.rank() != src.rank() ||
      dst_delta.module.rank() != dst.rank()) {
    throw InputError("homomorphism: coproducts do not match the algebras");
  }
  const auto& target = dst.module();
  for (std::size_t i = 0; i < src.rank(); ++i) {
    TensorElement lhs = map_leg(map_leg(src_delta.images[i], 1, phi), 2, phi);
    TensorElement rhs = dst_delta.apply(phi.row(i));
    v.expect_equal("hom_coproduct", {src.module().label(i)}, lhs, rhs,
                   {&target, &target});
  }
  return v;
}

}  // namespace conformal
