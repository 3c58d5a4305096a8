#pragma once

// Coalgebras, conformal bilinear forms, ASI bialgebras and the double.

#include <optional>

#include "conformal/bimodule.hpp"

namespace conformal {

/// Delta(e_k) = sum Q_k^{ij}(x1, x2) e_i (x) e_j, extended by
/// Delta(f(D) e_k) = f(x1 + x2) Delta(e_k).
struct Coproduct {
  Coproduct() = default;
  Coproduct(FreeModule module, std::vector<TensorElement> images);
  /// Zero coproduct.
  explicit Coproduct(FreeModule module);

  FreeModule module;
  std::vector<TensorElement> images;

  /// Image of an arbitrary element.
  TensorElement apply(const Element& v) const;
  Coproduct negated() const;

  friend bool operator==(const Coproduct&, const Coproduct&) = default;
};

/// <e_i, e_j>_L = B_ij(L).
struct ConformalBilinearForm {
  ConformalBilinearForm() = default;
  ConformalBilinearForm(FreeModule module, std::vector<Poly> entries);

  FreeModule module;
  std::vector<Poly> entries;  // row-major n x n

  const Poly& at(std::size_t i, std::size_t j) const;
  /// <a, b>_pi for arbitrary elements.
  Poly pair(const Element& a, const Element& b, const Poly& pi) const;

  friend bool operator==(const ConformalBilinearForm&,
                         const ConformalBilinearForm&) = default;
};

Verdict check_coassociativity(const Coproduct& delta);

/// Delta on A^{*c} with Q(x, y) = P(x, -x-y).
Coproduct coproduct_from_algebra(const ConformalAlgebra& A);

/// Product on M^{*c} with R(L, D) = Q(L, -D-L).
ConformalAlgebra algebra_from_coproduct(const Coproduct& delta);

/// Parts "symmetric", "invariant", "nondegenerate".
Report check_frobenius(const ConformalAlgebra& A,
                       const ConformalBilinearForm& form);

enum class AsiMode { full, reduced };

/// Refuses unless A is associative and Delta coassociative. Full mode has
/// parts "thq1", "thq2"; reduced mode has parts "es7", "es8".
Report check_asi(const ConformalAlgebra& A, const Coproduct& delta,
                 AsiMode mode = AsiMode::full);

/// (A, A^{*c}, R_A^*, L_A^*, R_{A^{*c}}^*, L_{A^{*c}}^*) with the product on
/// A^{*c} dual to Delta.
MatchedPair induced_matched_pair(const ConformalAlgebra& A,
                                 const Coproduct& delta);

struct Double {
  ConformalAlgebra algebra;
  ConformalBilinearForm form;
  TensorElement r;
  Coproduct coproduct;
};

/// Refuses unless check_asi passes.
Double build_double(const ConformalAlgebra& A, const Coproduct& delta);

/// phi(a _L b) = phi(a)_L phi(b) on basis pairs, plus
/// (phi (x) phi) Delta_src = Delta_dst phi when coproducts are given.
Verdict check_homomorphism(const ModuleMap& phi, const ConformalAlgebra& src,
                           const ConformalAlgebra& dst);
Verdict check_homomorphism(const ModuleMap& phi, const ConformalAlgebra& src,
                           const ConformalAlgebra& dst,
                           const Coproduct& src_delta,
                           const Coproduct& dst_delta);

}  // namespace conformal
