#pragma once

// Conformal algebras given by structure polynomials
//   e_i _L e_j = sum_k P_k^{ij}(L, D) e_k.

#include "conformal/verdict.hpp"

namespace conformal {

class ConformalAlgebra {
 public:
  ConformalAlgebra() = default;
  /// The table must be square of the module's rank, entries in {L, D}.
  ConformalAlgebra(FreeModule module, ActionTable table);
  /// All products zero.
  explicit ConformalAlgebra(FreeModule module);

  const FreeModule& module() const { return module_; }
  const ActionTable& table() const { return table_; }
  std::size_t rank() const { return module_.rank(); }

  friend bool operator==(const ConformalAlgebra&,
                         const ConformalAlgebra&) = default;

 private:
  FreeModule module_;
  ActionTable table_;
};

/// Rejects tables whose entries use variables outside `allowed`.
void check_table_variables(const ActionTable& table, VarSet allowed,
                           const std::string& what);

/// a _pi b.
Element product(const ConformalAlgebra& A, const Element& a, const Element& b,
                const Poly& pi);

/// (e_i _L e_l)_{L+M} e_r = e_i _L (e_l _M e_r) for all basis triples; one
/// counterexample per nonzero output component.
Verdict check_associativity(const ConformalAlgebra& A);

/// Cur of a finite-dimensional algebra: constants[i][j][k] is the
/// coefficient of e_k in e_i e_j.
ConformalAlgebra current(const FreeModule& module,
                         const std::vector<std::vector<std::vector<Rational>>>&
                             constants);

/// a o_L b = b _{-L-D} a.
ConformalAlgebra opposite(const ConformalAlgebra& A);

}  // namespace conformal
