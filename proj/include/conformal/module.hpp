#pragma once

// Free C[∂]-modules and the conformal action rule.
//
// A basis element e_i of a free module carries the derivation as the
// variable D, so an element is a vector of polynomials in D (and possibly
// free parameters such as L, M). Every conformal operator in the library
// (products, bimodule actions, dual actions) is stored as an ActionTable
// K[label][input][output](L, D), meaning
//
//   op(e_label)_L v_input = sum_out K(L, D) v_out.
//
// Sesquilinearity fixes the extension to arbitrary elements:
//
//   op(f(D) e_i)_pi (g(D) v_j) = f(-pi) g(pi + D) K[i][j][m](pi, D) v_m,
//
// where pi is any polynomial; occurrences of D inside pi refer to the
// derivation of the result.

#include <span>
#include <string>
#include <vector>

#include "conformal/poly.hpp"

namespace conformal {

/// Signals a violated invariant of an input value (shape, label, variable).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class FreeModule {
 public:
  FreeModule() = default;
  explicit FreeModule(std::vector<std::string> labels);
  /// Labels e1..en.
  static FreeModule numbered(std::size_t n, const std::string& stem = "e");

  std::size_t rank() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  std::size_t index_of(const std::string& label) const;
  bool contains(const std::string& label) const;

  /// Dual basis labels: "a" becomes "a*", "a*" becomes "a".
  FreeModule dual() const;
  /// Direct sum, labels concatenated (must stay distinct).
  FreeModule direct_sum(const FreeModule& other) const;

  friend bool operator==(const FreeModule&, const FreeModule&) = default;

 private:
  std::vector<std::string> labels_;
};

std::string dual_label(const std::string& label);

class Element {
 public:
  Element() = default;
  explicit Element(std::size_t rank) : coeffs_(rank) {}
  explicit Element(std::vector<Poly> coeffs) : coeffs_(std::move(coeffs)) {}
  static Element basis(std::size_t rank, std::size_t i,
                       const Poly& coeff = Poly(1));

  std::size_t rank() const { return coeffs_.size(); }
  const Poly& operator[](std::size_t i) const { return coeffs_.at(i); }
  Poly& operator[](std::size_t i) { return coeffs_.at(i); }
  const std::vector<Poly>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  Element operator-() const;
  /// Multiplies every coefficient by p (p may involve D: that is the
  /// C[∂]-module action).
  Element scaled(const Poly& p) const;
  Element substitute(const Substitution& s) const;

  friend bool operator==(const Element&, const Element&) = default;

 private:
  std::vector<Poly> coeffs_;
};

class ActionTable {
 public:
  ActionTable() = default;
  ActionTable(std::size_t labels, std::size_t inputs, std::size_t outputs);
  /// Square table, e.g. a structure table of a rank-n algebra.
  static ActionTable square(std::size_t n) { return ActionTable(n, n, n); }

  std::size_t labels() const { return labels_; }
  std::size_t inputs() const { return inputs_; }
  std::size_t outputs() const { return outputs_; }

  const Poly& at(std::size_t label, std::size_t input, std::size_t out) const;
  Poly& at(std::size_t label, std::size_t input, std::size_t out);
  bool is_zero() const;
  /// Entry-wise substitution.
  ActionTable substitute(const Substitution& s) const;
  /// Variables occurring anywhere in the table.
  VarSet variables() const;

  friend bool operator==(const ActionTable&, const ActionTable&) = default;

 private:
  std::size_t index(std::size_t l, std::size_t i, std::size_t o) const;
  std::size_t labels_ = 0, inputs_ = 0, outputs_ = 0;
  std::vector<Poly> entries_;
};

/// op(label)_pi input for the operator described by `table`.
Element act(const ActionTable& table, const Element& label,
            const Element& input, const Poly& pi);

/// op(e_label)_pi e_input with basis arguments.
Element act_basis(const ActionTable& table, std::size_t label,
                  std::size_t input, const Poly& pi);

/// Kernel entry K[l][i][o] rewritten as K(scratch, slot): the λ-slot becomes
/// `param` and the module variable becomes `slot`.
Poly kernel_at(const ActionTable& table, std::size_t l, std::size_t i,
               std::size_t o, Var param, Var slot);

/// A C[∂]-module homomorphism, stored as rows: phi(e_i) = sum_j m_ij(D) f_j.
class ModuleMap {
 public:
  ModuleMap() = default;
  ModuleMap(std::size_t source_rank, std::size_t target_rank);
  static ModuleMap identity(std::size_t n);

  std::size_t source_rank() const { return rows_; }
  std::size_t target_rank() const { return cols_; }
  const Poly& at(std::size_t i, std::size_t j) const;
  Poly& at(std::size_t i, std::size_t j);
  Element row(std::size_t i) const;

  /// Image of an element; coefficients may carry parameters besides D.
  Element apply(const Element& v) const;
  /// this followed by `next`.
  ModuleMap then(const ModuleMap& next) const;
  bool is_zero() const;

  /// Determinant of the square matrix over Q[D].
  Poly determinant() const;
  /// Unit determinant over Q[D], i.e. a module isomorphism.
  bool is_invertible() const;
  /// Inverse; throws InputError unless is_invertible().
  ModuleMap inverse() const;

  friend bool operator==(const ModuleMap&, const ModuleMap&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Poly> entries_;
};

/// An element of Chom(U, V): T_L(u_i) = sum_j g_ij(L, D) v_j.
class ConformalLinearMap {
 public:
  ConformalLinearMap() = default;
  ConformalLinearMap(std::size_t source_rank, std::size_t target_rank);

  std::size_t source_rank() const { return rows_; }
  std::size_t target_rank() const { return cols_; }
  const Poly& at(std::size_t i, std::size_t j) const;
  Poly& at(std::size_t i, std::size_t j);

  /// T_0 = T_L at L = 0.
  ModuleMap at_zero() const;
  static ConformalLinearMap from_module_map(const ModuleMap& m);

  friend bool operator==(const ConformalLinearMap&,
                         const ConformalLinearMap&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Poly> entries_;
};

/// Determinant of a square polynomial matrix given row-major.
Poly determinant(std::span<const Poly> matrix, std::size_t n);

}  // namespace conformal
