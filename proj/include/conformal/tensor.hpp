#pragma once

// Elements of k-fold tensor products of free C[∂]-modules.
//
// A tensor sum_I c_I(x1..xk) e_I1 ⊗ ... ⊗ e_Ik records ∂ acting on leg s as
// the slot variable x_s; ∂ on the whole tensor is multiplication by
// x1 + ... + xk. Legs are numbered from 1 in this interface.

#include <map>
#include <vector>

#include "conformal/module.hpp"

namespace conformal {

using MultiIndex = std::vector<std::size_t>;

class TensorElement {
 public:
  TensorElement() = default;
  /// Zero tensor with the given leg ranks (no legs = a scalar).
  explicit TensorElement(std::vector<std::size_t> ranks);
  static TensorElement basis(std::vector<std::size_t> ranks, MultiIndex index,
                             const Poly& coeff = Poly(1));

  std::size_t legs() const { return ranks_.size(); }
  const std::vector<std::size_t>& ranks() const { return ranks_; }
  const std::map<MultiIndex, Poly>& terms() const { return terms_; }
  Poly coefficient(const MultiIndex& index) const;
  bool is_zero() const { return terms_.empty(); }

  /// Adds c to the coefficient of `index` (zero results are dropped).
  void add(const MultiIndex& index, const Poly& c);

  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator-=(const TensorElement& o);
  friend TensorElement operator+(TensorElement a, const TensorElement& b) {
    return a += b;
  }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) {
    return a -= b;
  }
  TensorElement operator-() const;
  TensorElement scaled(const Poly& p) const;
  /// Coefficient-wise substitution.
  TensorElement substitute(const Substitution& s) const;

  friend bool operator==(const TensorElement&, const TensorElement&) = default;

 private:
  void check_index(const MultiIndex& index) const;
  std::vector<std::size_t> ranks_;
  std::map<MultiIndex, Poly> terms_;
};

/// Product of two legs: legs s and u are replaced by (leg s)_pi (leg u),
/// placed at 1-based position `pos` among the k-1 resulting legs; the other
/// legs keep their relative order. `table` is the structure table.
TensorElement leg_product(const TensorElement& t, std::size_t s, std::size_t u,
                          std::size_t pos, const ActionTable& table,
                          const Poly& pi);

/// Applies op(label)_pi to one leg, op described by `table` (left or right
/// multiplication, a bimodule action, ...). pi may involve the slot
/// variables of the result.
TensorElement leg_action(const TensorElement& t, std::size_t leg,
                         const ActionTable& table, const Element& label,
                         const Poly& pi);

/// Pairs leg `leg` with the dual basis functional number `functional` at
/// parameter pi and removes the leg.
TensorElement dual_pairing(const TensorElement& t, std::size_t leg,
                           std::size_t functional, const Poly& pi);

/// Replaces the free parameter `param` by `image` in every coefficient.
TensorElement substitute_param(const TensorElement& t, Var param,
                               const Poly& image);

/// The flip of legs s and u, slot variables included.
TensorElement swap_legs(const TensorElement& t, std::size_t s, std::size_t u);

/// t ⊗ w with w's slot variables shifted past t's legs.
TensorElement tensor_product(const TensorElement& t, const TensorElement& w);

/// Replaces leg `leg` by images[i] (a tensor with >= 1 legs) for each basis
/// index i, using that the replacement is a C[∂]-module map: x_leg becomes the
/// sum of the new legs' slot variables.
TensorElement split_leg(const TensorElement& t, std::size_t leg,
                        const std::vector<TensorElement>& images);

/// Applies a module map to one leg.
TensorElement map_leg(const TensorElement& t, std::size_t leg,
                      const ModuleMap& phi);

/// The k-leg image of f(∂)·(images of the basis), i.e. f(x1+...+xk) X_i.
TensorElement push_element(const Element& v,
                           const std::vector<TensorElement>& images);

}  // namespace conformal
