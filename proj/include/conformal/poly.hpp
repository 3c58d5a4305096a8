#pragma once

// Exact sparse multivariate polynomials over the rationals.
//
// Every coefficient in the library (structure polynomials, tensor
// coefficients, residuals) is a Poly. Variables come from one fixed, ordered
// registry so that canonical forms, printing and equality are deterministic
// across the whole program.

#include <gmpxx.h>

#include <array>
#include <bitset>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace conformal {

using Rational = mpq_class;

inline constexpr std::size_t kVarCount = 16;

/// A variable of the global registry. The declaration order below is the
/// variable order used by the graded-lex monomial order.
class Var {
 public:
  constexpr Var() = default;
  constexpr explicit Var(std::uint8_t id) : id_(id) {}
  constexpr std::uint8_t id() const { return id_; }
  friend constexpr bool operator==(Var, Var) = default;
  friend constexpr auto operator<=>(Var, Var) = default;

 private:
  std::uint8_t id_ = 0;
};

namespace var {
// lambda-style parameters (fresh-parameter pool, in draw order)
inline constexpr Var L{0};
inline constexpr Var M{1};
inline constexpr Var N{2};
inline constexpr Var L1{3};
inline constexpr Var L2{4};
inline constexpr Var L3{5};
// the derivation on a single module
inline constexpr Var D{6};
// tensor slot variables x1..x6
inline constexpr std::size_t kMaxSlots = 6;
inline constexpr Var x(std::size_t k) {
  return Var{static_cast<std::uint8_t>(6 + k)};
}
// reserved for transient operator parameters; never printed in results
inline constexpr Var Scratch{13};
inline constexpr Var Scratch2{14};
}  // namespace var

std::string_view var_name(Var v);
std::optional<Var> var_from_name(std::string_view name);
bool is_slot(Var v);
/// 1-based slot number of x_k.
std::size_t slot_index(Var v);

using VarSet = std::bitset<kVarCount>;
VarSet var_set(std::initializer_list<Var> vars);

/// Exponent vector over the registry.
struct Monomial {
  std::array<std::uint16_t, kVarCount> exp{};

  unsigned degree() const;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic order, larger monomials first.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class Poly;
using Substitution = std::map<Var, Poly>;

class Poly {
 public:
  using Terms = std::map<Monomial, Rational, GrlexGreater>;

  Poly() = default;
  Poly(long c);  // NOLINT(google-explicit-constructor)
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
  static Poly variable(Var v);
  static Poly monomial(const Monomial& m, const Rational& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (coefficient of the empty monomial).
  Rational constant_term() const;
  /// Variables that actually occur.
  VarSet variables() const;
  unsigned degree() const;
  unsigned degree_in(Var v) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.terms_ == b.terms_;
  }

  Poly pow(unsigned e) const;

  /// Simultaneous substitution; unmapped variables are kept.
  Poly substitute(const Substitution& s) const;

  /// Homogeneous parts keyed by total degree.
  std::map<unsigned, Poly> homogeneous_components() const;

  /// Rendering in the expression grammar, graded-lex order.
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  Terms terms_;
};

inline Poly operator*(const Rational& c, const Poly& p) { return Poly(c) * p; }

/// Substitution by variable name; unknown names are rejected.
Poly substitute(const Poly& p, const std::map<std::string, Poly>& assignment);

/// True iff p vanishes after replacing the last of `vars` by minus the sum of
/// the others, i.e. iff p is divisible by the sum of `vars`.
bool vanishes_on_hyperplane(const Poly& p, const std::vector<Var>& vars);

/// The polynomial p restricted to that hyperplane (the residual certificate).
Poly restrict_to_hyperplane(const Poly& p, const std::vector<Var>& vars);

/// Sum of x1..xk.
Poly slot_sum(std::size_t k);

/// Expression-grammar parse failure, with a 0-based column.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t column, const std::string& message);
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

/// Parses `expr := term (('+'|'-') term)*` etc. Only variables in `allowed`
/// are accepted.
Poly parse_poly(std::string_view text, VarSet allowed);

}  // namespace conformal
