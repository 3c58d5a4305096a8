#pragma once

// Shared helpers for the test executables: shorthand constructors and the
// random generators used by the property tests.

#include <fstream>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "conformal/cli.hpp"
#include "conformal/document.hpp"
#include "conformal/fixtures.hpp"

// Printers so that failed assertions show values.
namespace conformal {

inline std::ostream& operator<<(std::ostream& os, const Poly& p) {
  return os << p.to_string();
}

inline std::ostream& operator<<(std::ostream& os, const Element& e) {
  os << "(";
  for (std::size_t i = 0; i < e.rank(); ++i) os << (i ? ", " : "") << e[i];
  return os << ")";
}

inline std::ostream& operator<<(std::ostream& os, const TensorElement& t) {
  if (t.is_zero()) return os << "0";
  bool first = true;
  for (const auto& [index, c] : t.terms()) {
    os << (first ? "" : " + ") << "(" << c << ")[";
    for (std::size_t i = 0; i < index.size(); ++i) os << (i ? "," : "") << index[i];
    os << "]";
    first = false;
  }
  return os;
}

inline std::ostream& operator<<(std::ostream& os, const ModuleMap& m) {
  os << "[";
  for (std::size_t i = 0; i < m.source_rank(); ++i) {
    for (std::size_t j = 0; j < m.target_rank(); ++j) {
      os << (i || j ? ", " : "") << m.at(i, j);
    }
  }
  return os << "]";
}

}  // namespace conformal

namespace testing {

using namespace conformal;

inline Poly P(std::string_view text) {
  VarSet all;
  for (std::size_t i = 0; i < 13; ++i) all.set(i);
  return parse_poly(text, all);
}

inline TensorElement T(std::vector<std::size_t> ranks,
                       std::vector<std::pair<MultiIndex, std::string>> terms) {
  TensorElement t(std::move(ranks));
  for (const auto& [index, c] : terms) t.add(index, P(c));
  return t;
}

inline ConformalAlgebra algebra(
    std::vector<std::string> labels,
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t, std::string>>
        entries) {
  FreeModule m(std::move(labels));
  ActionTable table = ActionTable::square(m.rank());
  for (const auto& [i, j, k, c] : entries) table.at(i, j, k) = P(c);
  return ConformalAlgebra(m, table);
}

inline ModuleMap module_map(std::size_t n, std::size_t m,
                            std::vector<std::string> rows) {
  ModuleMap phi(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) phi.at(i, j) = P(rows.at(i * m + j));
  }
  return phi;
}

/// r = a (x) b - b (x) a on a rank-2 module.
inline TensorElement hb2_r() {
  return T({2, 2}, {{{0, 1}, "1"}, {{1, 0}, "-1"}});
}

inline std::string read_file(const std::string& path) {
  std::ifstream f(path);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

inline std::string data_path(const std::string& name) {
  return std::string(CONFORMAL_DATA_DIR) + "/" + name;
}

struct Run {
  int code;
  std::string out, err;
};

inline Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = execute(args, in, out, err);
  return {code, out.str(), err.str()};
}

// Random generators. Every generator takes the engine explicitly so that a
// failing seed reproduces.

using Rng = std::mt19937_64;

inline long small_int(Rng& g, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(g);
}

/// Random polynomial in `vars`, total degree <= max_degree, sparse.
inline Poly random_poly(Rng& g, const std::vector<Var>& vars,
                        unsigned max_degree, int terms = 3) {
  Poly p;
  int n = static_cast<int>(small_int(g, 0, terms));
  for (int t = 0; t < n; ++t) {
    Monomial m;
    unsigned deg = static_cast<unsigned>(small_int(g, 0, max_degree));
    for (unsigned d = 0; d < deg; ++d) {
      m.exp[vars[small_int(g, 0, static_cast<long>(vars.size()) - 1)].id()]++;
    }
    p += Poly::monomial(m, Rational(small_int(g, -3, 3), small_int(g, 1, 2)));
  }
  return p;
}

/// Arbitrary (usually non-associative) table of rank n, entries in {L, D}.
inline ActionTable random_table(Rng& g, std::size_t n, unsigned degree) {
  ActionTable t = ActionTable::square(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (small_int(g, 0, 2) == 0) {
          t.at(i, j, k) = random_poly(g, {var::L, var::D}, degree);
        }
      }
    }
  }
  return t;
}

/// Rank 2 square-zero algebra: only e1 _L e1 = f(L, D) e2 is nonzero, so
/// every triple product vanishes and the table is associative.
inline ConformalAlgebra random_square_zero(Rng& g, unsigned degree = 2) {
  ActionTable t = ActionTable::square(2);
  t.at(0, 0, 1) = random_poly(g, {var::L, var::D}, degree, 4);
  return ConformalAlgebra(FreeModule({"a", "b"}), t);
}

/// Current algebra of a random unital commutative algebra C[e]/(e^2 - c e)
/// written in the basis u = 1 + s e, v = t e, so the constants are not
/// trivially sparse.
inline ConformalAlgebra random_current(Rng& g) {
  Rational c(small_int(g, -2, 2));
  Rational s(small_int(g, -2, 2));
  Rational t(small_int(g, 1, 3));
  // u = 1 + s e, v = t e; e = v / t, 1 = u - (s/t) v.
  // e^2 = c e. uu = 1 + 2s e + s^2 c e, uv = t e + s t c e, vv = t^2 c e.
  auto in_basis = [&](Rational one, Rational e) {
    // one * 1 + e * e  ->  coefficients on (u, v)
    Rational cu = one;
    Rational cv = (e - one * s) / t;
    return std::vector<Rational>{cu, cv};
  };
  std::vector<std::vector<std::vector<Rational>>> k(
      2, std::vector<std::vector<Rational>>(2));
  k[0][0] = in_basis(1, 2 * s + s * s * c);
  k[0][1] = in_basis(0, t + s * t * c);
  k[1][0] = k[0][1];
  k[1][1] = in_basis(0, t * t * c);
  return current(FreeModule({"u", "v"}), k);
}

/// A random associative algebra from the families above.
inline ConformalAlgebra random_associative(Rng& g) {
  switch (small_int(g, 0, 3)) {
    case 0:
      return random_square_zero(g);
    case 1:
      return random_current(g);
    case 2:
      return fixtures::rank1(Rational(small_int(g, -3, 3)));
    default:
      return fixtures::podd(random_poly(g, {var::L}, 3, 3));
  }
}

/// Random valid bimodule of rank <= 2: regular, (A, L, 0) or (A, 0, R).
inline Bimodule random_bimodule(Rng& g) {
  ConformalAlgebra A = random_associative(g);
  Bimodule reg = regular_bimodule(A);
  switch (small_int(g, 0, 2)) {
    case 0:
      return reg;
    case 1:
      return Bimodule(A, A.module(), reg.left,
                      ActionTable::square(A.rank()));
    default:
      return Bimodule(A, A.module(), ActionTable::square(A.rank()),
                      reg.right);
  }
}

/// Random tensor on legs of the given ranks with coefficients in the slots.
inline TensorElement random_tensor(Rng& g, std::vector<std::size_t> ranks,
                                   unsigned degree) {
  TensorElement t(ranks);
  std::vector<Var> slots;
  for (std::size_t s = 1; s <= ranks.size(); ++s) slots.push_back(var::x(s));
  int n = static_cast<int>(small_int(g, 0, 4));
  for (int k = 0; k < n; ++k) {
    MultiIndex index;
    for (auto r : ranks) {
      index.push_back(static_cast<std::size_t>(small_int(g, 0, static_cast<long>(r) - 1)));
    }
    t.add(index, random_poly(g, slots, degree, 2));
  }
  return t;
}

}  // namespace testing
