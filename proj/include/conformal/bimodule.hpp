#pragma once

// Bimodules, their conformal duals, matched pairs and the products they
// induce on direct sums.
//
// Tables store l(e_i)_L v_p = sum_q l_q^{ip}(L, D) v_q and likewise for r;
// the right action in arrow form is v <-_L a = r(a)_{-L-D} v.

#include "conformal/algebra.hpp"

namespace conformal {

struct Bimodule {
  Bimodule() = default;
  Bimodule(ConformalAlgebra algebra, FreeModule module, ActionTable left,
           ActionTable right);

  ConformalAlgebra algebra;
  FreeModule module;
  ActionTable left;
  ActionTable right;

  friend bool operator==(const Bimodule&, const Bimodule&) = default;
};

/// Zero left and right actions of A on `module`.
Bimodule zero_bimodule(const ConformalAlgebra& A, const FreeModule& module);

/// LM2, RM2 and the left/right compatibility on basis tuples.
Verdict check_bimodule(const Bimodule& bm);

/// (A, L_A, R_A).
Bimodule regular_bimodule(const ConformalAlgebra& A);

/// (M^{*c}, r^*, l^*).
Bimodule dual_bimodule(const Bimodule& bm);

/// The dual of one action table: X^*(e_i)_L v_p^* = sum_q X_p^{iq}(L, -L-D) v_q^*.
ActionTable dual_action(const ActionTable& table);

/// (A, B, l_A, r_A, l_B, r_B): (B, l_A, r_A) is an A-bimodule and
/// (A, l_B, r_B) a B-bimodule.
struct MatchedPair {
  MatchedPair() = default;
  MatchedPair(ConformalAlgebra a, ConformalAlgebra b, ActionTable l_a,
              ActionTable r_a, ActionTable l_b, ActionTable r_b);

  ConformalAlgebra A, B;
  ActionTable l_A, r_A, l_B, r_B;

  Bimodule b_over_a() const { return Bimodule(A, B.module(), l_A, r_A); }
  Bimodule a_over_b() const { return Bimodule(B, A.module(), l_B, r_B); }
};

/// Parts "bimodule_B", "bimodule_A", "es1" .. "es6".
Report check_matched_pair(const MatchedPair& mp);

/// The single identity es1 or es5 of a matched pair, reported under `id`.
Verdict check_es1(const MatchedPair& mp, const std::string& id = "es1");
Verdict check_es5(const MatchedPair& mp, const std::string& id = "es5");

/// The product on A + B; refuses unless check_matched_pair passes.
ConformalAlgebra bowtie(const MatchedPair& mp);
/// Same product without checking the pair.
ConformalAlgebra bowtie_unchecked(const MatchedPair& mp);

/// A + M with M-side products zero; refuses unless check_bimodule passes.
ConformalAlgebra semidirect(const Bimodule& bm);

}  // namespace conformal
