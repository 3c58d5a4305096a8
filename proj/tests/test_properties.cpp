// Cross-module properties on randomly generated data.

#include <doctest.h>

#include "support.hpp"

using namespace testing;

namespace {

TensorElement antisymmetrize(const TensorElement& t) {
  return t - swap_legs(t, 1, 2);
}

/// Random coassociative coproduct on `module`: the dual of a random
/// associative algebra of the same rank.
Coproduct random_coproduct(Rng& g, const FreeModule& module) {
  for (;;) {
    ConformalAlgebra B = random_associative(g);
    if (B.rank() != module.rank()) continue;
    return Coproduct(module, coproduct_from_algebra(B).images);
  }
}

}  // namespace

TEST_CASE("dual bimodules of random bimodules") {
  Rng g(61);
  for (int trial = 0; trial < 60; ++trial) {
    Bimodule bm = random_bimodule(g);
    REQUIRE(check_bimodule(bm).pass());
    Bimodule d = dual_bimodule(bm);
    CHECK(check_bimodule(d).pass());
    CHECK(dual_bimodule(d) == bm);
  }
}

TEST_CASE("duality round trips") {
  Rng g(62);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = static_cast<std::size_t>(small_int(g, 1, 3));
    ConformalAlgebra A(FreeModule::numbered(n), random_table(g, n, 2));
    CHECK(algebra_from_coproduct(coproduct_from_algebra(A)).table() == A.table());
    Coproduct delta = coproduct_from_algebra(A);
    CHECK(coproduct_from_algebra(algebra_from_coproduct(delta)) == delta);
  }
  for (int trial = 0; trial < 30; ++trial) {
    ConformalAlgebra A = random_associative(g);
    CHECK(check_coassociativity(coproduct_from_algebra(A)).pass());
  }
}

TEST_CASE("full and reduced ASI checks agree with the matched pair") {
  Rng g(63);
  int passing = 0, failing = 0;
  auto compare = [&](const ConformalAlgebra& A, const Coproduct& delta) {
    bool full = check_asi(A, delta, AsiMode::full).pass();
    bool reduced = check_asi(A, delta, AsiMode::reduced).pass();
    bool pair = check_matched_pair(induced_matched_pair(A, delta)).pass();
    CHECK(full == reduced);
    CHECK(full == pair);
    (full ? passing : failing)++;
  };
  for (int trial = 0; trial < 40; ++trial) {
    compare(fixtures::podd(random_poly(g, {var::L}, 4, 3)),
            fixtures::podd_coproduct());
  }
  for (int trial = 0; trial < 40; ++trial) {
    ConformalAlgebra A = random_associative(g);
    compare(A, random_coproduct(g, A.module()));
  }
  CHECK(passing > 0);
  CHECK(failing > 0);
}

TEST_CASE("CYBE and O-operators give the same verdict") {
  Rng g(64);
  int solutions = 0;
  for (int trial = 0; trial < 60; ++trial) {
    ConformalAlgebra A = random_associative(g);
    std::size_t n = A.rank();
    TensorElement r = antisymmetrize(random_tensor(g, {n, n}, trial % 2));
    bool cybe = classify_r(A, r).at("cybe").pass();
    ModuleMap t0 = chom_from_tensor(r).at_zero();
    Bimodule dual = dual_bimodule(regular_bimodule(A));
    CHECK(cybe == check_o_operator(t0, dual).pass());
    solutions += cybe;
  }
  CHECK(solutions > 0);
}

TEST_CASE("coboundaries of admissible r are ASI bialgebras") {
  Rng g(65);
  int admissible = 0;
  for (int trial = 0; trial < 80; ++trial) {
    ConformalAlgebra A = random_associative(g);
    std::size_t n = A.rank();
    TensorElement r = antisymmetrize(random_tensor(g, {n, n}, 2));
    Report c = classify_r(A, r);
    if (!c.at("qw1").pass() || !c.at("thq3").pass()) continue;
    ++admissible;
    CHECK(check_asi(A, coboundary_coproduct(A, r)).pass());
  }
  // HB2 with a (x) b - b (x) a is admissible but not a CYBE solution
  CHECK(check_asi(fixtures::hb2(), coboundary_coproduct(fixtures::hb2(), hb2_r()))
            .pass());
  CHECK(admissible > 0);
}

TEST_CASE("T0 of a solution is an algebra homomorphism") {
  std::vector<Solution> solutions;
  for (Rational k : {Rational(1), Rational(-2), Rational(1, 3)}) {
    ActionTable s = ActionTable::square(1), p = ActionTable::square(1);
    s.at(0, 0, 0) = Poly(k);
    solutions.push_back(canonical_solution(DendriformAlgebra(FreeModule({"a"}),
                                                             ActionTable::square(1), s)));
    p.at(0, 0, 0) = Poly(k);
    solutions.push_back(canonical_solution(DendriformAlgebra(FreeModule({"a"}), p,
                                                             ActionTable::square(1))));
  }
  Rng g(66);
  for (int trial = 0; trial < 10; ++trial) {
    ConformalAlgebra N = fixtures::null(2);
    solutions.push_back({N, antisymmetrize(random_tensor(g, {2, 2}, 2))});
  }
  for (const auto& [A, r] : solutions) {
    REQUIRE(classify_r(A, r).at("cybe").pass());
    ConformalAlgebra dual = algebra_from_coproduct(coboundary_coproduct(A, r));
    CHECK(check_homomorphism(chom_from_tensor(r).at_zero(), dual, A).pass());
  }
}

TEST_CASE("Rota-Baxter verdict of P0 matches CYBE on Frobenius algebras") {
  struct Frob {
    ConformalAlgebra A;
    ConformalBilinearForm form;
  };
  Double dbl = build_double(fixtures::podd(P("L")), fixtures::podd_coproduct());
  std::vector<Frob> frobs{{fixtures::hb2(), fixtures::hb2_form()},
                          {dbl.algebra, dbl.form}};
  Rng g(67);
  int agree_pass = 0, agree_fail = 0;
  for (const auto& [A, form] : frobs) {
    REQUIRE(check_frobenius(A, form).pass());
    std::size_t n = A.rank();
    std::vector<TensorElement> rs{hb2_r(), TensorElement({n, n})};
    if (n != 2) rs.front() = dbl.r - swap_legs(dbl.r, 1, 2);
    for (int trial = 0; trial < 15; ++trial) {
      rs.push_back(antisymmetrize(random_tensor(g, {n, n}, 0)));
    }
    for (const auto& r : rs) {
      bool cybe = classify_r(A, r).at("cybe").pass();
      bool rb = p_from_r(A, form, r).rota_baxter.pass();
      CHECK(cybe == rb);
      (cybe ? agree_pass : agree_fail)++;
    }
  }
  CHECK(agree_pass > 0);
  CHECK(agree_fail > 0);
}

TEST_CASE("canonical solutions are the identity O-operator's solutions") {
  std::vector<DendriformAlgebra> ds{fixtures::dend_succ(), fixtures::dend_prec()};
  for (Rational k : {Rational(2), Rational(-1, 2)}) {
    ActionTable s = ActionTable::square(1);
    s.at(0, 0, 0) = Poly(k);
    ds.emplace_back(FreeModule({"a"}), ActionTable::square(1), s);
    ds.emplace_back(FreeModule({"a"}), s, ActionTable::square(1));
  }
  ds.emplace_back(FreeModule({"a", "b"}), ActionTable::square(2),
                  ActionTable::square(2));
  for (const auto& d : ds) {
    Solution c = canonical_solution(d);
    Solution s = solution_from_o_operator(
        dendriform_bimodule(d),
        ConformalLinearMap::from_module_map(ModuleMap::identity(d.rank())));
    CHECK(c.ambient == s.ambient);
    CHECK(c.r == s.r);
    CHECK(r_bullet_r(c.ambient, c.r).is_zero());
    CHECK(classify_r(c.ambient, c.r).pass());
  }
}

TEST_CASE("solutions from random O-operators solve the CYBE") {
  Rng g(68);
  int nonzero = 0;
  for (int trial = 0; trial < 40; ++trial) {
    Bimodule bm = random_bimodule(g);
    std::size_t n = bm.module.rank();
    ModuleMap t(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) t.at(i, j) = random_poly(g, {var::D}, 1, 1);
    }
    if (!check_o_operator(t, bm).pass()) continue;
    Solution s = solution_from_o_operator(bm, ConformalLinearMap::from_module_map(t));
    CHECK(classify_r(s.ambient, s.r).at("cybe").pass());
    CHECK(classify_r(s.ambient, s.r).at("antisymmetric").pass());
    nonzero += !s.r.is_zero();
  }
  CHECK(nonzero > 0);
}

TEST_CASE("document emission is a fixed point on random data") {
  Rng g(69);
  for (int trial = 0; trial < 30; ++trial) {
    Bimodule bm = dual_bimodule(random_bimodule(g));
    std::string text = emit_document(bm);
    CHECK(std::get<Bimodule>(parse_document(text)) == bm);
    ConformalAlgebra A = random_associative(g);
    Coproduct delta = random_coproduct(g, A.module());
    std::string ct = emit_document(delta);
    CHECK(std::get<Coproduct>(parse_document(ct)) == delta);
  }
}
