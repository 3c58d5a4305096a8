// Acceptance run: one PASS/FAIL line per criterion. All identities are exact
// (tolerance zero); each criterion also has a pinned wall-clock limit.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>

#include "support.hpp"

using namespace testing;

namespace {

using Clock = std::chrono::steady_clock;

// Runtime limits in seconds; 0 means no limit.
constexpr double kLimits[11] = {0, 1, 2, 5, 1, 1, 10, 2, 5, 2, 0};

// Random sample sizes and seeds.
constexpr int kRoundTripTables = 100;
constexpr int kRandomBimodules = 50;
constexpr std::uint64_t kSeed = 20261016;

struct Failure {
  std::string why;
};

void expect(bool ok, const std::string& why) {
  if (!ok) throw Failure{why};
}

bool criterion1() {
  ConformalAlgebra A = fixtures::hb2();
  expect(check_associativity(A).pass(), "HB2 associativity");
  expect(check_frobenius(A, fixtures::hb2_form()).pass(), "HB2 form");
  ConformalBilinearForm perturbed(A.module(), {Poly(), P("L"), P("-L"), Poly()});
  Report r = check_frobenius(A, perturbed);
  expect(r.at("symmetric").pass(), "perturbed form symmetric");
  expect(!r.at("invariant").pass(), "perturbed form invariance fails");
  expect(!r.at("nondegenerate").pass(), "perturbed form nondegeneracy fails");
  return true;
}

bool criterion2() {
  Coproduct delta = fixtures::podd_coproduct();
  const std::vector<std::pair<std::string, bool>> family = {
      {"L", true}, {"L^3", true}, {"L + 5*L^3", true}, {"1", false}, {"L^2", false}};
  for (const auto& [p, odd] : family) {
    ConformalAlgebra A = fixtures::podd(P(p));
    bool full = check_asi(A, delta, AsiMode::full).pass();
    bool reduced = check_asi(A, delta, AsiMode::reduced).pass();
    bool pair = check_matched_pair(induced_matched_pair(A, delta)).pass();
    expect(full == odd, "full verdict for p = " + p);
    expect(reduced == odd, "reduced verdict for p = " + p);
    expect(pair == odd, "matched pair verdict for p = " + p);
  }
  return true;
}

bool round_trips(const ConformalAlgebra& A) {
  return algebra_from_coproduct(coproduct_from_algebra(A)).table() == A.table();
}

bool criterion3() {
  expect(round_trips(fixtures::hb2()), "HB2");
  for (Rational k : {Rational(0), Rational(1), Rational(-3), Rational(2, 7)}) {
    expect(round_trips(fixtures::rank1(k)), "R1(k)");
  }
  Rng g(kSeed);
  for (int i = 0; i < kRoundTripTables; ++i) {
    std::size_t n = static_cast<std::size_t>(small_int(g, 1, 3));
    ConformalAlgebra A(FreeModule::numbered(n), random_table(g, n, 2));
    expect(round_trips(A), "random table " + std::to_string(i));
  }
  return true;
}

bool criterion4() {
  ConformalAlgebra A = fixtures::hb2();
  Report c = classify_r(A, hb2_r());
  expect(c.at("antisymmetric").pass(), "antisymmetric");
  expect(c.at("qw1").pass(), "qw1");
  expect(c.at("thq3").pass(), "thq3");
  const auto& cx = c.at("cybe").counterexamples();
  expect(cx.size() == 1, "one cybe counterexample");
  expect(cx[0].component == std::vector<std::string>{"b", "b", "b"}, "cybe component");
  expect(cx[0].residual == P("3*(x1^2 + x1*x2 + x2^2)"), "cybe residual");
  Coproduct d = coboundary_coproduct(A, hb2_r());
  expect(d.images[0] == T({2, 2}, {{{1, 1}, "-2*(x1^2 + x1*x2 + x2^2)"}}), "Delta(a)");
  expect(d.images[1].is_zero(), "Delta(b)");
  expect(check_asi(A, d).pass(), "coboundary ASI");
  return true;
}

bool criterion5() {
  Solution c = canonical_solution(fixtures::dend_succ());
  expect(r_bullet_r(c.ambient, c.r).is_zero(), "r.r = 0");
  expect(classify_r(c.ambient, c.r).pass(), "classify all-pass");
  ConformalAlgebra R = fixtures::rank1(1);
  Bimodule left_only(R, R.module(), regular_bimodule(R).left, ActionTable::square(1));
  Solution s = solution_from_o_operator(
      left_only, ConformalLinearMap::from_module_map(ModuleMap::identity(1)));
  expect(s.ambient == c.ambient, "same ambient algebra");
  expect(s.r == c.r, "same r");
  return true;
}

bool criterion6() {
  ConformalAlgebra A = fixtures::podd(P("L"));
  Coproduct delta = fixtures::podd_coproduct();
  Double dbl = build_double(A, delta);
  expect(dbl.algebra.rank() == 4, "rank 4");
  expect(check_associativity(dbl.algebra).pass(), "associative");
  Report f = check_frobenius(dbl.algebra, dbl.form);
  expect(f.at("symmetric").pass() && f.at("invariant").pass() &&
             f.at("nondegenerate").pass(),
         "Frobenius");
  expect(check_asi(dbl.algebra, dbl.coproduct).pass(), "ASI");
  ModuleMap i1(2, 4), i2(2, 4);
  i1.at(0, 0) = i1.at(1, 1) = Poly(1);
  i2.at(0, 2) = i2.at(1, 3) = Poly(1);
  expect(check_homomorphism(i1, A, dbl.algebra, delta, dbl.coproduct).pass(), "i1");
  expect(check_homomorphism(i2, algebra_from_coproduct(delta), dbl.algebra,
                            coproduct_from_algebra(A).negated(), dbl.coproduct)
             .pass(),
         "i2");
  return true;
}

bool criterion7() {
  // every antisymmetric fixture r
  std::vector<std::pair<ConformalAlgebra, TensorElement>> fixtures_r;
  fixtures_r.emplace_back(fixtures::hb2(), hb2_r());
  fixtures_r.emplace_back(fixtures::hb2(), TensorElement({2, 2}));
  for (const auto& d : {fixtures::dend_succ(), fixtures::dend_prec()}) {
    Solution s = canonical_solution(d);
    fixtures_r.emplace_back(s.ambient, s.r);
  }
  Double dbl = build_double(fixtures::podd(P("L")), fixtures::podd_coproduct());
  fixtures_r.emplace_back(dbl.algebra, dbl.r - swap_legs(dbl.r, 1, 2));
  for (const auto& [A, r] : fixtures_r) {
    bool cybe = classify_r(A, r).at("cybe").pass();
    ModuleMap t0 = chom_from_tensor(r).at_zero();
    expect(cybe == check_o_operator(t0, dual_bimodule(regular_bimodule(A))).pass(),
           "CYBE vs O-operator");
  }
  ConformalAlgebra A = fixtures::hb2();
  RotaBaxterResult rb = p_from_r(A, fixtures::hb2_form(), hb2_r());
  expect(rb.p0 == module_map(2, 2, {"-1", "0", "0", "1"}), "P0(a) = -a, P0(b) = b");
  expect(rb.rota_baxter.pass() == classify_r(A, hb2_r()).at("cybe").pass(),
         "Rota-Baxter vs CYBE");
  Solution s = canonical_solution(fixtures::dend_succ());
  ConformalAlgebra dual = algebra_from_coproduct(coboundary_coproduct(s.ambient, s.r));
  expect(check_homomorphism(chom_from_tensor(s.r).at_zero(), dual, s.ambient).pass(),
         "T0 homomorphism");
  return true;
}

bool criterion8() {
  std::vector<ConformalAlgebra> algebras{fixtures::hb2(), fixtures::cur_dual2()};
  for (Rational k : {Rational(0), Rational(1), Rational(-4)}) {
    algebras.push_back(fixtures::rank1(k));
  }
  for (const auto& A : algebras) {
    expect(check_bimodule(dual_bimodule(regular_bimodule(A))).pass(), "fixture dual");
  }
  Rng g(kSeed + 8);
  for (int i = 0; i < kRandomBimodules; ++i) {
    Bimodule bm = random_bimodule(g);
    expect(check_bimodule(bm).pass(), "generator produced a bimodule");
    expect(check_bimodule(dual_bimodule(bm)).pass(), "random dual " + std::to_string(i));
  }
  return true;
}

bool criterion9() {
  ConformalAlgebra A = fixtures::podd(P("L"));
  Coproduct delta = fixtures::podd_coproduct();
  ConformalAlgebra dual = algebra_from_coproduct(delta);
  Coproduct dual_delta = coproduct_from_algebra(A);
  expect(check_asi(dual, dual_delta).pass(), "dual bialgebra");
  return true;
}

bool criterion10() {
  const std::string odd = data_path("podd-odd.json");
  const std::string even = data_path("podd-even.json");
  const std::string dend = data_path("dend1.json");
  expect(run({"check", "asi", odd}).code == 0, "check asi podd-odd.json");
  expect(run({"check", "asi", even, "--json"}).code == 1, "check asi podd-even.json");
  Run built = run({"build", "canonical-solution", dend});
  expect(built.code == 0, "build canonical-solution");
  expect(run({"classify", "r"}, built.out).code == 0, "classify the solution");

  std::string hb2 = read_file(data_path("hb2.json"));
  std::string with_r = R"({"kind": "conformal_algebra", "basis": ["a", "b"],
      "products": {"a,a": {"b": "D^2 + L*D + L^2"}}, "r": {"a,b": "1", "b,a": "-1"}})";
  std::string left_only = R"({"kind": "bimodule", "algebra_basis": ["a"],
      "products": {"a,a": {"a": "1"}}, "basis": ["a"],
      "left": {"a,a": {"a": "1"}}, "right": {}})";
  std::string semidirect_input = R"({"kind": "bimodule", "algebra_basis": ["a"],
      "products": {"a,a": {"a": "1"}}, "basis": ["m"],
      "left": {"a,m": {"m": "1"}}, "right": {}})";
  auto map_path = std::filesystem::temp_directory_path() / "conformal_acceptance_map.json";
  {
    std::ofstream f(map_path);
    f << R"({"kind": "module_map", "source": ["a"], "target": ["a"],
             "map": {"a": {"a": "1"}}})";
  }
  const std::vector<std::pair<std::vector<std::string>, std::string>> builds = {
      {{"build", "dual-coproduct"}, hb2},
      {{"build", "dual-algebra"}, read_file(odd)},
      {{"build", "double"}, read_file(odd)},
      {{"build", "semidirect"}, semidirect_input},
      {{"build", "coboundary"}, with_r},
      {{"build", "solution-from-o-operator", "--map", map_path.string()}, left_only},
      {{"build", "canonical-solution"}, read_file(dend)},
  };
  for (const auto& [args, input] : builds) {
    Run b = run(args, input);
    expect(b.code == 0, args[1] + " exit code");
    expect(emit_document(parse_document(b.out)) == b.out, args[1] + " re-parse");
  }
  std::filesystem::remove(map_path);
  return true;
}

}  // namespace

int main() {
  const std::function<bool()> criteria[] = {
      criterion1, criterion2, criterion3, criterion4, criterion5,
      criterion6, criterion7, criterion8, criterion9, criterion10};
  int failed = 0;
  for (int n = 1; n <= 10; ++n) {
    auto start = Clock::now();
    bool ok = false;
    std::string why;
    try {
      ok = criteria[n - 1]();
    } catch (const Failure& f) {
      why = f.why;
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (ok && kLimits[n] > 0 && seconds >= kLimits[n]) {
      ok = false;
      why = "over the " + std::to_string(kLimits[n]) + " s limit";
    }
    std::printf("criterion %d: %s (%.3f s)%s%s\n", n, ok ? "PASS" : "FAIL", seconds,
                why.empty() ? "" : " ", why.c_str());
    failed += !ok;
  }
  return failed ? 1 : 0;
}
