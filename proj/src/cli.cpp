#include "conformal/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "conformal/document.hpp"
#include "conformal/fixtures.hpp"

namespace conformal {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string input = "-";
  bool json = false;
  std::string mode = "full";
  std::string r, form, coproduct, map, bimodule;
};

class Context {
 public:
  Context(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

  Document load(const std::string& path) {
    std::string text;
    if (path.empty() || path == "-") {
      if (stdin_used_) throw InputError("standard input can only be read once");
      stdin_used_ = true;
      std::ostringstream ss;
      ss << in_.rdbuf();
      text = ss.str();
    } else {
      std::ifstream f(path, std::ios::binary);
      if (!f) throw InputError("cannot read '" + path + "'");
      std::ostringstream ss;
      ss << f.rdbuf();
      text = ss.str();
    }
    try {
      return parse_document(text);
    } catch (const InputError& e) {
      throw InputError((path.empty() ? std::string("-") : path) + ": " + e.what());
    }
  }

  std::ostream& out() { return out_; }

 private:
  std::istream& in_;
  std::ostream& out_;
  bool stdin_used_ = false;
};

template <typename T>
const T& expect(const Document& doc, const std::string& kind) {
  if (const T* v = std::get_if<T>(&doc)) return *v;
  throw InputError("expected a " + kind + " document, got " + document_kind(doc));
}

void same_basis(const FreeModule& a, const FreeModule& b,
                const std::string& what) {
  if (a != b) throw InputError(what + " is not on the algebra's basis");
}

Json counterexample_json(const Counterexample& c) {
  Json j;
  j["identity"] = c.identity;
  j["indices"] = c.indices;
  j["component"] = c.component;
  j["residual"] = c.residual.to_string();
  return j;
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
  return s;
}

void print_report(std::ostream& out, const std::string& check,
                  const Report& report, bool json,
                  const std::string& refusal = {}) {
  if (json) {
    Json j;
    j["check"] = check;
    j["pass"] = refusal.empty() && report.pass();
    if (!refusal.empty()) j["refused"] = refusal;
    Json parts = Json::array();
    for (const auto& [name, v] : report.parts()) {
      Json p;
      p["name"] = name;
      p["pass"] = v.pass();
      Json ce = Json::array();
      for (const auto& c : v.counterexamples()) ce.push_back(counterexample_json(c));
      p["counterexamples"] = ce;
      parts.push_back(p);
    }
    j["parts"] = parts;
    out << j.dump(2) << "\n";
    return;
  }
  if (!refusal.empty()) out << "refused: " << refusal << "\n";
  for (const auto& [name, v] : report.parts()) {
    out << name << ": " << (v.pass() ? "PASS" : "FAIL") << "\n";
    for (const auto& c : v.counterexamples()) {
      out << "  " << c.identity << " [" << join(c.indices) << "]";
      if (!c.component.empty()) out << " (" << join(c.component) << ")";
      out << ": " << c.residual.to_string() << "\n";
    }
  }
  if (refusal.empty()) out << (report.pass() ? "PASS" : "FAIL") << "\n";
}

Report single(const std::string& name, Verdict v) {
  Report r;
  r.add(name, std::move(v));
  return r;
}

// Secondary inputs: a dedicated document from a flag, else the section of
// the primary algebra document.
Coproduct coproduct_for(Context& ctx, const Options& o, const AlgebraDoc& doc) {
  if (!o.coproduct.empty()) {
    Document d = ctx.load(o.coproduct);
    if (auto* a = std::get_if<AlgebraDoc>(&d)) {
      if (!a->coproduct) throw InputError(o.coproduct + ": no coproduct section");
      same_basis(a->coproduct->module, doc.algebra.module(), "coproduct");
      return *a->coproduct;
    }
    Coproduct c = expect<Coproduct>(d, "coproduct");
    same_basis(c.module, doc.algebra.module(), "coproduct");
    return c;
  }
  if (!doc.coproduct) throw InputError("no coproduct given (use --coproduct)");
  return *doc.coproduct;
}

ConformalBilinearForm form_for(Context& ctx, const Options& o,
                               const AlgebraDoc& doc) {
  if (!o.form.empty()) {
    Document d = ctx.load(o.form);
    if (auto* a = std::get_if<AlgebraDoc>(&d)) {
      if (!a->form) throw InputError(o.form + ": no form section");
      same_basis(a->form->module, doc.algebra.module(), "form");
      return *a->form;
    }
    ConformalBilinearForm f = expect<ConformalBilinearForm>(d, "form");
    same_basis(f.module, doc.algebra.module(), "form");
    return f;
  }
  if (!doc.form) throw InputError("no form given (use --form)");
  return *doc.form;
}

TensorElement r_for(Context& ctx, const Options& o, const AlgebraDoc& doc) {
  if (!o.r.empty()) {
    Document d = ctx.load(o.r);
    if (auto* a = std::get_if<AlgebraDoc>(&d)) {
      if (!a->r) throw InputError(o.r + ": no r section");
      same_basis(a->algebra.module(), doc.algebra.module(), "r");
      return *a->r;
    }
    const RMatrixDoc& rm = expect<RMatrixDoc>(d, "rmatrix");
    same_basis(rm.module, doc.algebra.module(), "r");
    return rm.r;
  }
  if (!doc.r) throw InputError("no r-matrix given (use --r)");
  return *doc.r;
}

MapDoc map_for(Context& ctx, const Options& o) {
  if (o.map.empty()) throw InputError("no map given (use --map)");
  return expect<MapDoc>(ctx.load(o.map), "module_map");
}

ModuleMap module_map_of(const MapDoc& m) {
  if (m.lambda) throw InputError("a module map may not depend on L");
  return m.map.at_zero();
}

// The bimodule is the primary input, or --bimodule over the primary algebra.
Bimodule bimodule_for(Context& ctx, const Options& o) {
  Document primary = ctx.load(o.input);
  if (o.bimodule.empty()) return expect<Bimodule>(primary, "bimodule");
  const AlgebraDoc& alg = expect<AlgebraDoc>(primary, "conformal_algebra");
  Bimodule bm = expect<Bimodule>(ctx.load(o.bimodule), "bimodule");
  if (!(bm.algebra == alg.algebra)) {
    throw InputError("the bimodule is over a different algebra");
  }
  return bm;
}

void check_map_shape(const MapDoc& m, const FreeModule& source,
                     const FreeModule& target) {
  if (m.source != source || m.target != target) {
    throw InputError("map source/target do not match the inputs");
  }
}

struct Registry {
  struct Entry {
    std::string name, summary;
  };
  static const std::vector<Entry>& entries() {
    static const std::vector<Entry> e{
        {"hb2", "rank 2, a_L a = (D^2+L*D+L^2) b, with its Frobenius form"},
        {"podd(p)", "rank 2, a_L a = p(L+D) b, Delta(a) = a(x)b, Delta(b) = b(x)b"},
        {"rank1(k)", "rank 1, a_L a = k a"},
        {"dend-succ", "rank 1 dendriform, a > a = a"},
        {"dend-prec", "rank 1 dendriform, a < a = a"},
        {"null(n)", "rank n, all products zero"},
        {"cur-dual2", "Cur of Q[x]/(x^2) on u = 1, v = x"},
    };
    return e;
  }

  static Document show(const std::string& spec) {
    std::string name = spec, arg;
    auto open = spec.find('(');
    if (open != std::string::npos) {
      if (spec.back() != ')') throw InputError("malformed example '" + spec + "'");
      name = spec.substr(0, open);
      arg = spec.substr(open + 1, spec.size() - open - 2);
    }
    auto no_arg = [&] {
      if (open != std::string::npos) {
        throw InputError("example '" + name + "' takes no parameter");
      }
    };
    if (name == "hb2") {
      no_arg();
      return AlgebraDoc{fixtures::hb2(), {}, fixtures::hb2_form(), {}};
    }
    if (name == "podd") {
      Poly p = arg.empty() ? Poly::variable(var::L)
                           : parse_poly(arg, var_set({var::L}));
      return AlgebraDoc{fixtures::podd(p), fixtures::podd_coproduct(), {}, {}};
    }
    if (name == "rank1") {
      Poly k = arg.empty() ? Poly(1) : parse_poly(arg, VarSet());
      return AlgebraDoc{fixtures::rank1(k.constant_term()), {}, {}, {}};
    }
    if (name == "dend-succ") {
      no_arg();
      return fixtures::dend_succ();
    }
    if (name == "dend-prec") {
      no_arg();
      return fixtures::dend_prec();
    }
    if (name == "null") {
      std::size_t n = 1;
      if (!arg.empty()) {
        if (arg.find_first_not_of("0123456789") != std::string::npos ||
            arg.size() > 2 || std::stoul(arg) == 0) {
          throw InputError("null(n) needs 1 <= n <= 99");
        }
        n = std::stoul(arg);
      }
      return AlgebraDoc{fixtures::null(n), {}, {}, {}};
    }
    if (name == "cur-dual2") {
      no_arg();
      return AlgebraDoc{fixtures::cur_dual2(), {}, {}, {}};
    }
    throw InputError("unknown example '" + spec + "'");
  }
};

}  // namespace

int execute(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks and constructions for associative conformal "
               "algebras and bialgebras",
               "conformal"};
  app.require_subcommand(1);
  Options o;
  std::function<int(Context&)> action;
  std::string check_name;

  auto input = [&](CLI::App* c) {
    c->add_option("input", o.input, "input document ('-' for stdin)");
  };
  auto json = [&](CLI::App* c) {
    c->add_flag("--json", o.json, "structured verdict output");
  };
  // A check prints a report; a refusal is reported like a failure.
  auto check = [&](CLI::App* parent, const std::string& name,
                   const std::string& help,
                   std::function<Report(Context&)> run) {
    CLI::App* c = parent->add_subcommand(name, help);
    input(c);
    json(c);
    c->callback([&, name, run] {
      action = [&, name, run](Context& ctx) {
        try {
          Report r = run(ctx);
          print_report(ctx.out(), name, r, o.json);
          return r.pass() ? 0 : 1;
        } catch (const Refusal& e) {
          print_report(ctx.out(), name, e.report(), o.json, e.what());
          return 1;
        }
      };
    });
    return c;
  };
  auto build = [&](CLI::App* parent, const std::string& name,
                   const std::string& help,
                   std::function<Document(Context&)> run) {
    CLI::App* c = parent->add_subcommand(name, help);
    input(c);
    json(c);
    c->callback([&, name, run] {
      action = [&, name, run](Context& ctx) {
        try {
          ctx.out() << emit_document(run(ctx));
          return 0;
        } catch (const Refusal& e) {
          print_report(ctx.out(), name, e.report(), o.json, e.what());
          return 1;
        }
      };
    });
    return c;
  };
  auto algebra = [&](Context& ctx) {
    return expect<AlgebraDoc>(ctx.load(o.input), "conformal_algebra");
  };

  CLI::App* chk = app.add_subcommand("check", "verify an identity");
  chk->require_subcommand(1);
  check(chk, "assoc", "associativity of a conformal algebra", [&](Context& ctx) {
    return single("assoc", check_associativity(algebra(ctx).algebra));
  });
  check(chk, "coassoc", "coassociativity of a coproduct", [&](Context& ctx) {
    Document d = ctx.load(o.input);
    if (auto* a = std::get_if<AlgebraDoc>(&d)) {
      return single("coassoc", check_coassociativity(coproduct_for(ctx, o, *a)));
    }
    return single("coassoc", check_coassociativity(expect<Coproduct>(d, "coproduct")));
  })->add_option("--coproduct", o.coproduct, "coproduct document");
  check(chk, "frobenius", "symmetric, invariant, nondegenerate form",
        [&](Context& ctx) {
          AlgebraDoc a = algebra(ctx);
          return check_frobenius(a.algebra, form_for(ctx, o, a));
        })
      ->add_option("--form", o.form, "form document");
  check(chk, "bimodule", "bimodule axioms", [&](Context& ctx) {
    return single("bimodule",
                  check_bimodule(expect<Bimodule>(ctx.load(o.input), "bimodule")));
  });
  check(chk, "matched-pair", "matched pair identities", [&](Context& ctx) {
    return check_matched_pair(
        expect<MatchedPair>(ctx.load(o.input), "matched_pair"));
  });
  {
    CLI::App* c = check(chk, "asi", "ASI conformal bialgebra", [&](Context& ctx) {
      AlgebraDoc a = algebra(ctx);
      return check_asi(a.algebra, coproduct_for(ctx, o, a),
                       o.mode == "reduced" ? AsiMode::reduced : AsiMode::full);
    });
    c->add_option("--mode", o.mode, "full (thq1/thq2) or reduced (es7/es8)")
        ->check(CLI::IsMember({"full", "reduced"}));
    c->add_option("--coproduct", o.coproduct, "coproduct document");
  }
  check(chk, "dendriform", "dendriform axioms", [&](Context& ctx) {
    return single("dendriform", check_dendriform(expect<DendriformAlgebra>(
                                    ctx.load(o.input), "dendriform")));
  });
  {
    CLI::App* c = check(chk, "o-operator", "O-operator identity", [&](Context& ctx) {
      Bimodule bm = bimodule_for(ctx, o);
      MapDoc m = map_for(ctx, o);
      check_map_shape(m, bm.module, bm.algebra.module());
      return single("o_operator", check_o_operator(module_map_of(m), bm));
    });
    c->add_option("--map", o.map, "module map document");
    c->add_option("--bimodule", o.bimodule, "bimodule over the input algebra");
  }
  {
    CLI::App* c = check(
        chk, "rota-baxter",
        "Rota-Baxter identity of --map, or of P_0 built from r and the form",
        [&](Context& ctx) {
          AlgebraDoc a = algebra(ctx);
          if (!o.map.empty()) {
            MapDoc m = map_for(ctx, o);
            check_map_shape(m, a.algebra.module(), a.algebra.module());
            return single("rota_baxter",
                          check_rota_baxter(module_map_of(m), a.algebra));
          }
          RotaBaxterResult res =
              p_from_r(a.algebra, form_for(ctx, o, a), r_for(ctx, o, a));
          return single("rota_baxter", res.rota_baxter);
        });
    c->add_option("--map", o.map, "module map document");
    c->add_option("--r", o.r, "r-matrix document");
    c->add_option("--form", o.form, "form document");
  }

  CLI::App* cls = app.add_subcommand("classify", "classify an r-matrix");
  cls->require_subcommand(1);
  check(cls, "r", "antisymmetry, qw1, CYBE and thq3 of an r-matrix",
        [&](Context& ctx) {
          AlgebraDoc a = algebra(ctx);
          return classify_r(a.algebra, r_for(ctx, o, a));
        })
      ->add_option("--r", o.r, "r-matrix document");

  CLI::App* bld = app.add_subcommand("build", "construct a structure");
  bld->require_subcommand(1);
  build(bld, "dual-coproduct", "coproduct on the conformal dual of an algebra",
        [&](Context& ctx) -> Document {
          return coproduct_from_algebra(algebra(ctx).algebra);
        });
  build(bld, "dual-algebra", "product on the conformal dual of a coalgebra",
        [&](Context& ctx) -> Document {
          Document d = ctx.load(o.input);
          if (auto* a = std::get_if<AlgebraDoc>(&d)) {
            return AlgebraDoc{algebra_from_coproduct(coproduct_for(ctx, o, *a)),
                              {}, {}, {}};
          }
          return AlgebraDoc{
              algebra_from_coproduct(expect<Coproduct>(d, "coproduct")), {}, {}, {}};
        })
      ->add_option("--coproduct", o.coproduct, "coproduct document");
  build(bld, "double", "double of an ASI conformal bialgebra",
        [&](Context& ctx) -> Document {
          AlgebraDoc a = algebra(ctx);
          Double dbl = build_double(a.algebra, coproduct_for(ctx, o, a));
          return AlgebraDoc{dbl.algebra, dbl.coproduct, dbl.form, dbl.r};
        })
      ->add_option("--coproduct", o.coproduct, "coproduct document");
  build(bld, "semidirect", "semidirect product with a bimodule",
        [&](Context& ctx) -> Document {
          return AlgebraDoc{
              semidirect(expect<Bimodule>(ctx.load(o.input), "bimodule")),
              {}, {}, {}};
        });
  build(bld, "coboundary", "coboundary coproduct of an r-matrix",
        [&](Context& ctx) -> Document {
          AlgebraDoc a = algebra(ctx);
          TensorElement r = r_for(ctx, o, a);
          return AlgebraDoc{a.algebra, coboundary_coproduct(a.algebra, r), a.form,
                            r};
        })
      ->add_option("--r", o.r, "r-matrix document");
  {
    CLI::App* c = build(bld, "solution-from-o-operator",
                        "antisymmetric CYBE solution from an O-operator",
                        [&](Context& ctx) -> Document {
                          Bimodule bm = bimodule_for(ctx, o);
                          MapDoc m = map_for(ctx, o);
                          check_map_shape(m, bm.module, bm.algebra.module());
                          Solution s = solution_from_o_operator(bm, m.map);
                          return AlgebraDoc{s.ambient, {}, {}, s.r};
                        });
    c->add_option("--map", o.map, "conformal linear map document");
    c->add_option("--bimodule", o.bimodule, "bimodule over the input algebra");
  }
  build(bld, "canonical-solution",
        "CYBE solution in the semidirect product of a dendriform algebra",
        [&](Context& ctx) -> Document {
          Solution s = canonical_solution(
              expect<DendriformAlgebra>(ctx.load(o.input), "dendriform"));
          return AlgebraDoc{s.ambient, {}, {}, s.r};
        });

  CLI::App* ex = app.add_subcommand("examples", "builtin fixtures");
  ex->require_subcommand(1);
  ex->add_subcommand("list", "list the fixtures")->callback([&] {
    action = [](Context& ctx) {
      for (const auto& e : Registry::entries()) {
        ctx.out() << e.name << "  " << e.summary << "\n";
      }
      return 0;
    };
  });
  std::string example;
  CLI::App* show = ex->add_subcommand("show", "print a fixture document");
  show->add_option("name", example, "fixture, e.g. hb2 or podd(L^3)")->required();
  show->callback([&] {
    action = [&](Context& ctx) {
      ctx.out() << emit_document(Registry::show(example));
      return 0;
    };
  });

  std::vector<std::string> argv_store{"conformal"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  Context ctx(in, out);
  try {
    return action ? action(ctx) : 2;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace conformal
