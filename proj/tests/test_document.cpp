#include <doctest.h>

#include "support.hpp"

using namespace testing;

namespace {

template <class T>
T parse_as(const std::string& text) {
  Document doc = parse_document(text);
  REQUIRE(std::holds_alternative<T>(doc));
  return std::get<T>(doc);
}

}  // namespace

TEST_CASE("algebra documents") {
  auto doc = parse_as<AlgebraDoc>(R"({
    "kind": "conformal_algebra",
    "basis": ["a", "b"],
    "products": {"a,a": {"b": "D^2 + L*D + L^2"}}
  })");
  CHECK(doc.algebra == fixtures::hb2());
  CHECK_FALSE(doc.coproduct);
  CHECK_FALSE(doc.form);

  auto null = parse_as<AlgebraDoc>(
      R"({"kind": "conformal_algebra", "basis": ["a"], "products": {}})");
  CHECK(null.algebra.table().is_zero());
  CHECK(null.algebra.rank() == 1);

  auto hb = parse_as<AlgebraDoc>(read_file(data_path("hb2.json")));
  REQUIRE(hb.form);
  CHECK(*hb.form == fixtures::hb2_form());
  auto odd = parse_as<AlgebraDoc>(read_file(data_path("podd-odd.json")));
  REQUIRE(odd.coproduct);
  CHECK(*odd.coproduct == fixtures::podd_coproduct());
  CHECK(odd.algebra == fixtures::podd(P("L")));
}

TEST_CASE("validation errors") {
  auto rejects = [](const std::string& text) {
    CHECK_THROWS_AS(parse_document(text), InputError);
  };
  // forbidden variable in a form
  rejects(R"({"kind": "form", "basis": ["a"], "form": {"a,a": "x1 + L"}})");
  // unknown label, key, kind
  rejects(R"({"kind": "conformal_algebra", "basis": ["a"],
              "products": {"a,c": {"a": "1"}}})");
  rejects(R"({"kind": "conformal_algebra", "basis": ["a"], "products": {},
              "extra": 1})");
  rejects(R"({"kind": "lie_algebra", "basis": ["a"]})");
  rejects(R"({"kind": "conformal_algebra", "basis": [], "products": {}})");
  rejects(R"({"kind": "conformal_algebra", "basis": ["a", "a"], "products": {}})");
  rejects(R"({"kind": "conformal_algebra", "basis": ["a"],
              "products": {"a,a": {"a": "L +"}}})");
  rejects(R"({"kind": "coproduct", "basis": ["a"],
              "coproduct": {"a": {"a,a": "D"}}})");
  rejects(R"({"kind": "module_map", "source": ["a"], "target": ["b"],
              "map": {"a": {"b": "L"}}})");
  rejects("not json");
  rejects("[]");

  try {
    parse_document(R"({"kind": "form", "basis": ["a"], "form": {"a,a": "x1"}})");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("a,a") != std::string::npos);
  }
}

TEST_CASE("every kind round-trips through emit") {
  std::vector<Document> docs;
  docs.push_back(AlgebraDoc{fixtures::hb2(), std::nullopt, fixtures::hb2_form(),
                            hb2_r()});
  docs.push_back(fixtures::podd_coproduct());
  docs.push_back(fixtures::hb2_form());
  docs.push_back(RMatrixDoc{FreeModule({"a", "b"}), hb2_r()});
  docs.push_back(dual_bimodule(regular_bimodule(fixtures::hb2())));
  docs.push_back(induced_matched_pair(fixtures::podd(P("L")),
                                      fixtures::podd_coproduct()));
  ConformalLinearMap g(2, 2);
  g.at(0, 1) = P("L*D - 1/2");
  docs.push_back(MapDoc{FreeModule({"a", "b"}), FreeModule({"u", "v"}), true, g});
  docs.push_back(fixtures::dend_succ());

  std::set<std::string> kinds;
  for (const auto& doc : docs) {
    std::string text = emit_document(doc);
    Document again = parse_document(text);
    CHECK(document_kind(again) == document_kind(doc));
    CHECK(emit_document(again) == text);
    kinds.insert(document_kind(doc));
  }
  CHECK(kinds.size() == 8);
}

TEST_CASE("emit is a fixed point on random algebras") {
  Rng g(51);
  for (int trial = 0; trial < 50; ++trial) {
    ConformalAlgebra A(FreeModule::numbered(3), random_table(g, 3, 3));
    Document doc = AlgebraDoc{A, std::nullopt, std::nullopt, std::nullopt};
    std::string text = emit_document(doc);
    auto back = std::get<AlgebraDoc>(parse_document(text));
    CHECK(back.algebra == A);
    CHECK(emit_document(Document(back)) == text);
  }
}
