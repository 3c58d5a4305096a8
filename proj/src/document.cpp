#include "conformal/document.hpp"

#include <json.hpp>

#include <set>

namespace conformal {

namespace {

using Json = nlohmann::ordered_json;

VarSet kProductVars() { return var_set({var::L, var::D}); }
VarSet kTensorVars() { return var_set({var::x(1), var::x(2)}); }
VarSet kFormVars() { return var_set({var::L}); }
VarSet kMapVars() { return var_set({var::D}); }

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw InputError(path + ": " + msg);
}

const Json& member(const Json& obj, const std::string& key,
                   const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, "missing \"" + key + "\"");
  return *it;
}

void check_keys(const Json& obj, const std::string& path,
                const std::set<std::string>& required,
                const std::set<std::string>& optional = {}) {
  if (!obj.is_object()) fail(path, "expected an object");
  for (const auto& [k, v] : obj.items()) {
    if (!required.count(k) && !optional.count(k)) {
      fail(path, "unknown key \"" + k + "\"");
    }
  }
  for (const auto& k : required) {
    if (!obj.contains(k)) fail(path, "missing \"" + k + "\"");
  }
}

const Json& object_at(const Json& obj, const std::string& key,
                      const std::string& path) {
  const Json& v = member(obj, key, path);
  if (!v.is_object()) fail(path + "." + key, "expected an object");
  return v;
}

FreeModule read_basis(const Json& v, const std::string& path) {
  if (!v.is_array() || v.empty()) fail(path, "expected a non-empty label list");
  std::vector<std::string> labels;
  for (const auto& l : v) {
    if (!l.is_string()) fail(path, "labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  try {
    return FreeModule(std::move(labels));
  } catch (const InputError& e) {
    fail(path, e.what());
  }
}

Poly read_expr(const Json& v, VarSet allowed, const std::string& path) {
  if (!v.is_string()) fail(path, "expected an expression string");
  try {
    return parse_poly(v.get<std::string>(), allowed);
  } catch (const ParseError& e) {
    fail(path, e.what());
  }
}

std::size_t read_label(const std::string& label, const FreeModule& mod,
                       const std::string& path) {
  if (!mod.contains(label)) fail(path, "undeclared label \"" + label + "\"");
  return mod.index_of(label);
}

std::pair<std::size_t, std::size_t> read_pair_key(const std::string& key,
                                                  const FreeModule& first,
                                                  const FreeModule& second,
                                                  const std::string& path) {
  auto comma = key.find(',');
  if (comma == std::string::npos || key.find(',', comma + 1) != std::string::npos) {
    fail(path, "key \"" + key + "\" is not of the form \"label,label\"");
  }
  return {read_label(key.substr(0, comma), first, path),
          read_label(key.substr(comma + 1), second, path)};
}

// {"i,p": {"q": expr}} for op(e_i)_L v_p = sum_q K v_q.
ActionTable read_table(const Json& obj, const FreeModule& labels,
                       const FreeModule& inputs, const FreeModule& outputs,
                       VarSet allowed, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  ActionTable t(labels.rank(), inputs.rank(), outputs.rank());
  for (const auto& [key, row] : obj.items()) {
    const std::string kp = path + ".\"" + key + "\"";
    auto [i, p] = read_pair_key(key, labels, inputs, kp);
    if (!row.is_object()) fail(kp, "expected an object");
    for (const auto& [out, expr] : row.items()) {
      std::size_t q = read_label(out, outputs, kp);
      t.at(i, p, q) = read_expr(expr, allowed, kp + "." + out);
    }
  }
  return t;
}

Json write_table(const ActionTable& t, const FreeModule& labels,
                 const FreeModule& inputs, const FreeModule& outputs) {
  Json obj = Json::object();
  for (std::size_t i = 0; i < t.labels(); ++i) {
    for (std::size_t p = 0; p < t.inputs(); ++p) {
      Json row = Json::object();
      for (std::size_t q = 0; q < t.outputs(); ++q) {
        if (!t.at(i, p, q).is_zero()) {
          row[outputs.label(q)] = t.at(i, p, q).to_string();
        }
      }
      if (!row.empty()) obj[labels.label(i) + "," + inputs.label(p)] = row;
    }
  }
  return obj;
}

TensorElement read_tensor(const Json& obj, const FreeModule& mod,
                          const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  TensorElement t({mod.rank(), mod.rank()});
  for (const auto& [key, expr] : obj.items()) {
    const std::string kp = path + ".\"" + key + "\"";
    auto [i, j] = read_pair_key(key, mod, mod, kp);
    t.add({i, j}, read_expr(expr, kTensorVars(), kp));
  }
  return t;
}

Json write_tensor(const TensorElement& t, const FreeModule& mod) {
  Json obj = Json::object();
  for (const auto& [idx, c] : t.terms()) {
    obj[mod.label(idx[0]) + "," + mod.label(idx[1])] = c.to_string();
  }
  return obj;
}

Coproduct read_coproduct(const Json& obj, const FreeModule& mod,
                         const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  Coproduct delta(mod);
  for (const auto& [key, image] : obj.items()) {
    std::size_t k = read_label(key, mod, path);
    delta.images[k] = read_tensor(image, mod, path + "." + key);
  }
  return delta;
}

Json write_coproduct(const Coproduct& delta) {
  Json obj = Json::object();
  for (std::size_t k = 0; k < delta.module.rank(); ++k) {
    if (!delta.images[k].is_zero()) {
      obj[delta.module.label(k)] = write_tensor(delta.images[k], delta.module);
    }
  }
  return obj;
}

ConformalBilinearForm read_form(const Json& obj, const FreeModule& mod,
                                const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  const std::size_t n = mod.rank();
  std::vector<Poly> entries(n * n);
  for (const auto& [key, expr] : obj.items()) {
    const std::string kp = path + ".\"" + key + "\"";
    auto [i, j] = read_pair_key(key, mod, mod, kp);
    entries[i * n + j] = read_expr(expr, kFormVars(), kp);
  }
  return ConformalBilinearForm(mod, std::move(entries));
}

Json write_form(const ConformalBilinearForm& form) {
  Json obj = Json::object();
  const auto& mod = form.module;
  for (std::size_t i = 0; i < mod.rank(); ++i) {
    for (std::size_t j = 0; j < mod.rank(); ++j) {
      if (!form.at(i, j).is_zero()) {
        obj[mod.label(i) + "," + mod.label(j)] = form.at(i, j).to_string();
      }
    }
  }
  return obj;
}

Json basis_json(const FreeModule& mod) { return Json(mod.labels()); }

Document parse_algebra(const Json& doc) {
  check_keys(doc, "$", {"kind", "basis", "products"}, {"coproduct", "form", "r"});
  FreeModule mod = read_basis(doc["basis"], "$.basis");
  AlgebraDoc out{ConformalAlgebra(mod, read_table(object_at(doc, "products", "$"),
                                                  mod, mod, mod, kProductVars(),
                                                  "$.products")),
                 {}, {}, {}};
  if (doc.contains("coproduct")) {
    out.coproduct = read_coproduct(doc["coproduct"], mod, "$.coproduct");
  }
  if (doc.contains("form")) out.form = read_form(doc["form"], mod, "$.form");
  if (doc.contains("r")) out.r = read_tensor(doc["r"], mod, "$.r");
  return out;
}

Document parse_bimodule(const Json& doc) {
  check_keys(doc, "$",
             {"kind", "algebra_basis", "products", "basis", "left", "right"});
  FreeModule a = read_basis(doc["algebra_basis"], "$.algebra_basis");
  FreeModule m = read_basis(doc["basis"], "$.basis");
  ConformalAlgebra A(a, read_table(object_at(doc, "products", "$"), a, a, a,
                                   kProductVars(), "$.products"));
  return Bimodule(A, m,
                  read_table(object_at(doc, "left", "$"), a, m, m, kProductVars(),
                             "$.left"),
                  read_table(object_at(doc, "right", "$"), a, m, m,
                             kProductVars(), "$.right"));
}

Document parse_matched_pair(const Json& doc) {
  check_keys(doc, "$",
             {"kind", "a_basis", "b_basis", "a_products", "b_products", "l_a",
              "r_a", "l_b", "r_b"});
  FreeModule a = read_basis(doc["a_basis"], "$.a_basis");
  FreeModule b = read_basis(doc["b_basis"], "$.b_basis");
  auto table = [&](const char* key, const FreeModule& l, const FreeModule& m) {
    return read_table(object_at(doc, key, "$"), l, m, m, kProductVars(),
                      std::string("$.") + key);
  };
  return MatchedPair(ConformalAlgebra(a, table("a_products", a, a)),
                     ConformalAlgebra(b, table("b_products", b, b)),
                     table("l_a", a, b), table("r_a", a, b), table("l_b", b, a),
                     table("r_b", b, a));
}

Document parse_map(const Json& doc) {
  check_keys(doc, "$", {"kind", "source", "target", "map"}, {"lambda"});
  MapDoc out;
  out.source = read_basis(doc["source"], "$.source");
  out.target = read_basis(doc["target"], "$.target");
  if (doc.contains("lambda")) {
    if (!doc["lambda"].is_boolean()) fail("$.lambda", "expected a boolean");
    out.lambda = doc["lambda"].get<bool>();
  }
  const VarSet allowed = out.lambda ? kProductVars() : kMapVars();
  out.map = ConformalLinearMap(out.source.rank(), out.target.rank());
  const Json& map = object_at(doc, "map", "$");
  for (const auto& [src, row] : map.items()) {
    const std::string rp = "$.map." + src;
    std::size_t i = read_label(src, out.source, "$.map");
    if (!row.is_object()) fail(rp, "expected an object");
    for (const auto& [tgt, expr] : row.items()) {
      std::size_t j = read_label(tgt, out.target, rp);
      out.map.at(i, j) = read_expr(expr, allowed, rp + "." + tgt);
    }
  }
  return out;
}

Document parse_dendriform(const Json& doc) {
  check_keys(doc, "$", {"kind", "basis", "prec", "succ"});
  FreeModule mod = read_basis(doc["basis"], "$.basis");
  return DendriformAlgebra(
      mod,
      read_table(object_at(doc, "prec", "$"), mod, mod, mod, kProductVars(),
                 "$.prec"),
      read_table(object_at(doc, "succ", "$"), mod, mod, mod, kProductVars(),
                 "$.succ"));
}

struct Emitter {
  Json operator()(const AlgebraDoc& d) const {
    const auto& mod = d.algebra.module();
    Json j;
    j["kind"] = "conformal_algebra";
    j["basis"] = basis_json(mod);
    j["products"] = write_table(d.algebra.table(), mod, mod, mod);
    if (d.coproduct) j["coproduct"] = write_coproduct(*d.coproduct);
    if (d.form) j["form"] = write_form(*d.form);
    if (d.r) j["r"] = write_tensor(*d.r, mod);
    return j;
  }
  Json operator()(const Coproduct& d) const {
    Json j;
    j["kind"] = "coproduct";
    j["basis"] = basis_json(d.module);
    j["coproduct"] = write_coproduct(d);
    return j;
  }
  Json operator()(const ConformalBilinearForm& d) const {
    Json j;
    j["kind"] = "form";
    j["basis"] = basis_json(d.module);
    j["form"] = write_form(d);
    return j;
  }
  Json operator()(const RMatrixDoc& d) const {
    Json j;
    j["kind"] = "rmatrix";
    j["basis"] = basis_json(d.module);
    j["r"] = write_tensor(d.r, d.module);
    return j;
  }
  Json operator()(const Bimodule& d) const {
    const auto& a = d.algebra.module();
    Json j;
    j["kind"] = "bimodule";
    j["algebra_basis"] = basis_json(a);
    j["products"] = write_table(d.algebra.table(), a, a, a);
    j["basis"] = basis_json(d.module);
    j["left"] = write_table(d.left, a, d.module, d.module);
    j["right"] = write_table(d.right, a, d.module, d.module);
    return j;
  }
  Json operator()(const MatchedPair& d) const {
    const auto& a = d.A.module();
    const auto& b = d.B.module();
    Json j;
    j["kind"] = "matched_pair";
    j["a_basis"] = basis_json(a);
    j["b_basis"] = basis_json(b);
    j["a_products"] = write_table(d.A.table(), a, a, a);
    j["b_products"] = write_table(d.B.table(), b, b, b);
    j["l_a"] = write_table(d.l_A, a, b, b);
    j["r_a"] = write_table(d.r_A, a, b, b);
    j["l_b"] = write_table(d.l_B, b, a, a);
    j["r_b"] = write_table(d.r_B, b, a, a);
    return j;
  }
  Json operator()(const MapDoc& d) const {
    Json j;
    j["kind"] = "module_map";
    j["source"] = basis_json(d.source);
    j["target"] = basis_json(d.target);
    if (d.lambda) j["lambda"] = true;
    Json map = Json::object();
    for (std::size_t i = 0; i < d.source.rank(); ++i) {
      Json row = Json::object();
      for (std::size_t k = 0; k < d.target.rank(); ++k) {
        if (!d.map.at(i, k).is_zero()) {
          row[d.target.label(k)] = d.map.at(i, k).to_string();
        }
      }
      if (!row.empty()) map[d.source.label(i)] = row;
    }
    j["map"] = map;
    return j;
  }
  Json operator()(const DendriformAlgebra& d) const {
    Json j;
    j["kind"] = "dendriform";
    j["basis"] = basis_json(d.module);
    j["prec"] = write_table(d.prec, d.module, d.module, d.module);
    j["succ"] = write_table(d.succ, d.module, d.module, d.module);
    return j;
  }
};

}  // namespace

Document parse_document(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("$", "expected an object");
  const Json& kind = member(doc, "kind", "$");
  if (!kind.is_string()) fail("$.kind", "expected a string");
  const std::string k = kind.get<std::string>();
  try {
    if (k == "conformal_algebra") return parse_algebra(doc);
    if (k == "coproduct") {
      check_keys(doc, "$", {"kind", "basis", "coproduct"});
      FreeModule mod = read_basis(doc["basis"], "$.basis");
      return read_coproduct(doc["coproduct"], mod, "$.coproduct");
    }
    if (k == "form") {
      check_keys(doc, "$", {"kind", "basis", "form"});
      FreeModule mod = read_basis(doc["basis"], "$.basis");
      return read_form(doc["form"], mod, "$.form");
    }
    if (k == "rmatrix") {
      check_keys(doc, "$", {"kind", "basis", "r"});
      FreeModule mod = read_basis(doc["basis"], "$.basis");
      return RMatrixDoc{mod, read_tensor(doc["r"], mod, "$.r")};
    }
    if (k == "bimodule") return parse_bimodule(doc);
    if (k == "matched_pair") return parse_matched_pair(doc);
    if (k == "module_map") return parse_map(doc);
    if (k == "dendriform") return parse_dendriform(doc);
  } catch (const Json::exception& e) {
    throw InputError(std::string("invalid document: ") + e.what());
  }
  fail("$.kind", "unknown document kind \"" + k + "\"");
}

std::string document_kind(const Document& doc) {
  return std::visit(Emitter{}, doc)["kind"].get<std::string>();
}

std::string emit_document(const Document& doc) {
  return std::visit(Emitter{}, doc).dump(2) + "\n";
}

}  // namespace conformal
