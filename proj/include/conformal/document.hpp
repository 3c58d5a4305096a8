#pragma once

// JSON documents: one kind per file, tables keyed by label pairs, entries in
// the polynomial expression grammar.

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "conformal/dendriform.hpp"

namespace conformal {

/// A conformal algebra, optionally with a coproduct, form and r-matrix on
/// the same basis.
struct AlgebraDoc {
  ConformalAlgebra algebra;
  std::optional<Coproduct> coproduct;
  std::optional<ConformalBilinearForm> form;
  std::optional<TensorElement> r;
};

struct RMatrixDoc {
  FreeModule module;
  TensorElement r;
};

/// A module map (entries in D) or, with `lambda`, a conformal linear map
/// (entries in L, D).
struct MapDoc {
  FreeModule source, target;
  bool lambda = false;
  ConformalLinearMap map;
};

using Document =
    std::variant<AlgebraDoc, Coproduct, ConformalBilinearForm, RMatrixDoc,
                 Bimodule, MatchedPair, MapDoc, DendriformAlgebra>;

/// Parses and validates a document; throws InputError with a location.
Document parse_document(std::string_view text);

/// Name of the document kind ("conformal_algebra", ...).
std::string document_kind(const Document& doc);

/// Canonical JSON rendering (two-space indent, trailing newline).
std::string emit_document(const Document& doc);

}  // namespace conformal
