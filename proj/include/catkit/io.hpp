#pragma once

#include "catkit/complex_matrix.hpp"
#include "catkit/dsl.hpp"
#include "catkit/finset.hpp"
#include "catkit/rel.hpp"
#include "catkit/tqft.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <variant>

namespace catkit::io {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Matrix literal: array of rows, each entry a [re, im] pair.
ComplexMatrix matrix_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const ComplexMatrix& m);

// Relation literal: {"src": n, "dst": m, "rows": [[0/1 per src column] per dst row]}.
rel::BoolRelation relation_from_json(const nlohmann::json& j);
nlohmann::json relation_to_json(const rel::BoolRelation& r);

// Set literal: array of atom label strings. Function literal: object mapping
// domain labels to codomain labels, checked against the given sets.
finset::FiniteSet set_from_json(const nlohmann::json& j);
finset::FunctionMorphism function_from_json(const nlohmann::json& j, const finset::FiniteSet& dom,
                                            const finset::FiniteSet& cod);

// {"dim": n, "unit": matrix, "mult": matrix, "counit": matrix}.
tqft::FrobeniusData frobenius_from_json(const nlohmann::json& j);
tqft::FrobeniusData load_frobenius_file(const std::string& path);

nlohmann::json load_json_file(const std::string& path);
std::string load_text_file(const std::string& path);

// Interpretation file: {"backend": ..., "objects": {atom: object literal},
// "generators": {name: morphism literal}}. Object literals are dimensions for
// finhilb, sizes for rel and set literals for finset; cob2 needs no file.
struct FinHilbInterp {
    std::map<std::string, int> objects;
    std::map<std::string, ComplexMatrix> generators;
};

struct RelInterp {
    std::map<std::string, int> objects;
    std::map<std::string, rel::BoolRelation> generators;
};

struct FinSetInterp {
    std::map<std::string, finset::FiniteSet> objects;
    std::map<std::string, finset::FunctionMorphism> generators;
};

using Interpretation = std::variant<FinHilbInterp, RelInterp, FinSetInterp>;

// Parses and validates: every declared generator must be mapped with the
// shape its declaration demands under the object bindings, and every atom in
// the signature must be bound. Throws IoError or dsl::TypeError.
Interpretation interpretation_from_json(const nlohmann::json& j, const dsl::Signature& sig);

} // namespace catkit::io
