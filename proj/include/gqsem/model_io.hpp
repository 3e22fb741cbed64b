#pragma once

// Model file ingestion and canonical serialization. The on-disk format is
// JSON; see docs/model.schema.json and the README for the field reference.
// The five parameterless builtin quantifiers (some, all, no, most, few) are
// preloaded under their own names and as determiner words; a model file may
// redeclare them.

#include <string>

#include "gqsem/evaluator.hpp"

namespace gqsem {

inline constexpr const char* kModelFormatId = "gqsem-model/1";

Model load_model(const std::string& path,
                 std::size_t universe_cap = kDefaultUniverseCap);
Model load_model_from_string(const std::string& text,
                             const std::string& origin = "<string>",
                             std::size_t universe_cap = kDefaultUniverseCap);

// Canonical text form: fixed field set, alphabetically ordered keys,
// entity lists in universe order, quantifier tables sorted. Loading the
// output reproduces the model; dumping again is byte-identical.
std::string canonical_model_text(const Model& m);

} // namespace gqsem
