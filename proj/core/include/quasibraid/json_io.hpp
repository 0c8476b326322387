#pragma once

#include <string>

#include <json.hpp>

#include "quasibraid/braid_word.hpp"
#include "quasibraid/corpus.hpp"
#include "quasibraid/moves.hpp"
#include "quasibraid/quasipositive.hpp"
#include "quasibraid/verify.hpp"

namespace quasibraid::json {

using Json = nlohmann::json;

// Readers throw InvalidInput on malformed or invalid documents.

Json to_json(const BraidWord& word);
BraidWord braid_from_json(const Json& j);

Json to_json(const QPFactorization& q);
QPFactorization factorization_from_json(const Json& j);

Json to_json(const MoveStep& s);
MoveStep step_from_json(const Json& j);

Json to_json(const MoveSequence& sequence);
MoveSequence sequence_from_json(const Json& j);

Json to_json(const Corpus& corpus);
Corpus corpus_from_json(const Json& j);

Json to_json(const BoundedInvariant& b);
Json to_json(const VerificationRecord& rec);

/// Parses text, converting parse errors to InvalidInput.
Json parse(const std::string& text);
Json read_file(const std::string& path);

}  // namespace quasibraid::json
