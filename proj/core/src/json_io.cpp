#include "quasibraid/json_io.hpp"

#include <fstream>
#include <sstream>

#include "quasibraid/error.hpp"

namespace quasibraid::json {
namespace {

template <class T>
T get(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("field \"") + key + "\": " + e.what());
  }
}

template <class T>
T get_or(const Json& j, const char* key, T fallback) {
  return j.is_object() && j.contains(key) ? get<T>(j, key) : fallback;
}

std::vector<Letter> letters_of(const Json& j, const char* key) { return get<std::vector<Letter>>(j, key); }

}  // namespace

Json to_json(const BraidWord& word) { return Json{{"strands", word.strands()}, {"letters", word.letters()}}; }

BraidWord braid_from_json(const Json& j) { return BraidWord(get<int>(j, "strands"), letters_of(j, "letters")); }

Json to_json(const QPFactorization& q) {
  Json bands = Json::array();
  for (const Band& b : q.bands()) bands.push_back({{"conjugator", b.conjugator.letters()}, {"generator", b.generator}});
  return Json{{"strands", q.strands()}, {"bands", bands}};
}

QPFactorization factorization_from_json(const Json& j) {
  const int n = get<int>(j, "strands");
  const Json bands = get<Json>(j, "bands");
  if (!bands.is_array()) throw InvalidInput("\"bands\" must be an array");
  std::vector<Band> out;
  for (const Json& b : bands) out.push_back(Band{BraidWord(n, letters_of(b, "conjugator")), get<int>(b, "generator")});
  return QPFactorization(n, std::move(out));
}

Json to_json(const MoveStep& s) {
  return std::visit(
      [](const auto& m) -> Json {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, step::Conjugate>) return {{"type", "conjugate"}, {"by", to_json(m.by)}};
        else if constexpr (std::is_same_v<T, step::Stabilize>) return {{"type", "stabilize"}, {"sign", m.sign}};
        else if constexpr (std::is_same_v<T, step::Destabilize>) return {{"type", "destabilize"}, {"sign", m.sign}};
        else if constexpr (std::is_same_v<T, step::Exchange>) return {{"type", "exchange"}};
        else return {{"type", "rewrite"}, {"to", to_json(m.to)}};
      },
      s);
}

MoveStep step_from_json(const Json& j) {
  const auto type = get<std::string>(j, "type");
  if (type == "conjugate") return step::Conjugate{braid_from_json(get<Json>(j, "by"))};
  if (type == "stabilize") {
    const int sign = get<int>(j, "sign");
    if (sign != 1 && sign != -1) throw InvalidInput("stabilize sign must be +1 or -1");
    return step::Stabilize{sign};
  }
  if (type == "destabilize") {
    const int sign = get_or<int>(j, "sign", 0);
    if (sign < -1 || sign > 1) throw InvalidInput("destabilize sign must be -1, 0 or +1");
    return step::Destabilize{sign};
  }
  if (type == "exchange") return step::Exchange{};
  if (type == "rewrite") return step::Rewrite{braid_from_json(get<Json>(j, "to"))};
  throw InvalidInput("unknown move type: " + type);
}

Json to_json(const MoveSequence& sequence) {
  Json steps = Json::array();
  for (const MoveStep& s : sequence.steps) steps.push_back(to_json(s));
  return Json{{"initial", to_json(sequence.initial)}, {"steps", steps}};
}

MoveSequence sequence_from_json(const Json& j) {
  MoveSequence out{braid_from_json(get<Json>(j, "initial")), {}};
  const Json steps = get<Json>(j, "steps");
  if (!steps.is_array()) throw InvalidInput("\"steps\" must be an array");
  for (const Json& s : steps) out.steps.push_back(step_from_json(s));
  return out;
}

Json to_json(const Corpus& corpus) {
  const CorpusParams& p = corpus.params;
  Json items = Json::array();
  for (const QPFactorization& q : corpus.items) items.push_back(to_json(q));
  return Json{{"metadata",
               {{"seed", p.seed},
                {"count", p.count},
                {"max_strands", p.max_strands},
                {"max_bands", p.max_bands},
                {"max_conjugator_length", p.max_conjugator_length}}},
              {"items", items}};
}

Corpus corpus_from_json(const Json& j) {
  Corpus out;
  if (j.is_object() && j.contains("metadata")) {
    const Json& m = j.at("metadata");
    out.params.seed = get<std::uint64_t>(m, "seed");
    out.params.count = get<int>(m, "count");
    out.params.max_strands = get<int>(m, "max_strands");
    out.params.max_bands = get<int>(m, "max_bands");
    out.params.max_conjugator_length = get<int>(m, "max_conjugator_length");
  }
  const Json items = get<Json>(j, "items");
  if (!items.is_array()) throw InvalidInput("\"items\" must be an array");
  for (const Json& item : items) out.items.push_back(factorization_from_json(item));
  if (!j.contains("metadata")) out.params.count = static_cast<int>(out.items.size());
  return out;
}

Json to_json(const BoundedInvariant& b) {
  Json out = Json::object();
  out["lower"] = b.lower ? Json(*b.lower) : Json(nullptr);
  out["upper"] = b.upper ? Json(*b.upper) : Json(nullptr);
  out["lower_certificate"] = b.lower_certificate;
  out["upper_certificate"] = b.upper_certificate;
  out["exact"] = b.exact();
  return out;
}

Json to_json(const VerificationRecord& rec) {
  Json out = Json::object();
  out["statement"] = to_string(rec.statement);
  out["status"] = to_string(rec.status);
  out["instance"] = to_json(rec.instance);
  out["max_self_linking"] = rec.max_self_linking ? Json(*rec.max_self_linking) : Json(nullptr);
  out["braid_index"] = to_json(rec.braid_index);
  out["minimal_writhe"] = rec.minimal_writhe ? Json(*rec.minimal_writhe) : Json(nullptr);
  out["nodes_used"] = rec.nodes_used;
  out["representative"] = rec.representative ? to_json(*rec.representative) : Json(nullptr);
  out["certificate"] = rec.certificate ? to_json(*rec.certificate) : Json(nullptr);
  out["notes"] = rec.notes;
  return out;
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

}  // namespace quasibraid::json
