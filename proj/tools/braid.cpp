#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "quasibraid/bounds.hpp"
#include "quasibraid/braid_word.hpp"
#include "quasibraid/corpus.hpp"
#include "quasibraid/error.hpp"
#include "quasibraid/garside.hpp"
#include "quasibraid/homfly.hpp"
#include "quasibraid/json_io.hpp"
#include "quasibraid/moves.hpp"
#include "quasibraid/quasipositive.hpp"
#include "quasibraid/search.hpp"
#include "quasibraid/verify.hpp"

namespace {

using namespace quasibraid;
using quasibraid::json::Json;

enum Exit { kOk = 0, kUsage = 1, kInconclusive = 2, kViolation = 3 };

constexpr const char* kCsvHeader = "# quasibraid-csv v1";

struct Globals {
  bool json = false;
  std::uint64_t seed = 1;
};

/// A braid given as -n plus a letter string.
struct WordArgs {
  int strands = 1;
  std::vector<std::string> letters;

  BraidWord word() const {
    std::string text;
    for (const std::string& s : letters) text += s + " ";
    return parse_braid(text, strands);
  }
};

void add_word(CLI::App* cmd, WordArgs& args) {
  cmd->add_option("-n,--strands", args.strands, "strand count")->required()->check(CLI::PositiveNumber);
  cmd->add_option("letters", args.letters, "signed generator indices, e.g. \"1 -2 1\"");
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string opt(const std::optional<int>& v) { return v ? std::to_string(*v) : ""; }

int cmd_normalize(const Globals& g, const WordArgs& a) {
  const CanonicalForm nf = to_normal_form(a.word());
  if (g.json) {
    Json factors = Json::array();
    for (const Permutation& f : nf.factors) factors.push_back(f.to_cycle_string());
    print_json({{"strands", nf.strands},
                {"infimum", nf.infimum},
                {"factors", factors},
                {"word", json::to_json(from_normal_form(nf))}});
    return kOk;
  }
  std::cout << "infimum " << nf.infimum << "\n";
  for (const Permutation& f : nf.factors) std::cout << f.to_cycle_string() << "\n";
  return kOk;
}

int cmd_invariants(const Globals& g, const WordArgs& a) {
  const BraidWord w = a.word();
  const HomflyPolynomial p = homfly(w);
  const Json out{{"writhe", writhe(w)},
                 {"strands", w.strands()},
                 {"components", component_count(w)},
                 {"self_linking", self_linking(w)},
                 {"homfly", p.to_string()},
                 {"mfw_lower", mfw_braid_index_lower(p)},
                 {"morton_sl_upper", morton_sl_upper(p)}};
  if (g.json) {
    print_json(out);
  } else {
    for (const auto& [key, value] : out.items()) std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }
  return kOk;
}

ConePoint parse_point(const std::string& text) {
  ConePoint p;
  char comma = 0;
  std::istringstream in(text);
  if (!(in >> p.w >> comma >> p.n) || comma != ',' || !(in >> std::ws).eof() || p.n < 1) {
    throw InvalidInput("expected w,n with n >= 1, got \"" + text + "\"");
  }
  return p;
}

int cmd_cone(const Globals& g, const std::string& apex_text, int depth) {
  const std::vector<ConePoint> points = cone_points(parse_point(apex_text), depth);
  if (g.json) {
    Json out = Json::array();
    for (const ConePoint& p : points) out.push_back({{"w", p.w}, {"n", p.n}});
    print_json(out);
    return kOk;
  }
  std::cout << kCsvHeader << "\nw,n\n";
  for (const ConePoint& p : points) std::cout << p.w << "," << p.n << "\n";
  return kOk;
}

int cmd_replay(const Globals& g, const std::string& path, bool trace) {
  const MoveSequence seq = json::sequence_from_json(json::read_file(path));
  const std::vector<BraidWord> words = replay_trace(seq);
  if (g.json) {
    Json out{{"endpoint", json::to_json(words.back())}};
    if (trace) {
      out["trace"] = Json::array();
      for (const BraidWord& w : words) out["trace"].push_back(json::to_json(w));
    }
    print_json(out);
    return kOk;
  }
  if (trace) {
    for (std::size_t i = 0; i + 1 < words.size(); ++i) {
      std::cout << words[i].strands() << ": " << words[i].to_string() << "\n  " << describe(seq.steps[i]) << "\n";
    }
  }
  std::cout << words.back().strands() << ": " << words.back().to_string() << "\n";
  return kOk;
}

int cmd_qp_search(const Globals& g, const WordArgs& a, const SearchBudget& budget, int conjugacy) {
  const QPSearchResult r = qp_search(a.word(), budget, conjugacy);
  if (g.json) {
    print_json({{"status", to_string(r.status)},
                {"reason", to_string(r.reason)},
                {"certificate", r.certificate ? json::to_json(*r.certificate) : Json(nullptr)},
                {"witness", json::to_json(r.witness)},
                {"nodes_used", r.nodes_used},
                {"detail", r.detail}});
  } else {
    std::cout << to_string(r.status);
    if (r.reason != NotQPReason::None) std::cout << " (" << to_string(r.reason) << ")";
    std::cout << "\n";
    if (r.certificate) {
      for (const Band& b : r.certificate->bands()) {
        std::cout << "  [" << b.conjugator.to_string() << "] " << b.generator << "\n";
      }
    }
    if (!r.witness.empty()) std::cout << "conjugated by [" << r.witness.to_string() << "]\n";
    std::cout << r.detail << "\n";
  }
  return r.status == QPStatus::Inconclusive ? kInconclusive : kOk;
}

int cmd_qp_random(const Globals& g, int n, int k, int len) {
  const QPFactorization q = random_qp(n, k, len, g.seed);
  if (g.json) {
    print_json(json::to_json(q));
    return kOk;
  }
  for (const Band& b : q.bands()) std::cout << "[" << b.conjugator.to_string() << "] " << b.generator << "\n";
  std::cout << "expands to " << q.strands() << ": " << expand(q).to_string() << "\n";
  return kOk;
}

int cmd_corpus_gen(const Globals& g, CorpusParams params, const std::string& output) {
  params.seed = g.seed;
  const std::string text = json::to_json(generate_corpus(params)).dump(2) + "\n";
  if (output.empty() || output == "-") {
    std::cout << text;
    return kOk;
  }
  std::ofstream out(output);
  if (!(out << text)) throw InvalidInput("cannot write " + output);
  return kOk;
}

int cmd_explore(const Globals& g, const WordArgs& a, const SearchBudget& budget, bool csv, bool best_first) {
  ExploreOptions options;
  options.order = best_first ? ExploreOrder::BestFirst : ExploreOrder::BreadthFirst;
  const ReachabilityReport r = explore(a.word(), budget, options);
  if (g.json) {
    Json points = Json::array();
    for (const ConePoint& p : r.points) points.push_back({{"w", p.w}, {"n", p.n}});
    Json minimal = Json::array();
    for (const BraidWord& w : r.minimal_words()) minimal.push_back(json::to_json(w));
    print_json({{"states", r.nodes_used()},
                {"points", points},
                {"min_strands", r.min_strands},
                {"minimal", minimal},
                {"max_self_linking", r.max_self_linking},
                {"budget_exhausted", r.budget_exhausted}});
  } else if (csv) {
    std::cout << kCsvHeader << "\nw,n\n";
    for (const ConePoint& p : r.points) std::cout << p.w << "," << p.n << "\n";
  } else {
    std::cout << "states " << r.nodes_used() << (r.budget_exhausted ? " (budget exhausted)" : "") << "\n"
              << "min strands " << r.min_strands << "\n"
              << "max self-linking " << r.max_self_linking << "\n";
    for (const BraidWord& w : r.minimal_words()) std::cout << "  " << w.strands() << ": " << w.to_string() << "\n";
  }
  return kOk;
}

int cmd_verify(const Globals& g, const std::string& statement_text, const std::string& corpus_path,
               const SearchBudget& budget) {
  const Statement statement = parse_statement(statement_text);
  const Corpus corpus = json::corpus_from_json(json::read_file(corpus_path));
  int code = kOk;
  Json records = Json::array();
  if (!g.json) std::cout << kCsvHeader << "\nid,status,sl_bar,b_lower,b_upper,minimal_writhe,nodes\n";
  for (std::size_t i = 0; i < corpus.items.size(); ++i) {
    VerificationRecord rec;
    try {
      rec = verify(statement, corpus.items[i], budget);
    } catch (const TheoremViolation& e) {
      std::cout.flush();
      std::cerr << "FATAL: item " << i << ": " << e.what() << "\n"
                << json::to_json(corpus.items[i]).dump() << "\n";
      return kViolation;
    }
    if (rec.status == VerificationStatus::Inconclusive) code = kInconclusive;
    if (g.json) {
      Json j = json::to_json(rec);
      j["id"] = i;
      records.push_back(j);
    } else {
      std::cout << i << "," << to_string(rec.status) << "," << opt(rec.max_self_linking) << ","
                << opt(rec.braid_index.lower) << "," << opt(rec.braid_index.upper) << "," << opt(rec.minimal_writhe)
                << "," << rec.nodes_used << "\n";
    }
  }
  if (g.json) print_json(records);
  return code;
}

void add_budget(CLI::App* cmd, SearchBudget& budget, const std::string& nodes_flag) {
  cmd->add_option(nodes_flag, budget.max_nodes, "search state budget")->check(CLI::PositiveNumber);
  cmd->add_option("--max-strands", budget.max_strands, "stabilization ceiling")->check(CLI::PositiveNumber);
  cmd->add_option("--max-word-length", budget.max_word_length, "longest word expanded")->check(CLI::PositiveNumber);
  cmd->add_option("--max-conj-len", budget.max_conjugator_length, "longest band conjugator")
      ->check(CLI::NonNegativeNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Braid words, Markov moves and quasipositive factorizations"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_option("--seed", g.seed, "seed for all randomness");

  WordArgs word;
  SearchBudget budget;
  std::function<int()> run;

  auto* normalize = app.add_subcommand("normalize", "Garside left normal form");
  add_word(normalize, word);
  normalize->callback([&] { run = [&] { return cmd_normalize(g, word); }; });

  auto* invariants = app.add_subcommand("invariants", "writhe, self-linking, HOMFLY and derived bounds");
  add_word(invariants, word);
  invariants->callback([&] { run = [&] { return cmd_invariants(g, word); }; });

  std::string apex;
  int depth = 0;
  auto* cone = app.add_subcommand("cone", "points reachable from an apex by stabilizations");
  cone->add_option("--apex", apex, "apex as w,n")->required();
  cone->add_option("--depth", depth, "number of stabilizations")->required()->check(CLI::NonNegativeNumber);
  cone->callback([&] { run = [&] { return cmd_cone(g, apex, depth); }; });

  std::string replay_path;
  bool trace = false;
  auto* moves = app.add_subcommand("moves", "move sequences");
  moves->require_subcommand(1);
  auto* replay = moves->add_subcommand("replay", "replay a move sequence file");
  replay->add_option("file", replay_path, "MoveSequence JSON")->required();
  replay->add_flag("--trace", trace, "print every intermediate word");
  replay->callback([&] { run = [&] { return cmd_replay(g, replay_path, trace); }; });

  auto* qp = app.add_subcommand("qp", "quasipositive factorizations");
  qp->require_subcommand(1);
  int conjugacy = 0;
  auto* qp_search_cmd = qp->add_subcommand("search", "bounded search for a factorization");
  add_word(qp_search_cmd, word);
  qp_search_cmd->add_option("--max-conj-len", budget.max_conjugator_length, "longest band conjugator")
      ->check(CLI::NonNegativeNumber);
  qp_search_cmd->add_option("--max-nodes", budget.max_nodes, "candidate product budget")->check(CLI::PositiveNumber);
  qp_search_cmd->add_option("--conjugacy", conjugacy, "also try conjugates by words up to this length")
      ->check(CLI::NonNegativeNumber);
  qp_search_cmd->callback([&] { run = [&] { return cmd_qp_search(g, word, budget, conjugacy); }; });

  int qp_n = 2, qp_k = 0, qp_len = 0;
  auto* qp_random = qp->add_subcommand("random", "seeded random factorization");
  qp_random->add_option("-n,--strands", qp_n, "strand count")->required()->check(CLI::PositiveNumber);
  qp_random->add_option("-k,--bands", qp_k, "band count")->required()->check(CLI::NonNegativeNumber);
  qp_random->add_option("--conj-len", qp_len, "maximal conjugator length")->check(CLI::NonNegativeNumber);
  qp_random->callback([&] { run = [&] { return cmd_qp_random(g, qp_n, qp_k, qp_len); }; });

  CorpusParams params;
  std::string output;
  auto* corpus = app.add_subcommand("corpus", "quasipositive corpora");
  corpus->require_subcommand(1);
  auto* gen = corpus->add_subcommand("gen", "generate a seeded corpus");
  gen->add_option("--count", params.count, "number of items")->check(CLI::NonNegativeNumber);
  gen->add_option("--max-strands", params.max_strands, "largest strand count")->check(CLI::PositiveNumber);
  gen->add_option("--max-bands", params.max_bands, "largest band count")->check(CLI::NonNegativeNumber);
  gen->add_option("--max-conj-len", params.max_conjugator_length, "longest conjugator")
      ->check(CLI::NonNegativeNumber);
  gen->add_option("-o,--output", output, "output file (default stdout)");
  gen->callback([&] { run = [&] { return cmd_corpus_gen(g, params, output); }; });

  bool csv = false, best_first = false;
  auto* explore_cmd = app.add_subcommand("explore", "bounded closure under Markov and exchange moves");
  add_word(explore_cmd, word);
  add_budget(explore_cmd, budget, "--max-nodes");
  explore_cmd->add_flag("--csv", csv, "visited (w, n) points as CSV");
  explore_cmd->add_flag("--best-first", best_first, "fewest strands first");
  explore_cmd->callback([&] { run = [&] { return cmd_explore(g, word, budget, csv, best_first); }; });

  std::string statement, corpus_path;
  auto* verify_cmd = app.add_subcommand("verify", "check a statement on every corpus item");
  verify_cmd->add_option("--statement", statement, "main | sl-bound | chirality | property-transport")
      ->required()
      ->check(CLI::IsMember({"main", "sl-bound", "chirality", "property-transport"}));
  verify_cmd->add_option("--corpus", corpus_path, "corpus JSON")->required();
  add_budget(verify_cmd, budget, "--budget-nodes");
  verify_cmd->callback([&] { run = [&] { return cmd_verify(g, statement, corpus_path, budget); }; });

  for (CLI::App* sub : {normalize, invariants, cone, moves, replay, qp, qp_search_cmd, qp_random, corpus, gen,
                        explore_cmd, verify_cmd}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  try {
    return run ? run() : kUsage;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const MovePreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const TheoremViolation& e) {
    std::cerr << "FATAL: " << e.what() << "\n";
    return kViolation;
  } catch (const BudgetExceeded& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return kInconclusive;
  }
}
