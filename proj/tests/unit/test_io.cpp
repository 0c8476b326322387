#include <gtest/gtest.h>

#include "quasibraid/corpus.hpp"
#include "quasibraid/error.hpp"
#include "quasibraid/json_io.hpp"

using namespace quasibraid;
namespace qj = quasibraid::json;

TEST(Json, BraidWordRoundTrip) {
  const BraidWord w(3, {1, -2, 2});
  EXPECT_EQ(qj::to_json(w).dump(), R"({"letters":[1,-2,2],"strands":3})");
  EXPECT_EQ(qj::braid_from_json(qj::to_json(w)), w);
  EXPECT_THROW(qj::braid_from_json(qj::parse(R"({"strands":2,"letters":[2]})")), InvalidInput);
  EXPECT_THROW(qj::braid_from_json(qj::parse(R"({"letters":[1]})")), InvalidInput);
  EXPECT_THROW(qj::braid_from_json(qj::parse(R"({"strands":"x","letters":[]})")), InvalidInput);
  EXPECT_THROW(qj::parse("{"), InvalidInput);
}

TEST(Json, FactorizationRoundTrip) {
  const QPFactorization q = random_qp(4, 4, 2, 3);
  const qj::Json j = qj::to_json(q);
  EXPECT_EQ(qj::factorization_from_json(j), q);
  EXPECT_EQ(qj::factorization_from_json(qj::parse(R"({"strands":3,"bands":[{"conjugator":[1],"generator":2}]})")),
            QPFactorization(3, {{BraidWord(3, {1}), 2}}));
  EXPECT_THROW(qj::factorization_from_json(qj::parse(R"({"strands":3,"bands":[{"conjugator":[],"generator":3}]})")),
               InvalidInput);
}

TEST(Json, MoveSequenceRoundTrip) {
  const MoveSequence seq{BraidWord(3, {1, 2, 1, -2}),
                         {step::Stabilize{1}, step::Conjugate{BraidWord(4, {-3})}, step::Destabilize{0},
                          step::Exchange{}, step::Rewrite{BraidWord(3, {2, 1, 2})}}};
  EXPECT_EQ(qj::sequence_from_json(qj::to_json(seq)), seq);
  EXPECT_THROW(qj::step_from_json(qj::parse(R"({"type":"twist"})")), InvalidInput);
  EXPECT_THROW(qj::step_from_json(qj::parse(R"({"type":"stabilize","sign":0})")), InvalidInput);
}

TEST(Json, CorpusRoundTrip) {
  CorpusParams params;
  params.count = 12;
  params.seed = 0xdeadbeefcafeULL;
  const Corpus c = generate_corpus(params);
  const Corpus back = qj::corpus_from_json(qj::parse(qj::to_json(c).dump()));
  EXPECT_EQ(back.params, c.params);
  EXPECT_EQ(back.items, c.items);
}

TEST(Corpus, DeterministicAndPrefixStable) {
  CorpusParams a;
  a.count = 50;
  CorpusParams b = a;
  b.count = 20;
  const Corpus ca = generate_corpus(a), cb = generate_corpus(b);
  EXPECT_EQ(generate_corpus(a).items, ca.items);
  for (int i = 0; i < 20; ++i) EXPECT_EQ(ca.items[static_cast<std::size_t>(i)], cb.items[static_cast<std::size_t>(i)]);
  for (const QPFactorization& q : ca.items) {
    EXPECT_LE(q.strands(), a.max_strands);
    EXPECT_LE(q.band_count(), a.max_bands);
    for (const Band& band : q.bands()) EXPECT_LE(band.conjugator.length(), 2u);
  }
  b.seed = 2;
  b.count = 50;
  EXPECT_NE(generate_corpus(b).items, ca.items);
}
