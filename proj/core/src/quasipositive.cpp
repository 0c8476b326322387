#include "quasibraid/quasipositive.hpp"

#include "quasibraid/error.hpp"
#include "quasibraid/rng.hpp"

namespace quasibraid {

BraidWord Band::word() const {
  return conjugator * BraidWord(conjugator.strands(), {generator}) * conjugator.inverse();
}

QPFactorization::QPFactorization(int strands, std::vector<Band> bands) : strands_(strands), bands_(std::move(bands)) {
  if (strands_ < 1) throw InvalidInput("factorization needs at least one strand");
  for (const Band& b : bands_) {
    if (b.generator < 1 || b.generator >= strands_) {
      throw InvalidInput("band generator " + std::to_string(b.generator) + " out of range for " +
                         std::to_string(strands_) + " strands");
    }
    if (b.conjugator.strands() != strands_) throw InvalidInput("band conjugator has the wrong strand count");
  }
}

BraidWord expand(const QPFactorization& q) {
  std::vector<Letter> letters;
  for (const Band& b : q.bands()) {
    const auto& w = b.conjugator.letters();
    letters.insert(letters.end(), w.begin(), w.end());
    letters.push_back(b.generator);
    for (auto it = w.rbegin(); it != w.rend(); ++it) letters.push_back(-*it);
  }
  return free_reduce(BraidWord(q.strands(), std::move(letters)));
}

bool writhe_identity_holds(const QPFactorization& q) { return writhe(expand(q)) == q.band_count(); }

int qp_self_linking(const QPFactorization& q) { return q.band_count() - q.strands(); }

QPFactorization qp_conjugate(const QPFactorization& q, const BraidWord& c) {
  if (c.strands() != q.strands()) throw InvalidInput("qp_conjugate: strand count mismatch");
  std::vector<Band> bands;
  bands.reserve(q.bands().size());
  for (const Band& b : q.bands()) bands.push_back({free_reduce(c * b.conjugator), b.generator});
  return QPFactorization(q.strands(), std::move(bands));
}

QPFactorization qp_stabilize_positive(const QPFactorization& q) {
  const int n = q.strands();
  std::vector<Band> bands;
  bands.reserve(q.bands().size() + 1);
  for (const Band& b : q.bands()) bands.push_back({with_strands(b.conjugator, n + 1), b.generator});
  bands.push_back({BraidWord(n + 1), n});
  return QPFactorization(n + 1, std::move(bands));
}

QPFactorization random_qp(int strands, int bands, int conjugator_length, std::uint64_t seed) {
  if (strands < 1 || bands < 0 || conjugator_length < 0) throw InvalidInput("random_qp: invalid parameters");
  if (strands == 1 && bands > 0) throw InvalidInput("random_qp: B_1 has no generators");
  Rng rng(seed);
  const int generators = strands - 1;
  std::vector<Band> out;
  out.reserve(static_cast<std::size_t>(bands));
  for (int k = 0; k < bands; ++k) {
    const int length = rng.between(0, conjugator_length);
    std::vector<Letter> conj;
    for (int i = 0; i < length; ++i) {
      const int g = rng.between(1, generators);
      conj.push_back(rng.below(2) == 0 ? g : -g);
    }
    const int generator = rng.between(1, generators);
    out.push_back({BraidWord(strands, std::move(conj)), generator});
  }
  return QPFactorization(strands, std::move(out));
}

std::string to_string(QPStatus status) {
  switch (status) {
    case QPStatus::Certificate: return "certificate";
    case QPStatus::NotQuasipositive: return "not_quasipositive";
    case QPStatus::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

std::string to_string(NotQPReason reason) {
  switch (reason) {
    case NotQPReason::None: return "none";
    case NotQPReason::NegativeWrithe: return "negative_writhe";
    case NotQPReason::NontrivialZeroWrithe: return "nontrivial_zero_writhe";
    case NotQPReason::ExhaustedBounds: return "exhausted_bounds";
  }
  return "unknown";
}

}  // namespace quasibraid
