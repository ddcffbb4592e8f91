#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "swapsuffix/encoder.hpp"
#include "swapsuffix/error.hpp"
#include "swapsuffix/objective.hpp"
#include "swapsuffix/parallel.hpp"
#include "swapsuffix/rng.hpp"
#include "swapsuffix/search.hpp"

namespace swapsuffix {

/// +1: sample matches the target caption; -1: matches the input caption; 0: neither.
enum class Verdict : int { input = -1, neither = 0, target = 1 };

inline int to_int(Verdict v) { return static_cast<int>(v); }

/// How a sample's similarity to each caption is measured before thresholding.
enum class Similarity {
  /// Raw cosine against each caption embedding.
  cosine,
  /// Two-way softmax over the caption cosines, scaled by `logit_scale`,
  /// as CLIP-style zero-shot scoring does.
  caption_softmax,
};

inline const char* to_string(Similarity s) { return s == Similarity::cosine ? "cosine" : "caption_softmax"; }

inline Similarity parse_similarity(const std::string& s) {
  if (s == "cosine") return Similarity::cosine;
  if (s == "caption_softmax") return Similarity::caption_softmax;
  throw InvalidArgument("unknown similarity '" + s + "'");
}

/// Class +1 when target similarity > 1 - gamma and input similarity < gamma;
/// -1 on the mirrored condition.
class ThresholdClassifier {
 public:
  static constexpr double kClipGamma = 0.0034;
  static constexpr double kClip336Gamma = 0.0341;

  explicit ThresholdClassifier(double gamma = kClipGamma, Similarity sim = Similarity::cosine,
                               double logit_scale = 100.0)
      : gamma_(gamma), sim_(sim), logit_scale_(logit_scale) {
    if (!(gamma > 0.0 && gamma < 0.5)) throw InvalidArgument("gamma must lie in (0, 0.5)");
    if (!(logit_scale > 0.0)) throw InvalidArgument("logit_scale must be positive");
  }

  static ThresholdClassifier clip() { return ThresholdClassifier(kClipGamma); }
  static ThresholdClassifier clip336() { return ThresholdClassifier(kClip336Gamma); }

  double gamma() const noexcept { return gamma_; }
  Similarity similarity() const noexcept { return sim_; }
  double logit_scale() const noexcept { return logit_scale_; }

  /// (target similarity, input similarity) under the configured measure.
  std::pair<double, double> similarities(const FlatEmbedding& sample, const FlatEmbedding& input,
                                         const FlatEmbedding& target) const {
    const double ct = cosine(sample, target);
    const double ci = cosine(sample, input);
    if (sim_ == Similarity::cosine) return {ct, ci};
    auto sigmoid = [](double x) { return 1.0 / (1.0 + std::exp(-x)); };
    return {sigmoid(logit_scale_ * (ct - ci)), sigmoid(logit_scale_ * (ci - ct))};
  }

 private:
  double gamma_;
  Similarity sim_;
  double logit_scale_;
};

inline Verdict classify(const FlatEmbedding& sample, const FlatEmbedding& input_emb, const FlatEmbedding& target_emb,
                        const ThresholdClassifier& clf) {
  if (sample.size() != input_emb.size() || sample.size() != target_emb.size()) {
    throw DimensionMismatch("classify: embeddings differ in length");
  }
  const auto [st, si] = clf.similarities(sample, input_emb, target_emb);
  const double hi = 1.0 - clf.gamma();
  const double lo = clf.gamma();
  if (st > hi && si < lo) return Verdict::target;
  if (si > hi && st < lo) return Verdict::input;
  return Verdict::neither;
}

/// Stochastic stand-in for an image generator: maps a prompt to a sample in
/// the encoder's embedding space. Deterministic for a given (prompt, seed).
class Generator {
 public:
  virtual ~Generator() = default;
  virtual FlatEmbedding generate(const TokenSequence& prompt, std::uint64_t seed) const = 0;
};

/// H(prompt) plus isotropic Gaussian noise with per-coordinate standard
/// deviation sigma * |H(prompt)| / sqrt(len), so the noise norm is about
/// sigma times the embedding norm.
class SurrogateGenerator final : public Generator {
 public:
  SurrogateGenerator(const Encoder& enc, double noise_sigma) : enc_(enc), sigma_(noise_sigma) {
    if (!(noise_sigma >= 0.0)) throw InvalidArgument("noise_sigma must be >= 0");
  }

  FlatEmbedding generate(const TokenSequence& prompt, std::uint64_t seed) const override {
    FlatEmbedding h = enc_.encode(prompt);
    if (sigma_ == 0.0) return h;
    std::uint64_t key = seed;
    for (TokenId t : prompt.ids()) key = hash_combine(key, t);
    CounterRng rng(key);
    auto v = h.values();
    const double scale = sigma_ * norm(v) / std::sqrt(static_cast<double>(v.size()));
    for (double& x : v) x += scale * rng.gaussian();
    return h;
  }

  double noise_sigma() const noexcept { return sigma_; }

 private:
  const Encoder& enc_;
  double sigma_;
};

inline FlatEmbedding surrogate_generate(const TokenSequence& prompt, const Encoder& enc, double noise_sigma,
                                        std::uint64_t seed) {
  return SurrogateGenerator(enc, noise_sigma).generate(prompt, seed);
}

struct SuccessTally {
  std::size_t samples = 0;
  std::size_t positives = 0;
  std::size_t negatives = 0;
  std::size_t neutrals = 0;
  bool majority_success = false;
};

/// Seed of sample j for an attack seeded with `attack_seed`.
inline std::uint64_t sample_seed(std::uint64_t attack_seed, std::size_t j) {
  return hash_combine(hash_combine(attack_seed, 0x5A3B1E5ULL), j);
}

/// Strict majority: success needs positives > n/2, so even splits fail.
inline SuccessTally tally_verdicts(std::span<const Verdict> verdicts) {
  SuccessTally t;
  t.samples = verdicts.size();
  for (Verdict v : verdicts) {
    switch (v) {
      case Verdict::target: ++t.positives; break;
      case Verdict::input: ++t.negatives; break;
      case Verdict::neither: ++t.neutrals; break;
    }
  }
  t.majority_success = 2 * t.positives > t.samples;
  return t;
}

/// Samples `n_samples` generations of source + best suffix and classifies
/// each against (source, target).
inline SuccessTally suffix_success(const AttackRecord& record, const AttackTargets& targets, const Generator& gen,
                                   const ThresholdClassifier& clf, std::size_t n_samples = 5) {
  if (n_samples < 1) throw InvalidArgument("n_samples must be >= 1");
  const TokenSequence attacked = splice_suffix(targets.source_tokens, record.best_suffix);
  std::vector<Verdict> verdicts(n_samples);
  for (std::size_t j = 0; j < n_samples; ++j) {
    const FlatEmbedding sample = gen.generate(attacked, sample_seed(record.spec.seed, j));
    verdicts[j] = classify(sample, targets.source_emb, targets.target_emb, clf);
  }
  return tally_verdicts(verdicts);
}

inline double attack_success_rate(std::span<const SuccessTally> tallies) {
  if (tallies.empty()) throw EmptyInput("attack_success_rate of no tallies");
  std::size_t ok = 0;
  for (const auto& t : tallies) ok += t.majority_success ? 1 : 0;
  return static_cast<double>(ok) / static_cast<double>(tallies.size());
}

/// Fraction of `attempts` seeded generations whose cosine to H(prompt)
/// exceeds 1 - gamma. Only the prompt itself is consulted, no competing caption.
inline double base_success_rate(const TokenSequence& prompt, const Encoder& enc, const Generator& gen,
                                const ThresholdClassifier& clf_target_only, std::size_t attempts = 64,
                                std::uint64_t seed = 0) {
  if (attempts < 1) throw InvalidArgument("attempts must be >= 1");
  const FlatEmbedding h = enc.encode(prompt);
  const double threshold = 1.0 - clf_target_only.gamma();
  std::size_t ok = 0;
  for (std::size_t j = 0; j < attempts; ++j) {
    const FlatEmbedding sample = gen.generate(prompt, hash_combine(seed, j));
    if (cosine(sample, h) > threshold) ++ok;
  }
  return static_cast<double>(ok) / static_cast<double>(attempts);
}

}  // namespace swapsuffix
