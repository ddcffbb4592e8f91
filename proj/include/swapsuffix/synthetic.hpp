#pragma once

// A reference encoder whose geometry places the pad-baseline prompt next to
// the source entity of every pair: each source-entity embedding row is pulled
// toward the pad row. Attacks that move a source prompt toward its target
// then compete with a nearby default, which is the setting where the forward
// and backward directions of a swap differ in difficulty.

#include <set>
#include <span>
#include <vector>

#include "swapsuffix/encoder.hpp"
#include "swapsuffix/error.hpp"
#include "swapsuffix/evaluation.hpp"
#include "swapsuffix/pairs.hpp"
#include "swapsuffix/vocab.hpp"

namespace swapsuffix {

struct BiasedFixtureOptions {
  std::size_t dim = 32;
  std::size_t max_len = 16;
  std::size_t depth = 2;
  /// Weight of the pad row in the mixed entity row; 0 leaves the encoder untouched.
  double pull = 0.9;
  std::uint64_t seed = 7;
};

/// Source-entity tokens of `pairs`. A token that is also some pair's target
/// entity is rejected, since it cannot sit both near and away from the default.
inline std::vector<TokenId> biased_tokens(std::span<const PromptPair> pairs, const Vocabulary& vocab) {
  std::set<TokenId> src, tgt;
  for (const auto& p : pairs) {
    for (TokenId t : fragment_ids(p.entity_source, vocab)) src.insert(t);
    for (TokenId t : fragment_ids(p.entity_target, vocab)) tgt.insert(t);
  }
  for (TokenId t : src) {
    if (tgt.count(t)) throw InvariantViolation(vocab.token(t), "token is both a source and a target entity");
  }
  return {src.begin(), src.end()};
}

inline ReferenceEncoder baseline_biased_encoder(const Vocabulary& vocab, std::span<const PromptPair> pairs,
                                                const BiasedFixtureOptions& opts = {}) {
  if (!(opts.pull >= 0.0 && opts.pull < 1.0)) throw InvalidArgument("pull must lie in [0, 1)");
  const ReferenceEncoder base(ReferenceEncoderConfig{vocab.size(), opts.dim, opts.max_len, opts.depth, 1.0, opts.seed});
  std::vector<double> E(base.embedding().begin(), base.embedding().end());
  std::vector<double> P(base.positional().begin(), base.positional().end());
  const std::size_t D = opts.dim;
  const std::size_t pad = vocab.pad_id();
  for (TokenId t : biased_tokens(pairs, vocab)) {
    for (std::size_t d = 0; d < D; ++d) E[t * D + d] = opts.pull * E[pad * D + d] + (1.0 - opts.pull) * E[t * D + d];
  }
  return ReferenceEncoder(vocab.size(), D, opts.max_len, opts.depth, std::move(E), std::move(P));
}

/// Bundled vocabulary + bundled pairs + biased encoder.
inline ReferenceEncoder bundled_biased_encoder(const BiasedFixtureOptions& opts = {}) {
  const auto& vocab = Vocabulary::bundled();
  const auto loaded = bundled_pairs(vocab, opts.max_len);
  return baseline_biased_encoder(vocab, loaded.pairs, opts);
}

/// Prompt embeddings of this encoder are tightly packed (pairwise cosines
/// around 0.96), so the caption softmax needs a sharper scale than CLIP's 100
/// for a successful attack to clear the default gamma.
inline constexpr double kFixtureLogitScale = 1000.0;
inline constexpr double kFixtureNoiseSigma = 0.02;

inline ThresholdClassifier fixture_classifier() {
  return ThresholdClassifier(ThresholdClassifier::kClipGamma, Similarity::caption_softmax, kFixtureLogitScale);
}

}  // namespace swapsuffix
