#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include "swapsuffix/encoder.hpp"
#include "swapsuffix/error.hpp"

namespace swapsuffix {

inline double dot(std::span<const double> a, std::span<const double> b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

inline double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

/// Cosine similarity; throws ZeroVector if either input has zero norm.
inline double cosine(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw DimensionMismatch("cosine of vectors with different lengths");
  const double na = norm(a);
  const double nb = norm(b);
  if (na == 0.0 || nb == 0.0) throw ZeroVector();
  return std::clamp(dot(a, b) / (na * nb), -1.0, 1.0);
}

inline double cosine(const FlatEmbedding& a, const FlatEmbedding& b) { return cosine(a.values(), b.values()); }

/// d cos(u, v) / d v = u / (|u||v|) - cos(u, v) v / |v|^2, accumulated as
/// out += scale * that.
inline void accumulate_cosine_grad(std::span<const double> u, std::span<const double> v, double scale,
                                   std::span<double> out) {
  const double nu = norm(u);
  const double nv = norm(v);
  if (nu == 0.0 || nv == 0.0) throw ZeroVector();
  const double c = dot(u, v) / (nu * nv);
  const double a = scale / (nu * nv);
  const double b = scale * c / (nv * nv);
  for (std::size_t i = 0; i < v.size(); ++i) out[i] += a * u[i] - b * v[i];
}

/// Weights on the pull toward the target and the push away from the source.
class ScoreWeights {
 public:
  constexpr ScoreWeights() = default;
  ScoreWeights(double target, double source) : target_(target), source_(source) {
    if (!(target >= 0.0) || !(source >= 0.0)) throw InvalidArgument("score weights must be >= 0");
    if (target == 0.0 && source == 0.0) throw InvalidArgument("score weights cannot both be zero");
  }

  /// Untargeted variant: only pushes away from the source.
  static ScoreWeights untargeted() { return ScoreWeights(0.0, 1.0); }

  constexpr double target() const noexcept { return target_; }
  constexpr double source() const noexcept { return source_; }

  friend bool operator==(const ScoreWeights&, const ScoreWeights&) = default;

 private:
  double target_ = 1.0;
  double source_ = 1.0;
};

struct AttackTargets {
  TokenSequence source_tokens;
  TokenSequence target_tokens;
  FlatEmbedding source_emb;
  FlatEmbedding target_emb;

  static AttackTargets make(const Encoder& enc, TokenSequence source, TokenSequence target) {
    if (source.max_len() != target.max_len()) {
      throw DimensionMismatch("source and target sequences have different max_len");
    }
    AttackTargets t{std::move(source), std::move(target), {}, {}};
    t.source_emb = enc.encode(t.source_tokens);
    t.target_emb = enc.encode(t.target_tokens);
    return t;
  }

  /// Same pair, attacked in the opposite direction.
  AttackTargets reversed() const { return {target_tokens, source_tokens, target_emb, source_emb}; }
};

/// w_t cos(H(x^T), e) - w_s cos(H(x^S), e) for an already-encoded candidate.
inline double score_embedding(const FlatEmbedding& candidate, const AttackTargets& targets, const ScoreWeights& w) {
  double s = 0.0;
  if (w.target() != 0.0) s += w.target() * cosine(targets.target_emb, candidate);
  if (w.source() != 0.0) s -= w.source() * cosine(targets.source_emb, candidate);
  return s;
}

inline double score(const TokenSequence& candidate, const AttackTargets& targets, const ScoreWeights& w,
                    const Encoder& enc) {
  return score_embedding(enc.encode(candidate), targets, w);
}

inline double loss(const TokenSequence& candidate, const AttackTargets& targets, const ScoreWeights& w,
                   const Encoder& enc) {
  return -score(candidate, targets, w, enc);
}

/// dL/dH for L = -S, evaluated at `candidate_emb`.
inline FlatEmbedding loss_cotangent(const FlatEmbedding& candidate_emb, const AttackTargets& targets,
                                    const ScoreWeights& w) {
  std::vector<double> g(candidate_emb.size(), 0.0);
  if (norm(candidate_emb.values()) == 0.0) throw ZeroVector();
  if (w.target() != 0.0) accumulate_cosine_grad(targets.target_emb.values(), candidate_emb.values(), -w.target(), g);
  if (w.source() != 0.0) accumulate_cosine_grad(targets.source_emb.values(), candidate_emb.values(), w.source(), g);
  return FlatEmbedding(std::move(g), candidate_emb.dim());
}

/// One-hot gradients of L = -S at the requested positions.
inline GradientSheet loss_gradients(const TokenSequence& candidate, const AttackTargets& targets,
                                    const ScoreWeights& w, const Encoder& enc,
                                    std::span<const std::size_t> positions) {
  const FlatEmbedding h = enc.encode(candidate);
  return enc.onehot_gradient(candidate, loss_cotangent(h, targets, w), positions);
}

}  // namespace swapsuffix
