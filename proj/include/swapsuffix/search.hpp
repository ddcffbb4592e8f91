#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "swapsuffix/encoder.hpp"
#include "swapsuffix/error.hpp"
#include "swapsuffix/objective.hpp"
#include "swapsuffix/parallel.hpp"
#include "swapsuffix/rng.hpp"
#include "swapsuffix/vocab.hpp"

namespace swapsuffix {

enum class SearchMode { single, multi };

inline const char* to_string(SearchMode m) { return m == SearchMode::single ? "single" : "multi"; }

inline SearchMode parse_search_mode(const std::string& s) {
  if (s == "single") return SearchMode::single;
  if (s == "multi") return SearchMode::multi;
  throw InvalidArgument("unknown search mode '" + s + "'");
}

struct AttackSpec {
  std::size_t steps = 100;
  std::size_t top_k = 5;
  std::size_t batch = 512;
  std::size_t suffix_len = 5;
  ScoreWeights weights;
  double eps_start = 1.0;
  double eps_floor = 0.25;
  /// When set, only these tokens may enter the suffix.
  std::optional<std::vector<TokenId>> allowed_tokens;
  /// Never selected, on top of any allow-list.
  std::vector<TokenId> forbidden_tokens;
  std::uint64_t seed = 0;
  SearchMode mode = SearchMode::multi;
  /// Replace the incumbent only on strict improvement. When false the batch
  /// argmax always becomes the incumbent, as in the unconditional update.
  bool keep_best = true;

  void validate() const {
    if (top_k < 1) throw InvalidArgument("top_k must be >= 1");
    if (batch < 1) throw InvalidArgument("batch must be >= 1");
    if (suffix_len < 1) throw InvalidArgument("suffix_len must be >= 1");
    if (!(eps_start >= 0.0 && eps_start <= 1.0) || !(eps_floor >= 0.0 && eps_floor <= 1.0)) {
      throw InvalidArgument("eps_start and eps_floor must lie in [0, 1]");
    }
    if (eps_floor > eps_start) throw InvalidArgument("eps_floor must not exceed eps_start");
    if (allowed_tokens && allowed_tokens->empty()) throw EmptyAllowedSet();
  }

  friend bool operator==(const AttackSpec&, const AttackSpec&) = default;
};

struct AttackRecord {
  std::vector<TokenId> initial_suffix;
  double initial_score = 0.0;
  std::vector<TokenId> best_suffix;
  double best_score = 0.0;
  /// Best score seen after each step.
  std::vector<double> score_trajectory;
  /// Multi mode: replacement probability in force at step t, for t = 0..T
  /// (entry T is the value after the final update). Empty in single mode.
  std::vector<double> epsilon_schedule;
  std::size_t steps_taken = 0;
  AttackSpec spec;
};

/// Everything one step produced, for instrumentation. Mutants are suffixes.
struct StepTrace {
  std::size_t step = 0;
  double epsilon = 0.0;
  std::span<const TokenId> incumbent;
  std::span<const std::vector<TokenId>> candidates;
  std::span<const std::vector<TokenId>> mutants;
  /// Multi mode: which positions each mutant resampled.
  std::span<const std::vector<char>> resampled;
  std::span<const double> scores;
};

struct SearchOptions {
  std::size_t threads = 1;
  std::function<void(const StepTrace&)> observer;
};

/// Per-row top-k by smallest gradient (largest -gradient), ties to the lower
/// token id. +inf entries and tokens outside `allowed` are never picked; k is
/// clamped to the number of selectable tokens.
inline std::vector<std::vector<TokenId>> top_k_candidates(const GradientSheet& grads, std::size_t k,
                                                          std::optional<std::span<const TokenId>> allowed = {}) {
  if (k < 1) throw InvalidArgument("k must be >= 1");
  const std::size_t V = grads.vocab_size();
  std::vector<char> selectable(V, 1);
  if (allowed) {
    if (allowed->empty()) throw EmptyAllowedSet();
    std::fill(selectable.begin(), selectable.end(), 0);
    for (TokenId t : *allowed) {
      if (t < V) selectable[t] = 1;
    }
  }
  constexpr double inf = std::numeric_limits<double>::infinity();
  std::vector<std::vector<TokenId>> out(grads.rows());
  std::vector<TokenId> idx;
  for (std::size_t r = 0; r < grads.rows(); ++r) {
    const auto g = grads.row(r);
    idx.clear();
    for (std::size_t t = 0; t < V; ++t) {
      if (selectable[t] && g[t] != inf) idx.push_back(static_cast<TokenId>(t));
    }
    if (idx.empty()) throw EmptyAllowedSet();
    const std::size_t take = std::min(k, idx.size());
    std::partial_sort(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(take), idx.end(),
                      [&](TokenId a, TokenId b) { return g[a] < g[b] || (g[a] == g[b] && a < b); });
    out[r].assign(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(take));
  }
  return out;
}

/// Untargeted five-character ASCII suffix search (w_t = 0).
inline AttackSpec qf_emulation_preset(const Vocabulary& vocab) {
  auto ascii = vocab.ascii_ids();
  if (ascii.empty()) throw EmptyAllowedSet();
  AttackSpec spec;
  spec.weights = ScoreWeights::untargeted();
  spec.allowed_tokens = std::move(ascii);
  spec.suffix_len = 5;
  spec.mode = SearchMode::multi;
  return spec;
}

namespace detail {

class SuffixSearch {
 public:
  SuffixSearch(const TokenSequence& source, const AttackTargets& targets, const AttackSpec& spec,
               const Encoder& enc, const SearchOptions& opts)
      : source_(source), targets_(targets), spec_(spec), enc_(enc), opts_(opts), rng_(spec.seed) {
    spec_.validate();
    build_mask();
    if (source_.content_len() + spec_.suffix_len > source_.max_len()) {
      throw TextTooLong(source_.content_len() + spec_.suffix_len, source_.max_len());
    }
    positions_ = suffix_positions(source_, spec_.suffix_len);
  }

  AttackRecord run() {
    AttackRecord rec;
    rec.spec = spec_;
    std::vector<TokenId> incumbent(spec_.suffix_len, initial_token());
    double incumbent_score = score(incumbent);
    rec.initial_suffix = incumbent;
    rec.initial_score = incumbent_score;
    rec.best_suffix = incumbent;
    rec.best_score = incumbent_score;

    const double T = static_cast<double>(spec_.steps);
    double eps = spec_.eps_start;
    if (spec_.mode == SearchMode::multi) rec.epsilon_schedule.push_back(eps);

    std::vector<std::vector<TokenId>> mutants;
    std::vector<std::vector<char>> resampled;
    std::vector<double> scores;
    for (std::size_t t = 0; t < spec_.steps; ++t) {
      const std::vector<TokenId> base = incumbent;
      const auto candidates = candidate_sets(base);
      mutants.clear();
      resampled.clear();
      if (spec_.mode == SearchMode::single) {
        single_flip_mutants(base, candidates, mutants);
      } else {
        resampled_mutants(base, candidates, eps, mutants, resampled);
      }
      scores.assign(mutants.size(), 0.0);
      parallel_for(mutants.size(), opts_.threads, [&](std::size_t b) { scores[b] = score(mutants[b]); });

      if (!mutants.empty()) {
        // first index wins ties
        const std::size_t arg = static_cast<std::size_t>(
            std::distance(scores.begin(), std::max_element(scores.begin(), scores.end())));
        if (!spec_.keep_best || scores[arg] > incumbent_score) {
          incumbent = mutants[arg];
          incumbent_score = scores[arg];
        }
        if (scores[arg] > rec.best_score) {
          rec.best_score = scores[arg];
          rec.best_suffix = mutants[arg];
        }
      }
      if (opts_.observer) {
        opts_.observer(StepTrace{t, eps, base, candidates, mutants, resampled, scores});
      }
      rec.score_trajectory.push_back(rec.best_score);
      ++rec.steps_taken;
      if (spec_.mode == SearchMode::multi) {
        eps = std::max(spec_.eps_floor, spec_.eps_start - static_cast<double>(t + 1) / T);
        rec.epsilon_schedule.push_back(eps);
      }
    }
    return rec;
  }

 private:
  void build_mask() {
    const std::size_t V = enc_.vocab_size();
    selectable_.assign(V, spec_.allowed_tokens ? 0 : 1);
    if (spec_.allowed_tokens) {
      for (TokenId t : *spec_.allowed_tokens) {
        if (t < V) selectable_[t] = 1;
      }
    }
    for (TokenId t : spec_.forbidden_tokens) {
      if (t < V) selectable_[t] = 0;
    }
    for (std::size_t t = 0; t < V; ++t) {
      if (selectable_[t]) allowed_.push_back(static_cast<TokenId>(t));
    }
    if (allowed_.empty()) throw EmptyAllowedSet();
  }

  // Pad is the neutral start; under a restriction that excludes it the
  // lowest selectable id is used so the suffix never leaves the allowed set.
  TokenId initial_token() const {
    const TokenId pad = source_.pad_id();
    return (pad < selectable_.size() && selectable_[pad]) ? pad : allowed_.front();
  }

  TokenSequence splice(std::span<const TokenId> suffix) const { return splice_suffix(source_, suffix); }

  double score(std::span<const TokenId> suffix) const {
    return score_embedding(enc_.encode(splice(suffix)), targets_, spec_.weights);
  }

  std::vector<std::vector<TokenId>> candidate_sets(std::span<const TokenId> incumbent) const {
    const TokenSequence current = splice(incumbent);
    GradientSheet grads = loss_gradients(current, targets_, spec_.weights, enc_, positions_);
    if (allowed_.size() != selectable_.size()) grads.restrict_to(allowed_);
    return top_k_candidates(grads, spec_.top_k);
  }

  // Every mutant changes exactly one position. Duplicate mutants carry no
  // information, so the batch is drawn without replacement from the distinct
  // (position, token) flips; when B covers them all, all are scored.
  void single_flip_mutants(std::span<const TokenId> incumbent, const std::vector<std::vector<TokenId>>& candidates,
                           std::vector<std::vector<TokenId>>& mutants) {
    std::vector<std::pair<std::size_t, TokenId>> flips;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      for (TokenId tok : candidates[i]) {
        if (tok != incumbent[i]) flips.emplace_back(i, tok);
      }
    }
    const std::size_t m = std::min(spec_.batch, flips.size());
    for (std::size_t b = 0; b < m; ++b) {
      const std::size_t j = b + static_cast<std::size_t>(rng_.below(flips.size() - b));
      std::swap(flips[b], flips[j]);
      std::vector<TokenId> mut(incumbent.begin(), incumbent.end());
      mut[flips[b].first] = flips[b].second;
      mutants.push_back(std::move(mut));
    }
  }

  // Each position is resampled independently with probability eps, drawing
  // uniformly from its candidate set.
  void resampled_mutants(std::span<const TokenId> incumbent, const std::vector<std::vector<TokenId>>& candidates,
                         double eps, std::vector<std::vector<TokenId>>& mutants,
                         std::vector<std::vector<char>>& resampled) {
    for (std::size_t b = 0; b < spec_.batch; ++b) {
      std::vector<TokenId> mut(incumbent.begin(), incumbent.end());
      std::vector<char> hit(mut.size(), 0);
      for (std::size_t i = 0; i < mut.size(); ++i) {
        if (rng_.bernoulli(eps)) {
          hit[i] = 1;
          mut[i] = candidates[i][rng_.below(candidates[i].size())];
        }
      }
      mutants.push_back(std::move(mut));
      resampled.push_back(std::move(hit));
    }
  }

  const TokenSequence& source_;
  const AttackTargets& targets_;
  AttackSpec spec_;
  const Encoder& enc_;
  const SearchOptions& opts_;
  CounterRng rng_;
  std::vector<std::size_t> positions_;
  std::vector<char> selectable_;
  std::vector<TokenId> allowed_;
};

}  // namespace detail

/// Greedy coordinate search: each of up to B mutants flips one suffix token
/// to one of the top-k gradient candidates for that position.
inline AttackRecord single_token_attack(const TokenSequence& source, const AttackTargets& targets, AttackSpec spec,
                                        const Encoder& enc, const SearchOptions& opts = {}) {
  if (spec.mode != SearchMode::single) throw InvalidArgument("single_token_attack needs mode=single");
  return detail::SuffixSearch(source, targets, spec, enc, opts).run();
}

/// Multi-position search: each mutant resamples every suffix position with
/// probability eps, which decays as max(eps_floor, eps_start - t/T).
inline AttackRecord multi_token_attack(const TokenSequence& source, const AttackTargets& targets, AttackSpec spec,
                                       const Encoder& enc, const SearchOptions& opts = {}) {
  if (spec.mode != SearchMode::multi) throw InvalidArgument("multi_token_attack needs mode=multi");
  return detail::SuffixSearch(source, targets, spec, enc, opts).run();
}

inline AttackRecord run_attack(const TokenSequence& source, const AttackTargets& targets, const AttackSpec& spec,
                               const Encoder& enc, const SearchOptions& opts = {}) {
  return detail::SuffixSearch(source, targets, spec, enc, opts).run();
}

}  // namespace swapsuffix
