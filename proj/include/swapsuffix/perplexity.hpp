#pragma once

#include <array>
#include <cmath>
#include <string>
#include <string_view>
#include <vector>

#include "swapsuffix/bundled_data.hpp"
#include "swapsuffix/error.hpp"
#include "swapsuffix/vocab.hpp"

namespace swapsuffix {

/// Anything that can say how plausible a piece of text is, as a perplexity.
class PerplexityScorer {
 public:
  virtual ~PerplexityScorer() = default;
  virtual double perplexity(std::string_view text) const = 0;
};

/// Character trigram model with add-alpha smoothing.
///
/// Predicted symbols are the alphabet characters, one out-of-alphabet bucket
/// and end-of-text; contexts are padded with a begin marker. For text of n
/// characters the model makes n + 1 predictions and
///
///   PPL = exp(-(1 / (n + 1)) * sum log P(c_i | c_{i-2} c_{i-1})),
///   P(c | ab) = (count(abc) + alpha) / (count(ab) + alpha * A)
///
/// where A is the number of predicted symbols. An untrained model is uniform,
/// so its perplexity is exactly A for every text.
class CharTrigramModel final : public PerplexityScorer {
 public:
  CharTrigramModel(std::string_view alphabet, double alpha) : alpha_(alpha) {
    if (!(alpha > 0.0)) throw InvalidArgument("smoothing alpha must be positive");
    index_.fill(kUnset);
    std::size_t next = 0;
    for (unsigned char c : alphabet) {
      if (index_[c] == kUnset) index_[c] = static_cast<int>(next++);
    }
    oov_ = static_cast<int>(next++);
    end_ = static_cast<int>(next++);
    predicted_ = next;
    begin_ = static_cast<int>(next);
    contexts_ = next + 1;
    bigram_.assign(contexts_ * contexts_, 0.0);
    trigram_.assign(contexts_ * contexts_ * predicted_, 0.0);
  }

  /// Model over every character seen in `corpus` (one text per line).
  static CharTrigramModel trained_on(std::string_view corpus, double alpha = 0.1) {
    std::string alphabet;
    std::array<bool, 256> seen{};
    for (unsigned char c : corpus) {
      if (c == '\n' || c == '\r') continue;
      const unsigned char lc = static_cast<unsigned char>(std::tolower(c));
      if (!seen[lc]) {
        seen[lc] = true;
        alphabet += static_cast<char>(lc);
      }
    }
    CharTrigramModel m(alphabet, alpha);
    m.train_lines(corpus);
    return m;
  }

  static const CharTrigramModel& bundled() {
    static const CharTrigramModel m = trained_on(bundled::kPromptCorpus);
    return m;
  }

  void train(std::string_view text) {
    const auto syms = symbols(text);
    int a = begin_, b = begin_;
    for (int c : syms) {
      bigram_[ctx(a, b)] += 1.0;
      trigram_[ctx(a, b) * predicted_ + static_cast<std::size_t>(c)] += 1.0;
      a = b;
      b = c;
    }
  }

  void train_lines(std::string_view corpus) {
    std::size_t pos = 0;
    while (pos < corpus.size()) {
      std::size_t end = corpus.find('\n', pos);
      if (end == std::string_view::npos) end = corpus.size();
      std::string_view line = corpus.substr(pos, end - pos);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      if (!line.empty()) train(line);
      pos = end + 1;
    }
  }

  double log_prob(std::string_view text) const {
    const auto syms = symbols(text);
    double lp = 0.0;
    int a = begin_, b = begin_;
    for (int c : syms) {
      lp += std::log(prob(a, b, c));
      a = b;
      b = c;
    }
    return lp;
  }

  double perplexity(std::string_view text) const override {
    if (text.empty()) throw ScorerFailure("perplexity of empty text");
    const auto n = static_cast<double>(symbols(text).size());
    return std::exp(-log_prob(text) / n);
  }

  std::size_t alphabet_size() const noexcept { return predicted_; }
  double alpha() const noexcept { return alpha_; }

  /// Probability assigned to an event never seen in context (a, b).
  double unseen_prob(std::string_view context) const {
    int a = begin_, b = begin_;
    for (int c : symbols(context)) {
      if (c == end_) break;
      a = b;
      b = c;
    }
    return alpha_ / (bigram_[ctx(a, b)] + alpha_ * static_cast<double>(predicted_));
  }

 private:
  static constexpr int kUnset = -1;

  std::size_t ctx(int a, int b) const { return static_cast<std::size_t>(a) * contexts_ + static_cast<std::size_t>(b); }

  double prob(int a, int b, int c) const {
    const std::size_t k = ctx(a, b);
    return (trigram_[k * predicted_ + static_cast<std::size_t>(c)] + alpha_) /
           (bigram_[k] + alpha_ * static_cast<double>(predicted_));
  }

  std::vector<int> symbols(std::string_view text) const {
    std::vector<int> out;
    out.reserve(text.size() + 1);
    for (unsigned char c : normalize_text(text)) {
      const int i = index_[c];
      out.push_back(i == kUnset ? oov_ : i);
    }
    out.push_back(end_);
    return out;
  }

  double alpha_;
  std::array<int, 256> index_{};
  int oov_ = 0;
  int end_ = 0;
  int begin_ = 0;
  std::size_t predicted_ = 0;
  std::size_t contexts_ = 0;
  std::vector<double> bigram_;
  std::vector<double> trigram_;
};

/// Perplexity under the bundled character trigram model.
inline double reference_perplexity(std::string_view text) { return CharTrigramModel::bundled().perplexity(text); }

}  // namespace swapsuffix
