#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "swapsuffix/encoder.hpp"
#include "swapsuffix/error.hpp"
#include "swapsuffix/objective.hpp"
#include "swapsuffix/perplexity.hpp"
#include "swapsuffix/vocab.hpp"

namespace swapsuffix {

// ---------------------------------------------------------------------------
// Perplexity difference

/// PPL(target) - PPL(source). Negative when the target reads as more natural.
inline double delta1(std::string_view target_text, std::string_view source_text, const PerplexityScorer& scorer) {
  if (target_text.empty() || source_text.empty()) throw ScorerFailure("delta1 needs non-empty texts");
  const double pt = scorer.perplexity(target_text);
  const double ps = scorer.perplexity(source_text);
  if (!std::isfinite(pt) || !std::isfinite(ps) || pt <= 0.0 || ps <= 0.0) {
    throw ScorerFailure("scorer returned a non-positive or non-finite perplexity");
  }
  return pt - ps;
}

// ---------------------------------------------------------------------------
// Baseline distance difference

/// Half-open range of token positions.
struct TokenSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::size_t size() const noexcept { return end - begin; }
  friend bool operator==(const TokenSpan&, const TokenSpan&) = default;
};

/// Source prompt with the entity span collapsed to one pad token.
struct BaselinePrompt {
  TokenSequence tokens;
};

/// Replaces `span` (which must lie strictly between BOS and EOS) with a
/// single pad token and re-pads to the same max_len.
inline BaselinePrompt make_baseline(const TokenSequence& source, TokenSpan span, const Vocabulary& vocab) {
  if (source.content_len() < 2 || span.begin < 1 || span.end <= span.begin || span.end > source.content_len() - 1) {
    throw SpanOutOfRange("entity span [" + std::to_string(span.begin) + ", " + std::to_string(span.end) +
                         ") is outside the content region");
  }
  const auto c = source.content();
  std::vector<TokenId> content(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(span.begin));
  content.push_back(vocab.pad_id());
  content.insert(content.end(), c.begin() + static_cast<std::ptrdiff_t>(span.end), c.end());
  return {TokenSequence(content, source.max_len(), source.pad_id())};
}

/// Unique occurrence of `needle` inside the content of `seq`.
inline std::optional<TokenSpan> find_unique_span(const TokenSequence& seq, std::span<const TokenId> needle) {
  if (needle.empty()) return std::nullopt;
  const auto c = seq.content();
  std::optional<TokenSpan> hit;
  for (std::size_t i = 0; i + needle.size() <= c.size(); ++i) {
    if (std::equal(needle.begin(), needle.end(), c.begin() + static_cast<std::ptrdiff_t>(i))) {
      if (hit) return std::nullopt;
      hit = TokenSpan{i, i + needle.size()};
    }
  }
  return hit;
}

inline double delta2(const FlatEmbedding& target, const FlatEmbedding& source, const FlatEmbedding& baseline) {
  return cosine(target, baseline) - cosine(source, baseline);
}

/// cos(H(target), H(baseline)) - cos(H(source), H(baseline)).
inline double delta2(const TokenSequence& target, const TokenSequence& source, const TokenSequence& baseline,
                     const Encoder& enc) {
  if (target.max_len() != source.max_len() || target.max_len() != baseline.max_len()) {
    throw DimensionMismatch("delta2 inputs must share max_len");
  }
  return delta2(enc.encode(target), enc.encode(source), enc.encode(baseline));
}

// ---------------------------------------------------------------------------
// Correlation

namespace detail {

inline void check_pair(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw InvalidArgument("correlation inputs differ in length");
  if (xs.size() < 2) throw InvalidArgument("correlation needs at least two points");
}

}  // namespace detail

inline double pearson(std::span<const double> xs, std::span<const double> ys) {
  detail::check_pair(xs, ys);
  const double n = static_cast<double>(xs.size());
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) throw ConstantInput();
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

/// 1-based ranks; tied values share the mean of the ranks they span.
inline std::vector<double> average_ranks(std::span<const double> xs) {
  std::vector<std::size_t> order(xs.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });
  std::vector<double> ranks(xs.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i + 1;
    while (j < order.size() && xs[order[j]] == xs[order[i]]) ++j;
    const double r = 0.5 * static_cast<double>(i + j - 1) + 1.0;
    for (std::size_t k = i; k < j; ++k) ranks[order[k]] = r;
    i = j;
  }
  return ranks;
}

inline double spearman(std::span<const double> xs, std::span<const double> ys) {
  detail::check_pair(xs, ys);
  const auto rx = average_ranks(xs);
  const auto ry = average_ranks(ys);
  return pearson(rx, ry);
}

// ---------------------------------------------------------------------------
// BSR x delta2 predictor

enum class Bucket : std::size_t { low_negative = 0, low_nonnegative = 1, high_negative = 2, high_nonnegative = 3 };

inline const char* bsr_label(Bucket b) {
  return (b == Bucket::high_negative || b == Bucket::high_nonnegative) ? "high" : "low";
}
inline const char* d2_label(Bucket b) {
  return (b == Bucket::low_negative || b == Bucket::high_negative) ? "neg" : "nonneg";
}
inline std::string to_string(Bucket b) { return std::string(bsr_label(b)) + "/" + d2_label(b); }

inline constexpr std::array<Bucket, 4> kAllBuckets{Bucket::low_negative, Bucket::low_nonnegative,
                                                   Bucket::high_negative, Bucket::high_nonnegative};

struct BucketStats {
  std::size_t count = 0;
  double mean_asr = 0.0;
};

/// Mean ASR per (BSR >= threshold, delta2 >= 0) cell.
struct PredictorTable {
  double threshold = 0.9;
  std::string tag;
  std::array<BucketStats, 4> buckets{};

  const BucketStats& at(Bucket b) const { return buckets[static_cast<std::size_t>(b)]; }
  BucketStats& at(Bucket b) { return buckets[static_cast<std::size_t>(b)]; }

  void validate() const {
    if (!(threshold >= 0.0 && threshold <= 1.0)) throw InvalidArgument("predictor threshold must lie in [0, 1]");
    for (const auto& b : buckets) {
      if (!(b.mean_asr >= 0.0 && b.mean_asr <= 1.0)) throw InvalidArgument("bucket mean ASR must lie in [0, 1]");
    }
  }

  /// Human-curated pairs, 100 pairs in both directions.
  static PredictorTable hq() {
    PredictorTable t;
    t.tag = "hq";
    t.at(Bucket::low_negative) = {23, 0.174};
    t.at(Bucket::low_nonnegative) = {19, 0.047};
    t.at(Bucket::high_negative) = {27, 0.6};
    t.at(Bucket::high_nonnegative) = {31, 0.172};
    return t;
  }

  /// Automatically generated caption pairs.
  static PredictorTable coco() {
    PredictorTable t;
    t.tag = "coco";
    t.at(Bucket::low_negative) = {25, 0.168};
    t.at(Bucket::low_nonnegative) = {31, 0.077};
    t.at(Bucket::high_negative) = {25, 0.336};
    t.at(Bucket::high_nonnegative) = {31, 0.179};
    return t;
  }

  static PredictorTable preset(const std::string& name) {
    if (name == "hq") return hq();
    if (name == "coco") return coco();
    throw InvalidArgument("unknown predictor preset '" + name + "'");
  }

  /// Text format: a threshold line (optionally followed by a tag), then
  /// four rows `bsr_bucket d2_bucket count mean_asr` with buckets spelled
  /// low|high and neg|nonneg. Blank lines and '#' comments are skipped.
  static PredictorTable parse(std::string_view text, const std::string& source = "<memory>") {
    PredictorTable t;
    std::array<bool, 4> seen{};
    bool have_threshold = false;
    std::size_t rows = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
      std::istringstream ls(line);
      std::string first;
      if (!(ls >> first)) continue;
      if (!have_threshold) {
        try {
          std::size_t used = 0;
          t.threshold = std::stod(first, &used);
          if (used != first.size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
          throw ParseError(source, line_no, "expected threshold, got '" + first + "'");
        }
        ls >> t.tag;
        have_threshold = true;
        continue;
      }
      std::string d2;
      std::size_t count = 0;
      double mean = 0.0;
      if (!(ls >> d2 >> count >> mean)) throw ParseError(source, line_no, "expected 'bsr d2 count mean_asr'");
      std::string extra;
      if (ls >> extra) throw ParseError(source, line_no, "trailing field '" + extra + "'");
      if ((first != "low" && first != "high") || (d2 != "neg" && d2 != "nonneg")) {
        throw ParseError(source, line_no, "bucket labels must be low|high and neg|nonneg");
      }
      const std::size_t idx = (first == "high" ? 2u : 0u) + (d2 == "nonneg" ? 1u : 0u);
      if (seen[idx]) throw ParseError(source, line_no, "duplicate bucket " + first + "/" + d2);
      seen[idx] = true;
      t.buckets[idx] = {count, mean};
      ++rows;
    }
    if (!have_threshold) throw ParseError(source, line_no, "missing threshold line");
    if (rows != 4) throw ParseError(source, line_no, "expected exactly 4 bucket rows, got " + std::to_string(rows));
    try {
      t.validate();
    } catch (const InvalidArgument& e) {
      throw ParseError(source, line_no, e.what());
    }
    return t;
  }

  static PredictorTable load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, 0, "cannot open predictor table");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str(), path);
  }

  std::string to_text() const {
    std::ostringstream out;
    out.precision(17);
    out << threshold;
    if (!tag.empty()) out << ' ' << tag;
    out << '\n';
    for (Bucket b : kAllBuckets) out << bsr_label(b) << ' ' << d2_label(b) << ' ' << at(b).count << ' ' << at(b).mean_asr << '\n';
    return out.str();
  }
};

inline Bucket bucket_for(double bsr, double d2, double threshold) {
  if (std::isnan(bsr) || std::isnan(d2)) throw InvalidArgument("bucket lookup with NaN input");
  const bool high = bsr >= threshold;
  const bool nonneg = d2 >= 0.0;
  return static_cast<Bucket>((high ? 2u : 0u) + (nonneg ? 1u : 0u));
}

struct Prediction {
  Bucket bucket;
  double mean_asr;
};

inline Prediction predict_asr(double bsr, double d2, const PredictorTable& table) {
  if (!(bsr >= 0.0 && bsr <= 1.0)) throw InvalidArgument("bsr must lie in [0, 1]");
  const Bucket b = bucket_for(bsr, d2, table.threshold);
  return {b, table.at(b).mean_asr};
}

}  // namespace swapsuffix
