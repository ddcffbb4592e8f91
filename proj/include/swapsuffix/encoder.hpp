#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "swapsuffix/error.hpp"
#include "swapsuffix/rng.hpp"
#include "swapsuffix/vocab.hpp"

namespace swapsuffix {

/// Per-position hidden states of one sequence, concatenated row-major by
/// position: values[i * dim + d] is coordinate d of position i.
class FlatEmbedding {
 public:
  FlatEmbedding() = default;
  FlatEmbedding(std::vector<double> values, std::size_t dim) : values_(std::move(values)), dim_(dim) {
    if (dim_ == 0 || values_.size() % dim_ != 0) {
      throw DimensionMismatch("flat embedding length " + std::to_string(values_.size()) +
                              " is not a multiple of dim " + std::to_string(dim_));
    }
  }

  std::span<const double> values() const noexcept { return values_; }
  std::span<double> values() noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t positions() const noexcept { return dim_ ? values_.size() / dim_ : 0; }
  std::span<const double> row(std::size_t pos) const { return {values_.data() + pos * dim_, dim_}; }

  bool finite() const noexcept {
    return std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); });
  }

  friend bool operator==(const FlatEmbedding&, const FlatEmbedding&) = default;

 private:
  std::vector<double> values_;
  std::size_t dim_ = 0;
};

/// One |V|-length gradient row per requested position. Entries set to +inf
/// are masked out of candidate selection.
class GradientSheet {
 public:
  GradientSheet() = default;
  GradientSheet(std::vector<std::size_t> positions, std::size_t vocab_size)
      : positions_(std::move(positions)), vocab_size_(vocab_size),
        values_(positions_.size() * vocab_size, 0.0) {}

  std::size_t rows() const noexcept { return positions_.size(); }
  std::size_t vocab_size() const noexcept { return vocab_size_; }
  std::span<const std::size_t> positions() const noexcept { return positions_; }
  std::span<const double> row(std::size_t k) const { return {values_.data() + k * vocab_size_, vocab_size_}; }
  std::span<double> row(std::size_t k) { return {values_.data() + k * vocab_size_, vocab_size_}; }
  std::span<const double> values() const noexcept { return values_; }

  /// Sets every token outside `allowed` to +inf in all rows.
  void restrict_to(std::span<const TokenId> allowed) {
    std::vector<char> keep(vocab_size_, 0);
    for (TokenId t : allowed) {
      if (t < vocab_size_) keep[t] = 1;
    }
    forbid_where([&](std::size_t t) { return !keep[t]; });
  }

  void forbid(std::span<const TokenId> forbidden) {
    std::vector<char> drop(vocab_size_, 0);
    for (TokenId t : forbidden) {
      if (t < vocab_size_) drop[t] = 1;
    }
    forbid_where([&](std::size_t t) { return drop[t] != 0; });
  }

 private:
  template <typename Pred>
  void forbid_where(Pred pred) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < rows(); ++k) {
      auto r = row(k);
      for (std::size_t t = 0; t < vocab_size_; ++t) {
        if (pred(t)) r[t] = inf;
      }
    }
  }

  std::vector<std::size_t> positions_;
  std::size_t vocab_size_ = 0;
  std::vector<double> values_;
};

/// A text encoder H: token sequence -> flattened hidden states, plus the
/// vector-Jacobian product onto the one-hot token indicators.
///
/// Implementations must be safe to call concurrently from several threads.
class Encoder {
 public:
  virtual ~Encoder() = default;

  virtual FlatEmbedding encode(const TokenSequence& tokens) const = 0;

  /// Row k of the result is d<cotangent, H(x)> / d e_{x_p} for p = positions[k].
  virtual GradientSheet onehot_gradient(const TokenSequence& tokens, const FlatEmbedding& cotangent,
                                        std::span<const std::size_t> positions) const = 0;

  virtual std::vector<FlatEmbedding> encode_batch(std::span<const TokenSequence> batch) const {
    std::vector<FlatEmbedding> out;
    out.reserve(batch.size());
    for (const auto& t : batch) out.push_back(encode(t));
    return out;
  }

  virtual std::size_t dim() const = 0;
  virtual std::size_t vocab_size() const = 0;
  virtual std::size_t max_len() const = 0;
};

struct ReferenceEncoderConfig {
  std::size_t vocab_size = 0;
  std::size_t dim = 32;
  std::size_t max_len = kDefaultMaxLen;
  std::size_t depth = 2;
  /// Multiplies the uniform(-0.5, 0.5)/sqrt(dim) initialization.
  double init_scale = 1.0;
  std::uint64_t seed = 0;
};

/// Embedding + positional table, `depth` rounds of causal prefix-mean
/// mixing, then tanh:
///
///   z0_i = E[x_i] + P[i]
///   z(l+1)_i = (z(l)_i + mean_{j<=i} z(l)_j) / 2
///   h_i = tanh(z(depth)_i)
///
/// Mixing is linear, so the one-hot gradient is E * (M^T)^depth (g .* (1 - h^2)).
class ReferenceEncoder final : public Encoder {
 public:
  explicit ReferenceEncoder(const ReferenceEncoderConfig& cfg)
      : vocab_size_(cfg.vocab_size), dim_(cfg.dim), max_len_(cfg.max_len), depth_(cfg.depth) {
    validate_shape();
    const double half_width = 0.5 * cfg.init_scale / std::sqrt(static_cast<double>(dim_));
    CounterRng rng(hash_combine(cfg.seed, 0xE1C0DE5ULL));
    embedding_.resize(vocab_size_ * dim_);
    positional_.resize(max_len_ * dim_);
    for (double& v : embedding_) v = (2.0 * rng.uniform() - 1.0) * half_width;
    for (double& v : positional_) v = (2.0 * rng.uniform() - 1.0) * half_width;
  }

  ReferenceEncoder(std::size_t vocab_size, std::size_t dim, std::size_t max_len, std::size_t depth,
                   std::vector<double> embedding, std::vector<double> positional)
      : vocab_size_(vocab_size), dim_(dim), max_len_(max_len), depth_(depth),
        embedding_(std::move(embedding)), positional_(std::move(positional)) {
    validate_shape();
    if (embedding_.size() != vocab_size_ * dim_ || positional_.size() != max_len_ * dim_) {
      throw DimensionMismatch("parameter tables do not match the declared shape");
    }
    auto bad = [](double v) { return !std::isfinite(v); };
    if (std::any_of(embedding_.begin(), embedding_.end(), bad) ||
        std::any_of(positional_.begin(), positional_.end(), bad)) {
      throw InvalidArgument("encoder parameters must be finite");
    }
  }

  FlatEmbedding encode(const TokenSequence& tokens) const override {
    std::vector<double> z = pre_activation(tokens);
    for (double& v : z) v = std::tanh(v);
    return FlatEmbedding(std::move(z), dim_);
  }

  GradientSheet onehot_gradient(const TokenSequence& tokens, const FlatEmbedding& cotangent,
                                std::span<const std::size_t> positions) const override {
    const std::size_t n = tokens.max_len();
    if (cotangent.size() != n * dim_) {
      throw DimensionMismatch("cotangent length " + std::to_string(cotangent.size()) + " != " +
                              std::to_string(n * dim_));
    }
    for (std::size_t p : positions) {
      if (p >= n) throw InvalidArgument("gradient position out of range");
    }
    std::vector<double> u = pre_activation(tokens);
    const auto g = cotangent.values();
    for (std::size_t k = 0; k < u.size(); ++k) {
      const double h = std::tanh(u[k]);
      u[k] = g[k] * (1.0 - h * h);
    }
    for (std::size_t l = 0; l < depth_; ++l) mix_transpose(u, n);

    GradientSheet sheet(std::vector<std::size_t>(positions.begin(), positions.end()), vocab_size_);
    for (std::size_t k = 0; k < positions.size(); ++k) {
      const double* v = u.data() + positions[k] * dim_;
      auto out = sheet.row(k);
      for (std::size_t t = 0; t < vocab_size_; ++t) {
        const double* e = embedding_.data() + t * dim_;
        double acc = 0.0;
        for (std::size_t d = 0; d < dim_; ++d) acc += e[d] * v[d];
        out[t] = acc;
      }
    }
    return sheet;
  }

  std::size_t dim() const override { return dim_; }
  std::size_t vocab_size() const override { return vocab_size_; }
  std::size_t max_len() const override { return max_len_; }
  std::size_t depth() const noexcept { return depth_; }

  std::span<const double> embedding() const noexcept { return embedding_; }
  std::span<const double> positional() const noexcept { return positional_; }
  std::span<const double> embedding_row(TokenId t) const { return {embedding_.data() + t * dim_, dim_}; }

  /// Flat binary: "SWSFENC1", then |V|, D, max_len, depth as uint64, then the
  /// embedding and positional tables row-major as float64. Little-endian.
  void save(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidArgument("cannot write encoder file " + path);
    out.write(kMagic, 8);
    for (std::uint64_t v : {std::uint64_t{vocab_size_}, std::uint64_t{dim_}, std::uint64_t{max_len_},
                            std::uint64_t{depth_}}) {
      write_le(out, v);
    }
    for (double v : embedding_) write_le(out, std::bit_cast<std::uint64_t>(v));
    for (double v : positional_) write_le(out, std::bit_cast<std::uint64_t>(v));
    if (!out) throw InvalidArgument("short write to " + path);
  }

  static ReferenceEncoder load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path, 0, "cannot open encoder file");
    char magic[8];
    in.read(magic, 8);
    if (!in || std::memcmp(magic, kMagic, 8) != 0) throw ParseError(path, 0, "bad encoder magic");
    std::uint64_t hdr[4];
    for (auto& h : hdr) h = read_le(in, path);
    const auto [vs, d, ml, depth] = hdr;
    if (vs == 0 || d == 0 || ml == 0 || vs > (1u << 24) || d > (1u << 16) || ml > (1u << 16)) {
      throw ParseError(path, 0, "implausible encoder header");
    }
    std::vector<double> e(vs * d), p(ml * d);
    for (double& v : e) v = std::bit_cast<double>(read_le(in, path));
    for (double& v : p) v = std::bit_cast<double>(read_le(in, path));
    return ReferenceEncoder(vs, d, ml, depth, std::move(e), std::move(p));
  }

 private:
  static constexpr char kMagic[9] = "SWSFENC1";

  void validate_shape() const {
    if (vocab_size_ == 0 || dim_ == 0 || max_len_ == 0) {
      throw InvalidArgument("encoder shape must be non-zero");
    }
  }

  std::vector<double> pre_activation(const TokenSequence& tokens) const {
    const std::size_t n = tokens.max_len();
    if (n > max_len_) {
      throw DimensionMismatch("sequence of length " + std::to_string(n) +
                              " exceeds positional table of " + std::to_string(max_len_));
    }
    std::vector<double> z(n * dim_);
    for (std::size_t i = 0; i < n; ++i) {
      const TokenId t = tokens.ids()[i];
      if (t >= vocab_size_) throw InvalidArgument("token id " + std::to_string(t) + " >= |V|");
      const double* e = embedding_.data() + t * dim_;
      const double* p = positional_.data() + i * dim_;
      double* out = z.data() + i * dim_;
      for (std::size_t d = 0; d < dim_; ++d) out[d] = e[d] + p[d];
    }
    std::vector<double> running(dim_);
    for (std::size_t l = 0; l < depth_; ++l) {
      std::fill(running.begin(), running.end(), 0.0);
      for (std::size_t i = 0; i < n; ++i) {
        double* zi = z.data() + i * dim_;
        const double inv = 1.0 / static_cast<double>(i + 1);
        for (std::size_t d = 0; d < dim_; ++d) {
          running[d] += zi[d];
          zi[d] = 0.5 * (zi[d] + running[d] * inv);
        }
      }
    }
    return z;
  }

  // (M^T u)_j = u_j / 2 + sum_{i >= j} u_i / (2 (i + 1))
  void mix_transpose(std::vector<double>& u, std::size_t n) const {
    std::vector<double> tail(dim_, 0.0);
    for (std::size_t j = n; j-- > 0;) {
      double* uj = u.data() + j * dim_;
      const double inv = 1.0 / static_cast<double>(j + 1);
      for (std::size_t d = 0; d < dim_; ++d) {
        tail[d] += uj[d] * inv;
        uj[d] = 0.5 * (uj[d] + tail[d]);
      }
    }
  }

  static void write_le(std::ostream& out, std::uint64_t v) {
    char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
    out.write(b, 8);
  }

  static std::uint64_t read_le(std::istream& in, const std::string& path) {
    unsigned char b[8];
    in.read(reinterpret_cast<char*>(b), 8);
    if (!in) throw ParseError(path, 0, "truncated encoder file");
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= std::uint64_t{b[i]} << (8 * i);
    return v;
  }

  std::size_t vocab_size_;
  std::size_t dim_;
  std::size_t max_len_;
  std::size_t depth_;
  std::vector<double> embedding_;
  std::vector<double> positional_;
};

}  // namespace swapsuffix
