#pragma once

// Independent reference computations used by the tests. Nothing here calls
// the library's numeric code paths: forward passes, correlations and
// optimizers are re-derived from their definitions, as directly as possible.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "swapsuffix/encoder.hpp"
#include "swapsuffix/vocab.hpp"

namespace oracle {

using swapsuffix::TokenId;

/// Soft input: row i is a weight vector over the vocabulary (one-hot for a
/// real token sequence).
using Relaxed = std::vector<std::vector<double>>;

inline Relaxed one_hot(std::span<const TokenId> ids, std::size_t vocab_size) {
  Relaxed x(ids.size(), std::vector<double>(vocab_size, 0.0));
  for (std::size_t i = 0; i < ids.size(); ++i) x[i][ids[i]] = 1.0;
  return x;
}

/// Encoder forward pass on a relaxed input, written out loop by loop from the
/// definition: embed, `depth` rounds of "average with the running prefix
/// mean", tanh.
inline std::vector<double> relaxed_forward(const Relaxed& x, std::span<const double> E, std::span<const double> P,
                                           std::size_t dim, std::size_t depth) {
  const std::size_t n = x.size();
  const std::size_t V = x.empty() ? 0 : x[0].size();
  std::vector<std::vector<double>> z(n, std::vector<double>(dim, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t d = 0; d < dim; ++d) {
      double acc = P[i * dim + d];
      for (std::size_t v = 0; v < V; ++v) acc += x[i][v] * E[v * dim + d];
      z[i][d] = acc;
    }
  }
  for (std::size_t l = 0; l < depth; ++l) {
    auto next = z;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t d = 0; d < dim; ++d) {
        double mean = 0.0;
        for (std::size_t j = 0; j <= i; ++j) mean += z[j][d];
        mean /= static_cast<double>(i + 1);
        next[i][d] = 0.5 * (z[i][d] + mean);
      }
    }
    z = std::move(next);
  }
  std::vector<double> h;
  h.reserve(n * dim);
  for (const auto& row : z) {
    for (double v : row) h.push_back(std::tanh(v));
  }
  return h;
}

/// Central-difference derivative of f at x along coordinate (p, v).
inline double central_difference(const std::function<double(const Relaxed&)>& f, Relaxed x, std::size_t p,
                                 std::size_t v, double step) {
  const double orig = x[p][v];
  x[p][v] = orig + step;
  const double up = f(x);
  x[p][v] = orig - step;
  const double down = f(x);
  return (up - down) / (2.0 * step);
}

// --- statistics, textbook formulas -----------------------------------------

/// r = (n Sxy - Sx Sy) / sqrt((n Sxx - Sx^2)(n Syy - Sy^2)).
inline double textbook_pearson(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  long double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += static_cast<long double>(x[i]) * x[i];
    syy += static_cast<long double>(y[i]) * y[i];
    sxy += static_cast<long double>(x[i]) * y[i];
  }
  const long double num = n * sxy - sx * sy;
  const long double den = std::sqrt((n * sxx - sx * sx) * (n * syy - sy * sy));
  return static_cast<double>(num / den);
}

/// Rank of x_i = 1 + #{x_j < x_i} + (#{x_j == x_i} - 1) / 2.
inline std::vector<double> counting_ranks(const std::vector<double>& x) {
  std::vector<double> r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::size_t less = 0, equal = 0;
    for (double v : x) {
      less += v < x[i] ? 1 : 0;
      equal += v == x[i] ? 1 : 0;
    }
    r[i] = 1.0 + static_cast<double>(less) + 0.5 * static_cast<double>(equal - 1);
  }
  return r;
}

inline double textbook_spearman(const std::vector<double>& x, const std::vector<double>& y) {
  return textbook_pearson(counting_ranks(x), counting_ranks(y));
}

// --- exhaustive search -------------------------------------------------------

/// Best value of score(suffix) over every suffix of length `len` drawn from
/// `alphabet`, by enumeration.
inline double brute_force_best(const std::vector<TokenId>& alphabet, std::size_t len,
                               const std::function<double(const std::vector<TokenId>&)>& score) {
  std::vector<std::size_t> digit(len, 0);
  std::vector<TokenId> suffix(len);
  double best = -std::numeric_limits<double>::infinity();
  for (;;) {
    for (std::size_t i = 0; i < len; ++i) suffix[i] = alphabet[digit[i]];
    best = std::max(best, score(suffix));
    std::size_t i = 0;
    while (i < len && ++digit[i] == alphabet.size()) digit[i++] = 0;
    if (i == len) break;
  }
  return best;
}

/// Top-k by fully sorting (gradient, id) pairs, skipping +inf entries.
inline std::vector<TokenId> sorted_top_k(std::span<const double> row, std::size_t k) {
  std::vector<std::pair<double, TokenId>> all;
  for (std::size_t t = 0; t < row.size(); ++t) {
    if (row[t] != std::numeric_limits<double>::infinity()) all.emplace_back(row[t], static_cast<TokenId>(t));
  }
  std::sort(all.begin(), all.end());
  std::vector<TokenId> out;
  for (std::size_t i = 0; i < std::min(k, all.size()); ++i) out.push_back(all[i].second);
  return out;
}

}  // namespace oracle
