#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "swapsuffix/bundled_data.hpp"
#include "swapsuffix/error.hpp"

namespace swapsuffix {

using TokenId = std::uint32_t;

inline constexpr std::size_t kDefaultMaxLen = 77;

/// Dense string <-> id table. Ids 0, 1, 2 are the pad, bos and eos markers;
/// an entry spelled "<unk>" (if any) becomes the replacement for unknown words.
class Vocabulary {
 public:
  explicit Vocabulary(std::vector<std::string> entries) : entries_(std::move(entries)) {
    if (entries_.size() < 4) {
      throw InvalidArgument("vocabulary needs the three markers plus at least one content token");
    }
    index_.reserve(entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (entries_[i].empty()) {
        throw InvalidArgument("empty vocabulary entry at id " + std::to_string(i));
      }
      auto [it, inserted] = index_.emplace(entries_[i], static_cast<TokenId>(i));
      if (!inserted) throw InvalidArgument("duplicate vocabulary entry '" + entries_[i] + "'");
      if (i >= kFirstContent) longest_ = std::max(longest_, entries_[i].size());
    }
    if (auto it = index_.find("<unk>"); it != index_.end() && it->second >= kFirstContent) {
      unk_ = it->second;
    }
  }

  /// One token per line, line number (0-based) = id.
  static Vocabulary from_text(std::string_view text, const std::string& source = "<memory>") {
    std::vector<std::string> entries;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(pos, end - pos);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      ++line_no;
      if (line.empty()) throw ParseError(source, line_no, "empty vocabulary line");
      entries.emplace_back(line);
      pos = end + 1;
    }
    return Vocabulary(std::move(entries));
  }

  static Vocabulary from_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path, 0, "cannot open vocabulary file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_text(buf.str(), path);
  }

  static const Vocabulary& bundled() {
    static const Vocabulary v = from_text(bundled::kVocabulary, "bundled vocabulary");
    return v;
  }

  std::size_t size() const noexcept { return entries_.size(); }
  TokenId pad_id() const noexcept { return 0; }
  TokenId bos_id() const noexcept { return 1; }
  TokenId eos_id() const noexcept { return 2; }
  std::optional<TokenId> unk_id() const noexcept { return unk_; }

  bool is_marker(TokenId id) const noexcept { return id < kFirstContent; }

  const std::string& token(TokenId id) const {
    if (id >= entries_.size()) throw InvalidArgument("token id out of range");
    return entries_[id];
  }

  /// Content-token lookup; markers are never returned.
  std::optional<TokenId> find(std::string_view text) const {
    auto it = index_.find(std::string(text));
    if (it == index_.end() || it->second < kFirstContent) return std::nullopt;
    return it->second;
  }

  std::size_t longest_entry() const noexcept { return longest_; }

  /// Ids of single printable non-space ASCII characters.
  std::vector<TokenId> ascii_ids() const {
    std::vector<TokenId> out;
    for (std::size_t i = kFirstContent; i < entries_.size(); ++i) {
      const auto& e = entries_[i];
      if (e.size() == 1 && e[0] > ' ' && e[0] < 127) out.push_back(static_cast<TokenId>(i));
    }
    return out;
  }

  std::string to_text() const {
    std::string out;
    for (const auto& e : entries_) {
      out += e;
      out += '\n';
    }
    return out;
  }

 private:
  static constexpr TokenId kFirstContent = 3;

  std::vector<std::string> entries_;
  std::unordered_map<std::string, TokenId> index_;
  std::optional<TokenId> unk_;
  std::size_t longest_ = 0;
};

/// A token-id sequence padded to exactly max_len. Positions past
/// content_len hold the pad id.
class TokenSequence {
 public:
  TokenSequence() = default;

  TokenSequence(std::span<const TokenId> content, std::size_t max_len, TokenId pad_id)
      : pad_(pad_id), content_len_(content.size()) {
    if (content.size() > max_len) throw TextTooLong(content.size(), max_len);
    ids_.assign(max_len, pad_id);
    std::copy(content.begin(), content.end(), ids_.begin());
  }

  std::span<const TokenId> ids() const noexcept { return ids_; }
  std::span<const TokenId> content() const noexcept { return {ids_.data(), content_len_}; }
  std::size_t content_len() const noexcept { return content_len_; }
  std::size_t max_len() const noexcept { return ids_.size(); }
  TokenId pad_id() const noexcept { return pad_; }
  TokenId operator[](std::size_t i) const { return ids_.at(i); }

  friend bool operator==(const TokenSequence&, const TokenSequence&) = default;

 private:
  std::vector<TokenId> ids_;
  TokenId pad_ = 0;
  std::size_t content_len_ = 0;
};

/// Lowercases ASCII and collapses runs of whitespace to one space.
inline std::string normalize_text(std::string_view text) {
  std::string out;
  bool pending_space = false;
  for (unsigned char c : text) {
    if (std::isspace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out += ' ';
    pending_space = false;
    out += static_cast<char>(std::tolower(c));
  }
  return out;
}

/// Splits one lowercased word by greedy longest match against the content
/// entries. Returns an empty vector when some remainder has no match.
inline std::vector<TokenId> segment_word(std::string_view word, const Vocabulary& vocab) {
  std::vector<TokenId> pieces;
  std::size_t pos = 0;
  while (pos < word.size()) {
    std::size_t len = std::min(word.size() - pos, vocab.longest_entry());
    std::optional<TokenId> hit;
    for (; len > 0; --len) {
      if ((hit = vocab.find(word.substr(pos, len)))) break;
    }
    if (!hit) return {};
    pieces.push_back(*hit);
    pos += len;
  }
  return pieces;
}

/// BOS, the word pieces of `text`, EOS, then padding to max_len. Words that
/// cannot be segmented become the vocabulary's <unk> token.
inline TokenSequence tokenize(std::string_view text, const Vocabulary& vocab,
                              std::size_t max_len = kDefaultMaxLen) {
  if (max_len < 3) throw InvalidArgument("max_len must be at least 3");
  std::vector<TokenId> content{vocab.bos_id()};
  const std::string norm = normalize_text(text);
  std::size_t pos = 0;
  while (pos < norm.size()) {
    std::size_t end = norm.find(' ', pos);
    if (end == std::string::npos) end = norm.size();
    std::string_view word(norm.data() + pos, end - pos);
    auto pieces = segment_word(word, vocab);
    if (pieces.empty()) {
      if (!vocab.unk_id()) {
        throw InvalidArgument("word '" + std::string(word) + "' not in vocabulary and no <unk>");
      }
      pieces.push_back(*vocab.unk_id());
    }
    content.insert(content.end(), pieces.begin(), pieces.end());
    pos = end + 1;
  }
  content.push_back(vocab.eos_id());
  if (content.size() > max_len) throw TextTooLong(content.size(), max_len);
  return TokenSequence(content, max_len, vocab.pad_id());
}

/// Space-joined content tokens with BOS/EOS dropped; pads inside the content
/// region render as their marker text.
inline std::string detokenize(const TokenSequence& seq, const Vocabulary& vocab) {
  std::string out;
  for (TokenId id : seq.content()) {
    if (id == vocab.bos_id() || id == vocab.eos_id()) continue;
    if (!out.empty()) out += ' ';
    out += vocab.token(id);
  }
  return out;
}

inline std::string join_tokens(std::span<const TokenId> ids, const Vocabulary& vocab) {
  std::string out;
  for (TokenId id : ids) {
    if (!out.empty()) out += ' ';
    out += vocab.token(id);
  }
  return out;
}

/// Index of the first suffix slot: just before the trailing EOS.
inline std::size_t suffix_begin(const TokenSequence& base) {
  if (base.content_len() == 0) throw InvalidArgument("sequence has no content to splice into");
  return base.content_len() - 1;
}

/// Inserts `suffix` between the last content token and EOS.
inline TokenSequence splice_suffix(const TokenSequence& base, std::span<const TokenId> suffix) {
  if (suffix.empty()) return base;
  const std::size_t at = suffix_begin(base);
  const std::size_t needed = base.content_len() + suffix.size();
  if (needed > base.max_len()) throw TextTooLong(needed, base.max_len());
  std::vector<TokenId> content(base.content().begin(), base.content().begin() + at);
  content.insert(content.end(), suffix.begin(), suffix.end());
  content.insert(content.end(), base.content().begin() + at, base.content().end());
  return TokenSequence(content, base.max_len(), base.pad_id());
}

/// Positions the suffix of length `suffix_len` occupies after splicing into `base`.
inline std::vector<std::size_t> suffix_positions(const TokenSequence& base, std::size_t suffix_len) {
  std::vector<std::size_t> out(suffix_len);
  const std::size_t first = suffix_begin(base);
  for (std::size_t i = 0; i < suffix_len; ++i) out[i] = first + i;
  return out;
}

}  // namespace swapsuffix
