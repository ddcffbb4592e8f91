#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "swapsuffix/bundled_data.hpp"
#include "swapsuffix/error.hpp"
#include "swapsuffix/probes.hpp"
#include "swapsuffix/vocab.hpp"

namespace swapsuffix {

/// Two prompts that differ only in one entity.
struct PromptPair {
  std::string pair_id;
  std::string source_text;
  std::string target_text;
  std::string entity_source;
  std::string entity_target;

  friend bool operator==(const PromptPair&, const PromptPair&) = default;
};

/// Content tokens of a fragment, without BOS/EOS.
inline std::vector<TokenId> fragment_ids(std::string_view text, const Vocabulary& vocab) {
  const std::size_t room = normalize_text(text).size() + 2;
  const TokenSequence seq = tokenize(text, vocab, room);
  const auto c = seq.content();
  return {c.begin() + 1, c.end() - 1};
}

/// A pair tokenized for one direction. `span` locates the entity in `source`.
struct ResolvedPair {
  TokenSequence source;
  TokenSequence target;
  TokenSpan source_span;
  TokenSpan target_span;
};

/// Tokenizes both prompts and checks that they differ exactly in the entity
/// span. Throws InvariantViolation naming the pair otherwise.
inline ResolvedPair resolve_pair(const PromptPair& p, const Vocabulary& vocab, std::size_t max_len) {
  auto fail = [&](const std::string& why) { throw InvariantViolation(p.pair_id, why); };
  if (p.pair_id.empty()) throw InvariantViolation("<unnamed>", "empty pair_id");
  if (normalize_text(p.source_text) == normalize_text(p.target_text)) fail("source and target texts are identical");
  if (normalize_text(p.entity_source) == normalize_text(p.entity_target)) fail("entities are identical");
  std::vector<TokenId> es, et;
  ResolvedPair r;
  try {
    es = fragment_ids(p.entity_source, vocab);
    et = fragment_ids(p.entity_target, vocab);
    r.source = tokenize(p.source_text, vocab, max_len);
    r.target = tokenize(p.target_text, vocab, max_len);
  } catch (const TextTooLong& e) {
    fail(e.what());
  } catch (const InvalidArgument& e) {
    fail(e.what());
  }
  if (es.empty() || et.empty()) fail("entity tokenizes to nothing");
  const auto ss = find_unique_span(r.source, es);
  if (!ss) fail("entity '" + p.entity_source + "' is missing or ambiguous in the source text");
  const auto ts = find_unique_span(r.target, et);
  if (!ts) fail("entity '" + p.entity_target + "' is missing or ambiguous in the target text");
  r.source_span = *ss;
  r.target_span = *ts;
  const auto sc = r.source.content();
  const auto tc = r.target.content();
  const bool same_prefix = ss->begin == ts->begin && std::equal(sc.begin(), sc.begin() + static_cast<std::ptrdiff_t>(ss->begin), tc.begin());
  const std::size_t s_tail = sc.size() - ss->end;
  const std::size_t t_tail = tc.size() - ts->end;
  const bool same_suffix = s_tail == t_tail && std::equal(sc.begin() + static_cast<std::ptrdiff_t>(ss->end), sc.end(),
                                                          tc.begin() + static_cast<std::ptrdiff_t>(ts->end));
  if (!same_prefix || !same_suffix) fail("texts differ outside the entity span");
  return r;
}

struct PairLoadResult {
  std::vector<PromptPair> pairs;
  /// One line per rejected row (or a warning such as an empty file).
  std::vector<std::string> diagnostics;
};

struct PairLoadOptions {
  std::size_t max_len = kDefaultMaxLen;
  /// Throw on the first invalid row instead of skipping it.
  bool strict = false;
};

/// Tab-separated pairs with the header
/// `pair_id source_text target_text entity_source entity_target`.
inline PairLoadResult parse_pairs(std::string_view text, const Vocabulary& vocab, const PairLoadOptions& opts = {},
                                  const std::string& source = "<memory>") {
  static const std::vector<std::string> kHeader{"pair_id", "source_text", "target_text", "entity_source",
                                                "entity_target"};
  PairLoadResult out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::vector<std::string> seen_ids;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::vector<std::string> cols;
    std::size_t pos = 0;
    for (;;) {
      const auto tab = line.find('\t', pos);
      cols.push_back(line.substr(pos, tab == std::string::npos ? std::string::npos : tab - pos));
      if (tab == std::string::npos) break;
      pos = tab + 1;
    }
    if (!have_header) {
      if (cols != kHeader) throw ParseError(source, line_no, "expected header 'pair_id<TAB>source_text<TAB>...'");
      have_header = true;
      continue;
    }
    if (cols.size() != kHeader.size()) {
      throw ParseError(source, line_no, "expected 5 tab-separated fields, got " + std::to_string(cols.size()));
    }
    PromptPair p{cols[0], cols[1], cols[2], cols[3], cols[4]};
    try {
      if (std::find(seen_ids.begin(), seen_ids.end(), p.pair_id) != seen_ids.end()) {
        throw InvariantViolation(p.pair_id, "duplicate pair_id");
      }
      resolve_pair(p, vocab, opts.max_len);
    } catch (const InvariantViolation& e) {
      if (opts.strict) throw;
      out.diagnostics.push_back(source + ":" + std::to_string(line_no) + ": " + e.what());
      continue;
    }
    seen_ids.push_back(p.pair_id);
    out.pairs.push_back(std::move(p));
  }
  if (out.pairs.empty() && out.diagnostics.empty()) out.diagnostics.push_back(source + ": no pairs");
  return out;
}

inline PairLoadResult load_pairs(const std::string& path, const Vocabulary& vocab, const PairLoadOptions& opts = {}) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, 0, "cannot open pairs file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_pairs(buf.str(), vocab, opts, path);
}

/// The bundled 20 entity-swap pairs.
inline PairLoadResult bundled_pairs(const Vocabulary& vocab, std::size_t max_len = kDefaultMaxLen) {
  return parse_pairs(bundled::kPairs, vocab, {max_len, true}, "bundled pairs");
}

}  // namespace swapsuffix
