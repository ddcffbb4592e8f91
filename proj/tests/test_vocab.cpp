#include <gtest/gtest.h>

#include <set>

#include "swapsuffix/rng.hpp"
#include "swapsuffix/vocab.hpp"

namespace ss = swapsuffix;
using ss::TokenId;

namespace {

ss::Vocabulary small_vocab() {
  return ss::Vocabulary({"<pad>", "<bos>", "<eos>", "<unk>", "a", "swan", "sw", "an", "lake", "in", "!"});
}

}  // namespace

TEST(Vocabulary, MarkersAndLookup) {
  const auto v = small_vocab();
  EXPECT_EQ(v.size(), 11u);
  EXPECT_EQ(v.pad_id(), 0u);
  EXPECT_EQ(v.bos_id(), 1u);
  EXPECT_EQ(v.eos_id(), 2u);
  ASSERT_TRUE(v.unk_id());
  EXPECT_EQ(*v.unk_id(), 3u);
  EXPECT_EQ(v.find("swan"), std::optional<TokenId>(5));
  EXPECT_FALSE(v.find("<pad>")) << "markers are not content tokens";
  EXPECT_FALSE(v.find("horse"));
  EXPECT_EQ(v.token(8), "lake");
  EXPECT_THROW(v.token(99), ss::InvalidArgument);
}

TEST(Vocabulary, RejectsDuplicatesAndEmptyEntries) {
  EXPECT_THROW(ss::Vocabulary({"<pad>", "<bos>", "<eos>", "x", "x"}), ss::InvalidArgument);
  EXPECT_THROW(ss::Vocabulary({"<pad>", "<bos>", "<eos>", ""}), ss::InvalidArgument);
  EXPECT_THROW(ss::Vocabulary({"<pad>", "<bos>", "<eos>"}), ss::InvalidArgument);
  EXPECT_THROW(ss::Vocabulary::from_text("<pad>\n<bos>\n\n<eos>\nx\n"), ss::ParseError);
}

TEST(Vocabulary, TextRoundTrip) {
  const auto v = small_vocab();
  const auto w = ss::Vocabulary::from_text(v.to_text());
  ASSERT_EQ(w.size(), v.size());
  for (TokenId i = 0; i < v.size(); ++i) EXPECT_EQ(w.token(i), v.token(i));
}

TEST(Vocabulary, AsciiIds) {
  const auto v = small_vocab();
  EXPECT_EQ(v.ascii_ids(), std::vector<TokenId>({4, 10}));
  const auto& b = ss::Vocabulary::bundled();
  EXPECT_EQ(b.ascii_ids().size(), 94u) << "printable non-space ASCII";
}

TEST(TokenSequence, PadsToMaxLen) {
  const std::vector<TokenId> c{1, 5, 2};
  const ss::TokenSequence s(c, 6, 0);
  EXPECT_EQ(s.max_len(), 6u);
  EXPECT_EQ(s.content_len(), 3u);
  EXPECT_EQ(std::vector<TokenId>(s.ids().begin(), s.ids().end()), std::vector<TokenId>({1, 5, 2, 0, 0, 0}));
  EXPECT_THROW(ss::TokenSequence(c, 2, 0), ss::TextTooLong);
}

TEST(Tokenize, NormalizesAndWrapsWithMarkers) {
  const auto v = small_vocab();
  const auto s = ss::tokenize("  A   swan in\ta LAKE ", v, 10);
  EXPECT_EQ(std::vector<TokenId>(s.content().begin(), s.content().end()),
            std::vector<TokenId>({1, 4, 5, 9, 4, 8, 2}));
  EXPECT_EQ(ss::detokenize(s, v), "a swan in a lake");
}

TEST(Tokenize, LongestMatchAndUnknownWords) {
  const auto v = small_vocab();
  // "swan!" splits by longest prefix into swan + !
  EXPECT_EQ(ss::segment_word("swan!", v), std::vector<TokenId>({5, 10}));
  // no segmentation of "zebra": the whole word becomes <unk>
  EXPECT_TRUE(ss::segment_word("zebra", v).empty());
  const auto s = ss::tokenize("a zebra", v, 8);
  EXPECT_EQ(std::vector<TokenId>(s.content().begin(), s.content().end()), std::vector<TokenId>({1, 4, 3, 2}));
  const ss::Vocabulary no_unk({"<pad>", "<bos>", "<eos>", "a"});
  EXPECT_THROW(ss::tokenize("a zebra", no_unk, 8), ss::InvalidArgument);
}

TEST(Tokenize, TooLongThrows) {
  const auto v = small_vocab();
  EXPECT_THROW(ss::tokenize("a swan in a lake", v, 6), ss::TextTooLong);
  EXPECT_NO_THROW(ss::tokenize("a swan in a lake", v, 7));
}

TEST(Tokenize, BundledPromptsRoundTrip) {
  const auto& v = ss::Vocabulary::bundled();
  std::string_view corpus = ss::bundled::kPromptCorpus;
  std::size_t pos = 0, n = 0;
  while (pos < corpus.size()) {
    auto end = corpus.find('\n', pos);
    if (end == std::string_view::npos) end = corpus.size();
    const std::string line(corpus.substr(pos, end - pos));
    pos = end + 1;
    if (line.empty()) continue;
    const auto s = ss::tokenize(line, v, ss::kDefaultMaxLen);
    for (TokenId t : s.content()) ASSERT_NE(t, *v.unk_id()) << line;
    ASSERT_EQ(ss::detokenize(s, v), ss::normalize_text(line));
    ++n;
  }
  EXPECT_EQ(n, 500u);
}

TEST(Suffix, SplicesBeforeEos) {
  const std::vector<TokenId> c{1, 4, 5, 2};
  const ss::TokenSequence base(c, 8, 0);
  EXPECT_EQ(ss::suffix_begin(base), 3u);
  const std::vector<TokenId> suf{9, 10};
  const auto s = ss::splice_suffix(base, suf);
  EXPECT_EQ(std::vector<TokenId>(s.content().begin(), s.content().end()), std::vector<TokenId>({1, 4, 5, 9, 10, 2}));
  EXPECT_EQ(s.max_len(), 8u);
  EXPECT_EQ(ss::suffix_positions(base, 2), std::vector<std::size_t>({3, 4}));
  const std::vector<TokenId> too_long(5, 4);
  EXPECT_THROW(ss::splice_suffix(base, too_long), ss::TextTooLong);
}

TEST(Rng, DeterministicAndBounded) {
  ss::CounterRng a(42), b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next(), b.next());
  ss::CounterRng r(7);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 2000; ++i) {
    const auto x = r.below(10);
    ASSERT_LT(x, 10u);
    seen.insert(x);
    const double u = r.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
  EXPECT_EQ(seen.size(), 10u);
}

TEST(Rng, GaussianMoments) {
  ss::CounterRng r(11);
  double s = 0, s2 = 0;
  constexpr int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double g = r.gaussian();
    s += g;
    s2 += g * g;
  }
  EXPECT_NEAR(s / n, 0.0, 0.01);
  EXPECT_NEAR(s2 / n, 1.0, 0.02);
}

TEST(Rng, HashingSeparatesInputs) {
  EXPECT_NE(ss::hash_bytes("swan_horse"), ss::hash_bytes("horse_swan"));
  EXPECT_NE(ss::hash_combine(1, 2), ss::hash_combine(2, 1));
  EXPECT_EQ(ss::hash_combine(1, 2), ss::hash_combine(1, 2));
}
