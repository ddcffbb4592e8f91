#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <set>

#include "oracles.hpp"
#include "swapsuffix/search.hpp"

namespace ss = swapsuffix;
using ss::TokenId;

namespace {

struct Fixture {
  ss::ReferenceEncoder enc;
  ss::TokenSequence src, tgt;
  ss::AttackTargets targets;
};

Fixture make_fixture(std::size_t V = 40, std::uint64_t seed = 3, std::size_t L = 12) {
  ss::ReferenceEncoder enc(ss::ReferenceEncoderConfig{V, 16, L, 2, 1.0, seed});
  const std::vector<TokenId> sc{1, 5, 6, 7, 2}, tc{1, 5, 8, 7, 2};
  ss::TokenSequence src(sc, L, 0), tgt(tc, L, 0);
  auto targets = ss::AttackTargets::make(enc, src, tgt);
  return {std::move(enc), std::move(src), std::move(tgt), std::move(targets)};
}

std::vector<TokenId> row_vec(const ss::GradientSheet& g, std::size_t r) {
  return {g.row(r).begin(), g.row(r).end()};
}

}  // namespace

TEST(TopK, SmallestGradientFirstWithLowIdTies) {
  ss::GradientSheet g({0}, 6);
  const std::vector<double> vals{0.5, -1.0, 0.2, -1.0, 3.0, 0.2};
  std::copy(vals.begin(), vals.end(), g.row(0).begin());
  EXPECT_EQ(ss::top_k_candidates(g, 4)[0], std::vector<TokenId>({1, 3, 2, 5}));
  EXPECT_EQ(ss::top_k_candidates(g, 100)[0].size(), 6u) << "k is clamped";
  EXPECT_THROW(ss::top_k_candidates(g, 0), ss::InvalidArgument);
}

TEST(TopK, ExcludesInfiniteAndDisallowed) {
  ss::GradientSheet g({0, 1}, 5);
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t t = 0; t < 5; ++t) g.row(r)[t] = static_cast<double>(t);
  }
  g.row(0)[0] = std::numeric_limits<double>::infinity();
  const std::vector<TokenId> allowed{0, 2, 4};
  const auto got = ss::top_k_candidates(g, 5, std::span<const TokenId>(allowed));
  EXPECT_EQ(got[0], std::vector<TokenId>({2, 4}));
  EXPECT_EQ(got[1], std::vector<TokenId>({0, 2, 4}));
  const std::vector<TokenId> none;
  EXPECT_THROW(ss::top_k_candidates(g, 2, std::span<const TokenId>(none)), ss::EmptyAllowedSet);
  const std::vector<TokenId> only_inf{0};
  EXPECT_THROW(ss::top_k_candidates(g, 2, std::span<const TokenId>(only_inf)), ss::EmptyAllowedSet);
}

TEST(TopK, AgreesWithFullSort) {
  for (std::uint64_t trial = 0; trial < 50; ++trial) {
    ss::CounterRng rng(trial);
    ss::GradientSheet g({0, 1, 2}, 64);
    for (std::size_t r = 0; r < 3; ++r) {
      for (double& v : g.row(r)) v = std::round(rng.gaussian() * 3.0);
    }
    const std::size_t k = 1 + rng.below(70);
    const auto got = ss::top_k_candidates(g, k);
    for (std::size_t r = 0; r < 3; ++r) EXPECT_EQ(got[r], oracle::sorted_top_k(g.row(r), k));
  }
}

TEST(AttackSpec, Validation) {
  ss::AttackSpec s;
  EXPECT_NO_THROW(s.validate());
  s.top_k = 0;
  EXPECT_THROW(s.validate(), ss::InvalidArgument);
  s = {};
  s.eps_floor = 0.9;
  s.eps_start = 0.5;
  EXPECT_THROW(s.validate(), ss::InvalidArgument);
  s = {};
  s.allowed_tokens = std::vector<TokenId>{};
  EXPECT_THROW(s.validate(), ss::EmptyAllowedSet);
  EXPECT_EQ(ss::parse_search_mode("single"), ss::SearchMode::single);
  EXPECT_THROW(ss::parse_search_mode("beam"), ss::InvalidArgument);
}

TEST(Search, DeterministicPerSeed) {
  auto f = make_fixture();
  ss::AttackSpec spec;
  spec.steps = 15;
  spec.batch = 32;
  spec.seed = 5;
  const auto a = ss::run_attack(f.src, f.targets, spec, f.enc);
  const auto b = ss::run_attack(f.src, f.targets, spec, f.enc);
  EXPECT_EQ(a.best_suffix, b.best_suffix);
  EXPECT_EQ(a.score_trajectory, b.score_trajectory);
  ss::SearchOptions threaded;
  threaded.threads = 4;
  const auto c = ss::run_attack(f.src, f.targets, spec, f.enc, threaded);
  EXPECT_EQ(a.best_suffix, c.best_suffix) << "thread count must not change the result";
  EXPECT_EQ(a.score_trajectory, c.score_trajectory);
}

TEST(Search, RecordInvariants) {
  auto f = make_fixture();
  for (auto mode : {ss::SearchMode::single, ss::SearchMode::multi}) {
    ss::AttackSpec spec;
    spec.mode = mode;
    spec.steps = 12;
    spec.batch = 24;
    spec.suffix_len = 3;
    spec.seed = 2;
    const auto rec = ss::run_attack(f.src, f.targets, spec, f.enc);
    EXPECT_EQ(rec.steps_taken, 12u);
    EXPECT_EQ(rec.score_trajectory.size(), 12u);
    EXPECT_EQ(rec.initial_suffix, std::vector<TokenId>(3, 0)) << "starts from pad";
    EXPECT_GE(rec.best_score, rec.initial_score);
    for (std::size_t t = 1; t < rec.score_trajectory.size(); ++t) {
      EXPECT_GE(rec.score_trajectory[t], rec.score_trajectory[t - 1]);
    }
    EXPECT_DOUBLE_EQ(rec.score_trajectory.back(), rec.best_score);
    EXPECT_NEAR(rec.best_score, ss::score(ss::splice_suffix(f.src, rec.best_suffix), f.targets, {}, f.enc), 1e-15);
    EXPECT_EQ(rec.epsilon_schedule.size(), mode == ss::SearchMode::multi ? 13u : 0u);
    EXPECT_EQ(rec.spec, spec);
  }
}

TEST(Search, ZeroStepsReturnsInitial) {
  auto f = make_fixture();
  ss::AttackSpec spec;
  spec.steps = 0;
  const auto rec = ss::run_attack(f.src, f.targets, spec, f.enc);
  EXPECT_EQ(rec.best_suffix, rec.initial_suffix);
  EXPECT_TRUE(rec.score_trajectory.empty());
  EXPECT_EQ(rec.epsilon_schedule, std::vector<double>({1.0}));
}

TEST(Search, SingleModeFlipsExactlyOnePosition) {
  auto f = make_fixture();
  ss::AttackSpec spec;
  spec.mode = ss::SearchMode::single;
  spec.steps = 6;
  spec.batch = 8;
  spec.suffix_len = 4;
  spec.seed = 1;
  std::size_t seen = 0;
  ss::SearchOptions opts;
  opts.observer = [&](const ss::StepTrace& st) {
    EXPECT_LE(st.mutants.size(), spec.batch);
    std::set<std::vector<TokenId>> distinct;
    for (const auto& m : st.mutants) {
      std::size_t diff = 0, where = 0;
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] != st.incumbent[i]) {
          ++diff;
          where = i;
        }
      }
      EXPECT_EQ(diff, 1u);
      const auto& cand = st.candidates[where];
      EXPECT_NE(std::find(cand.begin(), cand.end(), m[where]), cand.end()) << "token must come from the top-k set";
      distinct.insert(m);
      ++seen;
    }
    EXPECT_EQ(distinct.size(), st.mutants.size()) << "no duplicate mutants";
  };
  ss::single_token_attack(f.src, f.targets, spec, f.enc, opts);
  EXPECT_GT(seen, 0u);
  spec.mode = ss::SearchMode::multi;
  EXPECT_THROW(ss::single_token_attack(f.src, f.targets, spec, f.enc), ss::InvalidArgument);
}

TEST(Search, MultiModeResamplesFromCandidates) {
  auto f = make_fixture();
  ss::AttackSpec spec;
  spec.steps = 5;
  spec.batch = 64;
  spec.seed = 4;
  ss::SearchOptions opts;
  opts.observer = [&](const ss::StepTrace& st) {
    ASSERT_EQ(st.mutants.size(), spec.batch);
    for (std::size_t b = 0; b < st.mutants.size(); ++b) {
      for (std::size_t i = 0; i < spec.suffix_len; ++i) {
        if (st.resampled[b][i]) {
          const auto& cand = st.candidates[i];
          EXPECT_NE(std::find(cand.begin(), cand.end(), st.mutants[b][i]), cand.end());
        } else {
          EXPECT_EQ(st.mutants[b][i], st.incumbent[i]);
        }
      }
    }
  };
  ss::multi_token_attack(f.src, f.targets, spec, f.enc, opts);
}

TEST(Search, EpsilonScheduleFormula) {
  auto f = make_fixture();
  ss::AttackSpec spec;
  spec.steps = 8;
  spec.batch = 4;
  spec.eps_start = 0.9;
  spec.eps_floor = 0.3;
  const auto rec = ss::run_attack(f.src, f.targets, spec, f.enc);
  ASSERT_EQ(rec.epsilon_schedule.size(), 9u);
  for (std::size_t t = 0; t <= 8; ++t) {
    EXPECT_EQ(rec.epsilon_schedule[t], std::max(0.3, 0.9 - static_cast<double>(t) / 8.0));
  }
}

TEST(Search, RestrictionRespected) {
  auto f = make_fixture();
  ss::AttackSpec spec;
  spec.steps = 10;
  spec.batch = 32;
  spec.allowed_tokens = std::vector<TokenId>{10, 11, 12, 13, 14};
  spec.forbidden_tokens = {12};
  ss::SearchOptions opts;
  std::size_t bad = 0;
  opts.observer = [&](const ss::StepTrace& st) {
    for (const auto& m : st.mutants) {
      for (TokenId t : m) bad += (t < 10 || t > 14 || t == 12) ? 1 : 0;
    }
  };
  const auto rec = ss::run_attack(f.src, f.targets, spec, f.enc, opts);
  EXPECT_EQ(bad, 0u);
  EXPECT_EQ(rec.initial_suffix, std::vector<TokenId>(5, 10)) << "pad not allowed: lowest allowed id";
  spec.allowed_tokens = std::vector<TokenId>{12};
  EXPECT_THROW(ss::run_attack(f.src, f.targets, spec, f.enc), ss::EmptyAllowedSet);
}

TEST(Search, QfPresetIsUntargetedAscii) {
  const auto& vocab = ss::Vocabulary::bundled();
  const auto spec = ss::qf_emulation_preset(vocab);
  EXPECT_EQ(spec.weights, ss::ScoreWeights::untargeted());
  EXPECT_EQ(spec.suffix_len, 5u);
  ASSERT_TRUE(spec.allowed_tokens);
  for (TokenId t : *spec.allowed_tokens) EXPECT_EQ(vocab.token(t).size(), 1u);
}

TEST(Search, SuffixMustFit) {
  auto f = make_fixture(40, 3, 8);
  ss::AttackSpec spec;
  spec.suffix_len = 5;  // 5 content + 5 suffix > 8
  EXPECT_THROW(ss::run_attack(f.src, f.targets, spec, f.enc), ss::TextTooLong);
}

TEST(Search, UnconditionalUpdateMayAcceptWorse) {
  auto f = make_fixture();
  ss::AttackSpec spec;
  spec.keep_best = false;
  spec.steps = 20;
  spec.batch = 4;
  spec.seed = 8;
  std::vector<double> incumbent_scores;
  ss::SearchOptions opts;
  opts.observer = [&](const ss::StepTrace& st) {
    incumbent_scores.push_back(ss::score(ss::splice_suffix(f.src, st.incumbent), f.targets, {}, f.enc));
  };
  const auto rec = ss::run_attack(f.src, f.targets, spec, f.enc, opts);
  for (double s : incumbent_scores) EXPECT_LE(s, rec.best_score);
  for (std::size_t t = 1; t < rec.score_trajectory.size(); ++t) {
    EXPECT_GE(rec.score_trajectory[t], rec.score_trajectory[t - 1]) << "trajectory tracks the best so far";
  }
}

TEST(Search, SmallInstanceReachesBruteForceOptimum) {
  const std::size_t V = 10, L = 8;
  std::vector<TokenId> alphabet(V);
  for (std::size_t t = 0; t < V; ++t) alphabet[t] = static_cast<TokenId>(t);
  std::size_t hits = 0;
  for (std::uint64_t run = 0; run < 20; ++run) {
    ss::ReferenceEncoder enc(ss::ReferenceEncoderConfig{V, 16, L, 2, 1.0, run});
    const std::vector<TokenId> sc{1, 4, 5, 2}, tc{1, 4, 6, 2};
    const ss::TokenSequence src(sc, L, 0), tgt(tc, L, 0);
    const auto targets = ss::AttackTargets::make(enc, src, tgt);
    ss::AttackSpec spec;
    spec.suffix_len = 2;
    spec.steps = 40;
    spec.batch = 64;
    spec.seed = run;
    const double best = oracle::brute_force_best(alphabet, 2, [&](const std::vector<TokenId>& s) {
      return ss::score(ss::splice_suffix(src, s), targets, {}, enc);
    });
    hits += ss::run_attack(src, targets, spec, enc).best_score == best ? 1 : 0;
  }
  EXPECT_GE(hits, 18u);
}
