#pragma once

// Forward/backward attack campaigns over a set of prompt pairs, persisted as
// JSON lines, plus the reports computed from a results file.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "swapsuffix/bridge.hpp"
#include "swapsuffix/encoder.hpp"
#include "swapsuffix/error.hpp"
#include "swapsuffix/evaluation.hpp"
#include "swapsuffix/pairs.hpp"
#include "swapsuffix/parallel.hpp"
#include "swapsuffix/perplexity.hpp"
#include "swapsuffix/probes.hpp"
#include "swapsuffix/rng.hpp"
#include "swapsuffix/search.hpp"
#include "swapsuffix/synthetic.hpp"
#include "swapsuffix/vocab.hpp"

namespace swapsuffix {

using Json = nlohmann::json;

// ---------------------------------------------------------------------------
// Configuration

enum class Direction { forward = 0, backward = 1 };
enum class Directions { forward, backward, both };

inline const char* to_string(Direction d) { return d == Direction::forward ? "forward" : "backward"; }

inline Direction parse_direction(const std::string& s) {
  if (s == "forward") return Direction::forward;
  if (s == "backward") return Direction::backward;
  throw InvalidArgument("direction must be forward or backward, got '" + s + "'");
}

inline const char* to_string(Directions d) {
  switch (d) {
    case Directions::forward: return "forward";
    case Directions::backward: return "backward";
    case Directions::both: return "both";
  }
  return "both";
}

inline Directions parse_directions(const std::string& s) {
  if (s == "forward") return Directions::forward;
  if (s == "backward") return Directions::backward;
  if (s == "both") return Directions::both;
  throw InvalidArgument("directions must be forward, backward or both, got '" + s + "'");
}

inline std::vector<Direction> expand(Directions d) {
  switch (d) {
    case Directions::forward: return {Direction::forward};
    case Directions::backward: return {Direction::backward};
    case Directions::both: return {Direction::forward, Direction::backward};
  }
  return {};
}

/// Which encoder a campaign attacks.
struct EncoderSelection {
  /// reference: seeded random tables; biased: the baseline-biased fixture over
  /// the bundled pairs; file: tables saved by ReferenceEncoder::save; bridge:
  /// a remote encoder at `endpoint`.
  std::string kind = "reference";
  std::uint64_t seed = 0;
  std::size_t dim = 32;
  std::size_t depth = 2;
  std::size_t max_len = kDefaultMaxLen;
  std::string path;
  std::string endpoint;
  std::uint64_t timeout_ms = 30000;
};

struct CampaignConfig {
  AttackSpec attack;
  /// none | ascii (printable single-character tokens only).
  std::string restriction = "none";
  /// Vocabulary entries never allowed in a suffix.
  std::vector<std::string> forbidden;
  std::size_t attacks_per_pair = 10;
  std::size_t samples_per_attack = 5;
  std::size_t bsr_attempts = 64;
  Directions directions = Directions::both;
  double noise_sigma = 0.05;
  double gamma = ThresholdClassifier::kClipGamma;
  Similarity similarity = Similarity::cosine;
  double logit_scale = 100.0;
  /// hq | coco | path to a predictor table file.
  std::string predictor = "hq";
  std::uint64_t seed = 0;
  std::size_t workers = 1;
  std::string output;
  EncoderSelection encoder;

  void validate() const {
    attack.validate();
    if (attacks_per_pair < 1 || samples_per_attack < 1 || bsr_attempts < 1) {
      throw InvalidArgument("attacks_per_pair, samples_per_attack and bsr_attempts must be >= 1");
    }
    if (workers < 1) throw InvalidArgument("workers must be >= 1");
    if (!(noise_sigma >= 0.0)) throw InvalidArgument("noise_sigma must be >= 0");
    if (restriction != "none" && restriction != "ascii") throw InvalidArgument("restriction must be none or ascii");
    classifier();
  }

  ThresholdClassifier classifier() const { return ThresholdClassifier(gamma, similarity, logit_scale); }

  PredictorTable predictor_table() const {
    if (predictor == "hq" || predictor == "coco") return PredictorTable::preset(predictor);
    return PredictorTable::load(predictor);
  }

  /// The attack spec with token restrictions resolved against `vocab`.
  AttackSpec resolved_attack(const Vocabulary& vocab) const {
    AttackSpec spec = attack;
    if (restriction == "ascii") spec.allowed_tokens = vocab.ascii_ids();
    for (const auto& w : forbidden) {
      const auto id = vocab.find(w);
      if (!id) throw InvalidArgument("forbidden token '" + w + "' is not in the vocabulary");
      spec.forbidden_tokens.push_back(*id);
    }
    return spec;
  }

  /// Every key accepted by set(), in documentation order.
  static constexpr std::array<const char*, 32> kKeys{
      "steps",          "top_k",         "batch",        "suffix_len",       "weight_target",
      "weight_source",  "eps_start",     "eps_floor",    "mode",             "keep_best",
      "restriction",    "forbidden",     "attacks_per_pair", "samples_per_attack", "bsr_attempts",
      "directions",     "noise_sigma",   "gamma",        "similarity",       "logit_scale",
      "predictor",      "seed",          "workers",      "output",           "encoder",
      "encoder_seed",   "dim",           "depth",        "max_len",          "encoder_file",
      "bridge",         "bridge_timeout_ms"};

  /// Applies one key=value setting. Keys mirror the field names; attack
  /// fields are spelled without a prefix.
  void set(const std::string& key, const std::string& value) {
    auto as_size = [&] {
      std::size_t used = 0;
      unsigned long long v = 0;
      try {
        v = std::stoull(value, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != value.size() || value.empty() || value[0] == '-') {
        throw InvalidArgument(key + " expects a non-negative integer, got '" + value + "'");
      }
      return static_cast<std::size_t>(v);
    };
    auto as_double = [&] {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(value, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != value.size() || value.empty()) throw InvalidArgument(key + " expects a number, got '" + value + "'");
      return v;
    };
    auto as_bool = [&] {
      if (value == "true" || value == "1") return true;
      if (value == "false" || value == "0") return false;
      throw InvalidArgument(key + " expects true or false, got '" + value + "'");
    };
    if (key == "steps") attack.steps = as_size();
    else if (key == "top_k") attack.top_k = as_size();
    else if (key == "batch") attack.batch = as_size();
    else if (key == "suffix_len") attack.suffix_len = as_size();
    else if (key == "weight_target") attack.weights = ScoreWeights(as_double(), attack.weights.source());
    else if (key == "weight_source") attack.weights = ScoreWeights(attack.weights.target(), as_double());
    else if (key == "eps_start") attack.eps_start = as_double();
    else if (key == "eps_floor") attack.eps_floor = as_double();
    else if (key == "mode") attack.mode = parse_search_mode(value);
    else if (key == "keep_best") attack.keep_best = as_bool();
    else if (key == "restriction") restriction = value;
    else if (key == "forbidden") {
      forbidden.clear();
      std::istringstream in(value);
      std::string w;
      while (std::getline(in, w, ',')) {
        if (!w.empty()) forbidden.push_back(w);
      }
    }
    else if (key == "attacks_per_pair") attacks_per_pair = as_size();
    else if (key == "samples_per_attack") samples_per_attack = as_size();
    else if (key == "bsr_attempts") bsr_attempts = as_size();
    else if (key == "directions") directions = parse_directions(value);
    else if (key == "noise_sigma") noise_sigma = as_double();
    else if (key == "gamma") gamma = as_double();
    else if (key == "similarity") similarity = parse_similarity(value);
    else if (key == "logit_scale") logit_scale = as_double();
    else if (key == "predictor") predictor = value;
    else if (key == "seed") seed = as_size();
    else if (key == "workers") workers = as_size();
    else if (key == "output") output = value;
    else if (key == "encoder") {
      if (value != "reference" && value != "biased" && value != "file" && value != "bridge") {
        throw InvalidArgument("encoder must be reference, biased, file or bridge");
      }
      encoder.kind = value;
    }
    else if (key == "encoder_seed") encoder.seed = as_size();
    else if (key == "dim") encoder.dim = as_size();
    else if (key == "depth") encoder.depth = as_size();
    else if (key == "max_len") encoder.max_len = as_size();
    else if (key == "encoder_file") encoder.path = value;
    else if (key == "bridge") encoder.endpoint = value;
    else if (key == "bridge_timeout_ms") encoder.timeout_ms = as_size();
    else throw InvalidArgument("unknown setting '" + key + "'");
  }

  /// Flat `key = value` lines; blank lines and '#' comments are skipped.
  static CampaignConfig parse(std::string_view text, const std::string& source, CampaignConfig base) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
      auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        if (b == std::string::npos) return std::string();
        const auto e = s.find_last_not_of(" \t\r");
        return s.substr(b, e - b + 1);
      };
      line = trim(line);
      if (line.empty()) continue;
      const auto eq = line.find('=');
      if (eq == std::string::npos) throw ParseError(source, line_no, "expected key = value");
      try {
        base.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
      } catch (const InvalidArgument& e) {
        throw ParseError(source, line_no, e.what());
      }
    }
    return base;
  }

  static CampaignConfig parse(std::string_view text, const std::string& source = "<memory>") {
    return parse(text, source, CampaignConfig{});
  }

  static CampaignConfig load(const std::string& path) { return load(path, CampaignConfig{}); }

  static CampaignConfig load(const std::string& path, CampaignConfig base) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, 0, "cannot open config file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str(), path, std::move(base));
  }
};

inline std::unique_ptr<Encoder> make_encoder(const EncoderSelection& sel, const Vocabulary& vocab) {
  if (sel.kind == "reference") {
    return std::make_unique<ReferenceEncoder>(
        ReferenceEncoderConfig{vocab.size(), sel.dim, sel.max_len, sel.depth, 1.0, sel.seed});
  }
  if (sel.kind == "biased") {
    BiasedFixtureOptions o;
    o.dim = sel.dim;
    o.depth = sel.depth;
    o.max_len = sel.max_len;
    o.seed = sel.seed;
    const auto loaded = bundled_pairs(vocab, sel.max_len);
    return std::make_unique<ReferenceEncoder>(baseline_biased_encoder(vocab, loaded.pairs, o));
  }
  std::unique_ptr<Encoder> enc;
  if (sel.kind == "file") {
    if (sel.path.empty()) throw InvalidArgument("encoder=file needs encoder_file");
    enc = std::make_unique<ReferenceEncoder>(ReferenceEncoder::load(sel.path));
  } else if (sel.kind == "bridge") {
    if (sel.endpoint.empty()) throw InvalidArgument("encoder=bridge needs a bridge endpoint");
    enc = std::make_unique<BridgeEncoder>(sel.endpoint, std::optional<std::size_t>(sel.max_len),
                                          std::chrono::milliseconds(sel.timeout_ms));
  } else {
    throw InvalidArgument("unknown encoder kind '" + sel.kind + "'");
  }
  if (enc->vocab_size() != vocab.size()) {
    throw DimensionMismatch("encoder vocab_size " + std::to_string(enc->vocab_size()) + " != vocabulary size " +
                            std::to_string(vocab.size()));
  }
  return enc;
}

// ---------------------------------------------------------------------------
// Seeds and serialization

inline std::uint64_t attack_seed(std::uint64_t campaign_seed, std::string_view pair_id, Direction d,
                                 std::size_t attack_index) {
  std::uint64_t h = hash_combine(campaign_seed, hash_bytes(pair_id));
  h = hash_combine(h, static_cast<std::uint64_t>(d));
  return hash_combine(h, attack_index);
}

inline std::uint64_t bsr_seed(std::uint64_t campaign_seed, std::string_view pair_id, Direction d) {
  return hash_combine(attack_seed(campaign_seed, pair_id, d, 0), 0xB5EEDULL);
}

inline Json to_json(const AttackSpec& s) {
  Json j{{"steps", s.steps},
         {"top_k", s.top_k},
         {"batch", s.batch},
         {"suffix_len", s.suffix_len},
         {"weight_target", s.weights.target()},
         {"weight_source", s.weights.source()},
         {"eps_start", s.eps_start},
         {"eps_floor", s.eps_floor},
         {"mode", to_string(s.mode)},
         {"keep_best", s.keep_best},
         {"seed", s.seed},
         {"forbidden_tokens", s.forbidden_tokens}};
  j["allowed_tokens"] = s.allowed_tokens ? Json(*s.allowed_tokens) : Json(nullptr);
  return j;
}

inline std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

/// Row fields that legitimately differ between otherwise identical runs.
inline constexpr std::array<const char*, 1> kVolatileFields{"timestamp"};

/// Row with volatile fields removed, serialized with sorted keys.
inline std::string canonical_row(Json row) {
  for (const char* f : kVolatileFields) row.erase(f);
  return row.dump();
}

inline std::uint64_t canonical_hash(std::span<const Json> rows) {
  std::uint64_t h = hash_bytes("");
  for (const auto& r : rows) {
    if (r.value("kind", "") == "manifest") continue;
    h = hash_combine(h, hash_bytes(canonical_row(r)));
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

inline std::vector<Json> read_results(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open results file");
  std::vector<Json> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      rows.push_back(Json::parse(line));
    } catch (const Json::exception& e) {
      throw ParseError(path, line_no, e.what());
    }
    if (!rows.back().is_object()) throw ParseError(path, line_no, "row is not a JSON object");
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Campaign

struct CampaignResult {
  /// Attack rows then summary rows per (pair, direction), in final order,
  /// followed by one manifest row.
  std::vector<Json> rows;
  std::size_t attack_rows = 0;
  std::size_t summary_rows = 0;
  std::size_t failed_units = 0;
  std::uint64_t canonical_hash = 0;
};

/// Rows produced by a successful campaign: one per attack plus one summary
/// per (pair, direction); the manifest row is not counted.
inline std::size_t expected_row_count(std::size_t pairs, Directions d, std::size_t attacks_per_pair) {
  return pairs * expand(d).size() * (attacks_per_pair + 1);
}

namespace detail {

struct UnitRows {
  std::vector<Json> rows;
  bool failed = false;
};

inline UnitRows run_unit(const PromptPair& pair, Direction dir, const CampaignConfig& cfg, const AttackSpec& base_spec,
                         const Encoder& enc, const Vocabulary& vocab, const PerplexityScorer& scorer,
                         const PredictorTable& table, const std::function<std::string()>& clock) {
  UnitRows out;
  Json summary{{"kind", "summary"}, {"pair_id", pair.pair_id}, {"direction", to_string(dir)}};
  try {
    const ResolvedPair r = resolve_pair(pair, vocab, enc.max_len());
    const BaselinePrompt baseline = make_baseline(r.source, r.source_span, vocab);
    const bool fwd = dir == Direction::forward;
    const TokenSequence& src = fwd ? r.source : r.target;
    const TokenSequence& tgt = fwd ? r.target : r.source;
    const std::string& src_text = fwd ? pair.source_text : pair.target_text;
    const std::string& tgt_text = fwd ? pair.target_text : pair.source_text;
    summary["source_text"] = src_text;
    summary["target_text"] = tgt_text;

    const AttackTargets targets = AttackTargets::make(enc, src, tgt);
    const SurrogateGenerator gen(enc, cfg.noise_sigma);
    const ThresholdClassifier clf = cfg.classifier();

    const double bsr = base_success_rate(tgt, enc, gen, clf, cfg.bsr_attempts, bsr_seed(cfg.seed, pair.pair_id, dir));
    const double d1 = delta1(tgt_text, src_text, scorer);
    const double d2 = delta2(targets.target_emb, targets.source_emb, enc.encode(baseline.tokens));
    const Prediction pred = predict_asr(bsr, d2, table);

    std::vector<SuccessTally> tallies;
    double score_sum = 0.0;
    for (std::size_t a = 0; a < cfg.attacks_per_pair; ++a) {
      AttackSpec spec = base_spec;
      spec.seed = attack_seed(cfg.seed, pair.pair_id, dir, a);
      const AttackRecord rec = run_attack(src, targets, spec, enc);
      const SuccessTally t = suffix_success(rec, targets, gen, clf, cfg.samples_per_attack);
      tallies.push_back(t);
      score_sum += rec.best_score;
      out.rows.push_back(Json{{"kind", "attack"},
                              {"pair_id", pair.pair_id},
                              {"direction", to_string(dir)},
                              {"attack_index", a},
                              {"seed", spec.seed},
                              {"attack_seed", spec.seed},
                              {"best_suffix_ids", rec.best_suffix},
                              {"best_suffix_text", join_tokens(rec.best_suffix, vocab)},
                              {"best_score", rec.best_score},
                              {"initial_score", rec.initial_score},
                              {"trajectory", rec.score_trajectory},
                              {"spec", to_json(spec)},
                              {"positives", t.positives},
                              {"negatives", t.negatives},
                              {"neutrals", t.neutrals},
                              {"majority_success", t.majority_success},
                              {"timestamp", clock()}});
    }
    std::size_t successes = 0;
    for (const auto& t : tallies) successes += t.majority_success ? 1 : 0;
    summary["attacks"] = tallies.size();
    summary["successes"] = successes;
    summary["asr"] = attack_success_rate(tallies);
    summary["mean_best_score"] = score_sum / static_cast<double>(tallies.size());
    summary["bsr"] = bsr;
    summary["delta1"] = d1;
    summary["delta2"] = d2;
    summary["bucket"] = to_string(pred.bucket);
    summary["predicted_asr"] = pred.mean_asr;
    summary["predictor"] = table.tag;
  } catch (const Error& e) {
    out.failed = true;
    summary["error"] = e.what();
  }
  summary["timestamp"] = clock();
  out.rows.push_back(std::move(summary));
  return out;
}

}  // namespace detail

struct CampaignOptions {
  /// Supplies row timestamps; replaceable for tests.
  std::function<std::string()> clock = utc_timestamp;
};

/// Runs every (pair, direction) unit, isolating failures per unit, and
/// writes the rows to cfg.output when it is set. Row order is
/// (pair_id, direction, attack_index) regardless of worker scheduling.
inline CampaignResult run_campaign(std::span<const PromptPair> pairs, const CampaignConfig& cfg, const Encoder& enc,
                                   const Vocabulary& vocab, const PerplexityScorer& scorer,
                                   const CampaignOptions& opts = {}) {
  cfg.validate();
  const AttackSpec base_spec = cfg.resolved_attack(vocab);
  base_spec.validate();
  const PredictorTable table = cfg.predictor_table();
  const auto dirs = expand(cfg.directions);

  struct Unit {
    const PromptPair* pair;
    Direction dir;
  };
  std::vector<Unit> units;
  for (const auto& p : pairs) {
    for (Direction d : dirs) units.push_back({&p, d});
  }
  std::stable_sort(units.begin(), units.end(), [](const Unit& a, const Unit& b) {
    if (a.pair->pair_id != b.pair->pair_id) return a.pair->pair_id < b.pair->pair_id;
    return a.dir < b.dir;
  });

  std::vector<detail::UnitRows> produced(units.size());
  parallel_for(units.size(), cfg.workers, [&](std::size_t i) {
    produced[i] = detail::run_unit(*units[i].pair, units[i].dir, cfg, base_spec, enc, vocab, scorer, table, opts.clock);
  });

  CampaignResult res;
  for (auto& u : produced) {
    res.failed_units += u.failed ? 1 : 0;
    for (auto& row : u.rows) {
      (row["kind"] == "attack" ? res.attack_rows : res.summary_rows) += 1;
      res.rows.push_back(std::move(row));
    }
  }
  res.canonical_hash = canonical_hash(res.rows);
  res.rows.push_back(Json{{"kind", "manifest"},
                          {"canonical_hash", hex64(res.canonical_hash)},
                          {"attack_rows", res.attack_rows},
                          {"summary_rows", res.summary_rows},
                          {"failed_units", res.failed_units},
                          {"timestamp", opts.clock()}});

  if (!cfg.output.empty()) {
    std::ofstream out(cfg.output, std::ios::binary | std::ios::trunc);
    if (!out) throw ParseError(cfg.output, 0, "cannot open results file for writing");
    for (const auto& r : res.rows) out << r.dump() << '\n';
    if (!out) throw ParseError(cfg.output, 0, "write failed");
  }
  return res;
}

// ---------------------------------------------------------------------------
// Report

struct SummaryRecord {
  std::string pair_id;
  Direction direction = Direction::forward;
  double asr = 0.0;
  double bsr = 0.0;
  double delta1 = 0.0;
  double delta2 = 0.0;
};

struct PairAsrRow {
  std::string pair_id;
  std::optional<double> forward;
  std::optional<double> backward;
};

struct BucketCell {
  std::size_t count = 0;
  /// Absent when the bucket is empty.
  std::optional<double> mean_asr;
};

struct CorrelationRow {
  std::string variable;
  std::size_t n = 0;
  /// Absent when undefined (fewer than two rows or constant input).
  std::optional<double> pearson;
  std::optional<double> spearman;
};

struct CampaignReport {
  double threshold = 0.9;
  std::vector<PairAsrRow> pairs;
  std::array<BucketCell, 4> buckets{};
  std::vector<CorrelationRow> correlations;
  std::size_t failed_units = 0;
};

/// Successful summary rows of a results file; error rows are counted in
/// `failed` and skipped.
inline std::vector<SummaryRecord> summaries_from_rows(std::span<const Json> rows, std::size_t* failed = nullptr) {
  std::vector<SummaryRecord> out;
  std::size_t bad = 0;
  for (const auto& r : rows) {
    if (r.value("kind", "") != "summary") continue;
    if (r.contains("error")) {
      ++bad;
      continue;
    }
    try {
      out.push_back({r.at("pair_id").get<std::string>(), parse_direction(r.at("direction").get<std::string>()),
                     r.at("asr").get<double>(), r.at("bsr").get<double>(), r.at("delta1").get<double>(),
                     r.at("delta2").get<double>()});
    } catch (const Json::exception& e) {
      throw ParseError("results", 0, std::string("malformed summary row: ") + e.what());
    }
  }
  if (failed) *failed = bad;
  return out;
}

inline CampaignReport build_report(std::span<const SummaryRecord> rows, double threshold = 0.9) {
  if (rows.empty()) throw EmptyResults("results contain no successful summary rows");
  CampaignReport rep;
  rep.threshold = threshold;

  for (const auto& s : rows) {
    auto it = std::find_if(rep.pairs.begin(), rep.pairs.end(), [&](const PairAsrRow& p) { return p.pair_id == s.pair_id; });
    if (it == rep.pairs.end()) {
      rep.pairs.push_back({s.pair_id, {}, {}});
      it = rep.pairs.end() - 1;
    }
    (s.direction == Direction::forward ? it->forward : it->backward) = s.asr;
  }
  std::sort(rep.pairs.begin(), rep.pairs.end(), [](const auto& a, const auto& b) { return a.pair_id < b.pair_id; });

  std::array<double, 4> sums{};
  for (const auto& s : rows) {
    const auto b = static_cast<std::size_t>(bucket_for(s.bsr, s.delta2, threshold));
    rep.buckets[b].count += 1;
    sums[b] += s.asr;
  }
  for (std::size_t b = 0; b < 4; ++b) {
    if (rep.buckets[b].count > 0) rep.buckets[b].mean_asr = sums[b] / static_cast<double>(rep.buckets[b].count);
  }

  std::vector<double> asr;
  for (const auto& s : rows) asr.push_back(s.asr);
  const std::array<std::pair<const char*, double SummaryRecord::*>, 3> vars{
      {{"delta1", &SummaryRecord::delta1}, {"delta2", &SummaryRecord::delta2}, {"bsr", &SummaryRecord::bsr}}};
  for (const auto& [name, member] : vars) {
    CorrelationRow c{name, rows.size(), {}, {}};
    std::vector<double> xs;
    for (const auto& s : rows) xs.push_back(s.*member);
    try {
      c.pearson = pearson(asr, xs);
      c.spearman = spearman(asr, xs);
    } catch (const ConstantInput&) {
    } catch (const InvalidArgument&) {
    }
    rep.correlations.push_back(c);
  }
  return rep;
}

inline CampaignReport report_from_file(const std::string& path, double threshold = 0.9) {
  const auto rows = read_results(path);
  std::size_t failed = 0;
  const auto summaries = summaries_from_rows(rows, &failed);
  auto rep = build_report(summaries, threshold);
  rep.failed_units = failed;
  return rep;
}

namespace detail {

inline std::string fmt(std::optional<double> v, const char* absent = "NA") {
  if (!v) return absent;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", *v);
  return buf;
}

inline std::string fmt_short(std::optional<double> v) {
  if (!v) return "-";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3f", *v);
  return buf;
}

}  // namespace detail

/// Long-format TSV: `table  key  field  value`, one fact per line.
inline std::string report_tsv(const CampaignReport& r) {
  std::ostringstream out;
  out << "table\tkey\tfield\tvalue\n";
  for (const auto& p : r.pairs) {
    out << "pair_asr\t" << p.pair_id << "\tforward\t" << detail::fmt(p.forward) << '\n';
    out << "pair_asr\t" << p.pair_id << "\tbackward\t" << detail::fmt(p.backward) << '\n';
  }
  for (Bucket b : kAllBuckets) {
    const auto& c = r.buckets[static_cast<std::size_t>(b)];
    out << "bucket\t" << to_string(b) << "\tcount\t" << c.count << '\n';
    out << "bucket\t" << to_string(b) << "\tmean_asr\t" << detail::fmt(c.mean_asr) << '\n';
  }
  for (const auto& c : r.correlations) {
    out << "correlation\tasr~" << c.variable << "\tn\t" << c.n << '\n';
    out << "correlation\tasr~" << c.variable << "\tpearson\t" << detail::fmt(c.pearson) << '\n';
    out << "correlation\tasr~" << c.variable << "\tspearman\t" << detail::fmt(c.spearman) << '\n';
  }
  out << "meta\tthreshold\tvalue\t" << detail::fmt(r.threshold) << '\n';
  out << "meta\tfailed_units\tvalue\t" << r.failed_units << '\n';
  return out.str();
}

inline std::string report_text(const CampaignReport& r) {
  std::ostringstream out;
  char line[160];
  out << "Per-pair ASR\n";
  std::snprintf(line, sizeof line, "  %-24s %8s %8s\n", "pair", "forward", "backward");
  out << line;
  for (const auto& p : r.pairs) {
    std::snprintf(line, sizeof line, "  %-24s %8s %8s\n", p.pair_id.c_str(), detail::fmt_short(p.forward).c_str(),
                  detail::fmt_short(p.backward).c_str());
    out << line;
  }
  std::snprintf(line, sizeof line, "\nMean ASR by bucket (BSR threshold %.2f)\n", r.threshold);
  out << line;
  std::snprintf(line, sizeof line, "  %-6s %-9s %6s %9s\n", "BSR", "delta2", "count", "mean_asr");
  out << line;
  for (Bucket b : kAllBuckets) {
    const auto& c = r.buckets[static_cast<std::size_t>(b)];
    std::snprintf(line, sizeof line, "  %-6s %-9s %6zu %9s\n", bsr_label(b), d2_label(b), c.count,
                  c.mean_asr ? detail::fmt_short(c.mean_asr).c_str() : "absent");
    out << line;
  }
  out << "\nCorrelation of ASR with\n";
  std::snprintf(line, sizeof line, "  %-8s %4s %9s %9s\n", "variable", "n", "pearson", "spearman");
  out << line;
  for (const auto& c : r.correlations) {
    std::snprintf(line, sizeof line, "  %-8s %4zu %9s %9s\n", c.variable.c_str(), c.n,
                  detail::fmt_short(c.pearson).c_str(), detail::fmt_short(c.spearman).c_str());
    out << line;
  }
  if (r.failed_units > 0) out << "\n" << r.failed_units << " pair-direction unit(s) failed and are excluded\n";
  return out.str();
}

}  // namespace swapsuffix
