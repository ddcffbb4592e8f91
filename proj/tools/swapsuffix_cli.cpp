// Command-line front end: attack, bsr, probe, campaign, report.
//
// Settings come from (lowest to highest precedence) built-in defaults, a
// key=value config file (--config, or the SWAPSUFFIX_CONFIG environment
// variable when --config is absent) and per-key flags such as --steps 50.
//
// Exit codes: 0 success, 1 usage error, 2 data error, 3 internal error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "swapsuffix/campaign.hpp"

namespace ss = swapsuffix;

namespace {

enum Exit : int { kOk = 0, kUsage = 1, kData = 2, kInternal = 3 };

struct Common {
  std::string config_path;
  std::string vocab_path;
  std::map<std::string, std::string> overrides;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--config", c.config_path, "key=value config file (default: $SWAPSUFFIX_CONFIG)");
  cmd->add_option("--vocab", c.vocab_path, "vocabulary file, one token per line (default: bundled)");
  for (const char* key : ss::CampaignConfig::kKeys) {
    cmd->add_option_function<std::string>(
           std::string("--") + key, [&c, key](const std::string& v) { c.overrides[key] = v; },
           std::string("config setting '") + key + "'")
        ->group("Settings");
  }
}

ss::CampaignConfig resolve_config(const Common& c) {
  std::string path = c.config_path;
  if (path.empty()) {
    if (const char* env = std::getenv("SWAPSUFFIX_CONFIG"); env && *env) path = env;
  }
  ss::CampaignConfig cfg = path.empty() ? ss::CampaignConfig{} : ss::CampaignConfig::load(path);
  for (const char* key : ss::CampaignConfig::kKeys) {
    if (auto it = c.overrides.find(key); it != c.overrides.end()) cfg.set(key, it->second);
  }
  return cfg;
}

ss::Vocabulary load_vocab(const Common& c) {
  return c.vocab_path.empty() ? ss::Vocabulary::bundled() : ss::Vocabulary::from_file(c.vocab_path);
}

struct PairArgs {
  std::string pairs_path;
  std::string pair_id;
  std::string source, target, entity_source, entity_target;
};

void add_pair_args(CLI::App* cmd, PairArgs& p) {
  cmd->add_option("--pairs", p.pairs_path, "pairs file (default: bundled pairs)");
  cmd->add_option("--pair-id", p.pair_id, "pair to use from the pairs file");
  cmd->add_option("--source", p.source, "source prompt (instead of --pair-id)");
  cmd->add_option("--target", p.target, "target prompt");
  cmd->add_option("--entity-source", p.entity_source, "entity in the source prompt");
  cmd->add_option("--entity-target", p.entity_target, "entity in the target prompt");
}

std::vector<ss::PromptPair> load_pair_list(const std::string& path, const ss::Vocabulary& vocab, std::size_t max_len) {
  const auto loaded = path.empty() ? ss::parse_pairs(ss::bundled::kPairs, vocab, {max_len, false}, "bundled pairs")
                                   : ss::load_pairs(path, vocab, {max_len, false});
  for (const auto& d : loaded.diagnostics) std::cerr << "warning: " << d << '\n';
  return loaded.pairs;
}

ss::PromptPair select_pair(const PairArgs& a, const ss::Vocabulary& vocab, std::size_t max_len) {
  if (!a.source.empty() || !a.target.empty()) {
    if (a.source.empty() || a.target.empty() || a.entity_source.empty() || a.entity_target.empty()) {
      throw CLI::ValidationError("--source, --target, --entity-source and --entity-target go together");
    }
    return {"cli", a.source, a.target, a.entity_source, a.entity_target};
  }
  if (a.pair_id.empty()) throw CLI::ValidationError("give --pair-id or --source/--target/--entity-*");
  for (auto& p : load_pair_list(a.pairs_path, vocab, max_len)) {
    if (p.pair_id == a.pair_id) return p;
  }
  throw ss::InvariantViolation(a.pair_id, "no such pair");
}

int cmd_attack(const Common& c, const PairArgs& pa, const std::string& direction) {
  const auto cfg = resolve_config(c);
  const auto vocab = load_vocab(c);
  cfg.validate();
  const auto enc = ss::make_encoder(cfg.encoder, vocab);
  const ss::PromptPair pair = select_pair(pa, vocab, enc->max_len());
  const ss::Direction dir = ss::parse_direction(direction);
  const auto r = ss::resolve_pair(pair, vocab, enc->max_len());
  const bool fwd = dir == ss::Direction::forward;
  const auto targets = ss::AttackTargets::make(*enc, fwd ? r.source : r.target, fwd ? r.target : r.source);
  ss::AttackSpec spec = cfg.resolved_attack(vocab);
  spec.seed = ss::attack_seed(cfg.seed, pair.pair_id, dir, 0);
  const auto rec = ss::run_attack(targets.source_tokens, targets, spec, *enc);
  const ss::SurrogateGenerator gen(*enc, cfg.noise_sigma);
  const auto tally = ss::suffix_success(rec, targets, gen, cfg.classifier(), cfg.samples_per_attack);

  std::printf("pair        %s (%s)\n", pair.pair_id.c_str(), ss::to_string(dir));
  std::printf("prompt      %s\n", (fwd ? pair.source_text : pair.target_text).c_str());
  std::printf("suffix      %s\n", ss::join_tokens(rec.best_suffix, vocab).c_str());
  std::printf("suffix_ids ");
  for (auto id : rec.best_suffix) std::printf(" %u", id);
  std::printf("\nscore       %.6f (initial %.6f, %s, %zu steps)\n", rec.best_score, rec.initial_score,
              ss::to_string(spec.mode), rec.steps_taken);
  std::printf("samples     %zu target / %zu input / %zu neither -> %s\n", tally.positives, tally.negatives,
              tally.neutrals, tally.majority_success ? "success" : "failure");
  return kOk;
}

int cmd_bsr(const Common& c, const std::string& prompt) {
  const auto cfg = resolve_config(c);
  cfg.validate();
  const auto vocab = load_vocab(c);
  const auto enc = ss::make_encoder(cfg.encoder, vocab);
  const auto tokens = ss::tokenize(prompt, vocab, enc->max_len());
  const ss::SurrogateGenerator gen(*enc, cfg.noise_sigma);
  const double bsr = ss::base_success_rate(tokens, *enc, gen, cfg.classifier(), cfg.bsr_attempts, cfg.seed);
  std::printf("%.6f\n", bsr);
  return kOk;
}

int cmd_probe(const Common& c, const PairArgs& pa) {
  const auto cfg = resolve_config(c);
  cfg.validate();
  const auto vocab = load_vocab(c);
  const auto enc = ss::make_encoder(cfg.encoder, vocab);
  const ss::PromptPair pair = select_pair(pa, vocab, enc->max_len());
  const auto r = ss::resolve_pair(pair, vocab, enc->max_len());
  const auto baseline = ss::make_baseline(r.source, r.source_span, vocab);
  const double d1 = ss::delta1(pair.target_text, pair.source_text, ss::CharTrigramModel::bundled());
  const double d2 = ss::delta2(r.target, r.source, baseline.tokens, *enc);
  std::printf("pair      %s\n", pair.pair_id.c_str());
  std::printf("baseline  %s\n", ss::detokenize(baseline.tokens, vocab).c_str());
  std::printf("delta1    %.6f\n", d1);
  std::printf("delta2    %.6f\n", d2);
  return kOk;
}

int cmd_campaign(const Common& c, const std::string& pairs_path) {
  const auto cfg = resolve_config(c);
  if (cfg.output.empty()) throw CLI::ValidationError("campaign needs --output (or output= in the config)");
  cfg.validate();
  const auto vocab = load_vocab(c);
  const auto enc = ss::make_encoder(cfg.encoder, vocab);
  const auto pairs = load_pair_list(pairs_path, vocab, enc->max_len());
  const auto res = ss::run_campaign(pairs, cfg, *enc, vocab, ss::CharTrigramModel::bundled());
  std::printf("pairs           %zu\n", pairs.size());
  std::printf("attack rows     %zu\n", res.attack_rows);
  std::printf("summary rows    %zu\n", res.summary_rows);
  std::printf("failed units    %zu\n", res.failed_units);
  std::printf("canonical hash  %s\n", ss::hex64(res.canonical_hash).c_str());
  std::printf("results         %s\n", cfg.output.c_str());
  return kOk;
}

int cmd_report(const std::string& results, const std::string& tsv_path, double threshold) {
  const auto rep = ss::report_from_file(results, threshold);
  if (!tsv_path.empty()) {
    std::ofstream out(tsv_path);
    if (!out) throw ss::ParseError(tsv_path, 0, "cannot open report file for writing");
    out << ss::report_tsv(rep);
  }
  std::cout << ss::report_text(rep);
  return kOk;
}

bool is_data_error(const ss::Error& e) {
  return dynamic_cast<const ss::ParseError*>(&e) || dynamic_cast<const ss::InvariantViolation*>(&e) ||
         dynamic_cast<const ss::EmptyResults*>(&e) || dynamic_cast<const ss::TextTooLong*>(&e) ||
         dynamic_cast<const ss::SpanOutOfRange*>(&e) || dynamic_cast<const ss::EmptyInput*>(&e) ||
         dynamic_cast<const ss::EmptyAllowedSet*>(&e);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entity-swapping adversarial suffix search"};
  app.require_subcommand(1);

  Common common;
  PairArgs pair_args;
  std::string direction = "forward";
  std::string prompt;
  std::string results, tsv_path;
  double threshold = 0.9;

  auto* attack = app.add_subcommand("attack", "search a suffix for one pair in one direction");
  add_common(attack, common);
  add_pair_args(attack, pair_args);
  attack->add_option("--direction", direction, "forward or backward")->check(CLI::IsMember({"forward", "backward"}));

  auto* bsr = app.add_subcommand("bsr", "base success rate of a prompt");
  add_common(bsr, common);
  bsr->add_option("--prompt", prompt, "prompt text")->required();

  auto* probe = app.add_subcommand("probe", "perplexity and baseline-distance differences of a pair");
  add_common(probe, common);
  add_pair_args(probe, pair_args);

  auto* campaign = app.add_subcommand("campaign", "attack every pair and write JSON-lines results");
  add_common(campaign, common);
  campaign->add_option("--pairs", pair_args.pairs_path, "pairs file (default: bundled pairs)");

  auto* report = app.add_subcommand("report", "summarize a results file");
  report->add_option("--results", results, "JSON-lines results file")->required();
  report->add_option("--tsv", tsv_path, "also write the tables as TSV here");
  report->add_option("--threshold", threshold, "BSR bucket threshold")->check(CLI::Range(0.0, 1.0));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*attack) return cmd_attack(common, pair_args, direction);
    if (*bsr) return cmd_bsr(common, prompt);
    if (*probe) return cmd_probe(common, pair_args);
    if (*campaign) return cmd_campaign(common, pair_args.pairs_path);
    if (*report) return cmd_report(results, tsv_path, threshold);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ss::InvalidArgument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ss::Error& e) {
    std::cerr << (is_data_error(e) ? "data error: " : "error: ") << e.what() << '\n';
    return is_data_error(e) ? kData : kInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}
