// Runs a small campaign on the baseline-biased fixture encoder and prints
// the report: the forward direction of every pair should be the easy one.
//
//   asymmetry_demo [pairs=4] [attacks=5]

#include <cstdlib>
#include <iostream>
#include <string>

#include "swapsuffix/campaign.hpp"
#include "swapsuffix/synthetic.hpp"

namespace ss = swapsuffix;

int main(int argc, char** argv) {
  const std::size_t n_pairs = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 4;
  const std::size_t attacks = argc > 2 ? std::strtoul(argv[2], nullptr, 10) : 5;

  const auto& vocab = ss::Vocabulary::bundled();
  const ss::BiasedFixtureOptions fixture;
  auto pairs = ss::bundled_pairs(vocab, fixture.max_len).pairs;
  if (n_pairs < pairs.size()) pairs.resize(n_pairs);
  const auto enc = ss::bundled_biased_encoder(fixture);

  ss::CampaignConfig cfg;
  cfg.attack.steps = 30;
  cfg.attack.batch = 64;
  cfg.attacks_per_pair = attacks;
  cfg.samples_per_attack = 5;
  cfg.similarity = ss::Similarity::caption_softmax;
  cfg.logit_scale = ss::kFixtureLogitScale;
  cfg.noise_sigma = ss::kFixtureNoiseSigma;
  cfg.seed = 2024;

  try {
    const auto res = ss::run_campaign(pairs, cfg, enc, vocab, ss::CharTrigramModel::bundled());
    for (const auto& row : res.rows) {
      if (row["kind"] != "attack" || row["attack_index"] != 0) continue;
      std::cout << row["pair_id"].get<std::string>() << " " << row["direction"].get<std::string>() << ": suffix '"
                << row["best_suffix_text"].get<std::string>() << "' score " << row["best_score"].get<double>() << '\n';
    }
    std::cout << '\n' << ss::report_text(ss::build_report(ss::summaries_from_rows(res.rows)));
  } catch (const ss::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
