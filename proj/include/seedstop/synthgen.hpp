#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "seedstop/rng.hpp"
#include "seedstop/trial_model.hpp"

namespace seedstop {

// Synthetic pool with additive seed effects. A trial (i, j) converges to
//   clip(base + wi_effect_i + do_effect_j + noise_ij)
// along a saturating curve, or flatlines at diverge_value with
// probability diverge_prob. Effects and noise are zero-mean normals.
struct SynthConfig {
  std::string task_id = "synthetic";
  MetricKind metric_kind = MetricKind::accuracy;
  int n_wi = 10;
  int n_do = 10;
  double base = 0.85;
  double wi_effect_scale = 0.02;
  double do_effect_scale = 0.02;
  double noise_scale = 0.01;
  double diverge_prob = 0.0;
  double diverge_value = 0.5;
  double curve_rate = 5.0;  // larger = earlier saturation
  std::vector<double> checkpoints = {0.1, 0.2, 0.3, 0.4, 0.5,
                                     0.6, 0.7, 0.8, 0.9, 1.0};
  std::int64_t master_seed = kDefaultMasterSeed;
};

// Deterministic in the config alone: each WI effect, DO effect and trial
// draws from its own substream of master_seed, so generation order (and
// thread count) cannot change the pool.
TrialPool generate_pool(const SynthConfig& config);

// Flat "key = value" file; '#' starts a comment. checkpoints is a comma
// list. Unknown keys are rejected.
SynthConfig load_synth_config(const std::string& path);
SynthConfig parse_synth_config(std::istream& in);

}  // namespace seedstop
