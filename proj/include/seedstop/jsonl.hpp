#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "seedstop/trial_model.hpp"

namespace seedstop {

// Renames the expected JSONL keys onto whatever a foreign training log
// uses, so third-party dumps can be ingested without rewriting them.
struct FieldMap {
  std::string task = "task";
  std::string metric = "metric";
  std::string wi_seed = "wi_seed";
  std::string do_seed = "do_seed";
  std::string evals = "evals";
  std::string frac = "frac";
  std::string value = "value";
  std::string meta = "meta";
};

// Reads a field map from a flat JSON object, e.g.
// {"wi_seed": "init_seed", "frac": "progress"}. Unlisted keys keep their
// defaults.
FieldMap load_field_map(const std::string& path);

// One JSON object per line; blank lines are skipped. Errors carry the
// 1-based line number.
std::vector<TrialRecord> read_trials_jsonl(std::istream& in,
                                           const FieldMap& fields = {});
std::vector<TrialRecord> read_trials_jsonl_file(const std::string& path,
                                                const FieldMap& fields = {});

// read + validate_pool in one step.
TrialPool load_pool_file(const std::string& path, const FieldMap& fields = {});

// Canonical field names, one trial per line, doubles written with enough
// digits to round-trip exactly.
void write_pool_jsonl(std::ostream& out, const TrialPool& pool);
void write_pool_jsonl_file(const std::string& path, const TrialPool& pool);

}  // namespace seedstop
