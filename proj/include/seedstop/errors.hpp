#pragma once

#include <stdexcept>
#include <string>

namespace seedstop {

// Every failure mode the library can report. The CLI maps these 1:1 onto
// stable E_* strings, so the enum order can change but names must not.
enum class Errc {
  duplicate_seed_pair,
  missing_final_eval,
  non_monotone_fractions,
  mixed_metric_kinds,
  mixed_task_ids,
  out_of_range_value,
  no_checkpoint,
  incomplete_grid,
  empty_values,
  empty_pool,
  empty_input,
  length_mismatch,
  degenerate_axis,
  too_few_groups,
  too_few_samples,
  no_common_checkpoints,
  enumeration_too_large,
  budget_infeasible,
  perfect_baseline,
  invalid_config,
  invalid_argument,
  parse_error,
  io_error,
};

// Stable machine-readable code, e.g. "E_DUP_SEED_PAIR".
const char* error_code_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }
  const char* code_string() const noexcept { return error_code_string(code_); }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace seedstop
