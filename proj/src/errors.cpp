#include "seedstop/errors.hpp"

namespace seedstop {

const char* error_code_string(Errc code) {
  switch (code) {
    case Errc::duplicate_seed_pair:    return "E_DUP_SEED_PAIR";
    case Errc::missing_final_eval:     return "E_MISSING_FINAL_EVAL";
    case Errc::non_monotone_fractions: return "E_NON_MONOTONE_FRACTIONS";
    case Errc::mixed_metric_kinds:     return "E_MIXED_METRIC_KINDS";
    case Errc::mixed_task_ids:         return "E_MIXED_TASK_IDS";
    case Errc::out_of_range_value:     return "E_OUT_OF_RANGE_VALUE";
    case Errc::no_checkpoint:          return "E_NO_CHECKPOINT";
    case Errc::incomplete_grid:        return "E_INCOMPLETE_GRID";
    case Errc::empty_values:           return "E_EMPTY_VALUES";
    case Errc::empty_pool:             return "E_EMPTY_POOL";
    case Errc::empty_input:            return "E_EMPTY_INPUT";
    case Errc::length_mismatch:        return "E_LENGTH_MISMATCH";
    case Errc::degenerate_axis:        return "E_DEGENERATE_AXIS";
    case Errc::too_few_groups:         return "E_TOO_FEW_GROUPS";
    case Errc::too_few_samples:        return "E_TOO_FEW_SAMPLES";
    case Errc::no_common_checkpoints:  return "E_NO_COMMON_CHECKPOINTS";
    case Errc::enumeration_too_large:  return "E_ENUMERATION_TOO_LARGE";
    case Errc::budget_infeasible:      return "E_BUDGET_INFEASIBLE";
    case Errc::perfect_baseline:       return "E_PERFECT_BASELINE";
    case Errc::invalid_config:         return "E_INVALID_CONFIG";
    case Errc::invalid_argument:       return "E_INVALID_ARGUMENT";
    case Errc::parse_error:            return "E_PARSE";
    case Errc::io_error:               return "E_IO";
  }
  return "E_UNKNOWN";
}

}  // namespace seedstop
