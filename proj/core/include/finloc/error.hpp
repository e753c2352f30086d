#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace finloc {

enum class Errc {
  invalid_argument,
  index_beyond_window,
  too_few_elements,
  length_mismatch,
  overflow,
  horizon_mismatch,
  too_few_points,
  window_too_short,
  not_increasing,
  no_dominating_set,
  exhaustive_bound,
  wrong_block_size,
  position_out_of_range,
  size_not_multiple,
  infeasible,
  undecidable_prefix,
  g_undefined,
  window_exhausted,
  g_not_subset,
  g_too_small,
  density_insufficient,
  table_not_total,
  weight_too_small,
  norm_axiom_violation,
  interval_overlap,
  too_few_parts,
  successive_k_ramification,
  invalid_creature,
  b_sparsity,
  depth_exceeded,
  zero_trials,
  unknown_suite,
  malformed_input,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library carries a machine-readable code; the
/// CLI prints it next to the message.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace finloc
