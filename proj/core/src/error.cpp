#include "finloc/error.hpp"

namespace finloc {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "invalid-argument";
    case Errc::index_beyond_window: return "index-beyond-window";
    case Errc::too_few_elements: return "too-few-elements";
    case Errc::length_mismatch: return "length-mismatch";
    case Errc::overflow: return "overflow";
    case Errc::horizon_mismatch: return "horizon-mismatch";
    case Errc::too_few_points: return "too-few-points";
    case Errc::window_too_short: return "window-too-short";
    case Errc::not_increasing: return "not-increasing";
    case Errc::no_dominating_set: return "no-dominating-set";
    case Errc::exhaustive_bound: return "exhaustive-bound";
    case Errc::wrong_block_size: return "wrong-block-size";
    case Errc::position_out_of_range: return "position-out-of-range";
    case Errc::size_not_multiple: return "size-not-multiple";
    case Errc::infeasible: return "infeasible";
    case Errc::undecidable_prefix: return "undecidable-prefix";
    case Errc::g_undefined: return "g-undefined";
    case Errc::window_exhausted: return "window-exhausted";
    case Errc::g_not_subset: return "g-not-subset";
    case Errc::g_too_small: return "g-too-small";
    case Errc::density_insufficient: return "density-insufficient";
    case Errc::table_not_total: return "table-not-total";
    case Errc::weight_too_small: return "weight-too-small";
    case Errc::norm_axiom_violation: return "norm-axiom-violation";
    case Errc::interval_overlap: return "interval-overlap";
    case Errc::too_few_parts: return "too-few-parts";
    case Errc::successive_k_ramification: return "successive-k-ramification";
    case Errc::invalid_creature: return "invalid-creature";
    case Errc::b_sparsity: return "b-sparsity";
    case Errc::depth_exceeded: return "depth-exceeded";
    case Errc::zero_trials: return "zero-trials";
    case Errc::unknown_suite: return "unknown-suite";
    case Errc::malformed_input: return "malformed-input";
  }
  return "unknown";
}

}  // namespace finloc
