#pragma once

// Property suites over seeded random and exhaustive instances. Each property
// yields one result; reports are JSON lines closed by a summary object.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "finloc/json_io.hpp"

namespace finloc {

struct PropertyResult {
  std::string suite;
  std::string name;
  bool passed = true;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::optional<Json> counterexample;  // first failing instance, verbatim
  std::string note;
  double seconds = 0.0;
};

struct ExperimentConfig {
  std::uint64_t seed = 20240601;
  std::size_t window = 200;
  std::uint64_t cases = 0;  // 0: each property's default count
  std::size_t lmax = 4;
  std::uint64_t trials = 100000;
  std::size_t k = 2;
  std::size_t depth = 2;
  std::size_t count = 8;
  std::size_t min_size = 2;
  bool timings = false;
};

/// Throws malformed-input on out-of-range settings.
void check_config(const ExperimentConfig& cfg);

// Properties with their own scale parameters. Counts are minimums of
// nonvacuous instances; generators retry until they are reached.
PropertyResult prop_tail_bound(std::size_t m_max, std::size_t r_max);
PropertyResult prop_upper_half(std::uint64_t seed, std::uint64_t cases);
PropertyResult prop_claim7(std::uint64_t seed, std::uint64_t cases);
PropertyResult prop_transfer(std::size_t lmax, std::size_t max_lm);
PropertyResult prop_duality(std::size_t n);
PropertyResult prop_relation_chain(std::uint64_t seed, std::uint64_t cases, std::size_t window);
PropertyResult prop_escaping_g(std::uint64_t seed, std::uint64_t cases);
PropertyResult prop_interval_partition(std::uint64_t seed, std::uint64_t cases);
PropertyResult prop_meabou(std::uint64_t seed, std::uint64_t cases);
PropertyResult prop_s_plus_phi(std::uint64_t seed, std::uint64_t cases);
PropertyResult prop_lemat(std::uint64_t seed, std::uint64_t cases);
PropertyResult prop_mc_vs_exact(std::uint64_t seed, std::uint64_t trials);
PropertyResult prop_pair_poset(std::uint64_t seed, std::uint64_t cases);
PropertyResult prop_fragment_poset(std::uint64_t seed, std::uint64_t cases);
PropertyResult prop_refines_order(std::uint64_t seed, std::uint64_t cases);
PropertyResult prop_sigma_build(std::uint64_t seed, std::uint64_t cases);
PropertyResult prop_norm_quartering(std::uint64_t seed, std::uint64_t cases);
PropertyResult prop_shrink_condition(std::uint64_t seed, std::uint64_t cases);
PropertyResult prop_meet_probability(std::size_t depth);
PropertyResult prop_name_consistency(std::uint64_t seed, std::uint64_t cases);
PropertyResult prop_generated_valid(std::uint64_t seed, std::uint64_t cases);
PropertyResult prop_split_2_3(std::uint64_t seed, std::uint64_t cases);

inline constexpr const char* kSuites[] = {"relations",  "largeness", "constructions",
                                          "creatures",  "measure",   "invariants"};

/// Throws unknown-suite for other names.
std::vector<PropertyResult> run_suite(const std::string& name, const ExperimentConfig& cfg);

Json to_json(const PropertyResult& r, bool with_timing);
/// One line per property plus a summary line.
std::string report_jsonl(const std::vector<PropertyResult>& results, bool with_timing);
bool all_passed(const std::vector<PropertyResult>& results);

/// kind: wset, blockfamily, creature, fragment, relinstance.
Json gen_instance(const std::string& kind, const ExperimentConfig& cfg);

}  // namespace finloc
