#pragma once

// Witness-building pipelines: the branch-complement diagnostic, the
// partition <-> escaping-function translations, the meagerness partition
// builder, and the S_+^phi pipeline.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "finloc/finsets.hpp"

namespace finloc {

/// Length-then-lexicographic code of a finite 0/1 sequence:
/// () -> 0, (0) -> 1, (1) -> 2, (0,0) -> 3, ...
Nat code_of(std::span<const std::uint8_t> bits);
std::vector<std::uint8_t> decode(Nat code);
/// Length of the sequence coded by `code`.
std::size_t coded_length(Nat code);

/// A finite prefix of a point of Cantor space.
struct BranchPrefix {
  std::vector<std::uint8_t> bits;

  /// Whether the coded sequence is an initial segment of the branch. Throws
  /// undecidable-prefix when the sequence is longer than the known prefix.
  bool is_initial_segment(Nat code) const;
};

/// Codes below the horizon of sequences that are not initial segments of x.
WSet branch_complement(const BranchPrefix& x, Nat horizon);

struct LematTrace {
  std::vector<std::size_t> u;  // per block: max node length
  std::vector<std::size_t> d;  // per block: min node length
  std::vector<std::size_t> selected;           // n_0 < n_1 < ... with u(n_l) < d(n_{l+1})
  std::vector<std::vector<Nat>> restrictions;  // codes of {s | d(n_l) : s in K_{n_l}}
};

struct LematResult {
  std::optional<std::size_t> witness;  // least n with |K_n \ chain(x)| >= k+1
  std::optional<LematTrace> trace;     // present when no witness exists
};

LematResult lemat_witness(const BranchPrefix& x, const BlockFamily& family, std::size_t k);

/// g(min K_n) = 1 + max K_n, 0 elsewhere, on [0, max+1).
std::vector<Nat> partition_to_escaping_g(const BlockFamily& family);

/// An increasing f' with f(f'(n)) + 1 < f'(n+1): f'(0) = 0,
/// f'(n+1) = f(f'(n)) + 2. Stops where f is undefined.
std::vector<Nat> sparse_range_function(std::span<const Nat> f, std::size_t length);

/// k_0 = 0, k_{n+1} = k + 1 + k_n + g(k_n); `length` blocks.
IntervalPartition g_to_interval_partition(std::span<const Nat> g, std::size_t k,
                                          std::size_t length);

/// f(n) = min{m > n : |X ∩ [n, m)| > 2k} for n < domain.
std::vector<Nat> crowding_function(const WSet& x, std::size_t k, std::size_t domain);

struct MeabouResult {
  BlockFamily family;
  /// Blocks of the result that are g-blocks disjoint from X.
  std::vector<std::size_t> disjoint_blocks;
};

/// Keeps each g(n) as a block and pairs the leftovers K_n \ g(n) greedily in
/// increasing order across block boundaries (an odd last element joins the
/// last pair).
MeabouResult meabou_partition(const WSet& x, const BlockFamily& family,
                              const std::vector<std::vector<Nat>>& g);

using FiniteSetMap = std::map<Nat, std::vector<Nat>>;

struct SPlusPhiTrace {
  WSet x0;
  WSet x1;
  FiniteSetMap targets;  // f on X_1: the X-part of each rich Y_0 gap
  WSet y1;
  WSet y;
  std::vector<Nat> matched;  // points of X_1 where the oracle equals f
};

/// Stages X_0, X_1 and f only; used to build a perfect oracle.
SPlusPhiTrace s_plus_phi_targets(const WSet& x, std::span<const Nat> phi, const WSet& y0);

/// Full pipeline with the oracle g (keyed by points of Y_0).
SPlusPhiTrace s_plus_phi_pipeline(const WSet& x, std::span<const Nat> phi, const WSet& y0,
                                  const FiniteSetMap& g);

}  // namespace finloc
