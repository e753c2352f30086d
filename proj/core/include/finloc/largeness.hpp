#pragma once

// (l,k)-largeness against finite family universes, and the finite kernels
// of the transfer lemmas between largeness parameters.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "finloc/finsets.hpp"

namespace finloc {

/// Finite stand-in for "every ground-model sequence of disjoint blocks".
struct FamilyUniverse {
  std::vector<BlockFamily> families;
  std::string label;
};

struct LargenessVerdict {
  bool large = true;
  /// (family index, block index) of the first offending block.
  std::optional<std::pair<std::size_t, std::size_t>> counterexample;
};

/// X meets every block of index >= tail_start of every family in more than k
/// points. Families must consist of l-element blocks, k < l.
LargenessVerdict is_lk_large(const WSet& x, const FamilyUniverse& universe, std::size_t l,
                             std::size_t k, std::size_t tail_start);

/// Block n of the result is the A-indexed part of block n (increasing
/// enumeration of the block).
BlockFamily subset_family(const BlockFamily& family, std::span<const std::size_t> positions);

/// Block n of the result is the union of blocks ln .. ln+l-1; an incomplete
/// trailing group is dropped.
BlockFamily concat_family(const BlockFamily& family, std::size_t l);

/// Brute-force check of the counting equivalence
///   (for all l-subsets A of positions: |K^A ∩ X| > k)  <=>  |K \ X| < l-k
/// for |K| = l*m. Returns whether the equivalence holds.
bool transfer_counting_check(std::span<const Nat> block, const WSet& x, std::size_t l,
                             std::size_t k);

/// Greedy split into consecutive pairs, the last piece a triple when |K| is
/// odd. Requires at least `min_pieces` pieces.
std::vector<std::vector<Nat>> split_into_2_3(std::span<const Nat> block, std::size_t min_pieces);

/// Indices of the blocks meeting X, as a window over [0, |blocks|).
WSet derived_Y(const BlockFamily& family, const WSet& x);

enum class FLargeOutcome { small_block, meets_often, neither };

struct FLargeVerdict {
  FLargeOutcome outcome = FLargeOutcome::neither;
  /// First n with |K_n| < f(n)+2.
  std::optional<std::size_t> small_block;
  /// n >= tail_start with |K_n ∩ X| > f(n).
  std::vector<std::size_t> witnesses;
};

FLargeVerdict f_large_check(const WSet& x, const BlockFamily& family, std::span<const Nat> f,
                            std::size_t tail_start);

}  // namespace finloc
