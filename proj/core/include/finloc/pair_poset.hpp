#pragma once

// The poset of pairs (u, KK): a finite set u and finitely many families of
// disjoint 2-element sets.

#include <array>
#include <optional>
#include <set>
#include <vector>

#include "finloc/finsets.hpp"

namespace finloc {

using PairBlock = std::array<Nat, 2>;               // sorted, distinct
using PairFamily = std::vector<PairBlock>;          // sorted, pairwise disjoint

struct PairCondition {
  std::vector<Nat> u;        // sorted
  std::set<PairFamily> kk;
};

/// Throws invalid-argument unless u is sorted and every family consists of
/// sorted, pairwise disjoint pairs listed in increasing order.
void check_pair_condition(const PairCondition& p);

/// u1 ∩ (1 + max u0) = u0, KK0 ⊆ KK1, and K ∈ F ∈ KK0 with K ⊆ u1 gives
/// K ⊆ u0. max of the empty set is -1.
bool pair_leq(const PairCondition& p0, const PairCondition& p1);

/// (u, KK0 ∪ KK1) for conditions with the same u; empty otherwise.
std::optional<PairCondition> pair_join(const PairCondition& p0, const PairCondition& p1);

}  // namespace finloc
