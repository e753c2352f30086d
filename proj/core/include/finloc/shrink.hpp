#pragma once

// Norm-preserving shrinking of creatures against a set B, so that no k+1
// consecutive B-gaps each receive two contribution points.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "finloc/creature.hpp"
#include "finloc/derivation.hpp"
#include "finloc/finsets.hpp"

namespace finloc {

/// First n >= from_gap such that the gaps [mu_B(n+i), mu_B(n+i+1)), i <= k,
/// all hold at least two of the points. Only runs of gaps inside B's window
/// are inspected.
std::optional<std::size_t> gap_run_violation(std::span<const Nat> points, const WSet& b,
                                             std::size_t k, std::size_t from_gap = 0);

/// t' >= t with ||t'|| >= ||t|| - 14 and the gap property for cont(t').
/// Requires ||t|| >= 15, mu_B(0) <= L(root) and two points of B above R(root).
Creature claim7_shrink(const Creature& t, const WSet& b);

struct Claim7Check {
  bool refinement = false;
  bool weight_bound = false;
  bool gap_sparse = false;
  bool ok() const noexcept { return refinement && weight_bound && gap_sparse; }
};

/// Independent scan of the three output properties.
Claim7Check check_claim7(const Creature& t, const Creature& shrunk, const WSet& b);

/// Applies claim7_shrink to every creature. Requires weights above 15 and at
/// least three points of B strictly between consecutive creature spans.
ConditionFragment shrink_condition(const ConditionFragment& p, const WSet& b);

/// For every n with mu_B(n) > max(w): every selection of a subset of each
/// contribution, together with w, leaves a gap among n..n+k with fewer than
/// two points. Selections are enumerated when the contributions hold at most
/// `exhaustive_limit` points in total; beyond that the full union is checked,
/// which dominates every selection.
bool selector_gap_check(std::span<const Nat> w, const std::vector<std::vector<Nat>>& conts,
                        const WSet& b, std::size_t k, std::size_t exhaustive_limit = 16);

}  // namespace finloc
