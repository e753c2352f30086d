#pragma once

// Seeded random instances. Everything returned here passes its validator.

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "finloc/creature.hpp"
#include "finloc/derivation.hpp"
#include "finloc/finsets.hpp"
#include "finloc/pair_poset.hpp"
#include "finloc/relations.hpp"

namespace finloc {

using Rng = std::mt19937_64;

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi);  // inclusive
bool coin(Rng& rng, double p);

/// Each point of [0, horizon) independently with probability `density`.
WSet random_wset(Rng& rng, Nat horizon, double density);
/// Exactly `count` points of [0, horizon).
WSet random_wset_count(Rng& rng, Nat horizon, std::size_t count);
/// Covering interval partition from 0 with block sizes in [min_size, max_size].
BlockFamily random_interval_partition(Rng& rng, std::size_t blocks, std::size_t min_size,
                                      std::size_t max_size);
/// floor(log2 of a weight sum), possibly capped or combined with a second
/// such norm; always nice on the full base.
Norm random_table_norm(Rng& rng, std::span<const Nat> base);
FiniteRelationInstance random_relinstance(Rng& rng, std::size_t left, std::size_t right);

struct CreatureSpec {
  std::size_t k = 2;
  std::size_t depth = 2;
  std::size_t max_table_children = 6;  // wide nodes with table norms
  double log_probability = 0.0;        // chance a wide node gets a log norm
  std::size_t max_log_children = 32;
  double leaf_probability = 0.25;
};

/// Leaves are placed from `start` on with small random gaps.
Creature random_creature(Rng& rng, const CreatureSpec& spec, Nat start);
/// A random refinement: wide nodes drop some children while keeping more
/// than k with positive norm.
Creature random_refinement(Rng& rng, const Creature& t);

/// Creatures placed one after another above w.
ConditionFragment random_fragment(Rng& rng, const CreatureSpec& spec, std::size_t count,
                                  std::size_t w_size);

struct CertifiedExtension {
  ConditionFragment q;
  FragmentHints hints;
};

/// q >= p built from random Sigma* steps, with the certificate.
CertifiedExtension random_extension(Rng& rng, const ConditionFragment& p);

PairCondition random_pair_condition(Rng& rng, Nat range, std::size_t families);
/// p' >= p built by growing u above max(u) and adding families.
PairCondition random_pair_extension(Rng& rng, const PairCondition& p, Nat range);

}  // namespace finloc
