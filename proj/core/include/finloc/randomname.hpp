#pragma once

// Exact and sampled measure arithmetic for a random name that misses exactly
// one point in each block [l_k, l_{k+1}), l_{k+1} = l_k + 2^(k^2).

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "finloc/finsets.hpp"

namespace finloc {

using Rational = boost::multiprecision::cpp_rational;

inline constexpr std::size_t kMaxNameDepth = 8;
inline constexpr Nat kMaxSampleHorizon = Nat{1} << 26;

/// l_0, ..., l_depth. Throws depth-exceeded above kMaxNameDepth.
std::vector<Nat> l_sequence(std::size_t depth);

/// Blocks [l_k, l_{k+1}) for k < depth, independent, one uniform missing
/// point each.
struct NameModel {
  std::size_t depth = 0;
  std::vector<Nat> l;  // l_0 .. l_depth

  explicit NameModel(std::size_t depth);
  Nat horizon() const noexcept { return l.back(); }
  /// Block index of x; throws depth-exceeded beyond the modelled blocks.
  std::size_t block_of(Nat x) const;
};

/// 2^e as an exact rational (e may be negative).
Rational pow2(std::int64_t e);

/// Probability that every point of K is missing.
Rational empty_meet_probability(std::span<const Nat> k, const NameModel& model);

/// sum_{r >= m} 2^-(2r+1) = (1/3) 2^(1-2m)
Rational tail_bound(std::size_t m);
/// sum_{r=m}^{R} 2^(r^2) 2^-((r+1)^2)
Rational partial_tail_sum(std::size_t m, std::size_t r_max);

struct FailureBound {
  Rational value;  // exact sum over blocks with min >= l_m
  Rational tail;   // tail_bound(m)
  bool within = false;
};

/// Requires blocks of size >= 2 inside the model.
FailureBound localization_failure_bound(const BlockFamily& family, std::size_t m,
                                        const NameModel& model);

/// Deterministic by seed; refuses horizons above kMaxSampleHorizon.
WSet sample_name(const NameModel& model, std::uint64_t seed);

struct MonteCarloRate {
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  double rate = 0.0;
  double radius = 0.0;  // 3 binomial standard deviations at the empirical rate
};

/// Fraction of sampled names missing some whole block K_n with min >= l_m.
/// Trial i uses its own seed derived from (seed, i).
MonteCarloRate mc_localization_rate(const BlockFamily& family, std::size_t m,
                                    const NameModel& model, std::uint64_t trials,
                                    std::uint64_t seed);

/// splitmix64 step, used to derive per-trial seeds.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept;

}  // namespace finloc
