#include "finloc/randomname.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "finloc/error.hpp"

namespace finloc {

std::vector<Nat> l_sequence(std::size_t depth) {
  if (depth > kMaxNameDepth) {
    fail(Errc::depth_exceeded, "depth " + std::to_string(depth) + " exceeds " +
                                   std::to_string(kMaxNameDepth));
  }
  std::vector<Nat> l{0};
  for (std::size_t k = 0; k < depth; ++k) l.push_back(l.back() + (Nat{1} << (k * k)));
  return l;
}

NameModel::NameModel(std::size_t d) : depth(d), l(l_sequence(d)) {}

std::size_t NameModel::block_of(Nat x) const {
  if (x >= horizon()) {
    fail(Errc::depth_exceeded, "point " + std::to_string(x) + " lies beyond the modelled blocks");
  }
  return static_cast<std::size_t>(std::upper_bound(l.begin(), l.end(), x) - l.begin()) - 1;
}

Rational pow2(std::int64_t e) {
  boost::multiprecision::cpp_int p = 1;
  p <<= static_cast<unsigned>(e < 0 ? -e : e);
  return e < 0 ? Rational(1, p) : Rational(p);
}

Rational empty_meet_probability(std::span<const Nat> k, const NameModel& model) {
  std::vector<std::size_t> blocks;
  for (Nat x : k) blocks.push_back(model.block_of(x));
  std::sort(blocks.begin(), blocks.end());
  if (std::adjacent_find(blocks.begin(), blocks.end()) != blocks.end()) return Rational(0);
  std::int64_t e = 0;
  for (std::size_t b : blocks) e -= static_cast<std::int64_t>(b * b);
  return pow2(e);
}

Rational tail_bound(std::size_t m) {
  // first term 2^-(2m+1), ratio 1/4
  const Rational first = pow2(-static_cast<std::int64_t>(2 * m + 1));
  return first / (Rational(1) - Rational(1, 4));
}

Rational partial_tail_sum(std::size_t m, std::size_t r_max) {
  Rational s = 0;
  for (std::size_t r = m; r <= r_max; ++r) {
    s += pow2(static_cast<std::int64_t>(r * r)) * pow2(-static_cast<std::int64_t>((r + 1) * (r + 1)));
  }
  return s;
}

FailureBound localization_failure_bound(const BlockFamily& family, std::size_t m,
                                        const NameModel& model) {
  if (m >= model.l.size()) fail(Errc::depth_exceeded, "m beyond the modelled blocks");
  FailureBound out;
  out.tail = tail_bound(m);
  for (const auto& k : family.blocks()) {
    if (k.size() < 2) fail(Errc::wrong_block_size, "blocks need at least two points");
    if (k.back() >= model.horizon()) fail(Errc::depth_exceeded, "block beyond the modelled depth");
    if (k.front() >= model.l[m]) out.value += empty_meet_probability(k, model);
  }
  out.within = out.value <= out.tail;
  return out;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  std::uint64_t z = seed + (index + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

std::vector<Nat> sample_missing(const NameModel& model, std::mt19937_64& rng) {
  std::vector<Nat> missing(model.depth);
  for (std::size_t k = 0; k < model.depth; ++k) {
    std::uniform_int_distribution<Nat> pick(model.l[k], model.l[k + 1] - 1);
    missing[k] = pick(rng);
  }
  return missing;
}

}  // namespace

WSet sample_name(const NameModel& model, std::uint64_t seed) {
  if (model.horizon() > kMaxSampleHorizon) {
    fail(Errc::depth_exceeded, "sample horizon too large to materialize");
  }
  std::mt19937_64 rng(derive_seed(seed, 0));
  const auto missing = sample_missing(model, rng);
  std::vector<Nat> pts;
  pts.reserve(model.horizon());
  std::size_t k = 0;
  for (Nat x = 0; x < model.horizon(); ++x) {
    if (k < missing.size() && missing[k] == x) {
      ++k;
      continue;
    }
    pts.push_back(x);
  }
  return WSet(model.horizon(), std::move(pts));
}

MonteCarloRate mc_localization_rate(const BlockFamily& family, std::size_t m,
                                    const NameModel& model, std::uint64_t trials,
                                    std::uint64_t seed) {
  if (trials == 0) fail(Errc::zero_trials, "at least one trial is needed");
  if (m >= model.l.size()) fail(Errc::depth_exceeded, "m beyond the modelled blocks");
  // blocks that count, and for each of their points the blocks containing it
  std::vector<std::vector<std::pair<Nat, std::size_t>>> watched;
  std::vector<std::pair<Nat, std::size_t>> by_point;  // (point, watched index)
  for (const auto& k : family.blocks()) {
    if (k.front() < model.l[m]) continue;
    std::vector<std::pair<Nat, std::size_t>> pts;
    for (Nat x : k) {
      pts.emplace_back(x, model.block_of(x));
      by_point.emplace_back(x, watched.size());
    }
    watched.push_back(std::move(pts));
  }
  std::sort(by_point.begin(), by_point.end());
  MonteCarloRate out;
  out.trials = trials;
  for (std::uint64_t i = 0; i < trials; ++i) {
    std::mt19937_64 rng(derive_seed(seed, i));
    const auto missing = sample_missing(model, rng);
    // a whole block is missing only if it contains a missing point
    bool hit = false;
    for (Nat x : missing) {
      auto it = std::lower_bound(by_point.begin(), by_point.end(), std::make_pair(x, std::size_t{0}));
      for (; !hit && it != by_point.end() && it->first == x; ++it) {
        const auto& pts = watched[it->second];
        hit = std::all_of(pts.begin(), pts.end(),
                          [&](const auto& pb) { return missing[pb.second] == pb.first; });
      }
      if (hit) break;
    }
    out.failures += hit ? 1 : 0;
  }
  out.rate = static_cast<double>(out.failures) / static_cast<double>(trials);
  out.radius = 3.0 * std::sqrt(out.rate * (1.0 - out.rate) / static_cast<double>(trials));
  return out;
}

}  // namespace finloc
