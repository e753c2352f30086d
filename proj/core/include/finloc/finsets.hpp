#pragma once

// Finite windows of infinite subsets of the naturals and of block families.
// Every object carries an explicit horizon N; all of its data lives in [0, N).

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace finloc {

using Nat = std::uint64_t;

struct Window {
  Nat horizon = 1;
  friend bool operator==(const Window&, const Window&) = default;
};

/// A window sample of an intended-infinite set: strictly increasing elements
/// below the horizon. Empty samples are legal.
class WSet {
 public:
  WSet() = default;
  WSet(Nat horizon, std::vector<Nat> elements);

  /// Sorts and deduplicates before validating.
  static WSet from_unsorted(Nat horizon, std::vector<Nat> elements);
  /// All naturals in [lo, hi), horizon `horizon`.
  static WSet interval(Nat lo, Nat hi, Nat horizon);

  Nat horizon() const noexcept { return window_.horizon; }
  Window window() const noexcept { return window_; }
  std::span<const Nat> elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }

  bool contains(Nat x) const;
  /// |X ∩ [lo, hi)|
  std::size_t count_in(Nat lo, Nat hi) const;

  friend bool operator==(const WSet&, const WSet&) = default;

 private:
  Window window_{};
  std::vector<Nat> elements_;
};

/// n-th smallest element of X (increasing enumeration). Throws
/// index-beyond-window when the window holds fewer than n+1 elements.
Nat mu(const WSet& x, std::size_t n);

/// Pairwise disjoint nonempty finite blocks, canonically ordered by minimum.
/// `covering` families additionally have a gap-free union starting at the
/// first block's minimum.
class BlockFamily {
 public:
  using Block = std::vector<Nat>;

  BlockFamily() = default;
  BlockFamily(Nat horizon, std::vector<Block> blocks, bool covering);

  Nat horizon() const noexcept { return window_.horizon; }
  bool covering() const noexcept { return covering_; }
  std::size_t size() const noexcept { return blocks_.size(); }
  bool empty() const noexcept { return blocks_.empty(); }
  const Block& block(std::size_t n) const { return blocks_.at(n); }
  std::span<const Block> blocks() const noexcept { return blocks_; }
  /// Largest element over all blocks, 0 for an empty family.
  Nat max_element() const noexcept;

  friend bool operator==(const BlockFamily&, const BlockFamily&) = default;

 private:
  Window window_{};
  std::vector<Block> blocks_;
  bool covering_ = false;
};

/// Cutpoints k_0 = 0 < k_1 < ... inducing blocks [k_n, k_{n+1}).
class IntervalPartition {
 public:
  explicit IntervalPartition(std::vector<Nat> cutpoints);

  std::span<const Nat> cutpoints() const noexcept { return cutpoints_; }
  std::size_t block_count() const noexcept { return cutpoints_.size() - 1; }
  /// The induced covering family; its horizon is the last cutpoint.
  BlockFamily to_family() const;

 private:
  std::vector<Nat> cutpoints_;
};

/// Every block has more than k elements.
bool in_P_k(const BlockFamily& family, std::size_t k);

/// Blocks [mu_X(n), mu_X(n+1)) for consecutive elements of X.
BlockFamily intervals_of(const WSet& x);

/// |block ∩ X|
std::size_t meet_count(std::span<const Nat> block, const WSet& x);

}  // namespace finloc
