#pragma once

// Slaloms and k-trees: the two classical devices for trapping a function.

#include <cstddef>
#include <set>
#include <span>
#include <vector>

#include "finloc/finsets.hpp"

namespace finloc {

/// Finite prefix of a slalom: cell n has exactly n+1 members.
class Slalom {
 public:
  explicit Slalom(std::vector<std::vector<Nat>> cells);

  std::size_t length() const noexcept { return cells_.size(); }
  const std::vector<Nat>& cell(std::size_t n) const { return cells_.at(n); }
  std::span<const std::vector<Nat>> cells() const noexcept { return cells_; }

 private:
  std::vector<std::vector<Nat>> cells_;  // each sorted
};

/// Finite prefix-closed tree of natural sequences, at most k successors per
/// node, k >= 2.
class KTree {
 public:
  using Node = std::vector<Nat>;

  KTree(std::size_t k, std::set<Node> nodes);

  std::size_t k() const noexcept { return k_; }
  const std::set<Node>& nodes() const noexcept { return nodes_; }
  bool contains(const Node& node) const { return nodes_.count(node) > 0; }
  /// Values s(n) over nodes s of length n+1.
  std::set<Nat> level_labels(std::size_t n) const;

 private:
  std::size_t k_;
  std::set<Node> nodes_;
};

/// f(n) ∈ S(n) for every n < |f|. Throws length-mismatch when |f| > L.
bool slalom_localizes(std::span<const Nat> f, const Slalom& s);

/// Every initial segment of f (including the empty one) is a node of T.
bool ktree_localizes(std::span<const Nat> f, const KTree& t);

/// Slalom of the given length whose cell n holds the level-n labels of T,
/// padded with the smallest unused naturals. Throws overflow when a level
/// carries more than n+1 labels.
Slalom ktree_to_slalom_cover(const KTree& t, std::size_t depth);

}  // namespace finloc
