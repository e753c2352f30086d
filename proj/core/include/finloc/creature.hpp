#pragma once

// Creatures: finite labelled trees whose wide nodes carry nice norms, with
// the calculus of weight, contribution, refinement, upper halves and
// building from parts.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "finloc/finsets.hpp"
#include "finloc/norm.hpp"

namespace finloc {

struct CreatureNode {
  Nat label = 0;  // last entry of the node's path; ignored for the root
  Nat L = 0;
  Nat R = 0;
  std::vector<std::size_t> children;  // arena indices, increasing label
  std::optional<Norm> norm;           // exactly on nodes with more than k children
};

enum class NodeKind { leaf, k_split, wide };

/// Immutable, validated creature. Node 0 is the root; every other node is
/// reachable from it exactly once.
class Creature {
 public:
  /// Validates every creature axiom; throws invalid-creature,
  /// successive-k-ramification, interval-overlap or norm-axiom-violation.
  Creature(std::size_t k, std::vector<CreatureNode> nodes);

  static Creature leaf(std::size_t k, Nat point);

  std::size_t k() const noexcept { return k_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  const CreatureNode& node(std::size_t i) const { return nodes_.at(i); }
  const CreatureNode& root() const { return nodes_.front(); }
  std::span<const CreatureNode> nodes() const noexcept { return nodes_; }
  std::size_t parent(std::size_t i) const { return parents_.at(i); }

  NodeKind kind(std::size_t i) const;
  std::vector<Nat> child_labels(std::size_t i) const;
  /// Labels from the root down to node i.
  std::vector<Nat> path(std::size_t i) const;
  /// Norm of the full successor set of a wide node.
  Nat full_norm(std::size_t i) const;
  /// Norm of a wide node on a subset of its children, given as arena indices.
  Nat norm_of(std::size_t i, std::span<const std::size_t> children) const;

  /// The subtree above node i as a creature of its own.
  Creature cone(std::size_t i) const;

 private:
  std::size_t k_ = 2;
  std::vector<CreatureNode> nodes_;
  std::vector<std::size_t> parents_;
};

Nat weight(const Creature& t);
/// Sorted leaf labels.
std::vector<Nat> contribution(const Creature& t);

/// Whether `t1` refines `t0` (t0 <= t1).
bool refines(const Creature& t0, const Creature& t1);
/// Same tree, labels, intervals and (functionally) the same norms.
bool same_creature(const Creature& a, const Creature& b);

Creature upper_half(const Creature& t);
/// The creature with norm shifts lowered by h everywhere; empty when some
/// wide node has a shift below h.
std::optional<Creature> lower_shifts(const Creature& t, Nat h);

/// Keeps the nodes flagged in `keep` (must be prefix closed, root kept).
Creature restrict_to(const Creature& t, const std::vector<bool>& keep);

/// Root with norm H over children labelled 0..n, the i-th child a copy of
/// parts[i]. Needs n >= k.
Creature build_S_H(std::span<const Creature> parts, const Norm& H);
/// Unnormed root with exactly k children.
Creature glue_S(std::span<const Creature> parts);

/// Antichain witness for membership in Sigma(parts): pairs of (node of t,
/// index of the part its cone copies).
using SigmaWitness = std::vector<std::pair<std::size_t, std::size_t>>;
std::optional<SigmaWitness> sigma_member(const Creature& t, std::span<const Creature> parts);

}  // namespace finloc
