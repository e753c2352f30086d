#include "finloc/localizers.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "finloc/error.hpp"

namespace finloc {

Slalom::Slalom(std::vector<std::vector<Nat>> cells) : cells_(std::move(cells)) {
  for (std::size_t n = 0; n < cells_.size(); ++n) {
    auto& c = cells_[n];
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    if (c.size() != n + 1) {
      fail(Errc::invalid_argument, "slalom cell " + std::to_string(n) + " must have " +
                                       std::to_string(n + 1) + " members");
    }
  }
}

KTree::KTree(std::size_t k, std::set<Node> nodes) : k_(k), nodes_(std::move(nodes)) {
  if (k_ < 2) fail(Errc::invalid_argument, "k-trees need k >= 2");
  if (nodes_.empty()) fail(Errc::invalid_argument, "k-tree must be nonempty");
  for (const auto& node : nodes_) {
    if (node.empty()) continue;
    Node parent(node.begin(), node.end() - 1);
    if (!nodes_.count(parent)) fail(Errc::invalid_argument, "k-tree is not prefix-closed");
  }
  // successors of a node are contiguous in lexicographic order only per
  // length, so count explicitly
  std::map<Node, std::size_t> fanout;
  for (const auto& node : nodes_) {
    if (node.empty()) continue;
    if (++fanout[Node(node.begin(), node.end() - 1)] > k_) {
      fail(Errc::invalid_argument, "k-tree node has more than k successors");
    }
  }
}

std::set<Nat> KTree::level_labels(std::size_t n) const {
  std::set<Nat> out;
  for (const auto& node : nodes_) {
    if (node.size() == n + 1) out.insert(node[n]);
  }
  return out;
}

bool slalom_localizes(std::span<const Nat> f, const Slalom& s) {
  if (f.size() > s.length()) {
    fail(Errc::length_mismatch, "function prefix longer than slalom");
  }
  for (std::size_t n = 0; n < f.size(); ++n) {
    const auto& c = s.cell(n);
    if (!std::binary_search(c.begin(), c.end(), f[n])) return false;
  }
  return true;
}

bool ktree_localizes(std::span<const Nat> f, const KTree& t) {
  KTree::Node prefix;
  if (!t.contains(prefix)) return false;
  for (Nat v : f) {
    prefix.push_back(v);
    if (!t.contains(prefix)) return false;
  }
  return true;
}

Slalom ktree_to_slalom_cover(const KTree& t, std::size_t depth) {
  std::vector<std::vector<Nat>> cells;
  for (std::size_t n = 0; n < depth; ++n) {
    auto labels = t.level_labels(n);
    if (labels.size() > n + 1) {
      fail(Errc::overflow, "level " + std::to_string(n) + " carries " +
                               std::to_string(labels.size()) + " labels > " +
                               std::to_string(n + 1));
    }
    for (Nat pad = 0; labels.size() < n + 1; ++pad) labels.insert(pad);
    cells.emplace_back(labels.begin(), labels.end());
  }
  return Slalom(std::move(cells));
}

}  // namespace finloc
