#include "finloc/creature.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "finloc/error.hpp"

namespace finloc {

namespace {

constexpr std::size_t kNoParent = std::numeric_limits<std::size_t>::max();

std::string at(std::size_t i) { return " at node " + std::to_string(i); }

// Walks a and b from the given nodes in lockstep.
bool same_from(const Creature& a, std::size_t ia, const Creature& b, std::size_t ib) {
  std::vector<std::pair<std::size_t, std::size_t>> stack{{ia, ib}};
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    const auto& nx = a.node(x);
    const auto& ny = b.node(y);
    if (nx.L != ny.L || nx.R != ny.R || nx.children.size() != ny.children.size()) return false;
    for (std::size_t c = 0; c < nx.children.size(); ++c) {
      if (a.node(nx.children[c]).label != b.node(ny.children[c]).label) return false;
      stack.emplace_back(nx.children[c], ny.children[c]);
    }
    if (nx.norm.has_value() != ny.norm.has_value()) return false;
    if (nx.norm && !norms_agree(*nx.norm, *ny.norm, a.child_labels(x))) return false;
  }
  return true;
}

// Appends the subtree of `src` at `from` to `out`, returning the new index.
std::size_t append_subtree(const Creature& src, std::size_t from, std::vector<CreatureNode>& out,
                           Nat label) {
  const std::size_t idx = out.size();
  out.push_back(src.node(from));
  out[idx].label = label;
  out[idx].children.clear();
  for (std::size_t c : src.node(from).children) {
    const std::size_t child = append_subtree(src, c, out, src.node(c).label);
    out[idx].children.push_back(child);
  }
  return idx;
}

}  // namespace

Creature::Creature(std::size_t k, std::vector<CreatureNode> nodes)
    : k_(k), nodes_(std::move(nodes)) {
  if (k_ == 0) fail(Errc::invalid_creature, "k must be positive");
  if (nodes_.empty()) fail(Errc::invalid_creature, "a creature needs a root");
  parents_.assign(nodes_.size(), kNoParent);
  std::vector<bool> seen(nodes_.size(), false);
  seen[0] = true;
  std::vector<std::size_t> order{0};
  for (std::size_t q = 0; q < order.size(); ++q) {
    const std::size_t v = order[q];
    for (std::size_t c : nodes_[v].children) {
      if (c >= nodes_.size() || seen[c]) fail(Errc::invalid_creature, "not a tree" + at(v));
      seen[c] = true;
      parents_[c] = v;
      order.push_back(c);
    }
  }
  if (order.size() != nodes_.size()) fail(Errc::invalid_creature, "unreachable nodes");

  for (std::size_t v = 0; v < nodes_.size(); ++v) {
    const auto& n = nodes_[v];
    const std::size_t c = n.children.size();
    if (c > 0 && c < k_) {
      fail(Errc::invalid_creature, "node with " + std::to_string(c) + " successors" + at(v));
    }
    if (n.L > n.R) fail(Errc::invalid_creature, "L > R" + at(v));
    if (c == 0 && n.L != n.R) fail(Errc::invalid_creature, "leaf with L != R" + at(v));
    if (n.norm.has_value() != (c > k_)) {
      fail(Errc::invalid_creature, "norms belong exactly to the wide nodes" + at(v));
    }
    std::vector<std::pair<Nat, Nat>> spans;
    for (std::size_t i = 0; i < c; ++i) {
      const auto& ch = nodes_[n.children[i]];
      if (i > 0 && nodes_[n.children[i - 1]].label >= ch.label) {
        fail(Errc::invalid_creature, "successor labels must increase" + at(v));
      }
      if (ch.L < n.L || ch.R > n.R) fail(Errc::invalid_creature, "child interval escapes" + at(v));
      if (c == k_ && ch.children.size() == k_) {
        fail(Errc::successive_k_ramification, "two successive k-ramifications" + at(v));
      }
      spans.emplace_back(ch.L, ch.R);
    }
    std::sort(spans.begin(), spans.end());
    for (std::size_t i = 1; i < spans.size(); ++i) {
      if (spans[i - 1].second >= spans[i].first) {
        fail(Errc::interval_overlap, "sibling intervals overlap" + at(v));
      }
    }
    if (n.norm) {
      if (validate_norm(*n.norm, child_labels(v))) {
        fail(Errc::norm_axiom_violation, "norm is not nice on the successors" + at(v));
      }
    }
  }
}

Creature Creature::leaf(std::size_t k, Nat point) {
  CreatureNode n;
  n.L = n.R = point;
  return Creature(k, {n});
}

NodeKind Creature::kind(std::size_t i) const {
  const std::size_t c = nodes_.at(i).children.size();
  if (c == 0) return NodeKind::leaf;
  return c == k_ ? NodeKind::k_split : NodeKind::wide;
}

std::vector<Nat> Creature::child_labels(std::size_t i) const {
  std::vector<Nat> out;
  for (std::size_t c : nodes_.at(i).children) out.push_back(nodes_[c].label);
  return out;
}

std::vector<Nat> Creature::path(std::size_t i) const {
  std::vector<Nat> out;
  for (std::size_t v = i; v != 0; v = parents_.at(v)) out.push_back(nodes_[v].label);
  std::reverse(out.begin(), out.end());
  return out;
}

Nat Creature::full_norm(std::size_t i) const {
  const auto& n = nodes_.at(i);
  if (!n.norm) fail(Errc::invalid_argument, "node " + std::to_string(i) + " has no norm");
  if (n.norm->is_log()) return n.norm->value_by_size(n.children.size());
  return n.norm->value(child_labels(i));
}

Nat Creature::norm_of(std::size_t i, std::span<const std::size_t> children) const {
  const auto& n = nodes_.at(i);
  if (!n.norm) fail(Errc::invalid_argument, "node " + std::to_string(i) + " has no norm");
  if (n.norm->is_log()) return n.norm->value_by_size(children.size());
  std::vector<Nat> labels;
  for (std::size_t c : children) labels.push_back(nodes_.at(c).label);
  std::sort(labels.begin(), labels.end());
  return n.norm->value(labels);
}

Creature Creature::cone(std::size_t i) const {
  std::vector<CreatureNode> out;
  append_subtree(*this, i, out, 0);
  return Creature(k_, std::move(out));
}

Nat weight(const Creature& t) {
  std::optional<Nat> w;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t.kind(i) == NodeKind::wide) {
      const Nat v = t.full_norm(i);
      w = w ? std::min(*w, v) : v;
    }
  }
  return w.value_or(0);
}

std::vector<Nat> contribution(const Creature& t) {
  std::vector<Nat> out;
  for (const auto& n : t.nodes()) {
    if (n.children.empty()) out.push_back(n.L);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool refines(const Creature& t0, const Creature& t1) {
  if (t0.k() != t1.k()) return false;
  std::vector<std::pair<std::size_t, std::size_t>> stack{{0, 0}};
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    const auto& n0 = t0.node(x);
    const auto& n1 = t1.node(y);
    if (n0.L != n1.L || n0.R != n1.R || t0.kind(x) != t1.kind(y)) return false;
    std::size_t j = 0;
    for (std::size_t c1 : n1.children) {
      const Nat lab = t1.node(c1).label;
      while (j < n0.children.size() && t0.node(n0.children[j]).label < lab) ++j;
      if (j == n0.children.size() || t0.node(n0.children[j]).label != lab) return false;
      stack.emplace_back(n0.children[j], c1);
    }
    if (n1.norm && !norms_agree(*n0.norm, *n1.norm, t1.child_labels(y))) return false;
  }
  return true;
}

bool same_creature(const Creature& a, const Creature& b) {
  return a.k() == b.k() && same_from(a, 0, b, 0);
}

Creature upper_half(const Creature& t) {
  const Nat h = weight(t) / 2;
  std::vector<CreatureNode> nodes(t.nodes().begin(), t.nodes().end());
  for (auto& n : nodes) {
    if (n.norm) n.norm = n.norm->shifted(h);
  }
  return Creature(t.k(), std::move(nodes));
}

std::optional<Creature> lower_shifts(const Creature& t, Nat h) {
  std::vector<CreatureNode> nodes(t.nodes().begin(), t.nodes().end());
  for (auto& n : nodes) {
    if (!n.norm) continue;
    if (n.norm->shift() < h) return std::nullopt;
    n.norm = n.norm->unshifted(h);
  }
  return Creature(t.k(), std::move(nodes));
}

Creature restrict_to(const Creature& t, const std::vector<bool>& keep) {
  if (keep.size() != t.size() || !keep[0]) {
    fail(Errc::invalid_argument, "keep mask must cover every node and keep the root");
  }
  std::vector<CreatureNode> out;
  std::vector<std::pair<std::size_t, std::size_t>> queue{{0, 0}};  // (old, new)
  out.push_back(t.node(0));
  out[0].children.clear();
  for (std::size_t q = 0; q < queue.size(); ++q) {
    auto [old_idx, new_idx] = queue[q];
    for (std::size_t c : t.node(old_idx).children) {
      if (!keep[c]) continue;
      const std::size_t ni = out.size();
      out.push_back(t.node(c));
      out.back().children.clear();
      out[new_idx].children.push_back(ni);
      queue.emplace_back(c, ni);
    }
  }
  return Creature(t.k(), std::move(out));
}

namespace {

std::vector<CreatureNode> combine(std::span<const Creature> parts) {
  if (parts.empty()) fail(Errc::too_few_parts, "no parts");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].k() != parts[0].k()) fail(Errc::invalid_argument, "parts disagree on k");
    if (i > 0 && parts[i - 1].root().R >= parts[i].root().L) {
      fail(Errc::interval_overlap, "part intervals must be disjoint and increasing");
    }
  }
  std::vector<CreatureNode> nodes(1);
  nodes[0].L = parts.front().root().L;
  nodes[0].R = parts.back().root().R;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const std::size_t child = append_subtree(parts[i], 0, nodes, i);
    nodes[0].children.push_back(child);
  }
  return nodes;
}

}  // namespace

Creature build_S_H(std::span<const Creature> parts, const Norm& H) {
  if (!parts.empty() && parts.size() <= parts[0].k()) {
    fail(Errc::too_few_parts, "S_H needs more than k parts");
  }
  auto nodes = combine(parts);
  nodes[0].norm = H;
  return Creature(parts[0].k(), std::move(nodes));
}

Creature glue_S(std::span<const Creature> parts) {
  if (parts.empty() || parts.size() != parts[0].k()) {
    fail(Errc::too_few_parts, "gluing takes exactly k parts");
  }
  for (const auto& p : parts) {
    if (p.kind(0) == NodeKind::k_split) {
      fail(Errc::successive_k_ramification, "a glued part has a k-splitting root");
    }
  }
  return Creature(parts[0].k(), combine(parts));
}

std::optional<SigmaWitness> sigma_member(const Creature& t, std::span<const Creature> parts) {
  for (const auto& p : parts) {
    if (p.k() != t.k()) return std::nullopt;
  }
  SigmaWitness witness;
  // Shallowest match first: a node joins the antichain as soon as its cone
  // copies a part, otherwise every child must be covered.
  auto covered = [&](auto&& self, std::size_t v) -> bool {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (same_from(t, v, parts[i], 0)) {
        witness.emplace_back(v, i);
        return true;
      }
    }
    const auto& kids = t.node(v).children;
    if (kids.empty()) return false;
    for (std::size_t c : kids) {
      if (!self(self, c)) return false;
    }
    return true;
  };
  if (!covered(covered, 0)) return std::nullopt;
  return witness;
}

}  // namespace finloc
