#include "finloc/shrink.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "finloc/error.hpp"

namespace finloc {

std::optional<std::size_t> gap_run_violation(std::span<const Nat> points, const WSet& b,
                                             std::size_t k, std::size_t from_gap) {
  const auto bs = b.elements();
  if (bs.size() < k + 2) return std::nullopt;
  std::vector<std::size_t> count(bs.size() - 1, 0);
  for (Nat x : points) {
    auto it = std::upper_bound(bs.begin(), bs.end(), x);
    if (it == bs.begin() || it == bs.end()) continue;
    ++count[static_cast<std::size_t>(it - bs.begin()) - 1];
  }
  std::size_t run = 0;
  for (std::size_t j = from_gap; j < count.size(); ++j) {
    run = count[j] >= 2 ? run + 1 : 0;
    if (run == k + 1) return j - k;
  }
  return std::nullopt;
}

namespace {

using Signed = std::int64_t;

class Shrinker {
 public:
  Shrinker(const Creature& t, const WSet& b) : t_(t), b_(b.elements()), keep_(t.size(), false) {}

  Creature run() {
    shrink(0);
    return restrict_to(t_, keep_);
  }

 private:
  std::size_t gap_of(Nat x) const {
    return static_cast<std::size_t>(std::upper_bound(b_.begin(), b_.end(), x) - b_.begin()) - 1;
  }

  bool meets(std::size_t v, const std::vector<std::size_t>& set, Signed threshold) const {
    return set.size() > t_.k() && static_cast<Signed>(t_.norm_of(v, set)) >= threshold;
  }

  void keep_subtree(std::size_t v) {
    std::vector<std::size_t> stack{v};
    while (!stack.empty()) {
      const std::size_t x = stack.back();
      stack.pop_back();
      keep_[x] = true;
      for (std::size_t c : t_.node(x).children) stack.push_back(c);
    }
  }

  void shrink(std::size_t v) {
    keep_[v] = true;
    switch (t_.kind(v)) {
      case NodeKind::leaf:
        return;
      case NodeKind::k_split: {
        const auto& kids = t_.node(v).children;
        const bool leaves_only = std::all_of(kids.begin(), kids.end(), [&](std::size_t c) {
          return t_.kind(c) == NodeKind::leaf;
        });
        if (leaves_only) {
          keep_subtree(v);
        } else {
          k_root(v);
        }
        return;
      }
      case NodeKind::wide: {
        const auto n = static_cast<Signed>(t_.full_norm(v));
        wide_root(v, t_.node(v).children, n - 3, n - 7);
        return;
      }
    }
  }

  // Children inside one half-open gap of each parity, else every fourth of
  // the straddling children.
  void wide_root(std::size_t v, const std::vector<std::size_t>& cands, Signed alpha_min,
                 Signed beta_min) {
    std::vector<std::size_t> alpha[2], beta;
    for (std::size_t c : cands) {
      const auto& n = t_.node(c);
      const std::size_t g = gap_of(n.L);
      if (n.R < b_[g + 1]) {
        alpha[g % 2].push_back(c);
      } else {
        beta.push_back(c);
      }
    }
    for (auto& a : alpha) {
      if (meets(v, a, alpha_min)) {
        for (std::size_t c : a) keep_subtree(c);
        return;
      }
    }
    std::sort(beta.begin(), beta.end(),
              [&](std::size_t x, std::size_t y) { return t_.node(x).L < t_.node(y).L; });
    for (std::size_t r = 0; r < 4; ++r) {
      std::vector<std::size_t> quarter;
      for (std::size_t i = r; i < beta.size(); i += 4) quarter.push_back(beta[i]);
      if (meets(v, quarter, beta_min)) {
        for (std::size_t c : quarter) shrink(c);
        return;
      }
    }
    fail(Errc::norm_axiom_violation,
         "no qualifying subset at node " + std::to_string(v) + "; the norm is not nice");
  }

  void k_root(std::size_t v) {
    for (std::size_t c : t_.node(v).children) {
      keep_[c] = true;
      if (t_.kind(c) == NodeKind::leaf) continue;
      const auto& cn = t_.node(c);
      const auto n = static_cast<Signed>(t_.full_norm(c));

      // closed gap groups [mu_B(j), mu_B(j+1)]
      std::vector<std::pair<std::size_t, std::size_t>> member;  // (gap, child)
      for (std::size_t s : cn.children) {
        const auto& sn = t_.node(s);
        const std::size_t j = gap_of(sn.L);
        if (sn.R <= b_[j + 1]) member.emplace_back(j, s);
        if (sn.L == b_[j] && sn.R == b_[j] && j > 0) member.emplace_back(j - 1, s);
      }
      std::stable_sort(member.begin(), member.end(),
                       [](const auto& x, const auto& y) { return x.first < y.first; });
      bool done = false;
      for (std::size_t i = 0; i < member.size() && !done;) {
        std::size_t e = i;
        std::vector<std::size_t> group;
        while (e < member.size() && member[e].first == member[i].first) group.push_back(member[e++].second);
        std::sort(group.begin(), group.end());
        if (meets(c, group, n - 7)) {
          for (std::size_t s : group) keep_subtree(s);
          done = true;
        }
        i = e;
      }
      if (done) continue;

      // the core, separated from the rest by an empty gap on the left and a
      // gap holding at most one point on the right
      const auto a = static_cast<std::size_t>(std::lower_bound(b_.begin(), b_.end(), cn.L) - b_.begin());
      const auto z_end = static_cast<std::size_t>(std::upper_bound(b_.begin(), b_.end(), cn.R) - b_.begin());
      std::vector<std::size_t> core;
      if (z_end >= a + 3) {
        const Nat lo = b_[a + 1], hi = b_[z_end - 2];
        for (std::size_t s : cn.children) {
          if (t_.node(s).L >= lo && t_.node(s).R <= hi) core.push_back(s);
        }
      }
      const auto core_norm = core.empty() ? Signed{0} : static_cast<Signed>(t_.norm_of(c, core));
      wide_root(c, core, core_norm - 3, n - 14);
    }
  }

  const Creature& t_;
  std::span<const Nat> b_;
  std::vector<bool> keep_;
};

}  // namespace

Creature claim7_shrink(const Creature& t, const WSet& b) {
  const Nat w = weight(t);
  if (w < 15) fail(Errc::weight_too_small, "weight " + std::to_string(w) + " is below 15");
  const auto bs = b.elements();
  const auto above = static_cast<std::size_t>(
      bs.end() - std::upper_bound(bs.begin(), bs.end(), t.root().R));
  if (bs.empty() || bs.front() > t.root().L || above < 2) {
    fail(Errc::invalid_argument,
         "B must start at or below L(root) and have two points above R(root)");
  }
  return Shrinker(t, b).run();
}

Claim7Check check_claim7(const Creature& t, const Creature& shrunk, const WSet& b) {
  Claim7Check c;
  c.refinement = refines(t, shrunk);
  c.weight_bound = weight(shrunk) + 14 >= weight(t);
  c.gap_sparse = !gap_run_violation(contribution(shrunk), b, t.k()).has_value();
  return c;
}

ConditionFragment shrink_condition(const ConditionFragment& p, const WSet& b) {
  check_fragment(p);
  const auto bs = b.elements();
  for (std::size_t i = 0; i < p.creatures.size(); ++i) {
    const Nat w = weight(p.creatures[i]);
    if (w <= 15) {
      fail(Errc::weight_too_small, "creature " + std::to_string(i) + " has weight " +
                                       std::to_string(w) + ", not above 15");
    }
    if (i > 0) {
      const Nat lo = p.creatures[i - 1].root().R, hi = p.creatures[i].root().L;
      const auto between = std::lower_bound(bs.begin(), bs.end(), hi) -
                           std::upper_bound(bs.begin(), bs.end(), lo);
      if (between < 3) {
        fail(Errc::b_sparsity, "fewer than three points of B between creatures " +
                                   std::to_string(i - 1) + " and " + std::to_string(i));
      }
    }
  }
  ConditionFragment q{p.w, {}};
  for (const auto& t : p.creatures) q.creatures.push_back(claim7_shrink(t, b));
  return q;
}

bool selector_gap_check(std::span<const Nat> w, const std::vector<std::vector<Nat>>& conts,
                        const WSet& b, std::size_t k, std::size_t exhaustive_limit) {
  const auto bs = b.elements();
  std::size_t from = 0;
  if (!w.empty()) {
    from = static_cast<std::size_t>(std::upper_bound(bs.begin(), bs.end(), w.back()) - bs.begin());
  }
  std::vector<Nat> all(w.begin(), w.end());
  for (const auto& c : conts) all.insert(all.end(), c.begin(), c.end());
  const std::size_t total = all.size() - w.size();
  if (total > exhaustive_limit) {
    std::sort(all.begin(), all.end());
    return !gap_run_violation(all, b, k, from);
  }
  // a selection is a subset of the pooled contribution points
  std::vector<Nat> pool(all.begin() + static_cast<std::ptrdiff_t>(w.size()), all.end());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << total); ++mask) {
    std::vector<Nat> s(w.begin(), w.end());
    for (std::size_t i = 0; i < total; ++i) {
      if (mask >> i & 1U) s.push_back(pool[i]);
    }
    std::sort(s.begin(), s.end());
    if (gap_run_violation(s, b, k, from)) return false;
  }
  return true;
}

}  // namespace finloc
