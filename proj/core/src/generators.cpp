#include "finloc/generators.hpp"

#include <algorithm>
#include <numeric>

#include "finloc/error.hpp"

namespace finloc {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

WSet random_wset(Rng& rng, Nat horizon, double density) {
  std::vector<Nat> pts;
  for (Nat x = 0; x < horizon; ++x) {
    if (coin(rng, density)) pts.push_back(x);
  }
  return WSet(horizon, std::move(pts));
}

WSet random_wset_count(Rng& rng, Nat horizon, std::size_t count) {
  if (count > horizon) fail(Errc::infeasible, "more points requested than the window holds");
  std::vector<Nat> all(horizon);
  std::iota(all.begin(), all.end(), Nat{0});
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(count);
  return WSet::from_unsorted(horizon, std::move(all));
}

BlockFamily random_interval_partition(Rng& rng, std::size_t blocks, std::size_t min_size,
                                      std::size_t max_size) {
  if (min_size == 0 || min_size > max_size) fail(Errc::infeasible, "bad block size range");
  std::vector<Nat> cuts{0};
  for (std::size_t i = 0; i < blocks; ++i) cuts.push_back(cuts.back() + uniform(rng, min_size, max_size));
  return IntervalPartition(std::move(cuts)).to_family();
}

namespace {

std::vector<Nat> log_weight_values(Rng& rng, std::size_t n) {
  std::vector<Nat> w(n);
  Nat total = 0;
  for (auto& x : w) {
    x = coin(rng, 0.15) ? 0 : uniform(rng, 1, 3);
    total += x;
  }
  if (total < 2) w[0] = 2;
  std::vector<Nat> values(std::size_t{1} << n);
  for (std::size_t m = 0; m < values.size(); ++m) {
    Nat s = 0;
    for (std::size_t i = 0; i < n; ++i) s += (m >> i & 1U) ? w[i] : 0;
    values[m] = floor_log2(s);
  }
  return values;
}

}  // namespace

Norm random_table_norm(Rng& rng, std::span<const Nat> base) {
  auto values = log_weight_values(rng, base.size());
  if (coin(rng, 0.3)) {
    const Nat cap = uniform(rng, 1, std::max<Nat>(1, values.back()));
    for (auto& v : values) v = std::min(v, cap);
  } else if (coin(rng, 0.25)) {
    const auto other = log_weight_values(rng, base.size());
    for (std::size_t m = 0; m < values.size(); ++m) values[m] = std::max(values[m], other[m]);
  }
  return Norm::table(std::vector<Nat>(base.begin(), base.end()), std::move(values));
}

FiniteRelationInstance random_relinstance(Rng& rng, std::size_t left, std::size_t right) {
  std::vector<std::vector<bool>> t(left, std::vector<bool>(right));
  for (auto& row : t) {
    for (std::size_t j = 0; j < right; ++j) row[j] = coin(rng, 0.5);
  }
  return FiniteRelationInstance::from_table(std::move(t));
}

namespace {

class CreatureGen {
 public:
  CreatureGen(Rng& rng, const CreatureSpec& spec, Nat start) : rng_(rng), spec_(spec), pos_(start) {}

  Creature run() {
    node(spec_.depth, false, 0);
    return Creature(spec_.k, std::move(nodes_));
  }

 private:
  std::size_t node(std::size_t depth, bool parent_k, Nat label) {
    const std::size_t idx = nodes_.size();
    nodes_.emplace_back();
    nodes_[idx].label = label;
    enum { leaf, ksplit, wide } kind = wide;
    if (depth == 0 || (idx > 0 && coin(rng_, spec_.leaf_probability))) {
      kind = leaf;
    } else if (!parent_k && coin(rng_, 0.35)) {
      kind = ksplit;
    }
    if (kind == leaf) {
      nodes_[idx].L = nodes_[idx].R = pos_;
      pos_ += uniform(rng_, 1, 3);
      return idx;
    }
    const bool log = kind == wide && coin(rng_, spec_.log_probability);
    std::size_t count = spec_.k;
    if (kind == wide) {
      count = uniform(rng_, spec_.k + 1,
                      std::max(spec_.k + 1, log ? spec_.max_log_children : spec_.max_table_children));
    }
    Nat lab = uniform(rng_, 0, 2);
    std::vector<Nat> labels;
    for (std::size_t i = 0; i < count; ++i) {
      const std::size_t c = node(depth - 1, kind == ksplit, lab);
      nodes_[idx].children.push_back(c);
      labels.push_back(lab);
      lab += uniform(rng_, 1, 3);
    }
    nodes_[idx].L = nodes_[nodes_[idx].children.front()].L;
    nodes_[idx].R = nodes_[nodes_[idx].children.back()].R;
    if (kind == wide) nodes_[idx].norm = log ? Norm::log() : random_table_norm(rng_, labels);
    return idx;
  }

  Rng& rng_;
  const CreatureSpec& spec_;
  Nat pos_;
  std::vector<CreatureNode> nodes_;
};

}  // namespace

Creature random_creature(Rng& rng, const CreatureSpec& spec, Nat start) {
  return CreatureGen(rng, spec, start).run();
}

Creature random_refinement(Rng& rng, const Creature& t) {
  std::vector<bool> keep(t.size(), false);
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    keep[v] = true;
    std::vector<std::size_t> kids = t.node(v).children;
    if (t.kind(v) == NodeKind::wide) {
      for (int attempt = 0; attempt < 10; ++attempt) {
        std::vector<std::size_t> pick = kids;
        std::shuffle(pick.begin(), pick.end(), rng);
        pick.resize(uniform(rng, t.k() + 1, kids.size()));
        std::sort(pick.begin(), pick.end());
        if (t.norm_of(v, pick) >= 1) {
          kids = pick;
          break;
        }
      }
    }
    for (std::size_t c : kids) stack.push_back(c);
  }
  return restrict_to(t, keep);
}

ConditionFragment random_fragment(Rng& rng, const CreatureSpec& spec, std::size_t count,
                                  std::size_t w_size) {
  ConditionFragment f;
  const auto w = random_wset_count(rng, 10, std::min<std::size_t>(w_size, 10));
  f.w.assign(w.elements().begin(), w.elements().end());
  Nat start = 12;
  for (std::size_t i = 0; i < count; ++i) {
    f.creatures.push_back(random_creature(rng, spec, start));
    start = f.creatures.back().root().R + uniform(rng, 1, 3);
  }
  return f;
}

namespace {

// A random Sigma* step on a single part: identity, upper half, refinement,
// or upper half followed by refinement.
std::pair<Creature, Derivation> transform_one(Rng& rng, const Creature& t, std::size_t index) {
  Derivation d = Derivation::of_part(index);
  switch (uniform(rng, 0, 3)) {
    case 0:
      return {t, d};
    case 1:
      return {upper_half(t), Derivation::upper_half_of(d)};
    case 2: {
      auto r = random_refinement(rng, t);
      return {r, Derivation::refine_of(d, r)};
    }
    default: {
      auto u = upper_half(t);
      auto r = random_refinement(rng, u);
      return {r, Derivation::refine_of(Derivation::upper_half_of(d), r)};
    }
  }
}

}  // namespace

CertifiedExtension random_extension(Rng& rng, const ConditionFragment& p) {
  const std::size_t m = p.creatures.size();
  if (m == 0) fail(Errc::infeasible, "cannot extend an empty fragment");
  const std::size_t k = p.creatures[0].k();
  CertifiedExtension out;
  const std::size_t n0 = uniform(rng, 0, std::min<std::size_t>(2, m - 1));
  out.q.w = p.w;
  for (std::size_t i = 0; i < n0; ++i) {
    for (Nat x : contribution(p.creatures[i])) {
      if (coin(rng, 0.3)) out.q.w.push_back(x);
    }
  }
  std::sort(out.q.w.begin(), out.q.w.end());
  out.q.w.erase(std::unique(out.q.w.begin(), out.q.w.end()), out.q.w.end());
  out.hints.cuts.push_back(n0);

  std::size_t i = n0;
  while (i < m) {
    if (!out.q.creatures.empty() && coin(rng, 0.1)) break;  // drop the tail
    const std::size_t op = uniform(rng, 0, 2);
    std::size_t g = 1;
    if (op == 1 && i + k + 1 <= m) g = k + 1;
    if (op == 2 && i + k <= m) {
      bool ok = true;
      for (std::size_t j = i; j < i + k; ++j) ok = ok && p.creatures[j].kind(0) != NodeKind::k_split;
      if (ok) g = k;
    }
    if (g == 1) {
      auto [c, d] = transform_one(rng, p.creatures[i], 0);
      out.q.creatures.push_back(std::move(c));
      out.hints.derivations.push_back(std::move(d));
    } else {
      std::vector<Creature> parts;
      std::vector<Derivation> ds;
      for (std::size_t j = 0; j < g; ++j) {
        auto [c, d] = transform_one(rng, p.creatures[i + j], j);
        parts.push_back(std::move(c));
        ds.push_back(std::move(d));
      }
      Creature built = [&] {
        if (g == k) return glue_S(parts);
        std::vector<Nat> labels(g);
        std::iota(labels.begin(), labels.end(), Nat{0});
        const Norm h = g <= 8 && coin(rng, 0.5) ? random_table_norm(rng, labels) : Norm::log();
        return build_S_H(parts, h);
      }();
      out.q.creatures.push_back(built);
      out.hints.derivations.push_back(Derivation::build_of(std::move(ds), built));
    }
    i += g;
    out.hints.cuts.push_back(i);
  }
  return out;
}

PairCondition random_pair_condition(Rng& rng, Nat range, std::size_t families) {
  PairCondition p;
  const auto u = random_wset(rng, std::max<Nat>(1, range / 2), 0.3);
  p.u.assign(u.elements().begin(), u.elements().end());
  for (std::size_t f = 0; f < families; ++f) {
    std::vector<Nat> pts(range);
    std::iota(pts.begin(), pts.end(), Nat{0});
    std::shuffle(pts.begin(), pts.end(), rng);
    PairFamily fam;
    const std::size_t pairs = std::min<std::size_t>(uniform(rng, 1, 4), range / 2);
    for (std::size_t i = 0; i < pairs; ++i) {
      fam.push_back({std::min(pts[2 * i], pts[2 * i + 1]), std::max(pts[2 * i], pts[2 * i + 1])});
    }
    std::sort(fam.begin(), fam.end());
    p.kk.insert(std::move(fam));
  }
  return p;
}

PairCondition random_pair_extension(Rng& rng, const PairCondition& p, Nat range) {
  PairCondition q = p;
  const Nat lo = p.u.empty() ? 0 : p.u.back() + 1;
  auto completes = [&](const std::vector<Nat>& u) {
    auto in = [&](const std::vector<Nat>& s, Nat x) { return std::binary_search(s.begin(), s.end(), x); };
    for (const auto& f : p.kk) {
      for (const auto& kp : f) {
        if (in(u, kp[0]) && in(u, kp[1]) && !(in(p.u, kp[0]) && in(p.u, kp[1]))) return true;
      }
    }
    return false;
  };
  for (Nat x = lo; x < range; ++x) {
    if (!coin(rng, 0.3)) continue;
    auto trial = q.u;
    trial.push_back(x);
    if (!completes(trial)) q.u = std::move(trial);
  }
  if (coin(rng, 0.7)) {
    auto extra = random_pair_condition(rng, range, 1);
    q.kk.insert(extra.kk.begin(), extra.kk.end());
  }
  return q;
}

}  // namespace finloc
