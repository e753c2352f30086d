#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "finloc/creature.hpp"
#include "finloc/derivation.hpp"
#include "finloc/generators.hpp"
#include "finloc/harness.hpp"
#include "finloc/norm.hpp"
#include "finloc/shrink.hpp"
#include "tally.hpp"

namespace finloc {

using detail::Tally;

namespace {

// Hand-built trees with leaves placed left to right.
class Builder {
 public:
  Builder(Rng& rng, Nat start) : rng_(rng), pos_(start) { nodes_.emplace_back(); }

  std::size_t add_leaf(std::size_t parent, Nat label) {
    CreatureNode c;
    c.label = label;
    c.L = c.R = pos_;
    pos_ += uniform(rng_, 1, 3);
    return attach(parent, std::move(c));
  }

  /// Inner node with `leaves` leaf children; normed when leaves > k.
  std::size_t add_inner(std::size_t parent, Nat label, std::size_t leaves, std::size_t k) {
    CreatureNode c;
    c.label = label;
    std::size_t i = attach(parent, std::move(c));
    for (std::size_t j = 0; j < leaves; ++j) add_leaf(i, j);
    close(i, k);
    return i;
  }

  void close(std::size_t i, std::size_t k) {
    auto& n = nodes_[i];
    n.L = nodes_[n.children.front()].L;
    n.R = nodes_[n.children.back()].R;
    if (n.children.size() > k) n.norm = Norm::log();
  }

  Creature finish(std::size_t k) {
    close(0, k);
    return Creature(k, std::move(nodes_));
  }

  Nat pos() const noexcept { return pos_; }

 private:
  std::size_t attach(std::size_t parent, CreatureNode c) {
    nodes_.push_back(std::move(c));
    std::size_t i = nodes_.size() - 1;
    nodes_[parent].children.push_back(i);
    return i;
  }

  Rng& rng_;
  Nat pos_;
  std::vector<CreatureNode> nodes_;
};

std::vector<Creature> sequential_parts(Rng& rng, const CreatureSpec& spec, std::size_t count,
                                       Nat start) {
  std::vector<Creature> parts;
  for (std::size_t i = 0; i < count; ++i) {
    parts.push_back(random_creature(rng, spec, start));
    start = parts.back().root().R + 1 + uniform(rng, 0, 2);
  }
  return parts;
}

CreatureSpec small_spec(std::size_t k, std::size_t depth) {
  CreatureSpec s;
  s.k = k;
  s.depth = depth;
  s.max_table_children = 4;
  s.leaf_probability = 0.3;
  return s;
}

}  // namespace

PropertyResult prop_upper_half(std::uint64_t seed, std::uint64_t cases) {
  Tally t("creatures", "upper_half");
  Rng rng(seed);
  std::uint64_t log_cases = 0;
  for (std::uint64_t i = 0; i < cases; ++i) {
    std::size_t k = 2 + i % 2;
    Creature c = Creature::leaf(k, 0);
    if (i % 5 == 4) {
      auto parts = sequential_parts(rng, small_spec(k, 1), uniform(rng, k + 1, 1024), 0);
      c = build_S_H(parts, Norm::log());
      ++log_cases;
    } else {
      CreatureSpec spec;
      spec.k = k;
      spec.depth = uniform(rng, 1, 3);
      spec.max_table_children = 8;
      spec.log_probability = 0.1;
      spec.max_log_children = 16;
      spec.leaf_probability = 0.2;
      c = random_creature(rng, spec, uniform(rng, 0, 20));
    }
    Creature u = upper_half(c);
    Nat w = weight(c);
    t.check(weight(u) == w - w / 2 && contribution(u) == contribution(c), [&] {
      return Json{{"creature", to_json(c)}, {"weight", w}, {"upper_half_weight", weight(u)}};
    });
  }
  t.note(std::to_string(log_cases) + " log-norm roots");
  return t.done(cases);
}

PropertyResult prop_claim7(std::uint64_t seed, std::uint64_t cases) {
  Tally t("creatures", "claim7");
  static constexpr double kDensities[] = {0.02, 0.1, 0.3, 0.5, 0.8};
  for (std::uint64_t i = 0; i < cases; ++i) {
    Rng rng(derive_seed(seed, i));
    std::size_t k = 2 + i % 2;
    std::size_t shape = i / 2 % 4;
    Builder b(rng, uniform(rng, 3, 10));
    std::size_t width = 0;
    if (shape == 0) {
      width = uniform(rng, std::size_t{1} << 15, std::size_t{1} << 17);
      for (std::size_t j = 0; j < width; ++j) b.add_leaf(0, j);
    } else if (shape == 1) {
      width = uniform(rng, std::size_t{1} << 15, std::size_t{1} << 16);
      for (std::size_t j = 0; j < width; ++j) {
        if (coin(rng, 0.3)) {
          b.add_inner(0, j, k, k);
        } else {
          b.add_leaf(0, j);
        }
      }
    } else if (shape == 2) {
      width = uniform(rng, std::size_t{1} << 15, std::size_t{1} << 16);
      for (std::size_t j = 0; j < k; ++j) b.add_inner(0, j, width + uniform(rng, 0, 5000), k);
    } else {
      width = uniform(rng, std::size_t{1} << 15, std::size_t{1} << 16);
      std::size_t leaf_at = uniform(rng, 0, k - 1);
      for (std::size_t j = 0; j < k; ++j) {
        if (j == leaf_at) {
          b.add_leaf(0, j);
        } else {
          b.add_inner(0, j, width, k);
        }
      }
    }
    Creature c = b.finish(k);
    Nat end = b.pos();

    std::vector<Nat> bs{0};
    std::size_t mode = uniform(rng, 0, 5);
    if (mode < 5) {
      double d = kDensities[mode];
      for (Nat x = 1; x < end; ++x) {
        if (coin(rng, d)) bs.push_back(x);
      }
    } else {
      auto cont = contribution(c);
      for (std::size_t j = 1; j < cont.size(); j += 2) bs.push_back(cont[j]);
    }
    bs.push_back(end + 1);
    bs.push_back(end + 2 + uniform(rng, 0, 5));
    WSet bset(end + 10, bs);

    auto replay = [&] {
      return Json{{"seed", seed}, {"case", i}, {"k", k}, {"shape", shape},
                  {"width", width}, {"B_mode", mode}, {"weight", weight(c)}};
    };
    Nat w = weight(c);
    if (w < 15 || w > 17) {
      t.bad(replay());
      continue;
    }
    try {
      Creature out = claim7_shrink(c, bset);
      auto chk = check_claim7(c, out, bset);
      t.check(chk.ok(), [&] {
        auto j = replay();
        j["refinement"] = chk.refinement;
        j["weight_bound"] = chk.weight_bound;
        j["gap_sparse"] = chk.gap_sparse;
        return j;
      });
    } catch (const Error& e) {
      auto j = replay();
      j["error"] = e.what();
      t.bad(j);
    }
  }
  t.note("counterexamples are replay keys: rerun with the seed and case index");
  return t.done(cases);
}

PropertyResult prop_refines_order(std::uint64_t seed, std::uint64_t cases) {
  Tally t("creatures", "refines_order");
  Rng rng(seed);
  for (std::uint64_t i = 0; i < cases; ++i) {
    CreatureSpec spec;
    spec.k = 2 + i % 2;
    spec.depth = uniform(rng, 1, 3);
    spec.max_table_children = 8;
    Creature a = random_creature(rng, spec, 0);
    Creature b = random_refinement(rng, a);
    Creature c = random_refinement(rng, b);
    bool good = refines(a, a) && refines(a, b) && refines(b, c) && refines(a, c);
    if (refines(b, a)) good = good && same_creature(a, b);
    t.check(good, [&] {
      return Json{{"t0", to_json(a)}, {"t1", to_json(b)}, {"t2", to_json(c)}};
    });
  }
  return t.done(cases);
}

PropertyResult prop_sigma_build(std::uint64_t seed, std::uint64_t cases) {
  Tally t("creatures", "sigma_build");
  Rng rng(seed);
  for (std::uint64_t i = 0; i < cases; ++i) {
    std::size_t k = 2 + i % 2;
    auto parts = sequential_parts(rng, small_spec(k, uniform(rng, 1, 2)), uniform(rng, k + 1, k + 3),
                                  uniform(rng, 0, 5));
    Json instance = {{"k", k}};
    try {
      Norm h = Norm::log();
      if (parts.size() <= 8 && coin(rng, 0.5)) {
        std::vector<Nat> base(parts.size());
        for (std::size_t j = 0; j < base.size(); ++j) base[j] = j;
        h = random_table_norm(rng, base);
      }
      Creature built = build_S_H(parts, h);
      instance["built"] = to_json(built);
      auto wit = sigma_member(built, parts);
      bool direct = wit && wit->size() == parts.size();
      for (std::size_t j = 0; direct && j < parts.size(); ++j) {
        direct = (*wit)[j].first == built.root().children[j] && (*wit)[j].second == j;
      }
      auto star = sigma_star_member(built, parts, 2);
      bool star_ok = star.found && verify_derivation(*star.certificate, parts, built);

      std::vector<Creature> glue_parts;
      for (const auto& p : parts) {
        if (glue_parts.size() < k && p.kind(0) != NodeKind::k_split) glue_parts.push_back(p);
      }
      bool glue_ok = true;
      if (glue_parts.size() == k) {
        Creature glued = glue_S(glue_parts);
        glue_ok = sigma_member(glued, glue_parts).has_value() && weight(glued) ==
                  [&] {
                    Nat m = UINT64_MAX;
                    for (const auto& p : glue_parts) {
                      bool wide = false;
                      for (std::size_t v = 0; v < p.size(); ++v) {
                        wide = wide || p.kind(v) == NodeKind::wide;
                      }
                      if (wide) m = std::min(m, weight(p));
                    }
                    return m == UINT64_MAX ? Nat{0} : m;
                  }();
      }
      t.check(direct && star_ok && glue_ok, [&] { return instance; });
    } catch (const Error& e) {
      instance["error"] = e.what();
      t.bad(instance);
    }
  }
  return t.done(cases);
}

PropertyResult prop_norm_quartering(std::uint64_t seed, std::uint64_t cases) {
  Tally t("creatures", "norm_quartering");
  Rng rng(seed);
  for (std::uint64_t i = 0; i < cases; ++i) {
    std::size_t size = uniform(rng, 1, 6);
    std::vector<Nat> base(size);
    for (std::size_t j = 0; j < size; ++j) base[j] = 3 * j + 1;
    Norm n = random_table_norm(rng, base);
    bool good = !validate_norm(n, base).has_value();
    for (std::uint32_t c = 1; c < (1U << size) && good; ++c) {
      std::vector<std::size_t> members;
      for (std::size_t j = 0; j < size; ++j) {
        if (c >> j & 1U) members.push_back(j);
      }
      auto subset_of = [&](std::uint32_t mask) {
        std::vector<Nat> s;
        for (std::size_t j = 0; j < size; ++j) {
          if (mask >> j & 1U) s.push_back(base[j]);
        }
        return s;
      };
      Nat whole = n.value(subset_of(c));
      std::size_t colorings = std::size_t{1} << (2 * members.size());
      for (std::size_t col = 0; col < colorings && good; ++col) {
        std::uint32_t parts[4] = {0, 0, 0, 0};
        for (std::size_t j = 0; j < members.size(); ++j) {
          parts[col >> (2 * j) & 3U] |= 1U << members[j];
        }
        Nat best = 0;
        for (auto p : parts) best = std::max(best, n.value(subset_of(p)));
        good = best + 2 >= whole;
      }
    }
    t.check(good, [&] {
      Json values = Json::array();
      for (std::uint32_t m = 0; m < (1U << size); ++m) {
        std::vector<Nat> s;
        for (std::size_t j = 0; j < size; ++j) {
          if (m >> j & 1U) s.push_back(base[j]);
        }
        values.push_back(n.value(s));
      }
      return Json{{"base", base}, {"values", values}};
    });
  }
  return t.done(cases);
}

PropertyResult prop_shrink_condition(std::uint64_t seed, std::uint64_t cases) {
  Tally t("creatures", "shrink_condition");
  for (std::uint64_t i = 0; i < cases; ++i) {
    Rng rng(derive_seed(seed, i));
    const std::size_t k = 2;
    ConditionFragment p;
    p.w = {0, 1};
    Nat start = 6;
    std::vector<Nat> bs{0};
    for (std::size_t c = 0; c < 2; ++c) {
      Builder b(rng, start);
      std::size_t width = (std::size_t{1} << 16) + uniform(rng, 0, 1000);
      for (std::size_t j = 0; j < width; ++j) b.add_leaf(0, j);
      p.creatures.push_back(b.finish(k));
      Nat end = b.pos();
      for (Nat x = start; x < end; ++x) {
        if (coin(rng, 0.2)) bs.push_back(x);
      }
      for (Nat j = 1; j <= 3; ++j) bs.push_back(end + j);
      start = end + 5;
    }
    WSet bset(start + 5, bs);
    auto replay = [&] { return Json{{"seed", seed}, {"case", i}}; };
    try {
      ConditionFragment q = shrink_condition(p, bset);
      FragmentHints h;
      h.cuts = {0, 1, 2};
      std::vector<std::vector<Nat>> conts;
      bool weights = true;
      for (std::size_t c = 0; c < 2; ++c) {
        h.derivations.push_back(Derivation::refine_of(Derivation::of_part(0), q.creatures[c]));
        conts.push_back(contribution(q.creatures[c]));
        weights = weights && weight(q.creatures[c]) + 14 >= weight(p.creatures[c]);
      }
      bool leq = fragment_leq(p, q, &h).verdict == Verdict::holds;
      bool gaps = selector_gap_check(q.w, conts, bset, k);
      t.check(leq && weights && gaps, [&] {
        auto j = replay();
        j["leq"] = leq;
        j["weights"] = weights;
        j["gaps"] = gaps;
        return j;
      });
    } catch (const Error& e) {
      auto j = replay();
      j["error"] = e.what();
      t.bad(j);
    }
  }
  return t.done(cases);
}

}  // namespace finloc
