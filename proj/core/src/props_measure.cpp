#include <cmath>
#include <string>
#include <vector>

#include "finloc/generators.hpp"
#include "finloc/harness.hpp"
#include "finloc/randomname.hpp"
#include "finloc/relations.hpp"
#include "tally.hpp"

namespace finloc {

using detail::Tally;

namespace {

using boost::multiprecision::cpp_int;

Rational inverse_power_of_two(std::size_t e) { return Rational(cpp_int(1), cpp_int(1) << e); }

std::string decimal(const Rational& q) {
  return std::to_string(static_cast<double>(q));
}

// Exact union bound for pairs, from the block boundaries alone.
Rational pair_oracle(const std::vector<std::array<Nat, 2>>& pairs, std::size_t depth) {
  std::vector<Nat> l{0};
  for (std::size_t k = 0; k < depth; ++k) l.push_back(l.back() + (Nat{1} << (k * k)));
  auto block = [&](Nat x) {
    std::size_t k = 0;
    while (l[k + 1] <= x) ++k;
    return k;
  };
  Rational sum = 0;
  for (const auto& [a, b] : pairs) {
    std::size_t ka = block(a), kb = block(b);
    if (ka == kb) continue;
    sum += inverse_power_of_two(ka * ka + kb * kb);
  }
  return sum;
}

}  // namespace

PropertyResult prop_tail_bound(std::size_t m_max, std::size_t r_max) {
  Tally t("measure", "tail_bound");
  for (std::size_t m = 0; m <= m_max; ++m) {
    Rational closed(cpp_int(2), cpp_int(3) * (cpp_int(1) << (2 * m)));
    Rational tb = tail_bound(m);
    t.check(tb == closed, [&] {
      return Json{{"m", m}, {"tail_bound", to_json(tb)}, {"closed_form", to_json(closed)}};
    });
    for (std::size_t r = m; r <= r_max; ++r) {
      Rational s = partial_tail_sum(m, r);
      // remainder sum_{j > r} 2^-(2j+1) = 2^-(2r+1) / 3
      Rational gap = inverse_power_of_two(2 * r + 1) / 3;
      t.check(s < tb && tb - s == gap, [&] {
        return Json{{"m", m}, {"R", r}, {"partial", to_json(s)}, {"tail_bound", to_json(tb)}};
      });
    }
  }
  return t.done(1);
}

PropertyResult prop_mc_vs_exact(std::uint64_t seed, std::uint64_t trials) {
  Tally t("measure", "mc_vs_exact");
  const std::size_t depth = 5;
  NameModel model(depth);
  const Rational tail = tail_bound(1);
  for (Nat offset = 0; offset <= 1; ++offset) {
    std::vector<std::array<Nat, 2>> pairs;
    std::vector<std::vector<Nat>> blocks;
    for (Nat a = model.l[1] + offset; a + 1 < model.horizon(); a += 2) {
      pairs.push_back({a, a + 1});
      blocks.push_back({a, a + 1});
    }
    BlockFamily family(model.horizon(), blocks, false);
    auto bound = localization_failure_bound(family, 1, model);
    Rational oracle = pair_oracle(pairs, depth);
    auto mc = mc_localization_rate(family, 1, model, trials, derive_seed(seed, offset));
    double p = static_cast<double>(bound.value);
    double sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
    double diff = std::fabs(mc.rate - p);
    bool ok = bound.value == oracle && bound.value <= tail && bound.within && diff <= 3.0 * sigma;
    t.note("start l_1+" + std::to_string(offset) + ": exact " + decimal(bound.value) +
           ", empirical " + std::to_string(mc.rate) + ", 3 sigma " +
           std::to_string(3.0 * sigma));
    t.check(ok, [&] {
      return Json{{"offset", offset},        {"exact", to_json(bound.value)},
                  {"oracle", to_json(oracle)}, {"empirical", mc.rate},
                  {"failures", mc.failures},   {"trials", trials},
                  {"sigma", sigma}};
    });
  }
  return t.done(2);
}

PropertyResult prop_meet_probability(std::size_t depth) {
  Tally t("measure", "meet_probability");
  NameModel model(depth);
  std::vector<Nat> none;
  t.check(empty_meet_probability(none, model) == 1, [&] { return Json{{"K", none}}; });
  for (std::size_t k = 0; k < depth; ++k) {
    Rational sum = 0;
    for (Nat x = model.l[k]; x < model.l[k + 1]; ++x) {
      Nat one[] = {x};
      sum += empty_meet_probability(one, model);
    }
    t.check(sum == 1, [&] { return Json{{"block", k}, {"sum", to_json(sum)}}; });
    if (model.l[k + 1] - model.l[k] >= 2) {
      Nat both[] = {model.l[k], model.l[k + 1] - 1};
      t.check(empty_meet_probability(both, model) == 0,
              [&] { return Json{{"K", std::vector<Nat>(both, both + 2)}}; });
    }
    for (std::size_t j = k + 1; j < depth; ++j) {
      Nat a[] = {model.l[k]};
      Nat b[] = {model.l[j + 1] - 1};
      Nat ab[] = {a[0], b[0]};
      Rational lhs = empty_meet_probability(ab, model);
      Rational rhs = empty_meet_probability(a, model) * empty_meet_probability(b, model);
      t.check(lhs == rhs, [&] { return Json{{"K", std::vector<Nat>(ab, ab + 2)}}; });
    }
  }
  return t.done(1);
}

PropertyResult prop_name_consistency(std::uint64_t seed, std::uint64_t cases) {
  Tally t("measure", "name_consistency");
  Rng rng(seed);
  NameModel model(4);
  const Nat horizon = model.horizon();
  for (std::uint64_t i = 0; i < cases; ++i) {
    std::uint64_t s = derive_seed(seed, i);
    WSet x = sample_name(model, s);
    std::vector<std::size_t> missing(model.depth, 0);
    std::vector<bool> present(horizon, false);
    for (Nat v : x.elements()) present[v] = true;
    for (Nat v = 0; v < horizon; ++v) {
      if (!present[v]) ++missing[model.block_of(v)];
    }
    bool one_each = std::all_of(missing.begin(), missing.end(), [](std::size_t c) { return c == 1; });

    auto generated = random_interval_partition(rng, horizon, 1, uniform(rng, 1, 4));
    std::vector<std::vector<Nat>> kept;
    for (const auto& b : generated.blocks()) {
      if (b.back() < horizon) kept.push_back(b);
    }
    BlockFamily family(horizon, kept, true);
    std::vector<std::size_t> expect;
    for (std::size_t n = 0; n < kept.size(); ++n) {
      bool empty = std::none_of(kept[n].begin(), kept[n].end(), [&](Nat v) { return present[v]; });
      if (empty) expect.push_back(n);
    }
    auto got = eval_R_exists_k(x, family, 0).witnesses;
    t.check(one_each && got == expect, [&] {
      return Json{{"seed", s}, {"F", to_json(family)}};
    });
  }
  return t.done(cases);
}

}  // namespace finloc
