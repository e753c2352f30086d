#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "finloc/constructions.hpp"
#include "finloc/generators.hpp"
#include "finloc/harness.hpp"
#include "finloc/relations.hpp"
#include "tally.hpp"

namespace finloc {

using detail::Tally;

namespace {

double unit(Rng& rng) { return std::uniform_real_distribution<>(0.0, 1.0)(rng); }

std::vector<Nat> increasing_function(Rng& rng, std::size_t length, Nat first, Nat min_step,
                                     Nat max_step) {
  std::vector<Nat> f(length);
  Nat cur = first;
  for (auto& v : f) {
    v = cur;
    cur += uniform(rng, min_step, max_step);
  }
  return f;
}

std::size_t count_between(const WSet& x, Nat lo, Nat hi) {
  std::size_t c = 0;
  for (Nat e : x.elements()) c += (e >= lo && e < hi) ? 1 : 0;
  return c;
}

// Codes under the length-then-lexicographic bijection, decoded by hand.
bool on_chain(Nat code, const std::vector<std::uint8_t>& bits) {
  std::size_t len = 0;
  while ((Nat{2} << len) - 1 <= code) ++len;
  Nat v = code - ((Nat{1} << len) - 1);
  if (len > bits.size()) return false;
  for (std::size_t i = 0; i < len; ++i) {
    if (((v >> (len - 1 - i)) & 1U) != bits[i]) return false;
  }
  return true;
}

}  // namespace

PropertyResult prop_escaping_g(std::uint64_t seed, std::uint64_t cases) {
  Tally t("constructions", "escaping_g");
  Rng rng(seed);
  for (std::uint64_t attempt = 0; t.cases() < cases && attempt < 50 * cases; ++attempt) {
    std::size_t k = uniform(rng, 1, 3);
    auto f = increasing_function(rng, 300, uniform(rng, 0, 3), 1, 4);
    auto fp = sparse_range_function(f, 64);
    std::size_t max_size = uniform(rng, 6, 60);
    std::size_t blocks = static_cast<std::size_t>(fp.back() / 2 + 2);
    auto family = random_interval_partition(rng, blocks, 2, max_size);
    auto g = partition_to_escaping_g(family);
    bool checked = false, good = true;
    for (const auto& block : family.blocks()) {
      Nat kn = block.front();
      if (kn >= f.size()) break;
      std::size_t hits = 0;
      for (Nat v : fp) hits += std::binary_search(block.begin(), block.end(), v) ? 1 : 0;
      if (hits <= k) continue;
      checked = true;
      good = good && f[kn] < g[kn];
    }
    if (!checked) continue;
    t.check(good, [&] {
      return Json{{"k", k}, {"f", f}, {"f_prime", fp}, {"F", to_json(family)}};
    });
  }
  return t.done(cases);
}

PropertyResult prop_interval_partition(std::uint64_t seed, std::uint64_t cases) {
  Tally t("constructions", "interval_partition");
  Rng rng(seed);
  const Nat horizon = 400;
  for (std::uint64_t attempt = 0; t.cases() < cases && attempt < 50 * cases; ++attempt) {
    std::size_t k = uniform(rng, 1, 3);
    WSet x = random_wset(rng, horizon, 0.3 + 0.6 * unit(rng));
    auto g = increasing_function(rng, horizon, uniform(rng, 0, 4), 1, 3);
    std::vector<Nat> cuts;
    for (std::size_t len = 1;; ++len) {
      try {
        auto p = g_to_interval_partition(g, k, len);
        if (p.cutpoints().back() > horizon) break;
        cuts.assign(p.cutpoints().begin(), p.cutpoints().end());
      } catch (const Error&) {
        break;
      }
    }
    if (x.size() < 2 * k + 1 || cuts.size() < 3) continue;
    std::size_t domain = x.elements()[x.size() - (2 * k + 1)] + 1;
    auto f = crowding_function(x, k, domain);
    bool checked = false, good = true;
    for (std::size_t n = 0; n + 2 < cuts.size(); ++n) {
      std::size_t here = count_between(x, cuts[n], cuts[n + 1]);
      std::size_t next = count_between(x, cuts[n + 1], cuts[n + 2]);
      for (Nat m = cuts[n]; m < cuts[n + 1] && m < domain; ++m) {
        if (f[m] >= g[m]) continue;
        checked = true;
        good = good && (here > k || next > k);
      }
    }
    if (!checked) continue;
    t.check(good, [&] {
      return Json{{"k", k}, {"X", to_json(x)}, {"g", g}, {"cuts", cuts}};
    });
  }
  return t.done(cases);
}

PropertyResult prop_meabou(std::uint64_t seed, std::uint64_t cases) {
  Tally t("constructions", "meabou");
  Rng rng(seed);
  for (std::uint64_t i = 0; i < cases; ++i) {
    auto family = random_interval_partition(rng, uniform(rng, 3, 30), 2, 8);
    WSet x = random_wset(rng, family.max_element() + 1, 0.1 + 0.6 * unit(rng));
    std::vector<std::vector<Nat>> g;
    for (const auto& block : family.blocks()) {
      std::vector<Nat> outside;
      for (Nat v : block) {
        if (!x.contains(v)) outside.push_back(v);
      }
      const auto& pool = (outside.size() >= 2 && coin(rng, 0.4)) ? outside : block;
      std::vector<Nat> pick(pool.begin(), pool.end());
      std::shuffle(pick.begin(), pick.end(), rng);
      pick.resize(uniform(rng, 2, pick.size()));
      std::sort(pick.begin(), pick.end());
      g.push_back(std::move(pick));
    }
    Json instance = {{"X", to_json(x)}, {"F", to_json(family)}, {"g", g}};
    try {
      auto res = meabou_partition(x, family, g);
      std::vector<Nat> in, out;
      for (const auto& b : family.blocks()) in.insert(in.end(), b.begin(), b.end());
      for (const auto& b : res.family.blocks()) out.insert(out.end(), b.begin(), b.end());
      std::sort(out.begin(), out.end());
      bool union_ok = in == out;
      bool sizes = in_P_k(res.family, 1);

      std::size_t disjoint_g = 0, intact = 0;
      bool all_disjoint = true;
      for (const auto& gn : g) {
        bool disjoint = std::none_of(gn.begin(), gn.end(), [&](Nat v) { return x.contains(v); });
        all_disjoint = all_disjoint && disjoint;
        if (!disjoint) continue;
        ++disjoint_g;
        auto blocks = res.family.blocks();
        intact += std::find(blocks.begin(), blocks.end(), gn) != blocks.end() ? 1 : 0;
      }
      std::size_t leftover = in.size();
      for (const auto& gn : g) leftover -= gn.size();
      // one disjoint block may absorb a lone leftover point of X
      bool lone = leftover == 1 && all_disjoint;
      bool kept = intact == disjoint_g || (lone && intact + 1 == disjoint_g);

      std::vector<std::size_t> expect;
      for (std::size_t n = 0; n < res.family.size(); ++n) {
        const auto& b = res.family.block(n);
        bool is_g = std::find(g.begin(), g.end(), b) != g.end();
        if (is_g && meet_count(b, x) == 0) expect.push_back(n);
      }
      auto small = eval_R_exists_k(x, res.family, 0).witnesses;
      bool listed = expect == res.disjoint_blocks &&
                    std::includes(small.begin(), small.end(), expect.begin(), expect.end());
      t.check(union_ok && sizes && kept && listed, [&] { return instance; });
    } catch (const Error& e) {
      instance["error"] = e.what();
      t.bad(instance);
    }
  }
  return t.done(cases);
}

PropertyResult prop_s_plus_phi(std::uint64_t seed, std::uint64_t cases) {
  Tally t("constructions", "s_plus_phi");
  Rng rng(seed);
  std::uint64_t vacuous = 0;
  for (std::uint64_t attempt = 0; t.cases() < cases && attempt < 20 * cases; ++attempt) {
    Nat n = uniform(rng, 1500, 3000);
    WSet x = random_wset(rng, n + 1, 0.6 + 0.4 * unit(rng));
    Nat c = uniform(rng, 1, 3);
    std::vector<Nat> phi(n + 8);
    std::iota(phi.begin(), phi.end(), c);
    std::vector<Nat> y0{0, n};
    for (std::size_t j = uniform(rng, 1, 4); j > 0; --j) y0.push_back(uniform(rng, 1, n - 1));
    WSet y0set = WSet::from_unsorted(n + 1, y0);
    Json instance = {{"X", to_json(x)}, {"phi_offset", c}, {"Y0", to_json(y0set)}};
    try {
      SPlusPhiTrace targets;
      try {
        targets = s_plus_phi_targets(x, phi, y0set);
      } catch (const Error& e) {
        if (e.code() != Errc::density_insufficient) throw;
        ++vacuous;
        continue;
      }
      auto trace = s_plus_phi_pipeline(x, phi, y0set, targets.targets);
      std::vector<Nat> keys;
      for (const auto& [p, v] : targets.targets) keys.push_back(p);
      if (trace.matched.empty()) {
        ++vacuous;
        continue;
      }
      auto rep = eval_S_plus_phi(x, trace.y, phi);
      bool found = false;
      auto ys = trace.y.elements();
      for (std::size_t w : rep.witnesses) {
        bool run = w + phi[w] < ys.size();
        for (std::size_t j = w; run && j < w + phi[w]; ++j) {
          run = count_between(x, ys[j], ys[j + 1]) >= 2;
        }
        found = found || run;
      }
      t.check(trace.matched == keys && found, [&] { return instance; });
    } catch (const Error& e) {
      instance["error"] = e.what();
      t.bad(instance);
    }
  }
  t.note(std::to_string(vacuous) + " vacuous instances skipped");
  return t.done(cases);
}

PropertyResult prop_lemat(std::uint64_t seed, std::uint64_t cases) {
  Tally t("constructions", "lemat");
  Rng rng(seed);
  const std::size_t len = 10;
  const Nat horizon = (Nat{1} << (len + 1)) - 1;
  for (std::uint64_t i = 0; i < cases; ++i) {
    BranchPrefix x;
    for (std::size_t j = 0; j < len; ++j) x.bits.push_back(coin(rng, 0.5) ? 1 : 0);
    std::vector<Nat> chain, free;
    for (Nat c = 0; c < horizon; ++c) (on_chain(c, x.bits) ? chain : free).push_back(c);
    std::shuffle(chain.begin(), chain.end(), rng);
    std::shuffle(free.begin(), free.end(), rng);
    std::size_t k = uniform(rng, 0, 2);
    std::size_t nblocks = uniform(rng, 2, 6);
    std::size_t honest = uniform(rng, 0, nblocks - 1);
    std::vector<std::vector<Nat>> blocks;
    for (std::size_t b = 0; b < nblocks; ++b) {
      std::vector<Nat> block;
      std::size_t take_free = b == honest ? k + 1 : k;
      if (b != honest || coin(rng, 0.5)) {
        block.push_back(chain.back());
        chain.pop_back();
      }
      for (std::size_t j = 0; j < take_free; ++j) {
        block.push_back(free.back());
        free.pop_back();
      }
      std::sort(block.begin(), block.end());
      blocks.push_back(std::move(block));
    }
    BlockFamily family(horizon, blocks, false);
    std::optional<std::size_t> expected;
    for (std::size_t n = 0; n < family.size() && !expected; ++n) {
      const auto& b = family.block(n);
      auto off = std::count_if(b.begin(), b.end(), [&](Nat c) { return !on_chain(c, x.bits); });
      if (static_cast<std::size_t>(off) >= k + 1) expected = n;
    }
    auto res = lemat_witness(x, family, k);
    t.check(expected && res.witness == expected, [&] {
      return Json{{"x", x.bits}, {"k", k}, {"F", to_json(family)}};
    });
  }
  return t.done(cases);
}

}  // namespace finloc
