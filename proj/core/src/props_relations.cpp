#include <algorithm>
#include <bit>
#include <vector>

#include "finloc/generators.hpp"
#include "finloc/harness.hpp"
#include "finloc/largeness.hpp"
#include "finloc/relations.hpp"
#include "tally.hpp"

namespace finloc {

using detail::Tally;

namespace {

WSet wset_of_mask(std::uint32_t mask, std::size_t n) {
  std::vector<Nat> xs;
  for (std::size_t i = 0; i < n; ++i) {
    if (mask >> i & 1U) xs.push_back(i);
  }
  return WSet(n, std::move(xs));
}

// Least |D| over subsets D of the columns such that every row meets D.
std::size_t brute_dominating(const std::vector<std::uint32_t>& row_masks, std::size_t cols) {
  std::size_t best = cols + 1;
  for (std::uint32_t d = 0; d < (1U << cols); ++d) {
    bool all = std::all_of(row_masks.begin(), row_masks.end(),
                           [d](std::uint32_t r) { return (r & d) != 0; });
    if (all) best = std::min<std::size_t>(best, static_cast<std::size_t>(std::popcount(d)));
  }
  return best;
}

std::size_t count_in_range(const WSet& x, Nat lo, Nat hi) {
  std::size_t c = 0;
  for (Nat e : x.elements()) c += (e >= lo && e < hi) ? 1 : 0;
  return c;
}

}  // namespace

PropertyResult prop_transfer(std::size_t lmax, std::size_t max_lm) {
  Tally t("largeness", "transfer_counting");
  for (std::size_t l = 2; l <= lmax; ++l) {
    for (std::size_t k = 0; k + 1 < l; ++k) {
      for (std::size_t m = 1; m <= 2; ++m) {
        std::size_t n = l * m;
        if (n > max_lm) continue;
        std::vector<Nat> block(n);
        for (std::size_t i = 0; i < n; ++i) block[i] = i;
        for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
          WSet x = wset_of_mask(mask, n);
          bool lhs = true;
          for (std::uint32_t sub = 0; sub < (1U << n) && lhs; ++sub) {
            if (static_cast<std::size_t>(std::popcount(sub)) != l) continue;
            if (static_cast<std::size_t>(std::popcount(sub & mask)) <= k) lhs = false;
          }
          bool rhs = n - static_cast<std::size_t>(std::popcount(mask)) < l - k;
          bool lib = transfer_counting_check(block, x, l, k);
          t.check(lib && lhs == rhs, [&] {
            return Json{{"l", l}, {"k", k}, {"m", m}, {"X", to_json(x)}, {"library", lib},
                        {"lhs", lhs}, {"rhs", rhs}};
          });
        }
      }
    }
  }
  return t.done(1);
}

PropertyResult prop_duality(std::size_t n) {
  Tally t("relations", "duality");
  std::size_t skipped = 0;
  for (std::uint32_t bits = 0; bits < (1U << (n * n)); ++bits) {
    std::vector<std::vector<bool>> table(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) table[i][j] = (bits >> (i * n + j) & 1U) != 0;
    }
    auto r = FiniteRelationInstance::from_table(table);
    if (!r.satisfies_dom_rng()) {
      ++skipped;
      continue;
    }
    auto c = r.complement_inverse();
    std::vector<std::uint32_t> rows(n), co_rows(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (table[i][j]) rows[i] |= 1U << j;
        if (!table[j][i]) co_rows[i] |= 1U << j;
      }
    }
    // b(R) = least B ⊆ left with every column unrelated to some member of B,
    // i.e. domination for the complement-inverse table.
    std::size_t d_oracle = brute_dominating(rows, n);
    std::size_t b_oracle = brute_dominating(co_rows, n);
    std::size_t dr = d_fin(r).size, br = b_fin(r).size;
    std::size_t dc = d_fin(c).size, bc = b_fin(c).size;
    t.check(dr == bc && br == dc && dr == d_oracle && br == b_oracle, [&] {
      return Json{{"relation", to_json(r)}, {"d_fin", dr},        {"b_fin", br},
                  {"d_fin_c", dc},          {"b_fin_c", bc},      {"d_oracle", d_oracle},
                  {"b_oracle", b_oracle}};
    });
  }
  t.note(std::to_string(skipped) + " tables outside the dom/rng condition");
  return t.done(1);
}

PropertyResult prop_relation_chain(std::uint64_t seed, std::uint64_t cases, std::size_t window) {
  Tally t("relations", "relation_chain");
  Rng rng(seed);
  std::uint64_t phi_witnesses = 0;
  for (std::uint64_t i = 0; i < cases; ++i) {
    Nat n = uniform(rng, std::min<std::size_t>(20, window), window);
    WSet x = random_wset(rng, n, 0.5 + 0.45 * std::uniform_real_distribution<>(0, 1)(rng));
    WSet y = random_wset(rng, n, 0.1 + 0.3 * std::uniform_real_distribution<>(0, 1)(rng));
    if (y.size() < 3) y = random_wset_count(rng, n, 3);
    Json instance = {{"X", to_json(x)}, {"Y", to_json(y)}};
    try {
      bool good = true;
      Json detail;
      for (std::size_t k = 1; k <= 4 && good; ++k) {
        if (y.size() < k + 2) break;
        auto hi = eval_S_k(x, y, k + 1).witnesses;
        auto lo = eval_S_k(x, y, k).witnesses;
        if (!std::includes(lo.begin(), lo.end(), hi.begin(), hi.end())) {
          good = false;
          detail = {{"k", k}};
        }
      }
      std::vector<Nat> phi(y.size());
      Nat cur = uniform(rng, 1, 2);
      for (auto& v : phi) {
        v = cur;
        cur += uniform(rng, 1, 2);
      }
      auto rep = eval_S_plus_phi(x, y, phi);
      auto ys = y.elements();
      for (std::size_t w : rep.witnesses) {
        if (!good) break;
        ++phi_witnesses;
        bool run = w + phi[w] < ys.size();
        for (std::size_t j = w; run && j < w + phi[w]; ++j) {
          run = count_in_range(x, ys[j], ys[j + 1]) >= 2;
        }
        auto start = eval_S_plus(x, y, phi[w]);
        if (!run || !start || *start > w) {
          good = false;
          detail = {{"phi", phi}, {"witness", w}};
        }
      }
      t.check(good, [&] {
        instance["detail"] = detail;
        return instance;
      });
    } catch (const Error& e) {
      instance["error"] = e.what();
      t.bad(instance);
    }
  }
  t.note(std::to_string(phi_witnesses) + " phi witnesses checked");
  return t.done(cases);
}

PropertyResult prop_split_2_3(std::uint64_t seed, std::uint64_t cases) {
  Tally t("largeness", "split_2_3");
  Rng rng(seed);
  for (std::uint64_t i = 0; i < cases; ++i) {
    std::size_t size = uniform(rng, 2, 40);
    Nat start = uniform(rng, 0, 50);
    std::vector<Nat> block;
    for (std::size_t j = 0; j < size; ++j) {
      start += uniform(rng, 1, 3);
      block.push_back(start);
    }
    auto pieces = split_into_2_3(block, 1);
    std::vector<Nat> joined;
    bool sizes = true;
    for (std::size_t p = 0; p < pieces.size(); ++p) {
      bool last = p + 1 == pieces.size();
      sizes = sizes && (pieces[p].size() == 2 || (last && pieces[p].size() == 3));
      joined.insert(joined.end(), pieces[p].begin(), pieces[p].end());
    }
    bool triple_iff_odd = (pieces.back().size() == 3) == (size % 2 == 1);
    t.check(sizes && joined == block && triple_iff_odd,
            [&] { return Json{{"block", block}}; });
  }
  return t.done(cases);
}

}  // namespace finloc
