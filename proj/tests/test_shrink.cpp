#include <doctest.h>

#include <algorithm>

#include "creature_util.hpp"
#include "finloc/error.hpp"
#include "finloc/generators.hpp"
#include "finloc/shrink.hpp"

using namespace finloc;
using util::fan;
using util::spaced;

namespace {

Errc code_of_call(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::invalid_argument;
}

// Every n from the first B point above max(w): some gap among n..n+k of B
// has fewer than two points of the union.
bool union_is_sparse(const std::vector<Nat>& w, const std::vector<std::vector<Nat>>& conts,
                     const std::vector<Nat>& b, std::size_t k) {
  std::vector<Nat> pts = w;
  for (const auto& c : conts) pts.insert(pts.end(), c.begin(), c.end());
  std::size_t first = 0;
  while (!w.empty() && first < b.size() && b[first] <= w.back()) ++first;
  for (std::size_t n = first; n + k + 1 < b.size(); ++n) {
    bool all_rich = true;
    for (std::size_t i = 0; i <= k; ++i) {
      std::size_t c = 0;
      for (Nat x : pts) c += (x >= b[n + i] && x < b[n + i + 1]) ? 1 : 0;
      if (c < 2) all_rich = false;
    }
    if (all_rich) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("shrink") {
  TEST_CASE("gap_run_violation") {
    WSet b(20, {0, 4, 8, 12, 16});
    std::vector<Nat> pts{1, 2, 5, 6, 13};
    CHECK(gap_run_violation(pts, b, 1) == std::optional<std::size_t>{0});
    CHECK_FALSE(gap_run_violation(pts, b, 2).has_value());
    CHECK_FALSE(gap_run_violation(pts, b, 1, 1).has_value());
    CHECK_FALSE(gap_run_violation(pts, WSet(20, {0, 4}), 1).has_value());
  }

  TEST_CASE("claim7 with every contribution in one B-gap") {
    const std::size_t n = std::size_t{1} << 16;
    auto t = fan(2, spaced(1, n));
    WSet b(n + 4, {0, n + 1, n + 2});
    auto s = claim7_shrink(t, b);
    CHECK(check_claim7(t, s, b).ok());
    CHECK(weight(s) + 3 >= weight(t));
  }

  TEST_CASE("claim7 with B on every other contribution point") {
    const std::size_t n = std::size_t{1} << 15;
    auto t = fan(2, spaced(0, n));
    std::vector<Nat> bs;
    for (Nat x = 0; x < n; x += 2) bs.push_back(x);
    bs.push_back(n);
    bs.push_back(n + 1);
    WSet b(n + 2, bs);
    auto s = claim7_shrink(t, b);
    auto c = check_claim7(t, s, b);
    CHECK(c.refinement);
    CHECK(c.weight_bound);
    CHECK(c.gap_sparse);
    CHECK(weight(s) >= 1);
  }

  TEST_CASE("claim7 preconditions") {
    auto light = fan(2, spaced(0, std::size_t{1} << 14));
    WSet b((1 << 14) + 4, {0, (1 << 14) + 1, (1 << 14) + 2});
    CHECK(code_of_call([&] { claim7_shrink(light, b); }) == Errc::weight_too_small);
    auto t = fan(2, spaced(1, std::size_t{1} << 15));
    WSet late((1 << 15) + 4, {2, (1 << 15) + 1, (1 << 15) + 2});
    CHECK(code_of_call([&] { claim7_shrink(t, late); }) == Errc::invalid_argument);
  }

  TEST_CASE("shrink_condition") {
    const Nat n = Nat{1} << 16;
    auto t0 = fan(2, spaced(2, n));
    auto t1 = fan(2, spaced(n + 10, n));
    ConditionFragment one{{0}, {t0}};
    WSet b1(n + 8, {1, n + 3, n + 4, n + 5});
    auto q1 = shrink_condition(one, b1);
    REQUIRE(q1.creatures.size() == 1);
    CHECK(same_creature(q1.creatures[0], claim7_shrink(t0, b1)));
    CHECK(q1.w == one.w);

    ConditionFragment two{{0}, {t0, t1}};
    WSet dense(2 * n + 20, {1, n + 3, n + 5, n + 7, 2 * n + 12, 2 * n + 13, 2 * n + 14});
    auto q2 = shrink_condition(two, dense);
    std::vector<std::vector<Nat>> conts{contribution(q2.creatures[0]), contribution(q2.creatures[1])};
    CHECK(selector_gap_check(q2.w, conts, dense, 2));

    WSet sparse(2 * n + 20, {1, n + 3, n + 5, 2 * n + 12, 2 * n + 13, 2 * n + 14});
    CHECK(code_of_call([&] { shrink_condition(two, sparse); }) == Errc::b_sparsity);
  }

  TEST_CASE("property: selector_gap_check matches a union oracle") {
    Rng rng(91);
    for (int i = 0; i < 400; ++i) {
      const std::size_t k = uniform(rng, 1, 3);
      const Nat horizon = 40;
      auto b = random_wset(rng, horizon, 0.3);
      auto pool = random_wset_count(rng, horizon, uniform(rng, 0, 14));
      std::vector<Nat> w;
      std::vector<std::vector<Nat>> conts(2);
      for (Nat x : pool.elements()) {
        if (x < 6 && coin(rng, 0.5)) {
          w.push_back(x);
        } else {
          conts[coin(rng, 0.5) ? 1 : 0].push_back(x);
        }
      }
      std::vector<Nat> bs(b.elements().begin(), b.elements().end());
      const bool expected = union_is_sparse(w, conts, bs, k);
      CHECK(selector_gap_check(w, conts, b, k) == expected);
      CHECK(selector_gap_check(w, conts, b, k, 0) == expected);
    }
  }
}
