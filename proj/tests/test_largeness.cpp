#include <doctest.h>

#include <algorithm>
#include <bit>

#include "finloc/error.hpp"
#include "finloc/generators.hpp"
#include "finloc/largeness.hpp"
#include "oracle.hpp"

using namespace finloc;

TEST_SUITE("largeness") {
  TEST_CASE("is_lk_large") {
    FamilyUniverse pairs{{BlockFamily(12, {{0, 1}, {4, 9}, {10, 11}}, false)}, "pairs"};
    CHECK(is_lk_large(WSet::interval(0, 12, 12), pairs, 2, 0, 0).large);

    FamilyUniverse odd{{BlockFamily(8, {{1, 3}, {5, 7}}, false)}, "odd"};
    auto v = is_lk_large(WSet(8, oracle::range(0, 8, 2)), odd, 2, 0, 0);
    CHECK_FALSE(v.large);
    REQUIRE(v.counterexample.has_value());
    CHECK(v.counterexample->second == 0);

    FamilyUniverse triples{{BlockFamily(9, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}}, true)}, "triples"};
    CHECK(is_lk_large(WSet(9, {0, 1, 3, 5, 7, 8}), triples, 3, 1, 0).large);
    CHECK_FALSE(is_lk_large(WSet(9, {0, 1, 3, 7, 8}), triples, 3, 1, 0).large);
    CHECK(is_lk_large(WSet(9, {0, 1, 3, 7, 8}), triples, 3, 1, 2).large);
    CHECK_THROWS_AS(is_lk_large(WSet(9, {}), triples, 2, 1, 0), Error);
  }

  TEST_CASE("subset_family and concat_family") {
    BlockFamily f(10, {{0, 1, 2}, {5, 7, 9}}, false);
    std::vector<std::size_t> a{0, 2};
    CHECK(subset_family(f, a) == BlockFamily(10, {{0, 2}, {5, 9}}, false));
    std::vector<std::size_t> all{0, 1, 2};
    CHECK(subset_family(f, all) == f);
    std::vector<std::size_t> first{0};
    CHECK(subset_family(f, first) == BlockFamily(10, {{0}, {5}}, false));

    BlockFamily singles(5, {{0}, {1}, {2}, {3}, {4}}, true);
    CHECK(concat_family(singles, 2) == BlockFamily(5, {{0, 1}, {2, 3}}, true));
    CHECK(concat_family(singles, 1) == singles);
  }

  TEST_CASE("transfer_counting_check examples") {
    auto k = oracle::range(0, 6);
    CHECK(transfer_counting_check(k, WSet(6, {0, 1, 2, 3, 4}), 3, 1));
    CHECK(transfer_counting_check(k, WSet(6, {0, 1, 2, 3}), 3, 1));
    CHECK(transfer_counting_check(k, WSet::interval(0, 6, 6), 3, 1));
  }

  TEST_CASE("split_into_2_3") {
    auto p = split_into_2_3(oracle::range(0, 7), 3);
    REQUIRE(p.size() == 3);
    CHECK(p[0] == std::vector<Nat>{0, 1});
    CHECK(p[1] == std::vector<Nat>{2, 3});
    CHECK(p[2] == std::vector<Nat>{4, 5, 6});
    CHECK(split_into_2_3(std::vector<Nat>{4, 9}, 1) == std::vector<std::vector<Nat>>{{4, 9}});
    CHECK_THROWS_AS(split_into_2_3(oracle::range(0, 4), 3), Error);
  }

  TEST_CASE("derived_Y") {
    BlockFamily f(6, {{0, 1}, {2, 3}, {4, 5}}, true);
    CHECK(oracle::elems(derived_Y(f, WSet(6, {2}))) == std::vector<Nat>{1});
    CHECK(oracle::elems(derived_Y(f, WSet::interval(0, 6, 6))) == std::vector<Nat>{0, 1, 2});
    CHECK(oracle::elems(derived_Y(f, WSet(6, {1, 4}))) == std::vector<Nat>{0, 2});
  }

  TEST_CASE("f_large_check") {
    std::vector<Nat> f{1, 1};
    BlockFamily small(5, {{0, 1}, {2, 3, 4}}, true);
    auto a = f_large_check(WSet(5, {}), small, f, 0);
    CHECK(a.outcome == FLargeOutcome::small_block);
    CHECK(a.small_block == 0);

    BlockFamily ok(6, {{0, 1, 2}, {3, 4, 5}}, true);
    auto b = f_large_check(WSet::interval(0, 6, 6), ok, f, 0);
    CHECK(b.outcome == FLargeOutcome::meets_often);
    CHECK(b.witnesses == std::vector<std::size_t>{0, 1});

    CHECK(f_large_check(WSet(6, {}), ok, f, 0).outcome == FLargeOutcome::neither);
  }

  TEST_CASE("property: concatenated blocks keep small complements") {
    Rng rng(21);
    for (int i = 0; i < 300; ++i) {
      std::size_t m = uniform(rng, 2, 5), l = uniform(rng, 2, 4), k = uniform(rng, 0, l - 2);
      auto f = random_interval_partition(rng, l * uniform(rng, 1, 4), m, m);
      WSet x = random_wset(rng, f.max_element() + 1, 0.8);
      auto c = concat_family(f, l);
      REQUIRE(c.size() == f.size() / l);
      for (std::size_t n = 0; n < c.size(); ++n) {
        REQUIRE(c.block(n).size() == l * m);
        std::size_t miss = c.block(n).size() - meet_count(c.block(n), x);
        if (miss >= l - k) continue;
        for (std::size_t j = l * n; j < l * n + l; ++j) {
          CHECK(f.block(j).size() - meet_count(f.block(j), x) < l - k);
        }
      }
    }
  }

  TEST_CASE("property: a heavily met union of index blocks is seen by derived_Y") {
    Rng rng(22);
    for (int i = 0; i < 300; ++i) {
      std::size_t m = uniform(rng, 2, 4);
      auto f = random_interval_partition(rng, 2 * uniform(rng, 1, 6), m, m);
      WSet x = random_wset(rng, f.max_element() + 1, 0.3);
      WSet y = derived_Y(f, x);
      for (std::size_t n = 0; 2 * n + 1 < f.size(); ++n) {
        std::size_t meets = meet_count(f.block(2 * n), x) + meet_count(f.block(2 * n + 1), x);
        if (meets > m - 1) CHECK((y.contains(2 * n) || y.contains(2 * n + 1)));
      }
    }
  }

  TEST_CASE("property: split_into_2_3 pieces") {
    for (std::size_t n = 2; n < 40; ++n) {
      auto p = split_into_2_3(oracle::range(100, 100 + n), 1);
      CHECK(p.size() == n / 2);
      std::vector<Nat> all;
      for (const auto& piece : p) {
        CHECK((piece.size() == 2 || piece.size() == 3));
        all.insert(all.end(), piece.begin(), piece.end());
      }
      CHECK(all == oracle::range(100, 100 + n));
    }
  }
}
