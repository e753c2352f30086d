#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "finloc/error.hpp"
#include "finloc/finsets.hpp"
#include "finloc/generators.hpp"
#include "finloc/localizers.hpp"
#include "oracle.hpp"

using namespace finloc;
using Cells = std::vector<std::vector<Nat>>;

TEST_SUITE("finsets") {
  TEST_CASE("mu enumerates in increasing order") {
    CHECK(mu(WSet(10, {3, 5, 9}), 1) == 5);
    CHECK(mu(WSet::interval(0, 20, 20), 0) == 0);
    CHECK(mu(WSet(17, {2, 4, 8, 16}), 3) == 16);
    CHECK_THROWS_AS(mu(WSet(10, {3}), 1), Error);
  }

  TEST_CASE("WSet validation") {
    CHECK_THROWS_AS(WSet(5, {1, 7}), Error);
    CHECK_THROWS_AS(WSet(10, {4, 2}), Error);
    CHECK(WSet::from_unsorted(10, {4, 2, 4}) == WSet(10, {2, 4}));
    CHECK(WSet(10, {}).empty());
    CHECK(WSet(10, {1, 3, 5, 7}).count_in(2, 7) == 2);
  }

  TEST_CASE("in_P_k") {
    CHECK(in_P_k(BlockFamily(4, {{0, 1}, {2, 3}}, true), 1));
    CHECK_FALSE(in_P_k(BlockFamily(3, {{0}, {1, 2}}, true), 1));
    CHECK(in_P_k(BlockFamily(6, {{0, 1, 2}, {3, 4, 5}}, true), 2));
  }

  TEST_CASE("intervals_of") {
    auto f = intervals_of(WSet(7, {0, 3, 6}));
    REQUIRE(f.size() == 2);
    CHECK(f.block(0) == oracle::range(0, 3));
    CHECK(f.block(1) == oracle::range(3, 6));
    CHECK(f.covering());

    auto g = intervals_of(WSet(3, {1, 2}));
    REQUIRE(g.size() == 1);
    CHECK(g.block(0) == std::vector<Nat>{1});

    auto h = intervals_of(WSet(11, {0, 5, 7, 10}));
    REQUIRE(h.size() == 3);
    CHECK(h.block(2) == oracle::range(7, 10));
  }

  TEST_CASE("block families are canonical and disjoint") {
    BlockFamily f(10, {{5, 6}, {0, 1}}, false);
    CHECK(f.block(0) == std::vector<Nat>{0, 1});
    CHECK_THROWS_AS(BlockFamily(10, {{0, 1}, {1, 2}}, false), Error);
    CHECK_THROWS_AS(BlockFamily(10, {{0, 1}, {3, 4}}, true), Error);
    CHECK(IntervalPartition({0, 3, 12}).to_family().block(1) == oracle::range(3, 12));
  }

  TEST_CASE("property: intervals_of yields contiguous covering blocks") {
    Rng rng(11);
    for (int i = 0; i < 300; ++i) {
      WSet x = random_wset(rng, uniform(rng, 2, 80), 0.3);
      if (x.size() < 2) continue;
      auto f = intervals_of(x);
      REQUIRE(f.size() == x.size() - 1);
      std::vector<Nat> all;
      for (std::size_t n = 0; n < f.size(); ++n) {
        CHECK(f.block(n).front() == mu(x, n));
        CHECK(f.block(n).back() + 1 == mu(x, n + 1));
        all.insert(all.end(), f.block(n).begin(), f.block(n).end());
      }
      CHECK(all == oracle::range(mu(x, 0), mu(x, x.size() - 1)));
      for (std::size_t n = 1; n < x.size(); ++n) CHECK(mu(x, n - 1) < mu(x, n));
    }
  }
}

TEST_SUITE("localizers") {
  TEST_CASE("slalom_localizes") {
    CHECK(slalom_localizes(std::vector<Nat>{0, 1, 2}, Slalom(Cells{{0}, {0, 1}, {0, 1, 2}})));
    CHECK_FALSE(slalom_localizes(std::vector<Nat>{5}, Slalom(Cells{{0}})));
    CHECK(slalom_localizes(std::vector<Nat>{1, 3}, Slalom(Cells{{1}, {2, 3}})));
    CHECK_THROWS_AS(slalom_localizes(std::vector<Nat>{0, 0}, Slalom(Cells{{0}})), Error);
    CHECK_THROWS_AS(Slalom(Cells{{0, 1}}), Error);
  }

  KTree binary(std::size_t depth) {
    std::set<KTree::Node> nodes{{}};
    std::vector<KTree::Node> frontier{{}};
    for (std::size_t d = 0; d < depth; ++d) {
      std::vector<KTree::Node> next;
      for (const auto& s : frontier) {
        for (Nat b = 0; b < 2; ++b) {
          auto t = s;
          t.push_back(b);
          nodes.insert(t);
          next.push_back(t);
        }
      }
      frontier = next;
    }
    return KTree(2, nodes);
  }

  TEST_CASE("ktree_localizes") {
    auto t = binary(2);
    CHECK(ktree_localizes(std::vector<Nat>{}, t));
    CHECK(ktree_localizes(std::vector<Nat>{0, 0}, t));
    CHECK_FALSE(ktree_localizes(std::vector<Nat>{2}, t));
    CHECK_THROWS_AS(KTree(1, {{}}), Error);
    CHECK_THROWS_AS(KTree(2, {{}, {0, 1}}), Error);
  }

  TEST_CASE("ktree_to_slalom_cover") {
    // root has the single successor 0, binary below
    std::set<KTree::Node> nodes{{}, {0}};
    for (Nat a = 0; a < 2; ++a) {
      nodes.insert({0, a});
      for (Nat b = 0; b < 2; ++b) nodes.insert({0, a, b});
    }
    auto s = ktree_to_slalom_cover(KTree(2, nodes), 3);
    REQUIRE(s.length() == 3);
    CHECK(s.cell(0) == std::vector<Nat>{0});
    CHECK(s.cell(1) == std::vector<Nat>{0, 1});
    CHECK(s.cell(2) == std::vector<Nat>{0, 1, 2});

    CHECK_THROWS_AS(ktree_to_slalom_cover(KTree(3, {{}, {0}, {1}, {2}}), 1), Error);

    std::vector<Nat> f{4, 7, 1};
    std::set<KTree::Node> chain{{}, {4}, {4, 7}, {4, 7, 1}};
    auto c = ktree_to_slalom_cover(KTree(2, chain), 3);
    for (std::size_t n = 0; n < 3; ++n) {
      CHECK(std::count(c.cell(n).begin(), c.cell(n).end(), f[n]) == 1);
    }
  }

  TEST_CASE("property: branches of a k-tree are trapped by its slalom cover") {
    Rng rng(5);
    for (int i = 0; i < 200; ++i) {
      // level d gets at most d+1 nodes, so no level overflows its cell
      std::set<KTree::Node> nodes{{}};
      std::vector<KTree::Node> level{{}};
      const std::size_t depth = uniform(rng, 1, 5);
      for (std::size_t d = 0; d < depth; ++d) {
        std::vector<KTree::Node> next;
        std::map<KTree::Node, std::size_t> fanout;
        const std::size_t want = uniform(rng, 1, d + 1);
        for (std::size_t tries = 0; next.size() < want && tries < 20; ++tries) {
          const auto& parent = level[uniform(rng, 0, level.size() - 1)];
          if (fanout[parent] == 2) continue;
          auto t = parent;
          t.push_back(uniform(rng, 0, 5));
          if (nodes.insert(t).second) {
            ++fanout[parent];
            next.push_back(t);
          }
        }
        level = next;
      }
      KTree tree(2, nodes);
      Slalom cover = ktree_to_slalom_cover(tree, depth);
      for (const auto& s : level) {
        REQUIRE(ktree_localizes(s, tree));
        CHECK(slalom_localizes(s, cover));
      }
    }
  }

  TEST_CASE("property: localization ignores cell members other than f(n)") {
    Rng rng(9);
    for (int i = 0; i < 200; ++i) {
      std::size_t len = uniform(rng, 1, 6);
      std::vector<std::vector<Nat>> cells;
      std::vector<Nat> f;
      for (std::size_t n = 0; n < len; ++n) {
        cells.push_back(oracle::elems(random_wset_count(rng, 3 * (n + 1), n + 1)));
        f.push_back(uniform(rng, 0, 3 * n + 2));
      }
      bool before = slalom_localizes(f, Slalom(cells));
      bool expect = true;
      for (std::size_t n = 0; n < len; ++n) {
        expect = expect && std::count(cells[n].begin(), cells[n].end(), f[n]) == 1;
      }
      CHECK(before == expect);
      // swap one member that is not f(n) for a fresh value
      auto changed = cells;
      std::size_t n = uniform(rng, 0, len - 1);
      auto it = std::find_if(changed[n].begin(), changed[n].end(), [&](Nat v) { return v != f[n]; });
      if (it != changed[n].end()) {
        *it = 1000 + n;
        CHECK(slalom_localizes(f, Slalom(changed)) == before);
      }
      for (std::size_t p = 0; p <= len; ++p) {
        if (before) CHECK(slalom_localizes(std::span<const Nat>(f.data(), p), Slalom(cells)));
      }
    }
  }
}
