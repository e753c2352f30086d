#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "finloc/constructions.hpp"
#include "finloc/error.hpp"
#include "finloc/generators.hpp"
#include "finloc/relations.hpp"
#include "oracle.hpp"

using namespace finloc;

namespace {

// length-then-lexicographic code, computed by counting shorter sequences
Nat code_oracle(const std::vector<std::uint8_t>& bits) {
  Nat v = 0;
  for (auto b : bits) v = 2 * v + b;
  return ((Nat{1} << bits.size()) - 1) + v;
}

std::vector<Nat> chain_codes(const std::vector<std::uint8_t>& bits, std::size_t upto) {
  std::vector<Nat> c;
  for (std::size_t i = 0; i <= upto; ++i) {
    c.push_back(code_oracle(std::vector<std::uint8_t>(bits.begin(), bits.begin() + i)));
  }
  return c;
}

}  // namespace

TEST_SUITE("constructions") {
  TEST_CASE("coding bijection") {
    CHECK(code_of(std::vector<std::uint8_t>{}) == 0);
    CHECK(code_of(std::vector<std::uint8_t>{0}) == 1);
    CHECK(code_of(std::vector<std::uint8_t>{1}) == 2);
    CHECK(code_of(std::vector<std::uint8_t>{0, 0}) == 3);
    for (Nat c = 0; c < 2000; ++c) {
      auto s = decode(c);
      CHECK(code_of(s) == c);
      CHECK(code_oracle(s) == c);
      CHECK(coded_length(c) == s.size());
    }
  }

  TEST_CASE("branch_complement") {
    BranchPrefix zeros{{0, 0, 0, 0}};
    auto x = branch_complement(zeros, 7);  // codes of sequences of length <= 2
    CHECK(oracle::elems(x) == std::vector<Nat>{2, 4, 5, 6});
    CHECK(branch_complement(zeros, 1).empty());

    BranchPrefix flipped{{0, 1, 0, 0}};
    auto y = branch_complement(flipped, 31);
    auto z = branch_complement(zeros, 31);
    std::vector<Nat> diff;
    std::set_symmetric_difference(y.elements().begin(), y.elements().end(), z.elements().begin(),
                                  z.elements().end(), std::back_inserter(diff));
    auto a = chain_codes(zeros.bits, 4), b = chain_codes(flipped.bits, 4);
    std::vector<Nat> expect(a.begin() + 2, a.end());
    expect.insert(expect.end(), b.begin() + 2, b.end());
    std::sort(expect.begin(), expect.end());
    CHECK(diff == expect);
    CHECK_THROWS_AS(branch_complement(zeros, 63), Error);
  }

  TEST_CASE("lemat_witness") {
    BranchPrefix x{{1, 0, 1, 1, 0}};
    auto chain = chain_codes(x.bits, 5);
    // blocks avoiding the chain
    BlockFamily clean(63, {{3, 4}, {6, 7}}, false);
    CHECK(lemat_witness(x, clean, 1).witness == 0);

    // each block: one chain point plus k others
    const std::size_t k = 1;
    std::vector<std::vector<Nat>> adv;
    std::vector<Nat> others{1, 3, 9, 10, 15};
    for (std::size_t i = 0; i < 5; ++i) {
      std::vector<Nat> b{chain[i], others[i]};
      std::sort(b.begin(), b.end());
      adv.push_back(b);
    }
    for (auto c : others) CHECK(std::find(chain.begin(), chain.end(), c) == chain.end());
    auto r = lemat_witness(x, BlockFamily(63, adv, false), k);
    CHECK_FALSE(r.witness.has_value());
    REQUIRE(r.trace.has_value());
    for (const auto& f : r.trace->restrictions) CHECK(f.size() <= k + 1);

    BlockFamily singleton(63, {{chain[3]}}, false);
    CHECK_FALSE(lemat_witness(x, singleton, 0).witness.has_value());
    CHECK_THROWS_AS(lemat_witness(x, singleton, 1), Error);
  }

  TEST_CASE("partition_to_escaping_g") {
    auto g = partition_to_escaping_g(BlockFamily(7, {oracle::range(0, 3), oracle::range(3, 7)}, true));
    CHECK(g == std::vector<Nat>{3, 0, 0, 7, 0, 0, 0});
    auto s = partition_to_escaping_g(BlockFamily(4, {{0}, {1}, {2}, {3}}, true));
    CHECK(s == std::vector<Nat>{1, 2, 3, 4});
    CHECK(partition_to_escaping_g(BlockFamily(5, {oracle::range(0, 5)}, true)) ==
          std::vector<Nat>{5, 0, 0, 0, 0});
  }

  TEST_CASE("sparse_range_function") {
    std::vector<Nat> f(40);
    std::iota(f.begin(), f.end(), 1);  // f(n) = n + 1
    auto fp = sparse_range_function(f, 10);
    // f'(0) = 0, f'(n+1) = f(f'(n)) + 2 = f'(n) + 3
    CHECK(fp == std::vector<Nat>{0, 3, 6, 9, 12, 15, 18, 21, 24, 27});
    for (std::size_t i = 0; i + 1 < fp.size(); ++i) CHECK(f[fp[i]] + 1 < fp[i + 1]);
  }

  TEST_CASE("g_to_interval_partition") {
    std::vector<Nat> g(20);
    for (Nat n = 0; n < 20; ++n) g[n] = 2 * n + 1;
    auto p = g_to_interval_partition(g, 1, 2);
    CHECK(std::vector<Nat>(p.cutpoints().begin(), p.cutpoints().end()) == std::vector<Nat>{0, 3, 12});
    CHECK_THROWS_AS(g_to_interval_partition(g, 1, 4), Error);  // k_3 = 39 is beyond g

    std::vector<Nat> zero(10, 0);
    auto z = g_to_interval_partition(zero, 0, 5);
    CHECK(std::vector<Nat>(z.cutpoints().begin(), z.cutpoints().end()) ==
          std::vector<Nat>{0, 1, 2, 3, 4, 5});
    std::vector<Nat> five{5};
    CHECK(g_to_interval_partition(five, 2, 1).cutpoints()[1] == 8);
  }

  TEST_CASE("crowding_function") {
    auto all = crowding_function(WSet::interval(0, 30, 30), 1, 20);
    for (Nat n = 0; n < 20; ++n) CHECK(all[n] == n + 3);
    WSet ev(30, oracle::range(0, 30, 2));
    CHECK(crowding_function(ev, 1, 1)[0] == 5);
    auto k0 = crowding_function(ev, 0, 10);
    for (Nat n = 0; n < 10; ++n) CHECK(k0[n] == (n % 2 == 0 ? n + 1 : n + 2));
    CHECK_THROWS_AS(crowding_function(ev, 1, 27), Error);
  }

  TEST_CASE("meabou_partition") {
    BlockFamily f(8, {oracle::range(0, 4), oracle::range(4, 8)}, true);
    WSet x(8, {2, 3, 6, 7});
    auto r = meabou_partition(x, f, {{0, 1}, {4, 5}});
    CHECK(r.family == BlockFamily(8, {{0, 1}, {4, 5}, {2, 3}, {6, 7}}, true));
    REQUIRE(r.disjoint_blocks.size() == 2);
    CHECK(r.family.block(r.disjoint_blocks[0]) == std::vector<Nat>{0, 1});
    CHECK(r.family.block(r.disjoint_blocks[1]) == std::vector<Nat>{4, 5});

    BlockFamily pairs(4, {{0, 1}, {2, 3}}, true);
    CHECK(meabou_partition(x, pairs, {{0, 1}, {2, 3}}).family == pairs);

    // three leftovers 2, 3, 6 form a single triple
    BlockFamily f7(7, {oracle::range(0, 4), oracle::range(4, 7)}, true);
    auto t = meabou_partition(WSet(7, {}), f7, {{0, 1}, {4, 5}});
    CHECK(t.family == BlockFamily(7, {{0, 1}, {2, 3, 6}, {4, 5}}, true));

    CHECK_THROWS_AS(meabou_partition(x, f, {{0, 1}, {1, 5}}), Error);
    CHECK_THROWS_AS(meabou_partition(x, f, {{0}, {4, 5}}), Error);
  }

  TEST_CASE("s_plus_phi pipeline") {
    const Nat n = 1200;
    WSet x = WSet::interval(0, n + 1, n + 1);
    std::vector<Nat> phi(n + 8);
    std::iota(phi.begin(), phi.end(), Nat{1});
    WSet y0(n + 1, {0, 400, n});
    auto targets = s_plus_phi_targets(x, phi, y0);
    auto perfect = s_plus_phi_pipeline(x, phi, y0, targets.targets);
    CHECK_FALSE(perfect.matched.empty());
    CHECK(eval_S_plus_phi(x, perfect.y, phi).count() >= 1);

    FiniteSetMap wrong;
    for (const auto& [p, v] : targets.targets) wrong[p] = {v.front(), v.front() + 1};
    auto miss = s_plus_phi_pipeline(x, phi, y0, wrong);
    CHECK(miss.matched.empty());
    CHECK(miss.x1 == perfect.x1);

    // constant phi = 1 with X everything: every gap of Y is rich
    std::vector<Nat> one(n + 8, 1);
    auto c = s_plus_phi_pipeline(x, one, y0, s_plus_phi_targets(x, one, y0).targets);
    REQUIRE(c.y.size() >= 2);
    auto rich = eval_S_k(x, c.y, 1);
    CHECK(rich.count() == c.y.size() - 1);

    CHECK_THROWS_AS(s_plus_phi_targets(WSet(n + 1, {0, 5}), phi, y0), Error);
  }
}
