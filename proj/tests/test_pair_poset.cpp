#include <doctest.h>

#include "finloc/error.hpp"
#include "finloc/generators.hpp"
#include "finloc/pair_poset.hpp"

using namespace finloc;

TEST_SUITE("pair_poset") {
  TEST_CASE("pair_leq") {
    PairCondition p0{{1, 3}, {{{{4, 5}}, {{6, 9}}}}};
    CHECK(pair_leq(p0, p0));

    PairCondition both_new{{1, 3, 4, 5}, p0.kk};
    CHECK_FALSE(pair_leq(p0, both_new));
    PairCondition one_new{{1, 3, 4}, p0.kk};
    CHECK(pair_leq(p0, one_new));

    PairCondition more = p0;
    more.kk.insert({{{0, 2}}});
    CHECK(pair_leq(p0, more));
    CHECK_FALSE(pair_leq(more, p0));

    PairCondition below{{0, 1, 3}, p0.kk};
    CHECK_FALSE(pair_leq(p0, below));  // u1 ∩ (1 + max u0) must equal u0

    PairCondition empty{{}, {}};
    CHECK(pair_leq(empty, PairCondition{{0}, {}}));
  }

  TEST_CASE("pair_join") {
    PairCondition a{{2}, {{{{0, 1}}}}};
    PairCondition b{{2}, {{{{3, 4}}}}};
    auto j = pair_join(a, b);
    REQUIRE(j.has_value());
    CHECK(j->kk.size() == 2);
    CHECK(pair_leq(a, *j));
    CHECK(pair_leq(b, *j));
    CHECK_FALSE(pair_join(a, PairCondition{{3}, {}}).has_value());
  }

  TEST_CASE("check_pair_condition") {
    CHECK_NOTHROW(check_pair_condition(PairCondition{{0, 4}, {{{{1, 2}}, {{3, 5}}}}}));
    CHECK_THROWS_AS(check_pair_condition(PairCondition{{4, 0}, {}}), Error);
    CHECK_THROWS_AS(check_pair_condition(PairCondition{{}, {{{{1, 2}}, {{2, 5}}}}}), Error);
    CHECK_THROWS_AS(check_pair_condition(PairCondition{{}, {{{{2, 1}}}}}), Error);
  }

  TEST_CASE("property: random extensions are above and chains compose") {
    Rng rng(5);
    for (int i = 0; i < 300; ++i) {
      auto p = random_pair_condition(rng, 24, uniform(rng, 0, 3));
      auto q = random_pair_extension(rng, p, 24);
      auto r = random_pair_extension(rng, q, 24);
      CHECK(pair_leq(p, p));
      CHECK(pair_leq(p, q));
      CHECK(pair_leq(q, r));
      CHECK(pair_leq(p, r));
    }
  }
}
