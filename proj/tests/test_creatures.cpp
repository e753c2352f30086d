#include <doctest.h>

#include <algorithm>

#include "creature_util.hpp"
#include "finloc/creature.hpp"
#include "finloc/error.hpp"
#include "finloc/generators.hpp"
#include "finloc/norm.hpp"

using namespace finloc;
using util::fan;
using util::spaced;

namespace {

std::vector<Nat> values_by_mask(std::size_t n, auto&& f) {
  std::vector<Nat> v(std::size_t{1} << n);
  for (std::size_t m = 0; m < v.size(); ++m) v[m] = f(m);
  return v;
}

Nat popcount(std::size_t m) { return static_cast<Nat>(__builtin_popcountll(m)); }

}  // namespace

TEST_SUITE("creatures") {
  TEST_CASE("validate_norm") {
    auto base = spaced(0, 8);
    CHECK_FALSE(validate_norm(Norm::log(), base).has_value());
    auto log_table = Norm::table(base, values_by_mask(8, [](std::size_t m) { return floor_log2(popcount(m)); }));
    CHECK_FALSE(validate_norm(log_table, base).has_value());
    CHECK(norms_agree(log_table, Norm::log(), base));

    auto four = spaced(0, 4);
    auto card = Norm::table(four, values_by_mask(4, [](std::size_t m) { return popcount(m); }));
    auto v = validate_norm(card, four);
    REQUIRE(v.has_value());
    CHECK(v->axiom == NormViolation::Axiom::bisection);

    auto zero = Norm::table(four, values_by_mask(4, [](std::size_t) { return Nat{0}; }));
    auto z = validate_norm(zero, four);
    REQUIRE(z.has_value());
    CHECK(z->axiom == NormViolation::Axiom::positive);

    std::vector<Nat> other{0, 1, 2, 5};
    CHECK_THROWS_AS(validate_norm(card, other), Error);
  }

  TEST_CASE("norm shifts") {
    auto n = Norm::log(2);
    CHECK(n.value_by_size(32) == 3);
    CHECK(n.value_by_size(2) == 0);
    CHECK(n.shifted(1).value_by_size(32) == 2);
    CHECK(n.unshifted(2).value_by_size(32) == 5);
    CHECK_THROWS_AS(n.unshifted(3), Error);
  }

  TEST_CASE("weight") {
    CHECK(weight(Creature::leaf(2, 7)) == 0);
    CHECK(weight(fan(2, spaced(0, 2))) == 0);  // a k-splitting root carries no norm
    CHECK(weight(fan(2, spaced(0, 8))) == 3);

    auto parts = std::vector<Creature>{fan(2, spaced(0, 8)), fan(2, spaced(10, 32)), Creature::leaf(2, 50)};
    CHECK(weight(build_S_H(parts, Norm::log())) == 1);  // the root over 3 parts has log 3 = 1
    auto wide = std::vector<Creature>{fan(2, spaced(0, 8)), fan(2, spaced(10, 32)),
                                      fan(2, spaced(50, 32)), fan(2, spaced(90, 32)),
                                      fan(2, spaced(130, 32)), fan(2, spaced(170, 32)),
                                      fan(2, spaced(210, 32)), fan(2, spaced(250, 32))};
    CHECK(weight(build_S_H(wide, Norm::log())) == 3);  // min of 3 (root), 3 and 5
  }

  TEST_CASE("contribution") {
    CHECK(contribution(fan(2, {2, 5, 9})) == std::vector<Nat>{2, 5, 9});
    CHECK(contribution(Creature::leaf(3, 4)) == std::vector<Nat>{4});
    auto t = fan(2, spaced(3, 20, 2));
    CHECK(contribution(upper_half(t)) == contribution(t));
  }

  TEST_CASE("creature validation") {
    std::vector<CreatureNode> bad(1);
    bad[0].L = 0;
    bad[0].R = 3;
    CHECK_THROWS_AS(Creature(2, bad), Error);  // L < R on a leaf

    // k-split root over k-split child
    auto inner = fan(2, {1, 2});
    CHECK_THROWS_AS(glue_S(std::vector<Creature>{inner, fan(2, {5, 6})}), Error);

    // overlapping siblings
    CHECK_THROWS_AS(build_S_H(std::vector<Creature>{fan(2, {0, 4}), Creature::leaf(2, 3),
                                                    Creature::leaf(2, 9)},
                              Norm::log()),
                    Error);
    // norm missing on a wide node
    std::vector<CreatureNode> nodes(4);
    nodes[0].L = 0;
    nodes[0].R = 2;
    for (std::size_t i = 1; i < 4; ++i) {
      nodes[i].label = i - 1;
      nodes[i].L = nodes[i].R = i - 1;
      nodes[0].children.push_back(i);
    }
    CHECK_THROWS_AS(Creature(2, nodes), Error);
    nodes[0].norm = Norm::log();
    CHECK_NOTHROW(Creature(2, nodes));
  }

  TEST_CASE("refines") {
    auto t = fan(2, spaced(0, 5));
    CHECK(refines(t, t));
    std::vector<bool> keep(t.size(), true);
    keep[3] = false;
    auto dropped = restrict_to(t, keep);
    CHECK(refines(t, dropped));
    CHECK_FALSE(refines(dropped, t));

    // dropping a child of a k-splitting node changes its kind
    auto inner = std::vector<Creature>{fan(2, {0, 1}), Creature::leaf(2, 4), Creature::leaf(2, 6)};
    auto s = build_S_H(inner, Norm::log());
    std::vector<bool> k2(s.size(), true);
    k2[2] = false;  // second leaf of the k-node
    CHECK_THROWS_AS(restrict_to(s, k2), Error);
  }

  TEST_CASE("upper_half") {
    auto t15 = fan(2, spaced(0, std::size_t{1} << 15));
    REQUIRE(weight(t15) == 15);
    CHECK(weight(upper_half(t15)) == 8);
    auto t0 = fan(2, {1, 2});
    CHECK(same_creature(upper_half(t0), t0));
    auto t1 = fan(2, {1, 2, 3});
    REQUIRE(weight(t1) == 1);
    CHECK(weight(upper_half(t1)) == 1);
    auto back = lower_shifts(upper_half(t15), 7);
    REQUIRE(back.has_value());
    CHECK(same_creature(*back, t15));
    CHECK_FALSE(lower_shifts(t15, 1).has_value());
  }

  TEST_CASE("build_S_H and glue_S") {
    std::vector<Creature> leaves{Creature::leaf(2, 1), Creature::leaf(2, 5), Creature::leaf(2, 9)};
    auto b = build_S_H(leaves, Norm::log());
    CHECK(contribution(b) == std::vector<Nat>{1, 5, 9});
    CHECK(b.root().norm.has_value());
    for (std::size_t c : b.root().children) CHECK_FALSE(b.node(c).norm.has_value());
    CHECK_THROWS_AS(build_S_H(std::vector<Creature>(leaves.begin(), leaves.begin() + 2), Norm::log()),
                    Error);

    std::vector<Creature> wide{fan(2, spaced(0, 8)), fan(2, spaced(20, 16))};
    auto g = glue_S(wide);
    CHECK(g.kind(0) == NodeKind::k_split);
    CHECK(weight(g) == 3);
    CHECK(weight(glue_S(std::vector<Creature>{Creature::leaf(2, 1), Creature::leaf(2, 3)})) == 0);
    CHECK_THROWS_AS(glue_S(std::vector<Creature>{fan(2, {0, 1}), fan(2, spaced(5, 4))}), Error);
  }

  TEST_CASE("sigma_member") {
    std::vector<Creature> parts{fan(2, spaced(0, 4)), Creature::leaf(2, 10), fan(2, spaced(12, 5))};
    auto b = build_S_H(parts, Norm::log());
    auto w = sigma_member(b, parts);
    REQUIRE(w.has_value());
    REQUIRE(w->size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK((*w)[i].first == b.root().children[i]);
      CHECK((*w)[i].second == i);
    }
    auto self = sigma_member(parts[0], parts);
    REQUIRE(self.has_value());
    CHECK(*self == SigmaWitness{{0, 0}});

    std::vector<bool> keep(b.size(), true);
    keep[b.node(b.root().children[2]).children[0]] = false;
    CHECK_FALSE(sigma_member(restrict_to(b, keep), parts).has_value());
  }

  TEST_CASE("property: random creatures validate, survive upper halves, refine transitively") {
    Rng rng(77);
    for (int i = 0; i < 300; ++i) {
      CreatureSpec spec;
      spec.k = uniform(rng, 2, 4);
      spec.depth = uniform(rng, 1, 3);
      spec.log_probability = 0.2;
      auto t = random_creature(rng, spec, uniform(rng, 0, 9));
      Nat w = weight(t);
      auto u = upper_half(t);
      CHECK(weight(u) == w - w / 2);
      CHECK(contribution(u) == contribution(t));
      auto back = lower_shifts(u, w / 2);
      REQUIRE(back.has_value());
      CHECK(same_creature(*back, t));
      auto r1 = random_refinement(rng, t);
      auto r2 = random_refinement(rng, r1);
      CHECK(refines(t, r1));
      CHECK(refines(r1, r2));
      CHECK(refines(t, r2));
      auto cr = contribution(r2), ct = contribution(t);
      CHECK(std::includes(ct.begin(), ct.end(), cr.begin(), cr.end()));
    }
  }
}
