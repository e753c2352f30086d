#include <doctest.h>

#include "creature_util.hpp"
#include "finloc/error.hpp"
#include "finloc/generators.hpp"
#include "finloc/harness.hpp"
#include "finloc/json_io.hpp"
#include "finloc/largeness.hpp"

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

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("round trips") {
    WSet x(20, {1, 4, 9});
    CHECK(wset_from_json(to_json(x)) == x);
    BlockFamily f(12, {{0, 1}, {2, 3, 4}, {5}}, true);
    CHECK(blockfamily_from_json(to_json(f)) == f);

    auto t = build_S_H(std::vector<Creature>{fan(2, spaced(0, 20), Norm::log(1)),
                                             Creature::leaf(2, 25), fan(2, {30, 31})},
                       Norm::log());
    CHECK(same_creature(creature_from_json(to_json(t)), t));
    auto table = Norm::table({0, 1, 2}, {0, 0, 0, 1, 0, 1, 1, 1});
    std::vector<CreatureNode> nodes(4);
    nodes[0].R = 2;
    nodes[0].norm = table;
    for (std::size_t i = 1; i < 4; ++i) {
      nodes[i].label = i - 1;
      nodes[i].L = nodes[i].R = i - 1;
      nodes[0].children.push_back(i);
    }
    Creature tt(2, nodes);
    CHECK(same_creature(creature_from_json(to_json(tt)), tt));

    ConditionFragment p{{}, {t}};
    auto p2 = fragment_from_json(to_json(p));
    CHECK(p2.w == p.w);
    CHECK(same_creature(p2.creatures[0], t));

    auto rel = FiniteRelationInstance::from_table({{true, false}, {false, true}});
    CHECK(to_json(relinstance_from_json(to_json(rel))) == to_json(rel));

    PairCondition pc{{1, 5}, {{{{2, 3}}}}};
    auto pc2 = pair_condition_from_json(to_json(pc));
    CHECK(pc2.u == pc.u);
    CHECK(pc2.kk == pc.kk);

    FragmentHints h{{0, 1}, {Derivation::upper_half_of(Derivation::of_part(0))}};
    CHECK(to_json(hints_from_json(to_json(h))) == to_json(h));
    CHECK(to_json(Rational(-3, 9)) == Json{{"num", -1}, {"den", 3}});
  }

  TEST_CASE("malformed input") {
    CHECK(code_of_call([] { wset_from_json(Json::parse(R"({"elements":[1]})")); }) ==
          Errc::malformed_input);
    CHECK(code_of_call([] { wset_from_json(Json::parse(R"([1,2])")); }) == Errc::malformed_input);
    CHECK(code_of_call([] {
            creature_from_json(Json::parse(R"({"k":2,"nodes":[{"path":[],"L":0,"R":3}],"norms":[]})"));
          }) == Errc::invalid_creature);
  }

  TEST_CASE("harness configuration and suites") {
    ExperimentConfig cfg;
    CHECK_NOTHROW(check_config(cfg));
    cfg.lmax = 9;
    CHECK(code_of_call([&] { check_config(cfg); }) == Errc::malformed_input);
    CHECK(code_of_call([] { run_suite("nonsense", ExperimentConfig{}); }) == Errc::unknown_suite);

    ExperimentConfig small;
    small.cases = 5;
    auto results = run_suite("measure", small);
    CHECK(all_passed(results));
    auto lines = report_jsonl(results, false);
    auto last = lines.substr(lines.rfind('\n', lines.size() - 2) + 1);
    auto summary = Json::parse(last);
    CHECK(summary["summary"] == true);
    CHECK(summary["all_passed"] == true);
    CHECK(lines.find("seconds") == std::string::npos);
    CHECK(report_jsonl(run_suite("measure", small), false) == lines);
  }

  TEST_CASE("gen_instance") {
    ExperimentConfig cfg;
    cfg.k = 2;
    cfg.depth = 2;
    auto t = creature_from_json(gen_instance("creature", cfg));
    CHECK(t.k() == 2);

    cfg.min_size = 3;
    auto f = blockfamily_from_json(gen_instance("blockfamily", cfg));
    CHECK(f.covering());
    CHECK(in_P_k(f, 2));

    CHECK(code_of_call([&] { gen_instance("unicorn", cfg); }) == Errc::malformed_input);
    cfg.count = 0;
    CHECK(wset_from_json(gen_instance("wset", cfg)).empty());
  }
}
