#include <string>
#include <vector>

#include "finloc/derivation.hpp"
#include "finloc/generators.hpp"
#include "finloc/harness.hpp"
#include "finloc/pair_poset.hpp"
#include "tally.hpp"

namespace finloc {

using detail::Tally;

PropertyResult prop_pair_poset(std::uint64_t seed, std::uint64_t cases) {
  Tally t("invariants", "pair_poset");
  Rng rng(seed);
  const Nat range = 24;
  std::uint64_t joins = 0;
  for (std::uint64_t i = 0; i < cases; ++i) {
    PairCondition p0 = random_pair_condition(rng, range, uniform(rng, 0, 3));
    PairCondition p1 = random_pair_extension(rng, p0, range);
    PairCondition p2 = random_pair_extension(rng, p1, range);
    bool order = pair_leq(p0, p0) && pair_leq(p0, p1) && pair_leq(p1, p2) && pair_leq(p0, p2);

    // two conditions sharing u are always compatible through their join
    PairCondition a = p1, b = p1;
    for (const auto& f : random_pair_condition(rng, range, uniform(rng, 1, 2)).kk) a.kk.insert(f);
    for (const auto& f : random_pair_condition(rng, range, uniform(rng, 1, 2)).kk) b.kk.insert(f);
    auto j = pair_join(a, b);
    bool join = j && pair_leq(a, *j) && pair_leq(b, *j) && j->u == a.u;
    joins += j ? 1 : 0;
    bool distinct_u = p0.u == p2.u || !pair_join(p0, p2).has_value();
    t.check(order && join && distinct_u, [&] {
      return Json{{"p0", to_json(p0)}, {"p1", to_json(p1)}, {"p2", to_json(p2)},
                  {"a", to_json(a)},   {"b", to_json(b)}};
    });
  }
  t.note(std::to_string(joins) + " same-u joins built");
  return t.done(cases);
}

PropertyResult prop_fragment_poset(std::uint64_t seed, std::uint64_t cases) {
  Tally t("invariants", "fragment_poset");
  Rng rng(seed);
  for (std::uint64_t i = 0; i < cases; ++i) {
    CreatureSpec spec;
    spec.k = 2;
    spec.depth = 2;
    spec.max_table_children = 4;
    auto p = random_fragment(rng, spec, uniform(rng, 3, 5), uniform(rng, 0, 3));
    Json instance = {{"p", to_json(p)}};
    try {
      auto e1 = random_extension(rng, p);
      auto e2 = random_extension(rng, e1.q);
      instance["q"] = to_json(e1.q);
      instance["r"] = to_json(e2.q);
      bool refl = fragment_leq(p, p).verdict == Verdict::holds;
      bool pq = fragment_leq(p, e1.q, &e1.hints).verdict == Verdict::holds;
      bool qr = fragment_leq(e1.q, e2.q, &e2.hints).verdict == Verdict::holds;
      auto pr = compose_hints(e1.hints, e2.hints);
      bool trans = verify_fragment_certificate(p, e2.q, pr) &&
                   fragment_leq(p, e2.q, &pr).verdict == Verdict::holds;
      t.check(refl && pq && qr && trans, [&] {
        instance["reflexive"] = refl;
        instance["p_le_q"] = pq;
        instance["q_le_r"] = qr;
        instance["p_le_r"] = trans;
        return instance;
      });
    } catch (const Error& e) {
      instance["error"] = e.what();
      t.bad(instance);
    }
  }
  return t.done(cases);
}

PropertyResult prop_generated_valid(std::uint64_t seed, std::uint64_t cases) {
  Tally t("invariants", "generated_valid");
  Rng rng(seed);
  static const char* kinds[] = {"wset", "blockfamily", "creature", "fragment", "relinstance"};
  for (std::uint64_t i = 0; i < cases; ++i) {
    ExperimentConfig cfg;
    cfg.seed = derive_seed(seed, i);
    cfg.window = uniform(rng, 8, 300);
    cfg.k = uniform(rng, 1, 4);
    cfg.depth = uniform(rng, 1, 3);
    cfg.count = uniform(rng, 1, 10);
    cfg.min_size = uniform(rng, 1, 4);
    std::string kind = kinds[i % 5];
    Json j;
    try {
      j = gen_instance(kind, cfg);
      Json back;
      if (kind == "wset") back = to_json(wset_from_json(j));
      if (kind == "blockfamily") back = to_json(blockfamily_from_json(j));
      if (kind == "creature") back = to_json(creature_from_json(j));
      if (kind == "fragment") back = to_json(fragment_from_json(j));
      if (kind == "relinstance") back = to_json(relinstance_from_json(j));
      t.check(back == j, [&] { return Json{{"kind", kind}, {"instance", j}}; });
    } catch (const Error& e) {
      t.bad(Json{{"kind", kind}, {"seed", cfg.seed}, {"error", e.what()}});
    }
  }
  return t.done(cases);
}

}  // namespace finloc
