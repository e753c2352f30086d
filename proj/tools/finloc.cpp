#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "finloc/constructions.hpp"
#include "finloc/creature.hpp"
#include "finloc/derivation.hpp"
#include "finloc/error.hpp"
#include "finloc/harness.hpp"
#include "finloc/json_io.hpp"
#include "finloc/largeness.hpp"
#include "finloc/randomname.hpp"
#include "finloc/relations.hpp"
#include "finloc/shrink.hpp"

namespace {

using namespace finloc;

struct Output {
  std::string path;
  bool compact = false;

  void emit(const Json& j) const { write(compact ? j.dump() + "\n" : j.dump(2) + "\n"); }

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path);
    if (!out) fail(Errc::malformed_input, "cannot write " + path);
    out << text;
  }
};

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::malformed_input, "cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    fail(Errc::malformed_input, path + ": " + e.what());
  }
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    fail(Errc::malformed_input, std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

template <class T>
T get(const Json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const Json::exception& e) {
    fail(Errc::malformed_input, std::string("field '") + key + "': " + e.what());
  }
}

Json report_json(const QuantifierReport& r) {
  Json j = {{"witnesses", r.witnesses}, {"count", r.count()}};
  j["evaluated_up_to"] = r.evaluated_up_to ? Json(*r.evaluated_up_to) : Json(nullptr);
  j["tail_holds_from"] = r.tail_holds_from ? Json(*r.tail_holds_from) : Json(nullptr);
  return j;
}

Json opt_json(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

FamilyUniverse universe_from_json(const Json& j) {
  FamilyUniverse u;
  const Json& fams = j.is_array() ? j : field(j, "families");
  if (!fams.is_array()) fail(Errc::malformed_input, "families must be an array");
  for (const auto& f : fams) u.families.push_back(blockfamily_from_json(f));
  if (j.is_object() && j.contains("label")) u.label = get<std::string>(j, "label");
  return u;
}

Json trace_json(const SPlusPhiTrace& t) {
  Json targets = Json::array();
  for (const auto& [p, v] : t.targets) targets.push_back({p, v});
  return {{"X0", to_json(t.x0)}, {"X1", to_json(t.x1)}, {"f", targets},
          {"Y1", to_json(t.y1)}, {"Y", to_json(t.y)},   {"matched", t.matched}};
}

FiniteSetMap oracle_from_json(const Json& j) {
  FiniteSetMap g;
  if (!j.is_array()) fail(Errc::malformed_input, "g must be an array of [point, set] pairs");
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) fail(Errc::malformed_input, "g entries are [point, set]");
    g[e[0].get<Nat>()] = e[1].get<std::vector<Nat>>();
  }
  return g;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::holds:
      return "holds";
    case Verdict::fails:
      return "fails";
    case Verdict::cap_limited:
      return "cap_limited";
  }
  return "cap_limited";
}

Json construct(const std::string& kind, const Json& in) {
  if (kind == "escape-g") {
    auto f = blockfamily_from_json(field(in, "F"));
    return {{"F", to_json(f)}, {"g", partition_to_escaping_g(f)}};
  }
  if (kind == "intervals") {
    auto g = get<std::vector<Nat>>(in, "g");
    auto k = get<std::size_t>(in, "k");
    auto p = g_to_interval_partition(g, k, get<std::size_t>(in, "length"));
    Json out = {{"g", g}, {"k", k}, {"cutpoints", p.cutpoints()}};
    if (in.contains("X")) {
      auto x = wset_from_json(in.at("X"));
      out["crowding"] = crowding_function(x, k, get<std::size_t>(in, "domain"));
    }
    return out;
  }
  if (kind == "meabou") {
    auto x = wset_from_json(field(in, "X"));
    auto f = blockfamily_from_json(field(in, "F"));
    auto g = get<std::vector<std::vector<Nat>>>(in, "g");
    auto r = meabou_partition(x, f, g);
    return {{"X", to_json(x)},
            {"F", to_json(f)},
            {"g", g},
            {"family", to_json(r.family)},
            {"disjoint_blocks", r.disjoint_blocks}};
  }
  if (kind == "splusphi") {
    auto x = wset_from_json(field(in, "X"));
    auto phi = get<std::vector<Nat>>(in, "phi");
    auto y0 = wset_from_json(field(in, "Y0"));
    FiniteSetMap g =
        in.contains("g") ? oracle_from_json(in.at("g")) : s_plus_phi_targets(x, phi, y0).targets;
    auto t = s_plus_phi_pipeline(x, phi, y0, g);
    Json out = trace_json(t);
    out["perfect_oracle"] = !in.contains("g");
    out["S_plus_phi"] = report_json(eval_S_plus_phi(x, t.y, phi));
    return out;
  }
  if (kind == "lemat") {
    BranchPrefix x{get<std::vector<std::uint8_t>>(in, "x")};
    auto f = blockfamily_from_json(field(in, "F"));
    auto k = get<std::size_t>(in, "k");
    auto r = lemat_witness(x, f, k);
    Json out = {{"witness", opt_json(r.witness)}};
    if (r.trace) {
      out["trace"] = {{"u", r.trace->u},
                      {"d", r.trace->d},
                      {"selected", r.trace->selected},
                      {"restrictions", r.trace->restrictions}};
    }
    return out;
  }
  fail(Errc::malformed_input, "unknown construction '" + kind + "'");
}

int run(int argc, char** argv) {
  CLI::App app{"Finite analogs of localization relations, creatures and name measures"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  std::uint64_t seed = ExperimentConfig{}.seed;
  std::size_t window = ExperimentConfig{}.window;
  app.add_option("--out", out.path, "Write the result to a file");
  app.add_flag("--json", out.compact, "Single-line JSON output");
  app.add_option("--seed", seed, "Random seed");
  app.add_option("--window", window, "Window length");
  int status = 0;

  // check
  auto* check = app.add_subcommand("check", "Evaluate a localization relation on a window");
  std::string relation, in_path;
  std::size_t k = 0;
  check->add_option("--relation", relation)
      ->required()
      ->check(CLI::IsMember({"rforall", "rexists", "sk", "splus", "spluseps", "splusphi"}));
  check->add_option("--k", k, "k, or the run length m for splus");
  check->add_option("--in", in_path)->required();
  check->callback([&] {
    Json in = read_json(in_path);
    auto x = wset_from_json(field(in, "X"));
    Json res;
    if (relation == "rforall" || relation == "rexists") {
      auto f = blockfamily_from_json(field(in, "F"));
      res = report_json(relation == "rforall" ? eval_R_forall_k(x, f, k) : eval_R_exists_k(x, f, k));
    } else {
      auto y = wset_from_json(field(in, "Y"));
      if (relation == "sk") res = report_json(eval_S_k(x, y, k));
      if (relation == "spluseps") res = report_json(eval_S_plus_eps(x, y));
      if (relation == "splusphi") res = report_json(eval_S_plus_phi(x, y, get<std::vector<Nat>>(in, "phi")));
      if (relation == "splus") res = {{"start", opt_json(eval_S_plus(x, y, k))}};
    }
    out.emit(res);
  });

  // invariant
  auto* invariant = app.add_subcommand("invariant", "Exact d and b of a finite relation and its dual");
  invariant->add_option("--in", in_path)->required();
  invariant->callback([&] {
    auto r = relinstance_from_json(read_json(in_path));
    auto c = r.complement_inverse();
    auto d = d_fin(r), b = b_fin(r), dd = d_fin(c), bd = b_fin(c);
    out.emit({{"d", d.size},
              {"b", b.size},
              {"d_dual", dd.size},
              {"b_dual", bd.size},
              {"d_members", d.members},
              {"b_members", b.members},
              {"dom_rng", r.satisfies_dom_rng()}});
  });

  // largeness
  auto* largeness = app.add_subcommand("largeness", "(l,k)-largeness against a family universe");
  std::size_t l = 2, tail = 0;
  std::string x_path, universe_path;
  largeness->add_option("--l", l)->required();
  largeness->add_option("--k", k)->required();
  largeness->add_option("--x", x_path)->required();
  largeness->add_option("--universe", universe_path)->required();
  largeness->add_option("--tail", tail);
  largeness->callback([&] {
    auto x = wset_from_json(read_json(x_path));
    auto u = universe_from_json(read_json(universe_path));
    auto v = is_lk_large(x, u, l, k, tail);
    Json j = {{"large", v.large}, {"counterexample", nullptr}};
    if (v.counterexample) j["counterexample"] = {v.counterexample->first, v.counterexample->second};
    out.emit(j);
    status = v.large ? 0 : 1;
  });

  // transfer
  auto* transfer = app.add_subcommand("transfer", "Exhaustive largeness transfer oracle");
  std::size_t lmax = 4;
  bool exhaustive = false;
  transfer->add_flag("--exhaustive", exhaustive)->required();
  transfer->add_option("--lmax", lmax);
  transfer->callback([&] {
    std::vector<PropertyResult> res{prop_transfer(lmax, std::min(window, 2 * lmax))};
    out.write(report_jsonl(res, false));
    status = all_passed(res) ? 0 : 1;
  });

  // construct
  auto* cons = app.add_subcommand("construct", "Run a witness-building construction");
  std::string cons_kind;
  cons->add_option("kind", cons_kind)
      ->required()
      ->check(CLI::IsMember({"escape-g", "intervals", "meabou", "splusphi", "lemat"}));
  cons->add_option("--in", in_path)->required();
  cons->callback([&] { out.emit(construct(cons_kind, read_json(in_path))); });

  // creature
  auto* creature = app.add_subcommand("creature", "Validate, weigh or shrink a creature");
  std::string creature_action, b_path;
  creature->add_option("action", creature_action)
      ->required()
      ->check(CLI::IsMember({"validate", "weight", "shrink"}));
  creature->add_option("--in", in_path)->required();
  creature->add_option("--b", b_path, "B for shrink");
  creature->callback([&] {
    auto t = creature_from_json(read_json(in_path));
    if (creature_action == "validate") {
      out.emit({{"valid", true}, {"nodes", t.size()}});
    } else if (creature_action == "weight") {
      out.emit({{"weight", weight(t)}, {"contribution", contribution(t)}});
    } else {
      if (b_path.empty()) fail(Errc::malformed_input, "shrink needs --b");
      auto b = wset_from_json(read_json(b_path));
      auto s = claim7_shrink(t, b);
      auto c = check_claim7(t, s, b);
      out.emit({{"creature", to_json(s)},
                {"weight", weight(s)},
                {"input_weight", weight(t)},
                {"refinement", c.refinement},
                {"weight_bound", c.weight_bound},
                {"gap_sparse", c.gap_sparse}});
      status = c.ok() ? 0 : 1;
    }
  });

  // fragment
  auto* fragment = app.add_subcommand("fragment", "Order between condition fragments");
  std::string fragment_action, p_path, q_path, hints_path;
  std::size_t cap = 3;
  fragment->add_option("action", fragment_action)->required()->check(CLI::IsMember({"leq"}));
  fragment->add_option("--p", p_path)->required();
  fragment->add_option("--q", q_path)->required();
  fragment->add_option("--hints", hints_path);
  fragment->add_option("--cap", cap, "Sigma* search depth");
  fragment->callback([&] {
    auto p = fragment_from_json(read_json(p_path));
    auto q = fragment_from_json(read_json(q_path));
    std::optional<FragmentHints> h;
    if (!hints_path.empty()) h = hints_from_json(read_json(hints_path));
    auto v = fragment_leq(p, q, h ? &*h : nullptr, cap);
    Json j = {{"verdict", verdict_name(v.verdict)}, {"reason", v.reason}};
    if (v.certificate) j["certificate"] = to_json(*v.certificate);
    out.emit(j);
    status = v.verdict == Verdict::holds ? 0 : 1;
  });

  // measure
  auto* measure = app.add_subcommand("measure", "Random-name measure arithmetic");
  std::string measure_action, family_path;
  std::size_t m = 1, depth = 5;
  std::uint64_t trials = ExperimentConfig{}.trials;
  measure->add_option("action", measure_action)->required()->check(CLI::IsMember({"tail", "bound", "mc"}));
  measure->add_option("--m", m);
  measure->add_option("--depth", depth);
  measure->add_option("--family", family_path);
  measure->add_option("--trials", trials);
  measure->callback([&] {
    if (measure_action == "tail") {
      out.emit({{"m", m}, {"tail_bound", to_json(tail_bound(m))}});
      return;
    }
    if (family_path.empty()) fail(Errc::malformed_input, measure_action + " needs --family");
    auto f = blockfamily_from_json(read_json(family_path));
    NameModel model(depth);
    if (measure_action == "bound") {
      auto b = localization_failure_bound(f, m, model);
      out.emit({{"value", to_json(b.value)}, {"tail", to_json(b.tail)}, {"within", b.within}});
    } else {
      auto r = mc_localization_rate(f, m, model, trials, seed);
      out.emit({{"trials", r.trials}, {"failures", r.failures}, {"rate", r.rate}, {"radius", r.radius}});
    }
  });

  // suite
  auto* suite = app.add_subcommand("suite", "Run property suites, one JSON line per property");
  ExperimentConfig cfg;
  std::string suite_name;
  suite->add_option("name", suite_name, "Suite name or 'all'")->required();
  suite->add_option("--cases", cfg.cases, "Cases per property (0: defaults)");
  suite->add_option("--trials", cfg.trials, "Monte Carlo trials");
  suite->add_option("--lmax", cfg.lmax);
  suite->add_flag("--timings", cfg.timings, "Include per-property seconds");
  suite->callback([&] {
    cfg.seed = seed;
    cfg.window = window;
    std::vector<PropertyResult> res;
    if (suite_name == "all") {
      for (const char* s : kSuites) {
        auto part = run_suite(s, cfg);
        res.insert(res.end(), part.begin(), part.end());
      }
    } else {
      res = run_suite(suite_name, cfg);
    }
    out.write(report_jsonl(res, cfg.timings));
    status = all_passed(res) ? 0 : 1;
  });

  // gen
  auto* gen = app.add_subcommand("gen", "Seeded random valid instance");
  std::string gen_kind;
  ExperimentConfig gcfg;
  gen->add_option("kind", gen_kind)
      ->required()
      ->check(CLI::IsMember({"wset", "blockfamily", "creature", "fragment", "relinstance"}));
  gen->add_option("--k", gcfg.k);
  gen->add_option("--depth", gcfg.depth);
  gen->add_option("--count", gcfg.count);
  gen->add_option("--min-size", gcfg.min_size);
  gen->callback([&] {
    gcfg.seed = seed;
    gcfg.window = window;
    out.emit(gen_instance(gen_kind, gcfg));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const finloc::Error& e) {
    std::cerr << "error [" << finloc::errc_name(e.code()) << "]: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
