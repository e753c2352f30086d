#include "finloc/harness.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <set>
#include <sstream>

#include "finloc/error.hpp"

#include "finloc/generators.hpp"
#include "finloc/randomname.hpp"

namespace finloc {

void check_config(const ExperimentConfig& cfg) {
  auto need = [](bool ok, const std::string& what) {
    if (!ok) fail(Errc::malformed_input, what);
  };
  need(cfg.window >= 8 && cfg.window <= 100000, "window must lie in [8, 100000]");
  need(cfg.lmax >= 2 && cfg.lmax <= 6, "lmax must lie in [2, 6]");
  need(cfg.trials >= 1, "trials must be positive");
  need(cfg.k >= 1 && cfg.k <= 6, "k must lie in [1, 6]");
  need(cfg.depth >= 1 && cfg.depth <= 4, "depth must lie in [1, 4]");
  need(cfg.count <= 64, "count must be at most 64");
  need(cfg.min_size >= 1 && cfg.min_size <= 64, "min-size must lie in [1, 64]");
}

std::vector<PropertyResult> run_suite(const std::string& name, const ExperimentConfig& cfg) {
  check_config(cfg);
  auto n = [&](std::uint64_t dflt) { return cfg.cases ? cfg.cases : dflt; };
  auto s = [&](std::uint64_t i) { return derive_seed(cfg.seed, i); };
  std::vector<std::function<PropertyResult()>> jobs;
  if (name == "relations") {
    jobs.push_back([=] { return prop_relation_chain(s(1), n(1000), cfg.window); });
    jobs.push_back([] { return prop_duality(3); });
  } else if (name == "largeness") {
    jobs.push_back([=] { return prop_transfer(cfg.lmax, std::min(cfg.window, 2 * cfg.lmax)); });
    jobs.push_back([=] { return prop_split_2_3(s(2), n(200)); });
  } else if (name == "constructions") {
    jobs.push_back([=] { return prop_escaping_g(s(3), n(200)); });
    jobs.push_back([=] { return prop_interval_partition(s(4), n(200)); });
    jobs.push_back([=] { return prop_meabou(s(5), n(200)); });
    jobs.push_back([=] { return prop_s_plus_phi(s(6), n(200)); });
    jobs.push_back([=] { return prop_lemat(s(7), n(200)); });
  } else if (name == "creatures") {
    jobs.push_back([=] { return prop_upper_half(s(8), n(500)); });
    jobs.push_back([=] { return prop_claim7(s(9), n(100)); });
    jobs.push_back([=] { return prop_refines_order(s(10), n(200)); });
    jobs.push_back([=] { return prop_sigma_build(s(11), n(200)); });
    jobs.push_back([=] { return prop_norm_quartering(s(12), n(50)); });
    jobs.push_back([=] { return prop_shrink_condition(s(13), std::min<std::uint64_t>(n(2), 4)); });
  } else if (name == "measure") {
    jobs.push_back([] { return prop_tail_bound(16, 40); });
    jobs.push_back([=] { return prop_mc_vs_exact(s(14), cfg.trials); });
    jobs.push_back([] { return prop_meet_probability(4); });
    jobs.push_back([=] { return prop_name_consistency(s(15), n(200)); });
  } else if (name == "invariants") {
    jobs.push_back([=] { return prop_pair_poset(s(16), n(500)); });
    jobs.push_back([=] { return prop_fragment_poset(s(17), n(500)); });
    jobs.push_back([=] { return prop_generated_valid(s(18), n(100)); });
  } else {
    fail(Errc::unknown_suite, "unknown suite '" + name + "'");
  }
  std::vector<std::future<PropertyResult>> running;
  for (auto& job : jobs) running.push_back(std::async(std::launch::async, job));
  std::vector<PropertyResult> out;
  for (auto& f : running) out.push_back(f.get());
  return out;
}

Json to_json(const PropertyResult& r, bool with_timing) {
  Json j = {{"suite", r.suite},   {"property", r.name},     {"passed", r.passed},
            {"cases", r.cases},   {"failures", r.failures}};
  if (r.counterexample) j["counterexample"] = *r.counterexample;
  if (!r.note.empty()) j["note"] = r.note;
  if (with_timing) j["seconds"] = r.seconds;
  return j;
}

std::string report_jsonl(const std::vector<PropertyResult>& results, bool with_timing) {
  std::ostringstream os;
  std::set<std::string> suites;
  std::size_t passed = 0;
  for (const auto& r : results) {
    os << to_json(r, with_timing).dump() << '\n';
    suites.insert(r.suite);
    passed += r.passed ? 1 : 0;
  }
  Json summary = {{"summary", true},
                  {"suites", suites},
                  {"properties", results.size()},
                  {"passed", passed},
                  {"failed", results.size() - passed},
                  {"all_passed", passed == results.size()}};
  os << summary.dump() << '\n';
  return os.str();
}

bool all_passed(const std::vector<PropertyResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
}

Json gen_instance(const std::string& kind, const ExperimentConfig& cfg) {
  check_config(cfg);
  Rng rng(cfg.seed);
  CreatureSpec spec;
  spec.k = cfg.k;
  spec.depth = cfg.depth;
  spec.max_table_children = std::max<std::size_t>(cfg.k + 1, 6);
  if (spec.max_table_children > kMaxTableBase) {
    fail(Errc::infeasible, "k too large for table-normed creatures");
  }
  if (kind == "wset") {
    if (cfg.count > cfg.window) fail(Errc::infeasible, "more elements requested than the window holds");
    return to_json(random_wset_count(rng, cfg.window, cfg.count));
  }
  if (cfg.count == 0) fail(Errc::infeasible, "count must be positive for " + kind);
  if (kind == "blockfamily") {
    return to_json(random_interval_partition(rng, cfg.count, cfg.min_size, cfg.min_size + 3));
  }
  if (kind == "creature") return to_json(random_creature(rng, spec, 0));
  if (kind == "fragment") return to_json(random_fragment(rng, spec, cfg.count, 2));
  if (kind == "relinstance") {
    if (cfg.count > kExhaustiveUniverseBound) fail(Errc::infeasible, "universe too large");
    return to_json(random_relinstance(rng, cfg.count, cfg.count));
  }
  fail(Errc::malformed_input, "unknown instance kind '" + kind + "'");
}

}  // namespace finloc
