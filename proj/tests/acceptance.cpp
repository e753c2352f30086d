// Runs the nine acceptance criteria and prints one PASS/FAIL line each.
// Scales and time limits are fixed here; the exit status is 0 only when every
// criterion passes within its limit.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "finloc/harness.hpp"
#include "finloc/randomname.hpp"

using namespace finloc;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<std::vector<PropertyResult>(std::uint64_t seed)> run;
};

std::vector<Criterion> criteria() {
  return {
      {1, "tail bound closed form, m <= 16, partial sums to R = 40", 1.0,
       [](std::uint64_t) { return std::vector{prop_tail_bound(16, 40)}; }},
      {2, "upper-half weight and contribution, 500 creatures", 10.0,
       [](std::uint64_t s) { return std::vector{prop_upper_half(s, 500)}; }},
      {3, "shrinking contract, 100 creatures of weight 15..17", 120.0,
       [](std::uint64_t s) { return std::vector{prop_claim7(s, 100)}; }},
      {4, "largeness transfer counting, l <= 4, lm <= 8, exhaustive", 30.0,
       [](std::uint64_t) { return std::vector{prop_transfer(4, 8)}; }},
      {5, "d/b duality on all 3x3 relations with dom/rng", 60.0,
       [](std::uint64_t) { return std::vector{prop_duality(3)}; }},
      {6, "S_k chain and S_+^phi runs, 1000 pairs on windows <= 200", 60.0,
       [](std::uint64_t s) { return std::vector{prop_relation_chain(s, 1000, 200)}; }},
      {7, "constructions, 200 instances each", 120.0,
       [](std::uint64_t s) {
         return std::vector{prop_escaping_g(derive_seed(s, 1), 200),
                            prop_interval_partition(derive_seed(s, 2), 200),
                            prop_meabou(derive_seed(s, 3), 200),
                            prop_s_plus_phi(derive_seed(s, 4), 200)};
       }},
      {8, "Monte Carlo vs exact failure bound, depth 5, 1e5 trials", 60.0,
       [](std::uint64_t s) { return std::vector{prop_mc_vs_exact(s, 100000)}; }},
      {9, "pair and fragment posets, 500 cases each", 120.0,
       [](std::uint64_t s) {
         return std::vector{prop_pair_poset(derive_seed(s, 1), 500),
                            prop_fragment_poset(derive_seed(s, 2), 500)};
       }},
  };
}

}  // namespace

int main() {
  int failed = 0;
  for (const auto& c : criteria()) {
    const auto start = std::chrono::steady_clock::now();
    auto results = c.run(derive_seed(kSeed, static_cast<std::uint64_t>(c.id)));
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_seconds;
    const bool ok = all_passed(results) && in_time;
    std::uint64_t cases = 0;
    for (const auto& r : results) cases += r.cases;
    std::printf("%s [%d] %s: %llu cases, %.2fs (limit %.0fs)\n", ok ? "PASS" : "FAIL", c.id,
                c.title, static_cast<unsigned long long>(cases), secs, c.limit_seconds);
    for (const auto& r : results) {
      if (!r.note.empty() || !r.passed) {
        std::printf("    %s/%s %s%s%s\n", r.suite.c_str(), r.name.c_str(),
                    r.passed ? "ok" : "FAILED", r.note.empty() ? "" : ": ", r.note.c_str());
      }
      if (r.counterexample) std::printf("    counterexample %s\n", r.counterexample->dump().c_str());
    }
    if (!in_time) std::printf("    over the time limit\n");
    failed += ok ? 0 : 1;
  }
  std::printf("%d of 9 criteria passed\n", 9 - failed);
  return failed == 0 ? 0 : 1;
}
