#include <benchmark/benchmark.h>

#include "finloc/creature.hpp"
#include "finloc/generators.hpp"
#include "finloc/harness.hpp"
#include "finloc/relations.hpp"
#include "finloc/shrink.hpp"

using namespace finloc;

namespace {

Creature wide_fan(std::size_t leaves, Nat step) {
  std::vector<CreatureNode> nodes(1);
  nodes[0].R = (leaves - 1) * step;
  nodes[0].norm = Norm::log();
  for (std::size_t i = 0; i < leaves; ++i) {
    CreatureNode c;
    c.label = i;
    c.L = c.R = i * step;
    nodes[0].children.push_back(nodes.size());
    nodes.push_back(c);
  }
  return Creature(2, std::move(nodes));
}

void BM_claim7_shrink(benchmark::State& state) {
  const auto leaves = static_cast<std::size_t>(state.range(0));
  auto t = wide_fan(leaves, 2);
  Rng rng(1);
  auto b = random_wset(rng, 2 * leaves + 2, 0.3);
  std::vector<Nat> bs{0};
  for (Nat x : b.elements()) {
    if (x > 0) bs.push_back(x);
  }
  bs.push_back(2 * leaves + 2);
  bs.push_back(2 * leaves + 3);
  WSet bb(2 * leaves + 4, bs);
  for (auto _ : state) benchmark::DoNotOptimize(claim7_shrink(t, bb));
}
BENCHMARK(BM_claim7_shrink)->Arg(1 << 15)->Arg(1 << 16)->Arg(1 << 17)->Unit(benchmark::kMillisecond);

void BM_d_fin(benchmark::State& state) {
  Rng rng(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  auto inst = random_relinstance(rng, n, n);
  for (auto _ : state) benchmark::DoNotOptimize(d_fin(inst));
}
BENCHMARK(BM_d_fin)->Arg(8)->Arg(12)->Arg(16);

void BM_transfer(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(prop_transfer(4, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_transfer)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
