#include "rlcm/analysis.hpp"
#include "rlcm/families.hpp"
#include "rlcm/kms.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace rlcm;

std::shared_ptr<Semigroup> bs23() {
  FamilySpec spec;
  spec.kind = FamilySpec::Kind::BaumslagSolitar;
  spec.c = 2;
  spec.d = 3;
  return build(spec);
}

void BM_RightLcm(benchmark::State& state) {
  auto s = bs23();
  std::vector<Element> elems = s->bounded_elements(9, 3);
  size_t i = 0;
  for (auto _ : state) {
    const Element& x = elems[i % elems.size()];
    const Element& y = elems[(i * 7 + 3) % elems.size()];
    benchmark::DoNotOptimize(s->right_lcm(x, y));
    ++i;
  }
}
BENCHMARK(BM_RightLcm);

void BM_KappaTable(benchmark::State& state) {
  auto s = bs23();
  auto gens = s->generators();
  Element b = gens[1].second;
  Element one = s->identity();
  for (auto _ : state)
    benchmark::DoNotOptimize(
        kappa_table(*s, b, one, static_cast<Scale>(state.range(0))));
}
BENCHMARK(BM_KappaTable)->Arg(9)->Arg(27);

void BM_Zeta(benchmark::State& state) {
  auto s = bs23();
  Rational beta(3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(zeta(*s, beta));
}
BENCHMARK(BM_Zeta);

}  // namespace

BENCHMARK_MAIN();
