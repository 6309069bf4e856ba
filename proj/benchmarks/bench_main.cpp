#include <benchmark/benchmark.h>

#include "polyadic.hpp"

using namespace polyadic;

namespace {

NaryOp sum_mod(unsigned n, std::uint32_t q) {
  return NaryOp::from_function(n, q, [q](std::span<const Label> a) {
    std::uint64_t s = 0;
    for (auto x : a) s += x;
    return static_cast<Label>(s % q);
  });
}

GradedAlgebra grassmann(unsigned gens) {
  const std::uint32_t dim = 1u << gens;
  std::vector<GroupElement> grades(dim);
  std::vector<StructureEntry> structure;
  for (Basis x = 0; x < dim; ++x) {
    grades[x] = __builtin_popcount(x) & 1;
    for (Basis y = 0; y < dim; ++y) {
      if (x & y) continue;
      unsigned swaps = 0;
      for (unsigned i = 0; i < gens; ++i)
        if (y & (1u << i)) swaps += __builtin_popcount(x >> (i + 1));
      structure.push_back({{x, y}, {{x | y, swaps & 1 ? 2u : 1u}}});
    }
  }
  return GradedAlgebra(2, dim, 3, AbelianGroup({2}), grades, structure, 0);
}

FactorMap super_sign() { return build_bicharacter(AbelianGroup({2}), {{1}}, ScalarBackend::prime_field(3)); }

void BM_MedialityScan(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const auto q = static_cast<std::uint32_t>(state.range(1));
  const auto op = sum_mod(n, q);
  RunConfig cfg;
  cfg.jobs = static_cast<unsigned>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(check_mediality(op, cfg).probes);
}
BENCHMARK(BM_MedialityScan)->Args({2, 5, 1})->Args({2, 16, 1})->Args({3, 3, 1})->Args({3, 3, 2})->Args({2, 16, 4});

void BM_LatinEnumeration(benchmark::State& state) {
  const auto q = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(for_each_quasigroup(2, q, [](const NaryOp&) { return true; }));
}
BENCHMARK(BM_LatinEnumeration)->Arg(3)->Arg(4)->Arg(5);

void BM_ToyodaDecompose(benchmark::State& state) {
  const auto q = static_cast<std::uint32_t>(state.range(0));
  const auto op = NaryOp::from_function(2, q, [q](std::span<const Label> a) {
    return static_cast<Label>((a[0] + (q - 1) * a[1] + 1) % q);
  });
  for (auto _ : state) benchmark::DoNotOptimize(toyoda_decompose(op).has_value());
}
BENCHMARK(BM_ToyodaDecompose)->Arg(3)->Arg(4)->Arg(5)->Arg(6);

void BM_AlmostMedial(benchmark::State& state) {
  const auto alg = grassmann(static_cast<unsigned>(state.range(0)));
  const auto rho = bridge_factor(super_sign());
  for (auto _ : state) benchmark::DoNotOptimize(check_almost_medial(alg, rho).probes);
}
BENCHMARK(BM_AlmostMedial)->Arg(2)->Arg(3);

void BM_PolygonCoherence(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_polygon(n).passed());
}
BENCHMARK(BM_PolygonCoherence)->Arg(2)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
