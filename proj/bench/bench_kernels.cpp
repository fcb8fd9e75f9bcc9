// Parallel ladder and assembly kernels against their serial references.
// Range argument: number of modes; n_max is fixed at 5.

#include <benchmark/benchmark.h>

#include "fockbound/ladder.hpp"
#include "fockbound/quadratic.hpp"
#include "fockbound/rng.hpp"

using namespace fockbound;

namespace {

constexpr int kNMax = 5;

struct Fixture {
  BasisPtr basis;
  OneParticleVector f;
  FockVector phi;
};

Fixture make(int d) {
  Rng rng(42);
  auto basis = build_basis(d, kNMax);
  auto f = OneParticleVector::random(d, rng);
  auto phi = random_state(basis, rng, 0, kNMax - 1);
  return {basis, f, phi};
}

template <FockVector (*Kernel)(const OneParticleVector&, const FockVector&)>
void BM_Ladder(benchmark::State& state) {
  const Fixture fx = make(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(fx.f, fx.phi));
  state.counters["dim"] = static_cast<double>(fx.basis->dim());
}

template <CMatrix (*Assemble)(const QuadraticOperatorSpec&, const BasisPtr&, int)>
void BM_Assemble(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Rng rng(7);
  const auto basis = build_basis(d, 4);
  const auto spec = QuadraticOperatorSpec::delta_plus(OneParticleOperator::random(d, rng),
                                                      random_orthonormal_system(d, d, 3), d);
  for (auto _ : state) benchmark::DoNotOptimize(Assemble(spec, basis, 2));
}

}  // namespace

BENCHMARK(BM_Ladder<apply_create>)->Name("create/parallel")->Arg(6)->Arg(10)->Arg(14);
BENCHMARK(BM_Ladder<serial::apply_create>)->Name("create/serial")->Arg(6)->Arg(10)->Arg(14);
BENCHMARK(BM_Ladder<apply_annihilate>)->Name("annihilate/parallel")->Arg(6)->Arg(10)->Arg(14);
BENCHMARK(BM_Ladder<serial::apply_annihilate>)->Name("annihilate/serial")->Arg(6)->Arg(10)->Arg(14);
BENCHMARK(BM_Assemble<assemble_sector_matrix>)->Name("assemble/parallel")->Arg(6)->Arg(8);
BENCHMARK(BM_Assemble<serial::assemble_sector_matrix>)->Name("assemble/serial")->Arg(6)->Arg(8);

BENCHMARK_MAIN();
