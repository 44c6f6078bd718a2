// Serial reference vs OpenMP kernel for each data-parallel sweep.

#include <benchmark/benchmark.h>

#include "cliffstring/quantum_rep.hpp"
#include "cliffstring/string_modes.hpp"
#include "cliffstring/sweeps.hpp"

namespace {

using namespace cliffstring;

const std::vector<OctonionPair>& pairs() {
  static const auto p = [] {
    Rng rng(1);
    return random_octonion_pairs(rng, 100000);
  }();
  return p;
}

const std::vector<OctHermitian>& hermitians() {
  static const auto b = [] {
    Rng rng(2);
    return random_resolve_batch(rng, 2000);
  }();
  return b;
}

const std::vector<LorentzTrial>& lorentz_trials() {
  static const auto t = [] {
    Rng rng(3);
    return random_lorentz_trials(rng, 5000, 5);
  }();
  return t;
}

const ModeSpectrum& spectrum() {
  static const ModeSpectrum ms = [] {
    Rng rng(4);
    return random_spectrum(rng, 3);
  }();
  return ms;
}

template <class F>
void run(benchmark::State& state, F&& f) {
  for (auto _ : state) benchmark::DoNotOptimize(f());
}

void BM_OctonionSerial(benchmark::State& s) { run(s, [] { return octonion_identity_sweep_serial(pairs()).alternativity; }); }
void BM_OctonionParallel(benchmark::State& s) { run(s, [] { return octonion_identity_sweep(pairs()).alternativity; }); }
void BM_ResolveSerial(benchmark::State& s) { run(s, [] { return resolve_sweep_serial(hermitians()).max_residual; }); }
void BM_ResolveParallel(benchmark::State& s) { run(s, [] { return resolve_sweep(hermitians()).max_residual; }); }
void BM_LorentzSerial(benchmark::State& s) { run(s, [] { return lorentz_sweep_serial(lorentz_trials()).determinant; }); }
void BM_LorentzParallel(benchmark::State& s) { run(s, [] { return lorentz_sweep(lorentz_trials()).determinant; }); }

void BM_DivergenceSerial(benchmark::State& s) {
  const WorldsheetGrid g{static_cast<int>(s.range(0)), static_cast<int>(s.range(0))};
  run(s, [&] { return divergence_residual_serial(spectrum(), g); });
}
void BM_DivergenceParallel(benchmark::State& s) {
  const WorldsheetGrid g{static_cast<int>(s.range(0)), static_cast<int>(s.range(0))};
  run(s, [&] { return divergence_residual(spectrum(), g); });
}
void BM_EomSerial(benchmark::State& s) {
  const WorldsheetGrid g{static_cast<int>(s.range(0)), static_cast<int>(s.range(0))};
  run(s, [&] { return eom_residual_serial(spectrum(), g); });
}
void BM_EomParallel(benchmark::State& s) {
  const WorldsheetGrid g{static_cast<int>(s.range(0)), static_cast<int>(s.range(0))};
  run(s, [&] { return eom_residual(spectrum(), g); });
}

struct ClosureFixture {
  QuantumModel model{6, 1.0};
  SpinorOperators j = symmetrize(m0_operators(model));
  TensorOperators m = tensor_form(j, symmetrize(m0_dagger(model)));
};

const ClosureFixture& closure() {
  static const ClosureFixture f;
  return f;
}

void BM_ClosureSerial(benchmark::State& s) {
  run(s, [] { return lorentz_closure_residual_serial(closure().j, closure().model.basis, 1.0); });
}
void BM_ClosureParallel(benchmark::State& s) {
  run(s, [] { return lorentz_closure_residual(closure().j, closure().model.basis, 1.0); });
}
void BM_TensorClosureSerial(benchmark::State& s) {
  run(s, [] { return tensor_closure_residual_serial(closure().m, closure().model.basis, 1.0); });
}
void BM_TensorClosureParallel(benchmark::State& s) {
  run(s, [] { return tensor_closure_residual(closure().m, closure().model.basis, 1.0); });
}

}  // namespace

BENCHMARK(BM_OctonionSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OctonionParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ResolveSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ResolveParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_LorentzSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LorentzParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_DivergenceSerial)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DivergenceParallel)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_EomSerial)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EomParallel)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ClosureSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClosureParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_TensorClosureSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TensorClosureParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
