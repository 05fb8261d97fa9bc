#include <benchmark/benchmark.h>

#include "casimir/constants.hpp"
#include "casimir/lifshitz.hpp"
#include "casimir/specfun.hpp"
#include "casimir/thermo.hpp"

namespace {

using namespace casimir;
using namespace casimir::materials;

constexpr double ev = constants::ev_to_radps;

OscillatorModel si() { return OscillatorModel({Oscillator(4.643496e32, 6.6e15)}); }

NinhamParsegianModel mica() {
    return NinhamParsegianModel({157.93 * ev * ev, 10.33 * ev, 3.12e-3 * ev * ev, 3.95e-2 * ev, 0.4, 5e-8});
}

void BM_Li3(benchmark::State& state) {
    double z = -0.999;
    for (auto _ : state) {
        benchmark::DoNotOptimize(specfun::li3(z));
        z = z < 0.999 ? z + 1e-3 : -0.999;
    }
}
BENCHMARK(BM_Li3);

void BM_TermIntegral(benchmark::State& state) {
    const auto m = si();
    const lifshitz::PlateSystem s(m, m, 500e-9);
    const lifshitz::ThermalState st(300.0, 500e-9);
    const long l = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(lifshitz::term_integral(s, st, l).integral);
}
BENCHMARK(BM_TermIntegral)->Arg(0)->Arg(1)->Arg(10);

void BM_FreeEnergySi(benchmark::State& state) {
    const auto m = si();
    const lifshitz::PlateSystem s(m, m, 500e-9);
    const double T = static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(lifshitz::matsubara_free_energy(s, T).F);
}
BENCHMARK(BM_FreeEnergySi)->Arg(300)->Arg(30)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_FreeEnergyMica(benchmark::State& state) {
    const auto m = mica();
    const lifshitz::PlateSystem s(m, m, 500e-9);
    for (auto _ : state) benchmark::DoNotOptimize(lifshitz::matsubara_free_energy(s, 300.0).F);
}
BENCHMARK(BM_FreeEnergyMica)->Unit(benchmark::kMillisecond);

void BM_ZeroTemperatureEnergy(benchmark::State& state) {
    const auto m = si();
    const lifshitz::PlateSystem s(m, m, 500e-9);
    for (auto _ : state) benchmark::DoNotOptimize(lifshitz::zero_temperature_energy(s));
}
BENCHMARK(BM_ZeroTemperatureEnergy)->Unit(benchmark::kMillisecond);

void BM_Entropy(benchmark::State& state) {
    const auto m = si();
    const lifshitz::PlateSystem s(m, m, 1e-6);
    for (auto _ : state) benchmark::DoNotOptimize(thermo::entropy(s, 30.0).S);
}
BENCHMARK(BM_Entropy)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
