// Benchmarks for the hot paths: generator assembly, steady state,
// propagation and the per-frequency resolvent solve.

#include <benchmark/benchmark.h>

#include "namrqed/namrqed.hpp"

using namespace namrqed;

namespace {

model::EffectiveParams reference_params() {
    model::EffectiveParams p;
    p.delta_a = 0.2;
    p.g = 0.2;
    p.xi = 0.02;
    p.kappa = 0.004;
    p.gamma = 0.004;
    return p;
}

void bench_build_liouvillian(benchmark::State& state) {
    const auto p = reference_params();
    const hilbert::BasisSpec basis{hilbert::TruncationScheme::TotalExcitation,
                                   static_cast<int>(state.range(0))};
    const auto h = model::build_hamiltonian(p, basis);
    for (auto _ : state) {
        auto l = dynamics::build_liouvillian(h, p);
        benchmark::DoNotOptimize(l.superop.data());
    }
}
BENCHMARK(bench_build_liouvillian)->Arg(1)->Arg(2)->Arg(3);

void bench_steady_state(benchmark::State& state) {
    const auto p = reference_params();
    const hilbert::BasisSpec basis{hilbert::TruncationScheme::TotalExcitation,
                                   static_cast<int>(state.range(0))};
    const auto l = dynamics::build_liouvillian(model::build_hamiltonian(p, basis), p);
    for (auto _ : state) {
        auto rho = dynamics::steady_state(l);
        benchmark::DoNotOptimize(rho.matrix.data());
    }
}
BENCHMARK(bench_steady_state)->Arg(1)->Arg(2)->Arg(3);

void bench_propagate(benchmark::State& state) {
    const auto p = reference_params();
    const hilbert::BasisSpec basis{hilbert::TruncationScheme::TotalExcitation, 2};
    const auto l = dynamics::build_liouvillian(model::build_hamiltonian(p, basis), p);
    numerics::ComplexMatrix vacuum =
        numerics::ComplexMatrix::Zero(basis.dimension(), basis.dimension());
    vacuum(0, 0) = 1.0;
    const std::vector<double> times = {1.0, 10.0, 100.0, 1000.0};
    for (auto _ : state) {
        auto states = dynamics::propagate(l, {basis, vacuum}, times);
        benchmark::DoNotOptimize(states.back().matrix.data());
    }
}
BENCHMARK(bench_propagate);

void bench_resolvent_grid(benchmark::State& state) {
    const auto p = reference_params();
    const hilbert::BasisSpec basis{hilbert::TruncationScheme::TotalExcitation,
                                   static_cast<int>(state.range(0))};
    const auto l = dynamics::build_liouvillian(model::build_hamiltonian(p, basis), p);
    const auto rho = dynamics::steady_state(l);
    const auto omegas = spectrum::default_omega_grid(analytic::coefficients(p), 64);
    for (auto _ : state) {
        auto s = spectrum::spectrum_resolvent(l, rho, p, basis, omegas);
        benchmark::DoNotOptimize(s.values.data());
    }
    state.SetItemsProcessed(state.iterations() * omegas.size());
}
BENCHMARK(bench_resolvent_grid)->Arg(1)->Arg(3);

void bench_emf_trace(benchmark::State& state) {
    const auto p = reference_params();
    const auto basis = hilbert::BasisSpec{hilbert::TruncationScheme::TotalExcitation, 1};
    const auto l = dynamics::build_liouvillian(model::build_hamiltonian(p, basis), p);
    const auto rho = dynamics::steady_state(l);
    const auto taus = correlations::default_tau_grid(analytic::coefficients(p));
    for (auto _ : state) {
        auto trace = correlations::emf_correlation(l, rho, p, basis, taus);
        benchmark::DoNotOptimize(trace.values.data());
    }
}
BENCHMARK(bench_emf_trace);

} // namespace

BENCHMARK_MAIN();
