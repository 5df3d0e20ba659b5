#include <benchmark/benchmark.h>

#include <vector>

#include "lpp/betti.hpp"
#include "lpp/ideal.hpp"
#include "lpp/walk.hpp"

namespace {

// The d-th power of the maximal ideal of k[x_1..x_n].
lpp::MonomialIdeal maximal_power(std::size_t n, int d)
{
    return lpp::MonomialIdeal::from_generators(n, lpp::monomials_of_degree(n, d));
}

// A fixed non-Borel ideal with a large lcm lattice.
lpp::MonomialIdeal mixed(std::size_t n)
{
    std::vector<lpp::Monomial> gens;
    for (std::size_t i = 0; i < n; ++i) {
        gens.push_back(lpp::Monomial::variable(n, i, 3));
        for (std::size_t j = i + 1; j < n; ++j) {
            gens.push_back(lpp::Monomial::variable(n, i, 2) * lpp::Monomial::variable(n, j));
        }
    }
    return lpp::MonomialIdeal::from_generators(n, gens);
}

void serial_maximal_power(benchmark::State& state)
{
    const auto I = maximal_power(static_cast<std::size_t>(state.range(0)), 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(lpp::betti_table_serial(I, lpp::Field()));
    }
}

void parallel_maximal_power(benchmark::State& state)
{
    const auto I = maximal_power(static_cast<std::size_t>(state.range(0)), 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(lpp::betti_table(I, lpp::Field()));
    }
}

void serial_mixed(benchmark::State& state)
{
    const auto I = mixed(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(lpp::betti_table_serial(I, lpp::Field(2)));
    }
}

void parallel_mixed(benchmark::State& state)
{
    const auto I = mixed(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(lpp::betti_table(I, lpp::Field(2)));
    }
}

void fuzz_campaign_jobs(benchmark::State& state)
{
    lpp::FuzzConfig config;
    config.n = 4;
    config.powers = {2, 2, 2, 2};
    config.samples = 40;
    config.seed = 1;
    config.jobs = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(lpp::fuzz_campaign(config));
    }
}

} // namespace

BENCHMARK(serial_maximal_power)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(parallel_maximal_power)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(serial_mixed)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(parallel_mixed)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(fuzz_campaign_jobs)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
