#include <benchmark/benchmark.h>

#include <qpart/bijections.hpp>
#include <qpart/families.hpp>
#include <qpart/gf.hpp>

using namespace qpart;

namespace {

void BM_EnumeratePartitions(benchmark::State& state)
{
    const long long n = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_partitions(n));
}
BENCHMARK(BM_EnumeratePartitions)->Arg(20)->Arg(30);

void BM_EnumerateL(benchmark::State& state)
{
    const int d = static_cast<int>(state.range(0));
    const long long n = state.range(1);
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_L(d, n));
}
BENCHMARK(BM_EnumerateL)->Args({1, 20})->Args({2, 24})->Args({3, 28});

void BM_EnumerateW(benchmark::State& state)
{
    const long long n = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_W(n));
}
BENCHMARK(BM_EnumerateW)->Arg(16)->Arg(22);

void BM_PhiPsiSweep(benchmark::State& state)
{
    const long long n = state.range(0);
    const auto members = enumerate_L(1, n);
    for (auto _ : state)
        for (const auto& p : members) {
            const auto pr = psi(phi(p));
            benchmark::DoNotOptimize(pr);
        }
}
BENCHMARK(BM_PhiPsiSweep)->Arg(16)->Arg(20);

void BM_PsiInverse(benchmark::State& state)
{
    const long long n = state.range(0);
    std::vector<PartitionPair> pairs;
    for (const auto& w : enumerate_W(n))
        pairs.push_back(psi(w));
    for (auto _ : state)
        for (const auto& pr : pairs)
            benchmark::DoNotOptimize(psi_inverse(pr));
}
BENCHMARK(BM_PsiInverse)->Arg(16);

void BM_EtaRoundTrip(benchmark::State& state)
{
    const long long n = state.range(0);
    const auto members = enumerate_L(2, n);
    for (auto _ : state)
        for (const auto& p : members)
            benchmark::DoNotOptimize(eta_inverse(eta(p)));
}
BENCHMARK(BM_EtaRoundTrip)->Arg(20);

void BM_ThetaRoundTrip(benchmark::State& state)
{
    const long long n = state.range(0);
    const auto members = enumerate_L(3, n);
    for (auto _ : state)
        for (const auto& p : members)
            benchmark::DoNotOptimize(theta_inverse(theta(p)));
}
BENCHMARK(BM_ThetaRoundTrip)->Arg(24);

void BM_GfL1(benchmark::State& state)
{
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(gf_L1_rhs(order));
}
BENCHMARK(BM_GfL1)->Arg(20)->Arg(40);

void BM_Sylvester(benchmark::State& state)
{
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(sylvester_sides(order));
}
BENCHMARK(BM_Sylvester)->Arg(40)->Arg(60);

void BM_QBinomial(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(qbinomial_sides(static_cast<int>(state.range(0)),
                                                 static_cast<int>(state.range(1))));
}
BENCHMARK(BM_QBinomial)->Args({40, 12});

} // namespace

BENCHMARK_MAIN();
