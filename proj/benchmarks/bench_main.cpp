#include <benchmark/benchmark.h>

#include "permstab/correction.hpp"
#include "permstab/oracle.hpp"
#include "permstab/testers.hpp"
#include "permstab/words.hpp"

using namespace permstab;

namespace {

GroupMap mild_symmetric_instance(int n) {
    Rng rng(1);
    GroupMap f = random_action(FiniteGroup::cyclic(12), n, rng);
    // unsplice one 2-cycle of the order-2 element; stays symmetric
    const Perm& p = f.at(6);
    for (int x = 0; x < n; ++x) {
        if (p(x) > x) {
            std::vector<int> img = p.image();
            img[static_cast<std::size_t>(p(x))] = p(x);
            img[static_cast<std::size_t>(x)] = x;
            return f.with_entry(6, Perm(img));
        }
    }
    return f;
}

void BM_Hamming(benchmark::State& state) {
    Rng rng(2);
    Perm a = random_perm(static_cast<int>(state.range(0)), rng);
    Perm b = random_perm(static_cast<int>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(hamming(a, b));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Hamming)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_Compose(benchmark::State& state) {
    Rng rng(3);
    Perm a = random_perm(static_cast<int>(state.range(0)), rng);
    Perm b = random_perm(static_cast<int>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(compose(a, b));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Compose)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_Defects(benchmark::State& state) {
    GroupMap f = mild_symmetric_instance(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(defects(f));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Defects)->Arg(24)->Arg(60)->Arg(120)->Complexity();

void BM_WeightTable(benchmark::State& state) {
    GroupMap f = mild_symmetric_instance(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(WeightTable(f));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_WeightTable)->Arg(24)->Arg(60)->Arg(120)->Complexity();

void BM_BuildCascade(benchmark::State& state) {
    GroupMap f = mild_symmetric_instance(static_cast<int>(state.range(0)));
    DefectReport rep = defects(f);
    for (auto _ : state) benchmark::DoNotOptimize(build_cascade(f, Rational(1, 6), rep));
}
BENCHMARK(BM_BuildCascade)->Arg(24)->Arg(60);

void BM_CorrectSymmetric(benchmark::State& state) {
    GroupMap f = mild_symmetric_instance(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(correct_symmetric(f));
}
BENCHMARK(BM_CorrectSymmetric)->Arg(24)->Arg(60);

void BM_RejectionExact(benchmark::State& state) {
    GroupMap f = mild_symmetric_instance(60);
    for (auto _ : state) benchmark::DoNotOptimize(rejection_probability_exact(f));
}
BENCHMARK(BM_RejectionExact);

void BM_SymTestOnce(benchmark::State& state) {
    GroupMap f = mild_symmetric_instance(60);
    Rng rng(4);
    for (auto _ : state) benchmark::DoNotOptimize(sym_test_once(f, rng));
}
BENCHMARK(BM_SymTestOnce);

void BM_GkEval(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    GridMap grid(k);
    FreeWord w = FreeWord::parse("x1^13 x2^-9 x1^3 x2 x1^-77 x2^4 x1^6 x2^-1");
    for (auto _ : state) benchmark::DoNotOptimize(grid.eval(w));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GkEval)->Arg(10)->Arg(20)->Arg(40)->Complexity();

void BM_Gamma0(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(gamma0_image(k));
}
BENCHMARK(BM_Gamma0)->Arg(10)->Arg(20);

void BM_EnumerateHoms(benchmark::State& state) {
    auto g = FiniteGroup::cyclic(6);
    for (auto _ : state) {
        long long count = enumerate_homomorphisms(g, 5, [](const GroupMap&) {});
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_EnumerateHoms);

void BM_NearestHom(benchmark::State& state) {
    GroupMap fhat = drop_point(GroupMap::regular(FiniteGroup::cyclic(5)));
    for (auto _ : state) benchmark::DoNotOptimize(nearest_homomorphism(fhat, 5));
}
BENCHMARK(BM_NearestHom);

} // namespace

BENCHMARK_MAIN();
