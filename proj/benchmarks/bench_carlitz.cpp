#include <benchmark/benchmark.h>

#include <carlitz/carlitz_tables.hpp>
#include <carlitz/field.hpp>
#include <carlitz/laurent.hpp>
#include <carlitz/period.hpp>
#include <carlitz/ramanujan.hpp>
#include <carlitz/zeta.hpp>

#include <utility>
#include <vector>

using namespace carlitz;

namespace {

const FieldPtr& f3() {
    static const FieldPtr F = FieldCtx::make_prime(3);
    return F;
}

const CarlitzTables& tables3() {
    static const CarlitzTables t = CarlitzTables::build(f3(), 4);
    return t;
}

Laurent dense_series(int top, int floor, int salt) {
    std::vector<std::pair<int, FieldElem>> terms;
    for (int e = top; e > floor; --e) {
        const long long c = (static_cast<long long>(e) * 7 + salt) % 3;
        if (c != 0) terms.emplace_back(e, f3()->from_int(c));
    }
    return Laurent::from_terms(f3(), floor, terms);
}

void bm_laurent_mul(benchmark::State& state) {
    const int floor = -static_cast<int>(state.range(0));
    const Laurent a = dense_series(2, floor, 1);
    const Laurent b = dense_series(5, floor, 2);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}

void bm_laurent_inv(benchmark::State& state) {
    const int floor = -static_cast<int>(state.range(0));
    const Laurent a = dense_series(0, floor, 1);
    for (auto _ : state) benchmark::DoNotOptimize(a.inv());
}

void bm_period_kernel(benchmark::State& state) {
    const int floor = -static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(period_w_kernel(tables3(), floor));
}

void bm_ell_eval(benchmark::State& state) {
    const int floor = -static_cast<int>(state.range(0));
    const Laurent w = period_w_kernel(tables3(), floor - 10).w;
    const Laurent z = Laurent::upow(f3(), 1, floor - 10);
    for (auto _ : state) benchmark::DoNotOptimize(ell_eval(z, w, tables3(), floor));
}

void bm_zeta_pos(benchmark::State& state) {
    const int floor = -static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(zeta_pos(f3(), 2, floor));
}

void bm_verify_ramanujan(benchmark::State& state) {
    const int prec = static_cast<int>(state.range(0));
    const int wf = ramanujan_w_floor(f3(), 1, prec);
    const Laurent w = period_w_kernel(tables3(), wf).w;
    for (auto _ : state) benchmark::DoNotOptimize(verify_ramanujan(tables3(), w, 1, prec));
}

BENCHMARK(bm_laurent_mul)->Arg(100)->Arg(400)->Arg(1600);
BENCHMARK(bm_laurent_inv)->Arg(100)->Arg(400)->Arg(1600);
BENCHMARK(bm_period_kernel)->Arg(40)->Arg(80);
BENCHMARK(bm_ell_eval)->Arg(40)->Arg(80);
BENCHMARK(bm_zeta_pos)->Arg(20)->Arg(40);
BENCHMARK(bm_verify_ramanujan)->Arg(30)->Arg(40);

} // namespace

BENCHMARK_MAIN();
