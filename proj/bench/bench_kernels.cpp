// Serial vs OpenMP counting kernels on a generated database.
#include <benchmark/benchmark.h>

#include "pfimi/datagen.hpp"
#include "pfimi/kernels.hpp"
#include "pfimi/miners.hpp"

using namespace pfimi;

namespace {

const TransactionDB& bench_db() {
    static const TransactionDB db = [] {
        GenParams p;
        p.n_items = 500;
        p.n_patterns = 400;
        p.n_txns = 50000;
        p.seed = 7;
        return generate_db(p);
    }();
    return db;
}

const std::vector<Itemset>& bench_candidates() {
    static const std::vector<Itemset> c = [] {
        std::vector<Itemset> out;
        for (const auto& r : mine(bench_db(), 1000, Algo::eclat)) out.push_back(r.itemset);
        return out;
    }();
    return c;
}

kernels::Exec exec_of(const benchmark::State& st) {
    return st.range(0) ? kernels::Exec::openmp : kernels::Exec::serial;
}

void BM_CountSupports(benchmark::State& st) {
    const auto& db = bench_db();
    const auto& c = bench_candidates();
    for (auto _ : st) benchmark::DoNotOptimize(kernels::count_supports(db, c, exec_of(st)));
    st.SetLabel(std::to_string(c.size()) + " candidates");
}

void BM_ItemSupports(benchmark::State& st) {
    const auto& db = bench_db();
    for (auto _ : st) benchmark::DoNotOptimize(kernels::item_supports(db, exec_of(st)));
}

void BM_BuildVertical(benchmark::State& st) {
    const auto& db = bench_db();
    for (auto _ : st) benchmark::DoNotOptimize(kernels::build_vertical(db, exec_of(st)));
}

}  // namespace

// Argument 0 = serial, 1 = OpenMP.
BENCHMARK(BM_CountSupports)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ItemSupports)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_BuildVertical)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
