#include <benchmark/benchmark.h>

#include "optop/search.hpp"

using namespace optop;

static void BM_EnumerateTopologies(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        std::size_t count = 0;
        for_each_topology(n, [&](const Topology&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_EnumerateTopologies)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_BindOperator(benchmark::State& state)
{
    const auto topologies = enumerate_topologies(4);
    for (auto _ : state)
        for (const auto& t : topologies)
            benchmark::DoNotOptimize(bind_operator(t, Operator(OperatorKind::IntCl)));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(topologies.size()));
}
BENCHMARK(BM_BindOperator)->Unit(benchmark::kMillisecond);

static void BM_VerifyProposition(benchmark::State& state)
{
    const auto p = static_cast<Proposition>(state.range(0));
    SearchBounds b = SearchBounds::up_to(3);
    Verdict v;
    for (auto _ : state)
        v = verify_proposition(p, b);
    state.SetLabel(std::string(name_of(p)));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(v.stats.checked));
}
BENCHMARK(BM_VerifyProposition)
    ->Arg(static_cast<int>(Proposition::PreclosureLemma))
    ->Arg(static_cast<int>(Proposition::RegularGraphs))
    ->Arg(static_cast<int>(Proposition::Irresolute))
    ->Unit(benchmark::kMillisecond);

static void BM_StdlibAgainstNative(benchmark::State& state)
{
    const bool use_dsl = state.range(0) != 0;
    const auto& def = *dsl::stdlib().find("weakly_almost_contra_tstar_cont");
    SearchPlan plan;
    plan.check = [&](const FunctionInstance& f, std::span<std::uint64_t>) {
        InstanceReport r;
        r.hypotheses = use_dsl ? dsl::eval_funclass(def, f) : satisfies(f, FunctionClassId::WeaklyAlmostContraTstarCont);
        return r;
    };
    for (auto _ : state)
        benchmark::DoNotOptimize(run_search(plan, SearchBounds::up_to(3)));
    state.SetLabel(use_dsl ? "dsl" : "native");
}
BENCHMARK(BM_StdlibAgainstNative)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_SearchJobs(benchmark::State& state)
{
    SearchBounds b = SearchBounds::up_to(4);
    b.max_points_y = 3;
    b.jobs = static_cast<unsigned>(state.range(0));
    const auto target = Condition::of(FunctionClassId::SlightlyContraTstarCont);
    const auto conclusion = Condition::of(FunctionClassId::WeaklyAlmostContraTstarCont);
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_implication(target, conclusion, {}, b));
}
BENCHMARK(BM_SearchJobs)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
