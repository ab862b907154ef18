#include <benchmark/benchmark.h>

#include "ctvd/campaign.hpp"
#include "ctvd/generators.hpp"
#include "ctvd/solvers.hpp"

namespace {

// Infeasible planted instances force the exact search through every size.
ctvd::Instance hard_instance(std::int64_t n) {
	ctvd::Rng rng(static_cast<std::uint64_t>(n));
	auto inst = ctvd::planted_instance(rng, 2, 2, static_cast<std::size_t>(n), 0);
	inst.k = ctvd::optimum(inst.graph) - 1;
	return inst;
}

void BM_BruteForceParallel(benchmark::State &state) {
	const auto inst = hard_instance(state.range(0));
	for (auto _ : state)
		benchmark::DoNotOptimize(ctvd::brute_force(inst.graph, inst.k));
}

void BM_BruteForceSerial(benchmark::State &state) {
	const auto inst = hard_instance(state.range(0));
	for (auto _ : state)
		benchmark::DoNotOptimize(ctvd::brute_force_serial(inst.graph, inst.k));
}

void verify_campaign(benchmark::State &state, bool parallel) {
	ctvd::VerifyOptions opts;
	opts.count = static_cast<std::size_t>(state.range(0));
	opts.parallel = parallel;
	for (auto _ : state)
		benchmark::DoNotOptimize(ctvd::run_verify(opts));
}

void BM_VerifyParallel(benchmark::State &state) { verify_campaign(state, true); }
void BM_VerifySerial(benchmark::State &state) { verify_campaign(state, false); }

} // namespace

BENCHMARK(BM_BruteForceParallel)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteForceSerial)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyParallel)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifySerial)->Arg(100)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
