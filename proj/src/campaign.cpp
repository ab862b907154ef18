#include "ctvd/campaign.hpp"

#include <sstream>

#include "ctvd/generators.hpp"
#include "ctvd/solvers.hpp"

namespace ctvd {

Instance campaign_instance(const VerifyOptions &opts, std::size_t index) {
	Rng rng(opts.seed + index);
	if (opts.mix_planted && index % 5 == 4)
		return planted_instance_bounded(rng, opts.max_n, opts.max_k);
	return random_instance(rng, opts.max_n, opts.max_k);
}

namespace {

VerifyCase verify_one(const VerifyOptions &opts, std::size_t index) {
	VerifyCase c;
	c.index = index;
	c.input = campaign_instance(opts, index);
	c.input_feasible = brute_force(c.input.graph, c.input.k).feasible;
	KernelOptions kopts;
	kopts.rules = opts.rules;
	const auto res = kernelize(c.input, kopts);
	c.no_instance = res.no_instance;
	c.kernel_feasible = !res.no_instance && brute_force(res.instance.graph, res.instance.k).feasible;
	c.violations = res.violations.size();
	c.within_bound = res.no_instance || res.sizes.ok();
	return c;
}

StatsRow stats_one(std::int64_t k, std::uint64_t seed) {
	Rng rng(seed);
	const std::size_t spread = static_cast<std::size_t>(2 * k + 2);
	const std::size_t cliques = 1 + std::uniform_int_distribution<std::size_t>(0, spread)(rng);
	const std::size_t trees = 1 + std::uniform_int_distribution<std::size_t>(0, spread)(rng);
	const Instance inst = planted_instance(rng, cliques, trees, static_cast<std::size_t>(k), k);
	const auto res = kernelize(inst);
	StatsRow row;
	row.k = k;
	row.input_n = inst.graph.num_vertices();
	row.kernel_n = res.instance.graph.num_vertices();
	row.rules_fired = res.rules_fired();
	row.no_instance = res.no_instance;
	row.bound = res.no_instance ? row.kernel_n : res.sizes.total_bound;
	row.sizes_ok = res.no_instance || res.sizes.ok();
	row.violations = res.violations.size();
	return row;
}

} // namespace

VerifyReport run_verify(const VerifyOptions &opts) {
	std::vector<VerifyCase> cases(opts.count);
	const auto count = static_cast<std::ptrdiff_t>(opts.count);
#pragma omp parallel for schedule(dynamic, 1) if (opts.parallel)
	for (std::ptrdiff_t i = 0; i < count; ++i)
		cases[static_cast<std::size_t>(i)] = verify_one(opts, static_cast<std::size_t>(i));
	VerifyReport report;
	for (auto &c : cases) {
		if (c.ok())
			++report.passed;
		else
			report.failures.push_back(std::move(c));
	}
	return report;
}

std::vector<StatsRow> run_stats(std::int64_t k_lo, std::int64_t k_hi, std::size_t reps, std::uint64_t seed,
                                bool parallel) {
	if (k_hi < k_lo || reps == 0)
		return {};
	const std::size_t ks = static_cast<std::size_t>(k_hi - k_lo + 1);
	std::vector<StatsRow> rows(ks * reps);
	const auto total = static_cast<std::ptrdiff_t>(rows.size());
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
	for (std::ptrdiff_t i = 0; i < total; ++i) {
		const auto idx = static_cast<std::size_t>(i);
		rows[idx] = stats_one(k_lo + static_cast<std::int64_t>(idx / reps), seed + idx);
	}
	return rows;
}

std::string stats_csv(const std::vector<StatsRow> &rows) {
	std::ostringstream os;
	os << "k,input_n,kernel_n,bound,rules_fired\n";
	for (const auto &r : rows)
		os << r.k << ',' << r.input_n << ',' << r.kernel_n << ',' << r.bound << ',' << r.rules_fired << '\n';
	return os.str();
}

} // namespace ctvd
