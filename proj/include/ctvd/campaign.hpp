#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ctvd/graph.hpp"
#include "ctvd/kernelizer.hpp"

namespace ctvd {

struct VerifyOptions {
	std::size_t count = 500;
	std::size_t max_n = 14;
	std::int64_t max_k = 4;
	std::uint64_t seed = 1;
	/// Every fifth instance is planted instead of G(n, p).
	bool mix_planted = true;
	RuleOptions rules;
	bool parallel = true;
};

struct VerifyCase {
	std::size_t index = 0;
	Instance input;
	bool input_feasible = false;
	bool kernel_feasible = false;
	bool no_instance = false;
	std::size_t violations = 0;
	bool within_bound = true;

	[[nodiscard]] bool ok() const {
		return input_feasible == kernel_feasible && violations == 0 && within_bound;
	}
};

struct VerifyReport {
	std::size_t passed = 0;
	std::vector<VerifyCase> failures;
};

/// Instance `index` of a campaign: seeded with seed + index.
Instance campaign_instance(const VerifyOptions &opts, std::size_t index);

/// Kernelizes every instance and compares exact feasibility of input and
/// kernel. Instances run in parallel; results are collected in index order.
VerifyReport run_verify(const VerifyOptions &opts);

struct StatsRow {
	std::int64_t k = 0;
	std::size_t input_n = 0;
	std::size_t kernel_n = 0;
	std::uint64_t bound = 0;
	std::size_t rules_fired = 0;
	bool no_instance = false;
	bool sizes_ok = true;
	std::size_t violations = 0;
};

/// Planted instances for every k in [k_lo, k_hi], `reps` each, in k-major
/// order.
std::vector<StatsRow> run_stats(std::int64_t k_lo, std::int64_t k_hi, std::size_t reps, std::uint64_t seed,
                                bool parallel = true);

std::string stats_csv(const std::vector<StatsRow> &rows);

} // namespace ctvd
