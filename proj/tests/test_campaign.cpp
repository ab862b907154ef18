#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ctvd/campaign.hpp"
#include "ctvd/generators.hpp"
#include "ctvd/io.hpp"
#include "ctvd/solvers.hpp"

using namespace ctvd;

TEST_CASE("empty campaign passes vacuously") {
	VerifyOptions opts;
	opts.count = 0;
	auto r = run_verify(opts);
	CHECK(r.passed == 0);
	CHECK(r.failures.empty());
}

TEST_CASE("campaign passes and is thread-count independent") {
	VerifyOptions opts;
	opts.count = 120;
	opts.max_n = 12;
	opts.max_k = 3;
	opts.seed = 5;
	auto par = run_verify(opts);
	CHECK(par.passed == 120);
	opts.parallel = false;
	auto ser = run_verify(opts);
	CHECK(ser.passed == par.passed);
}

TEST_CASE("campaign detects the faulty rule") {
	VerifyOptions opts;
	opts.count = 400;
	opts.rules.fault_pendant_dedup = true;
	auto r = run_verify(opts);
	REQUIRE_FALSE(r.failures.empty());
	for (const auto &c : r.failures)
		CHECK(c.input_feasible != c.kernel_feasible);
}

TEST_CASE("campaign instances are deterministic") {
	VerifyOptions opts;
	for (std::size_t i = 0; i < 20; ++i)
		CHECK(to_edge_list(campaign_instance(opts, i)) == to_edge_list(campaign_instance(opts, i)));
	opts.seed = 2;
	CHECK(to_edge_list(campaign_instance(opts, 0)) == to_edge_list(campaign_instance(VerifyOptions{}, 1)));
}

TEST_CASE("planted instances are solved by their noise") {
	Rng rng(89);
	for (int rep = 0; rep < 40; ++rep) {
		const std::size_t noise = rep % 3;
		auto inst = planted_instance(rng, 2, 3, noise, 2);
		CHECK(optimum(inst.graph) <= static_cast<std::int64_t>(noise));
		CHECK(inst.k == 2);
	}
	Rng a(7), b(7);
	CHECK(to_edge_list(planted_instance(a, 3, 3, 2, 1)) == to_edge_list(planted_instance(b, 3, 3, 2, 1)));
}

TEST_CASE("stats campaign") {
	CHECK(run_stats(3, 2, 5, 1).empty());
	CHECK(stats_csv({}) == "k,input_n,kernel_n,bound,rules_fired\n");
	auto rows = run_stats(1, 2, 4, 1);
	REQUIRE(rows.size() == 8);
	CHECK(rows[0].k == 1);
	CHECK(rows[7].k == 2);
	for (const auto &r : rows) {
		CHECK(r.sizes_ok);
		CHECK(r.kernel_n <= r.bound);
		CHECK(r.violations == 0);
	}
	auto serial = run_stats(1, 2, 4, 1, false);
	CHECK(stats_csv(serial) == stats_csv(rows));
}
