#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "ctvd/campaign.hpp"
#include "ctvd/generators.hpp"
#include "ctvd/io.hpp"
#include "ctvd/kernelizer.hpp"
#include "ctvd/solvers.hpp"

namespace {

constexpr int kExitError = 2;

void write_file(const std::string &path, const std::string &text) {
	std::ofstream out(path);
	if (!out)
		throw std::runtime_error("cannot write " + path);
	out << text;
	if (!out)
		throw std::runtime_error("write failed for " + path);
}

std::string join(const ctvd::VertexSet &vs) {
	std::string out;
	for (auto v : vs) {
		if (!out.empty())
			out += ' ';
		out += std::to_string(v);
	}
	return out;
}

int cmd_kernelize(const std::string &input, const std::string &output, const std::string &trace_path) {
	const auto inst = ctvd::read_edge_list_file(input);
	const auto res = ctvd::kernelize(inst);
	const std::string kernel = ctvd::to_edge_list(res.instance);
	if (output.empty())
		std::cout << kernel;
	else
		write_file(output, kernel);
	if (!trace_path.empty())
		write_file(trace_path, ctvd::serialize_trace(res.trace));
	if (res.no_instance)
		std::cerr << "no-instance (" << res.reason << ")\n";
	else
		std::cerr << "kernel n=" << res.instance.graph.num_vertices() << " k=" << res.instance.k
		          << " bound=" << res.sizes.total_bound << '\n';
	return 0;
}

int cmd_solve(const std::string &input, bool approx) {
	const auto inst = ctvd::read_edge_list_file(input);
	// Witnesses are reported in the file's 0-based numbering, which equals the
	// in-memory ids.
	if (!approx) {
		if (inst.graph.num_vertices() > 20)
			std::cerr << "warning: exact search on " << inst.graph.num_vertices() << " vertices may be slow\n";
		const auto r = ctvd::brute_force(inst.graph, inst.k);
		if (!r.feasible) {
			std::cout << "NO\n";
			return 1;
		}
		std::cout << "YES\nwitness size=" << r.solution->size() << " vertices=" << join(*r.solution) << '\n';
		return 0;
	}
	const auto mod = ctvd::approx_deletion_set(inst.graph);
	const auto size = static_cast<std::int64_t>(mod.s.size());
	const char *verdict = size <= inst.k ? "YES" : size > 6 * inst.k ? "NO" : "UNKNOWN";
	std::cout << verdict << "\nmodulator size=" << mod.s.size() << " factor=" << mod.factor
	          << " vertices=" << join(mod.s) << '\n';
	return size <= inst.k ? 0 : 1;
}

int cmd_verify(const ctvd::VerifyOptions &opts) {
	const auto report = ctvd::run_verify(opts);
	std::cout << "passed " << report.passed << " failed " << report.failures.size() << '\n';
	for (const auto &c : report.failures) {
		std::cerr << "# instance " << c.index << ": input " << (c.input_feasible ? "YES" : "NO") << ", kernel "
		          << (c.kernel_feasible ? "YES" : "NO") << ", violations " << c.violations << '\n'
		          << ctvd::to_edge_list(c.input);
	}
	return report.failures.empty() ? 0 : 1;
}

int cmd_gen(std::size_t cliques, std::size_t trees, std::size_t noise, std::int64_t k, std::uint64_t seed,
            const std::string &output) {
	ctvd::Rng rng(seed);
	write_file(output, ctvd::to_edge_list(ctvd::planted_instance(rng, cliques, trees, noise, k)));
	return 0;
}

int cmd_stats(const std::string &range, std::size_t reps, std::uint64_t seed, const std::string &csv) {
	const auto dots = range.find("..");
	if (dots == std::string::npos)
		throw std::invalid_argument("k-range must look like a..b");
	const std::int64_t lo = std::stoll(range.substr(0, dots));
	const std::int64_t hi = std::stoll(range.substr(dots + 2));
	if (lo < 0)
		throw std::invalid_argument("k-range must be non-negative");
	const auto rows = ctvd::run_stats(lo, hi, reps, seed);
	write_file(csv, ctvd::stats_csv(rows));
	std::size_t over = 0;
	for (const auto &r : rows)
		over += r.kernel_n > r.bound || !r.sizes_ok;
	std::cerr << rows.size() << " rows, " << over << " over the bound\n";
	return over == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
	CLI::App app{"Cliques-or-trees vertex deletion: kernelization, exact and approximate solving"};
	app.require_subcommand(1);

	std::string input, output, trace_path, csv, range = "1..4";
	bool exact = false, approx = false;
	ctvd::VerifyOptions vopts;
	std::size_t cliques = 0, trees = 0, noise = 0, reps = 20;
	std::int64_t gen_k = 0;
	std::uint64_t seed = 1;

	auto *kern = app.add_subcommand("kernelize", "Kernelize an instance");
	kern->add_option("input", input, "Edge-list file")->required();
	kern->add_option("-o,--output", output, "Kernel output file (stdout if omitted)");
	kern->add_option("-t,--trace", trace_path, "Trace output file");

	auto *solve = app.add_subcommand("solve", "Decide an instance");
	solve->add_option("input", input, "Edge-list file")->required();
	auto *exact_flag = solve->add_flag("--exact", exact, "Exhaustive search");
	auto *approx_flag = solve->add_flag("--approx", approx, "Factor-6 approximation");
	exact_flag->excludes(approx_flag);

	auto *verify = app.add_subcommand("verify", "Compare kernel and input feasibility on random instances");
	verify->add_option("--count", vopts.count)->capture_default_str();
	verify->add_option("--max-n", vopts.max_n)->capture_default_str();
	verify->add_option("--max-k", vopts.max_k)->capture_default_str();
	verify->add_option("--seed", vopts.seed)->capture_default_str();
	verify->add_flag("--inject-fault", vopts.rules.fault_pendant_dedup)->group("");

	auto *gen = app.add_subcommand("gen", "Write a planted instance");
	gen->add_option("--cliques", cliques)->capture_default_str();
	gen->add_option("--trees", trees)->capture_default_str();
	gen->add_option("--noise-vertices", noise)->capture_default_str();
	gen->add_option("--k", gen_k)->capture_default_str()->check(CLI::NonNegativeNumber);
	gen->add_option("--seed", seed)->capture_default_str();
	gen->add_option("output", output, "Output file")->required();

	auto *stats = app.add_subcommand("stats", "Kernel size table over planted instances");
	stats->add_option("--k-range", range, "a..b")->capture_default_str();
	stats->add_option("--reps", reps)->capture_default_str();
	stats->add_option("--seed", seed)->capture_default_str();
	stats->add_option("csv", csv, "CSV output file")->required();

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError &e) {
		const int code = app.exit(e);
		return code == 0 ? 0 : kExitError;
	}

	try {
		if (*kern)
			return cmd_kernelize(input, output, trace_path);
		if (*solve)
			return cmd_solve(input, approx);
		if (*verify)
			return cmd_verify(vopts);
		if (*gen)
			return cmd_gen(cliques, trees, noise, gen_k, seed, output);
		if (*stats)
			return cmd_stats(range, reps, seed, csv);
	} catch (const std::exception &e) {
		std::cerr << "error: " << e.what() << '\n';
		return kExitError;
	}
	return kExitError;
}
