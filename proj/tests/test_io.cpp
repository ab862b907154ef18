#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "ctvd/generators.hpp"
#include "ctvd/io.hpp"
#include "test_support.hpp"

using namespace ctvd;
using namespace ctvd::testing;

namespace {

Instance parse(const std::string &text) {
	std::istringstream is(text);
	return read_edge_list(is);
}

std::size_t error_line(const std::string &text) {
	try {
		parse(text);
	} catch (const ParseError &e) {
		return e.line();
	}
	return 0;
}

} // namespace

TEST_CASE("edge list parsing") {
	auto inst = parse("# comment\nctvd 4 3 2\n0 1\n1 2 3\n\nloop 3\n");
	CHECK(inst.k == 2);
	CHECK(inst.graph.num_vertices() == 4);
	CHECK(inst.graph.multiplicity(1, 2) == 3);
	CHECK(inst.graph.loops(3) == 1);

	auto empty = parse("ctvd 0 0 0\n");
	CHECK(empty.graph.num_vertices() == 0);
}

TEST_CASE("edge list errors carry line numbers") {
	CHECK(error_line("graph 2 1 0\n0 1\n") == 1);
	CHECK(error_line("ctvd 2 1 0\n0 5\n") == 2);
	CHECK(error_line("ctvd 2 2 0\n0 1\n") == 2);
	CHECK(error_line("ctvd 2 1 -1\n0 1\n") == 1);
	CHECK(error_line("ctvd 2 1 0\n0 1 0\n") == 2);
	CHECK(error_line("ctvd 2 1 0\n1 1\n") == 2);
	CHECK(error_line("ctvd 2 1 0\n0 x\n") == 2);
	CHECK_THROWS_AS(parse(""), ParseError);
	CHECK_THROWS_AS(read_edge_list_file("/nonexistent/file"), std::runtime_error);
}

TEST_CASE("writer output is canonical") {
	MultiGraph g(5);
	g.add_edge(3, 1, 2);
	g.add_edge(4, 4);
	g.add_edge(0, 4);
	g.remove_vertex(2);
	const auto text = to_edge_list(Instance{g, 3});
	CHECK(text == "ctvd 4 3 3\n0 3\n1 2 2\nloop 3\n");
	CHECK(to_edge_list(parse(text)) == text);
}

TEST_CASE("property: edge lists round-trip") {
	Rng rng(79);
	for (int rep = 0; rep < 200; ++rep) {
		auto inst = random_instance(rng, 12, 5);
		const auto text = to_edge_list(inst);
		const auto back = parse(text);
		CHECK(back.graph == compact(inst).graph);
		CHECK(back.k == inst.k);
		CHECK(to_edge_list(back) == text);
	}
}

TEST_CASE("trace format") {
	KernelTrace t;
	t.input_n = 5;
	t.input_m = 6;
	t.input_k = 2;
	t.records.emplace_back(ModulatorRecord{{0, 3}, 6});
	TraceStep st;
	st.index = 0;
	st.rule = RuleId::Overbridge;
	st.k_before = st.k_after = 2;
	st.deleted = {4};
	st.assignments = {{1, 2, 1}};
	st.aux = {1};
	t.records.emplace_back(st);
	t.outcome = {false, "", 4, 5, 2, 99, true};
	const auto text = serialize_trace(t);
	CHECK(text == "ctvd-trace 1\n"
	              "input n=5 m=6 k=2\n"
	              "modulator size=2 factor=6 vertices=0,3\n"
	              "step 0 overbridge k 2 2 del 4 set 1-2*1 aux 1\n"
	              "result kernel n=4 m=5 k=2 bound=99 within_bound=yes\n");
	CHECK(parse_trace(text) == t);

	KernelTrace no;
	no.records.emplace_back(ModulatorRecord{{}, 0});
	no.outcome.no_instance = true;
	no.outcome.reason = "modulator";
	CHECK(parse_trace(serialize_trace(no)) == no);
}

TEST_CASE("trace parse errors") {
	CHECK_THROWS_AS(parse_trace(""), ParseError);
	CHECK_THROWS_AS(parse_trace("ctvd-trace 2\n"), ParseError);
	CHECK_THROWS_AS(parse_trace("ctvd-trace 1\ninput n=1 m=0 k=0\n"), ParseError);
	CHECK_THROWS_AS(parse_trace("ctvd-trace 1\ninput n=1 m=0 k=0\nstep 0 bogus k 0 0 del - set - aux -\n"),
	                ParseError);
	CHECK_THROWS_AS(parse_trace("ctvd-trace 1\ninput n=1 m=0 k=0\nmodulator size=2 factor=6 vertices=1\n"),
	                ParseError);
	CHECK_THROWS_AS(parse_trace("ctvd-trace 1\ninput n=1 m=0 k=0\nresult kernel n=1\n"), ParseError);
}

TEST_CASE("property: real traces round-trip byte for byte") {
	Rng rng(83);
	for (int rep = 0; rep < 150; ++rep) {
		const auto inst = rep % 2 ? random_instance(rng, 14, 4) : planted_instance_bounded(rng, 18, 4);
		const auto res = kernelize(inst);
		const auto text = serialize_trace(res.trace);
		const auto back = parse_trace(text);
		CHECK(back == res.trace);
		CHECK(serialize_trace(back) == text);
		const auto again = replay(inst, back);
		CHECK(again.graph == res.instance.graph);
	}
}
