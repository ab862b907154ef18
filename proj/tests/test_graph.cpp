#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "ctvd/graph.hpp"
#include "test_support.hpp"

using namespace ctvd;
using namespace ctvd::testing;

TEST_CASE("degree counts multiplicities and loops twice") {
	MultiGraph g(5);
	CHECK(degree(g, 0) == 0);
	g.add_edge(0, 1);
	g.add_edge(1, 2);
	g.add_edge(2, 0);
	CHECK(degree(g, 0) == 2);
	g.add_edge(3, 4, 2);
	CHECK(degree(g, 3) == 2);
	g.add_edge(4, 4);
	CHECK(degree(g, 4) == 4);
	CHECK_THROWS_AS(degree(g, 9), GraphError);
}

TEST_CASE("vertex ids stay stable and are never reused") {
	MultiGraph g(3);
	g.add_edge(0, 1);
	g.add_edge(1, 2);
	g.remove_vertex(1);
	CHECK_FALSE(g.contains(1));
	CHECK(g.contains(2));
	CHECK(g.add_vertex() == 3);
	CHECK(g.num_vertices() == 3);
	CHECK(g.num_edge_pairs() == 0);
	CHECK_THROWS_AS(g.add_edge(1, 2), GraphError);
	CHECK_THROWS_AS((void)g.neighbors(1), GraphError);
}

TEST_CASE("set_multiplicity and counters") {
	MultiGraph g(3);
	g.add_edge(0, 1, 3);
	g.add_edge(2, 2, 2);
	CHECK(g.total_multiplicity() == 5);
	CHECK(edge_record_count(g) == 2);
	g.set_multiplicity(0, 1, 0);
	CHECK(g.multiplicity(0, 1) == 0);
	CHECK(g.neighbors(0).empty());
	g.set_multiplicity(2, 2, 0);
	CHECK(g.is_simple());
}

TEST_CASE("connected_components examples") {
	CHECK(connected_components(MultiGraph()).empty());

	MultiGraph g = disjoint_union({complete(3), path(2)});
	auto comps = connected_components(g);
	REQUIRE(comps.size() == 2);
	CHECK(comps[0].size() == 3);
	CHECK(comps[1].size() == 2);

	CHECK(connected_components(MultiGraph(5)).size() == 5);
}

TEST_CASE("classify_component examples") {
	auto k3 = complete(3);
	CHECK(classify_component(k3, k3.vertices()) == ComponentKind::Clique);
	auto p4 = path(4);
	CHECK(classify_component(p4, p4.vertices()) == ComponentKind::Tree);
	auto pw = paw();
	CHECK(classify_component(pw, pw.vertices()) == ComponentKind::Neither);
	auto k1 = MultiGraph(1);
	CHECK(classify_component(k1, k1.vertices()) == ComponentKind::Tree);
	auto k2 = complete(2);
	CHECK(classify_component(k2, k2.vertices()) == ComponentKind::Tree);

	MultiGraph dbl(2);
	dbl.add_edge(0, 1, 2);
	CHECK(classify_component(dbl, dbl.vertices()) == ComponentKind::Neither);

	auto two = disjoint_union({complete(3), path(2)});
	CHECK_THROWS_AS(classify_component(two, two.vertices()), GraphError);
	CHECK_THROWS_AS(classify_component(p4, std::vector<VertexId>{0, 1}), GraphError);
}

TEST_CASE("is_solution examples") {
	auto c4 = cycle(4);
	for (VertexId v = 0; v < 4; ++v)
		CHECK(is_solution(c4, std::vector<VertexId>{v}, 1));
	CHECK_FALSE(is_solution(c4, {}, 0));
	auto pw = paw();
	CHECK_FALSE(is_solution(pw, {}, 0));
	CHECK(is_solution(pw, std::vector<VertexId>{3}, 1));
	CHECK_FALSE(is_solution(pw, std::vector<VertexId>{3}, 0));
	CHECK_THROWS_AS(is_solution(pw, std::vector<VertexId>{7}, 1), GraphError);
}

TEST_CASE("property: components partition the vertex set") {
	std::mt19937_64 rng(5);
	for (int rep = 0; rep < 200; ++rep) {
		auto g = random_graph(rng, 1 + rep % 12, 0.25);
		std::vector<int> hits(g.id_bound(), 0);
		for (const auto &c : connected_components(g))
			for (VertexId v : c)
				++hits[v];
		for (VertexId v : g.vertices())
			CHECK(hits[v] == 1);
	}
}

TEST_CASE("property: classification matches a matrix oracle") {
	std::mt19937_64 rng(17);
	for (int rep = 0; rep < 500; ++rep) {
		auto g = random_graph(rng, 1 + rep % 9, 0.2 + 0.1 * (rep % 6));
		const auto m = adjacency_matrix(g);
		for (const auto &c : connected_components(g)) {
			const auto kind = classify_component(g, c);
			std::size_t edges = 0;
			bool complete_pairs = true;
			for (std::size_t i = 0; i < c.size(); ++i)
				for (std::size_t j = i + 1; j < c.size(); ++j) {
					edges += m[c[i]][c[j]];
					complete_pairs = complete_pairs && m[c[i]][c[j]];
				}
			const bool tree = edges + 1 == c.size();
			const bool clique = complete_pairs;
			if (tree)
				CHECK(kind == ComponentKind::Tree);
			else if (clique)
				CHECK(kind == ComponentKind::Clique);
			else
				CHECK(kind == ComponentKind::Neither);
		}
	}
}

TEST_CASE("property: is_solution is monotone in k and in the deleted set") {
	std::mt19937_64 rng(23);
	for (int rep = 0; rep < 200; ++rep) {
		auto g = random_graph(rng, 2 + rep % 7, 0.4);
		const auto vs = g.vertices();
		std::vector<VertexId> x;
		for (VertexId v : vs)
			if (rng() % 3 == 0)
				x.push_back(v);
		const auto k = static_cast<std::int64_t>(x.size());
		if (is_solution(g, x, k)) {
			CHECK(is_solution(g, x, k + 1));
			for (VertexId v : vs)
				if (std::find(x.begin(), x.end(), v) == x.end()) {
					auto bigger = x;
					bigger.push_back(v);
					CHECK(is_solution(g, bigger, k + 1));
				}
		}
		CHECK_FALSE(is_solution(g, x, k - 1));
	}
}

TEST_CASE("induced_subgraph and without keep ids") {
	auto g = cycle(5);
	auto h = induced_subgraph(g, std::vector<VertexId>{1, 2, 3});
	CHECK(h.num_vertices() == 3);
	CHECK(h.multiplicity(1, 2) == 1);
	CHECK(h.multiplicity(2, 3) == 1);
	CHECK_FALSE(h.contains(0));
	auto w = without(g, std::vector<VertexId>{0, 4});
	CHECK(w == h);
}
