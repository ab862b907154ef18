#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ctvd/obstructions.hpp"
#include "test_support.hpp"

using namespace ctvd;
using namespace ctvd::testing;

namespace {

bool is_chordless_cycle(const MultiGraph &g, const std::vector<VertexId> &c) {
	const auto r = c.size();
	if (r < 4)
		return false;
	for (std::size_t i = 0; i < r; ++i)
		for (std::size_t j = i + 1; j < r; ++j) {
			const bool consecutive = j == i + 1 || (i == 0 && j == r - 1);
			if ((g.multiplicity(c[i], c[j]) == 1) != consecutive)
				return false;
		}
	return true;
}

} // namespace

TEST_CASE("find_small_obstruction examples") {
	CHECK_FALSE(find_small_obstruction(path(6)).has_value());
	CHECK_FALSE(find_small_obstruction(complete(5)).has_value());

	auto d = find_small_obstruction(diamond());
	REQUIRE(d);
	CHECK(d->kind == ObstructionKind::Diamond);
	CHECK(verify_obstruction(diamond(), *d));

	MultiGraph dbl(2);
	dbl.add_edge(0, 1, 2);
	auto me = find_small_obstruction(dbl);
	REQUIRE(me);
	CHECK(me->kind == ObstructionKind::MultiEdge);

	MultiGraph loop(1);
	loop.add_edge(0, 0);
	auto sl = find_small_obstruction(loop);
	REQUIRE(sl);
	CHECK(sl->kind == ObstructionKind::SelfLoop);
	CHECK(sl->witness == std::vector<VertexId>{0});

	auto p = find_small_obstruction(paw());
	REQUIRE(p);
	CHECK(p->kind == ObstructionKind::Paw);
	CHECK(p->witness.back() == 3);

	auto c = find_small_obstruction(cycle(4));
	REQUIRE(c);
	CHECK(c->kind == ObstructionKind::Hole);
	CHECK(c->witness.size() == 4);

	CHECK_FALSE(find_small_obstruction(cycle(5)).has_value());
}

TEST_CASE("find_hole examples") {
	CHECK_FALSE(find_hole(path(7)));
	CHECK_FALSE(find_hole(complete(6)));

	auto c5 = cycle(5);
	auto h = find_hole(c5);
	REQUIRE(h);
	CHECK(h->size() == 5);
	CHECK(is_chordless_cycle(c5, *h));

	auto c6 = cycle(6);
	c6.add_edge(0, 3);
	auto h4 = find_hole(c6);
	REQUIRE(h4);
	CHECK(h4->size() == 4);
	CHECK(is_chordless_cycle(c6, *h4));
	CHECK_FALSE(find_hole(c6, 5));

	MultiGraph dbl = cycle(5);
	dbl.add_edge(0, 1);
	CHECK_THROWS_AS(find_hole(dbl), GraphError);
	CHECK_THROWS_AS(find_hole(c5, 3), GraphError);
}

TEST_CASE("chordality") {
	CHECK(is_chordal(path(5)));
	CHECK(is_chordal(complete(5)));
	CHECK(is_chordal(diamond()));
	CHECK_FALSE(is_chordal(cycle(4)));
	CHECK(mcs_order(cycle(6)).size() == 6);
}

TEST_CASE("find_any_obstruction examples") {
	CHECK_FALSE(find_any_obstruction(disjoint_union({complete(5), path(7)})));
	auto h = find_any_obstruction(cycle(7));
	REQUIRE(h);
	CHECK(h->kind == ObstructionKind::Hole);
	CHECK(h->witness.size() == 7);

	auto g = disjoint_union({path(3), complete(4)});
	g.add_edge(2, 3);
	auto o = find_any_obstruction(g);
	REQUIRE(o);
	CHECK((o->kind == ObstructionKind::Paw || o->kind == ObstructionKind::Diamond));
	CHECK(verify_obstruction(g, *o));
}

TEST_CASE("verify_obstruction rejects bad witnesses") {
	auto g = paw();
	CHECK_FALSE(verify_obstruction(g, {ObstructionKind::Diamond, {0, 1, 2, 3}}));
	CHECK_FALSE(verify_obstruction(g, {ObstructionKind::Paw, {0, 1, 2, 9}}));
	CHECK_FALSE(verify_obstruction(g, {ObstructionKind::Hole, {0, 1, 2}}));
	CHECK(verify_obstruction(g, {ObstructionKind::Paw, {0, 1, 2, 3}}));
}

TEST_CASE("degree-2 paths") {
	// Triangle 0 1 2, tail 0-3-4-5-6-7.
	MultiGraph g = complete(3);
	VertexId prev = 0;
	for (int i = 0; i < 5; ++i) {
		auto v = g.add_vertex();
		g.add_edge(prev, v);
		prev = v;
	}
	auto t = find_degree2_tail(g, 3);
	REQUIRE(t);
	CHECK(t->kind == PathKind::Tail);
	CHECK(t->vertices == std::vector<VertexId>{0, 3, 4, 5, 6, 7});
	CHECK_FALSE(find_degree2_tail(g, 7));
	CHECK_FALSE(find_degree2_tail(star(3), 3));
	CHECK_FALSE(find_degree2_tail(cycle(5), 3));

	// Two triangles joined through five degree-2 vertices.
	auto two = disjoint_union({complete(3), complete(3)});
	prev = 0;
	for (int i = 0; i < 5; ++i) {
		auto v = two.add_vertex();
		two.add_edge(prev, v);
		prev = v;
	}
	two.add_edge(prev, 3);
	auto ob = find_degree2_overbridge(two, 5);
	REQUIRE(ob);
	CHECK(ob->kind == PathKind::Overbridge);
	CHECK(ob->vertices.size() == 7);
	CHECK_FALSE(find_degree2_overbridge(cycle(4), 5));
	CHECK_FALSE(find_degree2_overbridge(complete(4), 3));

	const auto all = degree2_paths(two);
	CHECK(std::count_if(all.begin(), all.end(), [](const auto &p) { return p.kind == PathKind::Overbridge; }) >= 1);
}

TEST_CASE("property: characterization agrees with an induced-subgraph oracle") {
	// Every graph on up to 5 vertices, then random graphs on 8.
	for (std::size_t n = 0; n <= 5; ++n) {
		const std::size_t pairs = n * (n - (n ? 1 : 0)) / 2;
		for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
			MultiGraph g(n);
			std::size_t bit = 0;
			for (VertexId u = 0; u < n; ++u)
				for (VertexId v = u + 1; v < n; ++v, ++bit)
					if (mask >> bit & 1)
						g.add_edge(u, v);
			CHECK(is_cliques_or_trees(g) == !has_induced_obstruction(g));
			CHECK(find_any_obstruction(g).has_value() == has_induced_obstruction(g));
		}
	}
	std::mt19937_64 rng(99);
	for (int rep = 0; rep < 500; ++rep) {
		auto g = random_graph(rng, 8, 0.15 + 0.1 * (rep % 5));
		CHECK(is_cliques_or_trees(g) == !has_induced_obstruction(g));
	}
}

TEST_CASE("property: reported obstructions always verify") {
	std::mt19937_64 rng(7);
	for (int rep = 0; rep < 400; ++rep) {
		auto g = random_graph(rng, 4 + rep % 9, 0.3);
		if (rep % 4 == 0 && g.num_vertices() > 1)
			g.add_edge(0, 1);
		if (rep % 7 == 0)
			g.add_edge(2, 2);
		auto o = find_any_obstruction(g);
		CHECK(o.has_value() == !is_cliques_or_trees(g));
		if (o)
			CHECK(verify_obstruction(g, *o));
		if (g.is_simple())
			if (auto h = find_hole(g))
				CHECK(is_chordless_cycle(g, *h));
	}
}

TEST_CASE("property: connected simple graphs with a triangle and a non-edge have a small obstruction or hole") {
	std::mt19937_64 rng(31);
	int checked = 0;
	for (int rep = 0; rep < 600; ++rep) {
		auto g = random_graph(rng, 4 + rep % 6, 0.5);
		if (connected_components(g).size() != 1)
			continue;
		const auto m = adjacency_matrix(g);
		const auto vs = g.vertices();
		bool triangle = false, non_edge = false;
		for (auto a : vs)
			for (auto b : vs)
				if (a < b) {
					non_edge = non_edge || !m[a][b];
					for (auto c : vs)
						if (b < c && m[a][b] && m[b][c] && m[a][c])
							triangle = true;
				}
		if (!triangle || !non_edge)
			continue;
		++checked;
		auto o = find_any_obstruction(g);
		REQUIRE(o);
		CHECK(verify_obstruction(g, *o));
	}
	CHECK(checked > 50);
}
