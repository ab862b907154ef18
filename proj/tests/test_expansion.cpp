#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <functional>
#include <random>
#include <set>

#include "ctvd/expansion.hpp"
#include "test_support.hpp"

using namespace ctvd;
using namespace ctvd::testing;

namespace {

Bipartition complete_bipartite(std::size_t a, std::size_t b) {
	Bipartition h;
	for (VertexId i = 0; i < a; ++i)
		h.a_side.push_back(i);
	for (VertexId j = 0; j < b; ++j)
		h.b_side.push_back(100 + j);
	for (auto x : h.a_side)
		for (auto y : h.b_side)
			h.edges.emplace_back(x, y);
	return h;
}

Bipartition random_bipartition(std::mt19937_64 &rng, std::size_t a, std::size_t b, double p) {
	std::bernoulli_distribution coin(p);
	Bipartition h;
	for (VertexId i = 0; i < a; ++i)
		h.a_side.push_back(i);
	for (VertexId j = 0; j < b; ++j)
		h.b_side.push_back(j);
	for (auto x : h.a_side)
		for (auto y : h.b_side)
			if (coin(rng))
				h.edges.emplace_back(x, y);
	return h;
}

// Exhaustive maximum matching size.
std::size_t matching_oracle(std::size_t nl, std::size_t nr, const std::vector<std::pair<std::size_t, std::size_t>> &edges) {
	std::vector<std::vector<std::size_t>> adj(nl);
	for (auto [l, r] : edges)
		adj[l].push_back(r);
	std::vector<bool> used(nr, false);
	std::function<std::size_t(std::size_t)> go = [&](std::size_t l) -> std::size_t {
		if (l == nl)
			return 0;
		std::size_t best = go(l + 1);
		for (auto r : adj[l])
			if (!used[r]) {
				used[r] = true;
				best = std::max(best, 1 + go(l + 1));
				used[r] = false;
			}
		return best;
	};
	return go(0);
}

} // namespace

TEST_CASE("matcher agrees with exhaustive matching") {
	std::mt19937_64 rng(3);
	for (int rep = 0; rep < 300; ++rep) {
		const std::size_t nl = rng() % 7, nr = rng() % 7;
		BipartiteMatcher bm(nl, nr);
		std::vector<std::pair<std::size_t, std::size_t>> edges;
		for (std::size_t l = 0; l < nl; ++l)
			for (std::size_t r = 0; r < nr; ++r)
				if (rng() % 3 == 0) {
					bm.add_edge(l, r);
					edges.emplace_back(l, r);
				}
		CHECK(bm.solve() == matching_oracle(nl, nr, edges));
		for (std::size_t l = 0; l < nl; ++l)
			if (bm.mate_of_left(l) != BipartiteMatcher::npos)
				CHECK(bm.mate_of_right(bm.mate_of_left(l)) == l);
	}
}

TEST_CASE("q_expansion examples") {
	auto h = complete_bipartite(1, 2);
	auto c = q_expansion(h, 2);
	CHECK(c.x_hat == VertexSet{0});
	CHECK(c.y_hat == VertexSet{100, 101});
	CHECK(c.m.size() == 2);
	CHECK_FALSE(check_expansion(h, c, ExpansionVariant::Classic));

	auto k24 = complete_bipartite(2, 4);
	auto c24 = q_expansion(k24, 2);
	CHECK_FALSE(check_expansion(k24, c24, ExpansionVariant::Classic));
	CHECK(c24.x_hat == VertexSet{0, 1});
	CHECK(c24.y_hat.size() == 4);

	CHECK_THROWS_AS(q_expansion(complete_bipartite(2, 3), 2), ExpansionError);
	CHECK_THROWS_AS(q_expansion(h, 0), ExpansionError);
	auto iso = complete_bipartite(1, 2);
	iso.b_side.push_back(200);
	CHECK_THROWS_AS(q_expansion(iso, 1), ExpansionError);
	auto dup = complete_bipartite(1, 2);
	dup.a_side.push_back(0);
	CHECK_THROWS_AS(q_expansion(dup, 1), ExpansionError);
}

TEST_CASE("new_q_expansion examples") {
	Bipartition empty;
	empty.a_side = {1, 2};
	auto c0 = new_q_expansion(empty, 3);
	CHECK(c0.x_hat.empty());
	CHECK(c0.y_hat.empty());
	CHECK(c0.m.empty());

	auto star5 = complete_bipartite(1, 5);
	auto c = new_q_expansion(star5, 4);
	CHECK(c.x_hat == VertexSet{0});
	CHECK(c.y_hat.size() == 5);
	CHECK(c.m.size() == 4);
	CHECK_FALSE(check_expansion(star5, c, ExpansionVariant::New));

	Bipartition one;
	one.a_side = {1, 2};
	one.b_side = {7};
	one.edges = {{1, 7}};
	auto c1 = new_q_expansion(one, 1);
	CHECK_FALSE(check_expansion(one, c1, ExpansionVariant::New));
	CHECK(c1.x_hat == VertexSet{1});
	CHECK(c1.y_hat == VertexSet{7});
}

TEST_CASE("checker rejects tampered certificates") {
	auto h = complete_bipartite(2, 5);
	auto c = q_expansion(h, 2);
	auto dropped = c;
	dropped.m.pop_back();
	CHECK(check_expansion(h, dropped, ExpansionVariant::Classic));
	auto foreign = c;
	foreign.m.front().second = 999;
	CHECK(check_expansion(h, foreign, ExpansionVariant::Classic));
	auto shrunk = c;
	shrunk.x_hat.pop_back();
	CHECK(check_expansion(h, shrunk, ExpansionVariant::Classic));
}

TEST_CASE("property: expansions pass the checker and the exhaustive search agrees") {
	std::mt19937_64 rng(11);
	for (int rep = 0; rep < 300; ++rep) {
		const int q = std::array{1, 2, 4}[rep % 3];
		auto h = random_bipartition(rng, 1 + rng() % 5, rng() % 13, 0.35);
		auto c = new_q_expansion(h, q);
		CHECK_FALSE(check_expansion(h, c, ExpansionVariant::New));
		auto ex = new_q_expansion_exhaustive(h, q);
		REQUIRE(ex);
		CHECK_FALSE(check_expansion(h, *ex, ExpansionVariant::New));

		std::set<VertexId> touched;
		for (auto [a, b] : h.edges)
			touched.insert(b);
		const bool classic_ok = touched.size() == h.b_side.size() && !h.b_side.empty() &&
		                        h.b_side.size() >= static_cast<std::size_t>(q) * h.a_side.size();
		if (classic_ok) {
			auto cc = q_expansion(h, q);
			CHECK_FALSE(check_expansion(h, cc, ExpansionVariant::Classic));
		}
	}
}

TEST_CASE("flower examples") {
	// Apex 0 with three disjoint triangles through it.
	MultiGraph g(7);
	for (VertexId i = 1; i < 7; i += 2) {
		g.add_edge(0, i);
		g.add_edge(0, i + 1);
		g.add_edge(i, i + 1);
	}
	auto r = flower_or_hitting_set(g, 0, 2);
	CHECK(r.kind == FlowerResult::Kind::Flower);
	CHECK(r.petals.size() == 3);
	CHECK_FALSE(check_flower(g, 0, 2, r));

	auto s = star(5);
	auto rs = flower_or_hitting_set(s, 0, 0);
	CHECK(rs.kind == FlowerResult::Kind::HittingSet);
	CHECK(rs.hitting_set.empty());
	CHECK_FALSE(has_cycle_through(s, 0));

	MultiGraph dbl(5);
	dbl.add_edge(1, 2);
	dbl.add_edge(3, 4);
	dbl.add_edge(0, 1, 2);
	dbl.add_edge(0, 3, 2);
	auto rd = flower_or_hitting_set(dbl, 0, 1);
	CHECK(rd.kind == FlowerResult::Kind::Flower);
	CHECK(rd.packing == 2);
	CHECK_FALSE(check_flower(dbl, 0, 1, rd));

	auto rh = flower_or_hitting_set(g, 0, 3);
	CHECK(rh.kind == FlowerResult::Kind::HittingSet);
	CHECK(rh.hitting_set.size() == 3);
	CHECK_FALSE(has_cycle_through(without(g, rh.hitting_set), 0));

	MultiGraph bad = cycle(4);
	bad.add_vertex();
	bad.add_edge(4, 0);
	CHECK_THROWS_AS(flower_or_hitting_set(bad, 4, 1), GraphError);
}

TEST_CASE("property: flower packing is maximum") {
	std::mt19937_64 rng(13);
	for (int rep = 0; rep < 300; ++rep) {
		auto g = forest_with_apex(rng, 3 + rng() % 11, 0.45);
		const std::size_t order = rng() % 5;
		auto r = flower_or_hitting_set(g, 0, order);
		CHECK_FALSE(check_flower(g, 0, order, r));
		CHECK(r.packing == petal_packing_oracle(g, 0));
		CHECK(has_cycle_through(g, 0) == (r.packing > 0));
	}
}
