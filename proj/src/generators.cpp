#include "ctvd/generators.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "ctvd/solvers.hpp"

namespace ctvd {

namespace {

std::size_t uniform(Rng &rng, std::size_t lo, std::size_t hi) {
	return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng &rng, double p) { return std::bernoulli_distribution(p)(rng); }

VertexSet add_clique(MultiGraph &g, std::size_t size) {
	VertexSet vs;
	for (std::size_t i = 0; i < size; ++i)
		vs.push_back(g.add_vertex());
	for (std::size_t i = 0; i < size; ++i)
		for (std::size_t j = i + 1; j < size; ++j)
			g.add_edge(vs[i], vs[j]);
	return vs;
}

VertexSet add_tree(MultiGraph &g, Rng &rng, std::size_t size) {
	VertexSet vs;
	for (std::size_t i = 0; i < size; ++i) {
		vs.push_back(g.add_vertex());
		if (i > 0)
			g.add_edge(vs[i], vs[uniform(rng, 0, i - 1)]);
	}
	return vs;
}

VertexSet add_path(MultiGraph &g, std::size_t size) {
	VertexSet vs;
	for (std::size_t i = 0; i < size; ++i) {
		vs.push_back(g.add_vertex());
		if (i > 0)
			g.add_edge(vs[i - 1], vs[i]);
	}
	return vs;
}

void add_random_edges(MultiGraph &g, std::span<const VertexId> vs, double p, Rng &rng) {
	for (std::size_t i = 0; i < vs.size(); ++i)
		for (std::size_t j = i + 1; j < vs.size(); ++j)
			if (coin(rng, p))
				g.add_edge(vs[i], vs[j]);
}

VertexId pick(Rng &rng, const VertexSet &vs) { return vs[uniform(rng, 0, vs.size() - 1)]; }

void link_once(MultiGraph &g, VertexId a, VertexId b) {
	if (a != b && g.multiplicity(a, b) == 0)
		g.add_edge(a, b);
}

// Relabels vertices by a random permutation.
void shuffle_ids(Instance &inst, Rng &rng) {
	const auto vs = inst.graph.vertices();
	std::vector<VertexId> perm(inst.graph.id_bound());
	std::vector<VertexId> targets(vs.size());
	std::iota(targets.begin(), targets.end(), VertexId{0});
	std::shuffle(targets.begin(), targets.end(), rng);
	for (std::size_t i = 0; i < vs.size(); ++i)
		perm[vs[i]] = targets[i];
	MultiGraph out(vs.size());
	for (VertexId v : vs) {
		if (auto l = inst.graph.loops(v))
			out.add_edge(perm[v], perm[v], l);
		for (const auto &[w, m] : inst.graph.neighbors(v))
			if (w > v)
				out.add_edge(perm[v], perm[w], m);
	}
	inst.graph = std::move(out);
}

struct ComponentSpec {
	bool clique;
	std::size_t size;
};

Instance build_planted(Rng &rng, const std::vector<ComponentSpec> &comps, std::size_t noise, std::int64_t k) {
	Instance inst{MultiGraph(), k};
	auto &g = inst.graph;
	for (const auto &c : comps) {
		if (c.clique)
			add_clique(g, c.size);
		else
			add_tree(g, rng, c.size);
	}
	for (std::size_t i = 0; i < noise; ++i) {
		const VertexId x = g.add_vertex();
		if (x == 0)
			continue;
		const std::size_t d = uniform(rng, 1, 4);
		for (std::size_t j = 0; j < d; ++j)
			link_once(g, x, static_cast<VertexId>(uniform(rng, 0, x - 1)));
	}
	shuffle_ids(inst, rng);
	return inst;
}

Instance random_simple(Rng &rng, std::size_t n, double p) {
	Instance inst{MultiGraph(n), 0};
	const auto vs = inst.graph.vertices();
	add_random_edges(inst.graph, vs, p, rng);
	return inst;
}

RuleCase case_multiplicity(Rng &rng) {
	RuleCase rc{random_instance(rng, 8, 3), std::nullopt};
	auto &g = rc.instance.graph;
	const auto vs = g.vertices();
	const std::size_t extra = uniform(rng, 1, 3);
	for (std::size_t i = 0; i < extra; ++i) {
		const VertexId a = pick(rng, vs), b = pick(rng, vs);
		g.set_multiplicity(a, b, static_cast<std::uint32_t>(uniform(rng, 3, 5)));
	}
	return rc;
}

RuleCase case_isolated_component(Rng &rng) {
	Instance inst{MultiGraph(), static_cast<std::int64_t>(uniform(rng, 0, 2))};
	auto &g = inst.graph;
	const VertexSet s = add_tree(g, rng, uniform(rng, 1, 2));
	const std::size_t comps = uniform(rng, 2, 4);
	for (std::size_t i = 0; i < comps; ++i) {
		const VertexSet c = coin(rng, 0.5) ? add_clique(g, uniform(rng, 3, 4)) : add_tree(g, rng, uniform(rng, 1, 4));
		if (coin(rng, 0.5)) {
			const std::size_t links = uniform(rng, 1, 2);
			for (std::size_t j = 0; j < links; ++j)
				link_once(g, pick(rng, s), pick(rng, c));
		}
	}
	return {std::move(inst), s};
}

RuleCase case_pendant_dedup(Rng &rng) {
	RuleCase rc{random_instance(rng, 10, 3), std::nullopt};
	auto &g = rc.instance.graph;
	const VertexId u = pick(rng, g.vertices());
	const std::size_t pendants = uniform(rng, 2, 3);
	for (std::size_t i = 0; i < pendants; ++i)
		g.add_edge(u, g.add_vertex());
	return rc;
}

RuleCase case_tail(Rng &rng) {
	Instance inst = random_simple(rng, uniform(rng, 3, 9), 0.4);
	inst.k = static_cast<std::int64_t>(uniform(rng, 0, 3));
	auto &g = inst.graph;
	const auto vs = g.vertices();
	const VertexId u = pick(rng, vs);
	for (VertexId w : vs)
		if (degree(g, u) < 2)
			link_once(g, u, w);
	const VertexSet path = add_path(g, uniform(rng, 2, 5));
	g.add_edge(u, path.front());
	return {std::move(inst), std::nullopt};
}

RuleCase case_overbridge(Rng &rng) {
	Instance inst{MultiGraph(), static_cast<std::int64_t>(uniform(rng, 0, 3))};
	auto &g = inst.graph;
	auto blob = [&]() {
		if (coin(rng, 0.5))
			return add_clique(g, uniform(rng, 3, 4));
		VertexSet b = add_tree(g, rng, uniform(rng, 4, 5));
		add_random_edges(g, b, 0.4, rng);
		return b;
	};
	const VertexSet left = blob();
	const VertexSet right = blob();
	VertexId x = pick(rng, left), y = pick(rng, right);
	for (VertexId w : left)
		if (degree(g, x) < 2)
			link_once(g, x, w);
	for (VertexId w : right)
		if (degree(g, y) < 2)
			link_once(g, y, w);
	const VertexSet path = add_path(g, uniform(rng, 3, 6));
	g.add_edge(x, path.front());
	g.add_edge(path.back(), y);
	return {std::move(inst), std::nullopt};
}

RuleCase case_clique_expansion(Rng &rng) {
	Instance inst{MultiGraph(), static_cast<std::int64_t>(uniform(rng, 0, 3))};
	auto &g = inst.graph;
	const std::size_t ns = uniform(rng, 1, 2);
	VertexSet s;
	for (std::size_t i = 0; i < ns; ++i)
		s.push_back(g.add_vertex());
	if (ns == 2 && coin(rng, 0.5))
		g.add_edge(s[0], s[1]);
	const std::size_t count = uniform(rng, 2 * ns, 2 * ns + (ns == 1 ? 2 : 0));
	for (std::size_t i = 0; i < count; ++i) {
		const VertexSet c = add_clique(g, ns == 2 ? 3 : uniform(rng, 3, 4));
		const std::size_t links = uniform(rng, 1, 2);
		for (std::size_t j = 0; j < links; ++j)
			link_once(g, pick(rng, s), pick(rng, c));
	}
	if (g.num_vertices() < 17 && coin(rng, 0.4)) {
		const VertexSet t = add_tree(g, rng, uniform(rng, 1, 18 - g.num_vertices()));
		link_once(g, pick(rng, s), pick(rng, t));
	}
	return {std::move(inst), s};
}

RuleCase case_unmarked_clique_vertex(Rng &rng) {
	const auto k = static_cast<std::int64_t>(uniform(rng, 0, 1));
	Instance inst{MultiGraph(), k};
	auto &g = inst.graph;
	const VertexId s = g.add_vertex();
	const std::size_t cap = static_cast<std::size_t>(k + 4);
	const VertexSet clique = add_clique(g, uniform(rng, 2 * cap + 1, 2 * cap + 3));
	for (VertexId v : clique)
		if (coin(rng, 0.5))
			g.add_edge(s, v);
	link_once(g, s, clique.front());
	if (coin(rng, 0.5)) {
		const VertexSet t = add_tree(g, rng, uniform(rng, 1, 3));
		g.add_edge(s, pick(rng, t));
	}
	return {std::move(inst), VertexSet{s}};
}

RuleCase case_far_leaf(Rng &rng) {
	Instance inst{MultiGraph(), static_cast<std::int64_t>(uniform(rng, 0, 2))};
	auto &g = inst.graph;
	const VertexId s = g.add_vertex();
	const VertexSet t = add_tree(g, rng, uniform(rng, 5, 12));
	const std::size_t links = uniform(rng, 1, 2);
	for (std::size_t i = 0; i < links; ++i)
		link_once(g, s, pick(rng, t));
	if (coin(rng, 0.5)) {
		const VertexSet c = add_clique(g, 3);
		link_once(g, s, pick(rng, c));
		if (coin(rng, 0.5))
			link_once(g, s, pick(rng, c));
	}
	return {std::move(inst), VertexSet{s}};
}

RuleCase case_pendant_tree(Rng &rng) {
	Instance inst = random_instance(rng, 7, 0);
	inst.k = static_cast<std::int64_t>(uniform(rng, 0, 2));
	auto &g = inst.graph;
	std::vector<VertexId> s = approx_deletion_set(g).s;
	const VertexId hub = g.add_vertex();
	s.push_back(hub);
	for (int side = 0; side < 2; ++side) {
		const VertexSet t = add_tree(g, rng, uniform(rng, 2, 6));
		g.add_edge(hub, pick(rng, t));
	}
	return {std::move(inst), make_set(std::move(s))};
}

RuleCase case_flower(Rng &rng) {
	const auto k = static_cast<std::int64_t>(uniform(rng, 0, 1));
	Instance inst{MultiGraph(), k};
	auto &g = inst.graph;
	const VertexId v = g.add_vertex();
	const std::size_t need = static_cast<std::size_t>(3 * k + 2);
	const std::size_t petals = uniform(rng, need - 1, need + 1);
	VertexSet last;
	for (std::size_t i = 0; i < petals; ++i) {
		const std::size_t len = uniform(rng, 1, k == 0 ? 4 : 3);
		const VertexSet p = add_path(g, len);
		if (len == 1) {
			g.add_edge(v, p.front(), 2);
		} else {
			g.add_edge(v, p.front());
			g.add_edge(v, p.back());
		}
		if (!last.empty() && coin(rng, 0.2))
			g.add_edge(pick(rng, last), pick(rng, p));
		last = p;
	}
	return {std::move(inst), VertexSet{v}};
}

RuleCase case_tree_expansion(Rng &rng) {
	const auto k = static_cast<std::int64_t>(uniform(rng, 1, 2));
	Instance inst{MultiGraph(), k};
	auto &g = inst.graph;
	const VertexId v = g.add_vertex();
	const std::size_t na = uniform(rng, 1, 3);
	VertexSet a;
	for (std::size_t i = 0; i < na; ++i) {
		a.push_back(g.add_vertex());
		if (coin(rng, 0.3))
			g.add_edge(v, a.back());
	}
	const std::size_t comps = static_cast<std::size_t>(60 * (k + 1)) + uniform(rng, 5, 40);
	for (std::size_t i = 0; i < comps; ++i) {
		const std::size_t roll = uniform(rng, 0, 9);
		const VertexSet c = add_path(g, roll < 5 ? 1 : roll < 9 ? 2 : 3);
		g.add_edge(v, pick(rng, c));
		if (coin(rng, 0.9))
			link_once(g, pick(rng, a), pick(rng, c));
		if (na > 1 && coin(rng, 0.01))
			link_once(g, pick(rng, a), pick(rng, c));
	}
	VertexSet s = a;
	s.push_back(v);
	return {std::move(inst), make_set(std::move(s))};
}

} // namespace

Instance random_instance(Rng &rng, std::size_t max_n, std::int64_t max_k) {
	static constexpr std::array<double, 5> densities{0.1, 0.2, 0.35, 0.5, 0.7};
	const std::size_t n = uniform(rng, 1, std::max<std::size_t>(max_n, 1));
	Instance inst = random_simple(rng, n, densities[uniform(rng, 0, densities.size() - 1)]);
	inst.k = static_cast<std::int64_t>(uniform(rng, 0, static_cast<std::size_t>(std::max<std::int64_t>(max_k, 0))));
	if (coin(rng, 0.1)) {
		const auto vs = inst.graph.vertices();
		const std::size_t extra = uniform(rng, 1, 2);
		for (std::size_t i = 0; i < extra; ++i) {
			const VertexId a = pick(rng, vs), b = pick(rng, vs);
			inst.graph.add_edge(a, b, static_cast<std::uint32_t>(uniform(rng, a == b ? 1 : 2, 3)));
		}
	}
	return inst;
}

Instance planted_instance(Rng &rng, std::size_t cliques, std::size_t trees, std::size_t noise, std::int64_t k) {
	std::vector<ComponentSpec> comps;
	for (std::size_t i = 0; i < cliques; ++i)
		comps.push_back({true, uniform(rng, 3, 6)});
	for (std::size_t i = 0; i < trees; ++i)
		comps.push_back({false, uniform(rng, 1, 6)});
	std::shuffle(comps.begin(), comps.end(), rng);
	return build_planted(rng, comps, noise, k);
}

Instance planted_instance_bounded(Rng &rng, std::size_t max_n, std::int64_t max_k) {
	const auto k = static_cast<std::int64_t>(uniform(rng, 0, static_cast<std::size_t>(std::max<std::int64_t>(max_k, 0))));
	const std::size_t noise = std::min<std::size_t>(uniform(rng, 0, static_cast<std::size_t>(k) + 2), max_n);
	std::size_t budget = max_n - noise;
	std::vector<ComponentSpec> comps;
	while (budget > 0) {
		const bool clique = budget >= 3 && coin(rng, 0.5);
		const std::size_t size = clique ? uniform(rng, 3, std::min<std::size_t>(6, budget))
		                                : uniform(rng, 1, std::min<std::size_t>(6, budget));
		comps.push_back({clique, size});
		budget -= size;
		if (coin(rng, 0.2))
			break;
	}
	return build_planted(rng, comps, noise, k);
}

RuleCase rule_case(RuleId rule, Rng &rng) {
	switch (rule) {
	case RuleId::Multiplicity:
		return case_multiplicity(rng);
	case RuleId::IsolatedComponent:
		return case_isolated_component(rng);
	case RuleId::PendantDedup:
		return case_pendant_dedup(rng);
	case RuleId::Tail:
		return case_tail(rng);
	case RuleId::Overbridge:
		return case_overbridge(rng);
	case RuleId::CliqueExpansion:
		return case_clique_expansion(rng);
	case RuleId::UnmarkedCliqueVertex:
		return case_unmarked_clique_vertex(rng);
	case RuleId::FarLeaf:
		return case_far_leaf(rng);
	case RuleId::PendantTree:
		return case_pendant_tree(rng);
	case RuleId::Flower:
		return case_flower(rng);
	case RuleId::TreeExpansion:
		return case_tree_expansion(rng);
	}
	return case_multiplicity(rng);
}

} // namespace ctvd
