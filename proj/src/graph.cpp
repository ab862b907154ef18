#include "ctvd/graph.hpp"

#include <algorithm>
#include <string>

namespace ctvd {

MultiGraph::MultiGraph(std::size_t n) : slots_(n), alive_(n) {
	for (auto &s : slots_)
		s.alive = true;
}

const MultiGraph::Slot &MultiGraph::slot(VertexId v) const {
	if (!contains(v))
		throw GraphError("unknown vertex id " + std::to_string(v));
	return slots_[v];
}

MultiGraph::Slot &MultiGraph::slot(VertexId v) {
	if (!contains(v))
		throw GraphError("unknown vertex id " + std::to_string(v));
	return slots_[v];
}

VertexId MultiGraph::add_vertex() {
	slots_.emplace_back();
	slots_.back().alive = true;
	++alive_;
	return static_cast<VertexId>(slots_.size() - 1);
}

void MultiGraph::add_edge(VertexId u, VertexId v, std::uint32_t mult) {
	if (mult == 0)
		return;
	if (u == v) {
		slot(u).loops += mult;
		return;
	}
	slot(v); // validates v before mutating u
	slot(u).adj[v] += mult;
	slots_[v].adj[u] += mult;
}

void MultiGraph::set_multiplicity(VertexId u, VertexId v, std::uint32_t mult) {
	if (u == v) {
		slot(u).loops = mult;
		return;
	}
	slot(v);
	auto &su = slot(u);
	auto &sv = slots_[v];
	if (mult == 0) {
		su.adj.erase(v);
		sv.adj.erase(u);
	} else {
		su.adj[v] = mult;
		sv.adj[u] = mult;
	}
}

void MultiGraph::remove_vertex(VertexId v) {
	auto &s = slot(v);
	for (const auto &[w, m] : s.adj)
		slots_[w].adj.erase(v);
	s.adj.clear();
	s.loops = 0;
	s.alive = false;
	--alive_;
}

void MultiGraph::remove_vertices(std::span<const VertexId> vs) {
	for (VertexId v : vs)
		if (contains(v))
			remove_vertex(v);
}

std::uint32_t MultiGraph::multiplicity(VertexId u, VertexId v) const {
	if (u == v)
		return slot(u).loops;
	slot(v);
	const auto &adj = slot(u).adj;
	auto it = adj.find(v);
	return it == adj.end() ? 0 : it->second;
}

std::uint32_t MultiGraph::loops(VertexId v) const { return slot(v).loops; }

const MultiGraph::Adjacency &MultiGraph::neighbors(VertexId v) const { return slot(v).adj; }

std::size_t MultiGraph::num_edge_pairs() const {
	std::size_t twice = 0;
	for (const auto &s : slots_)
		if (s.alive)
			twice += s.adj.size();
	return twice / 2;
}

std::size_t MultiGraph::total_multiplicity() const {
	std::size_t twice = 0;
	for (const auto &s : slots_) {
		if (!s.alive)
			continue;
		twice += 2 * std::size_t{s.loops};
		for (const auto &[w, m] : s.adj)
			twice += m;
	}
	return twice / 2;
}

VertexSet MultiGraph::vertices() const {
	VertexSet out;
	out.reserve(alive_);
	for (std::size_t v = 0; v < slots_.size(); ++v)
		if (slots_[v].alive)
			out.push_back(static_cast<VertexId>(v));
	return out;
}

bool MultiGraph::is_simple() const {
	for (const auto &s : slots_) {
		if (!s.alive)
			continue;
		if (s.loops > 0)
			return false;
		for (const auto &[w, m] : s.adj)
			if (m > 1)
				return false;
	}
	return true;
}

bool operator==(const MultiGraph &a, const MultiGraph &b) {
	if (a.alive_ != b.alive_)
		return false;
	const std::size_t bound = std::max(a.slots_.size(), b.slots_.size());
	for (std::size_t v = 0; v < bound; ++v) {
		const bool in_a = a.contains(static_cast<VertexId>(v));
		const bool in_b = b.contains(static_cast<VertexId>(v));
		if (in_a != in_b)
			return false;
		if (in_a && (a.slots_[v].loops != b.slots_[v].loops || a.slots_[v].adj != b.slots_[v].adj))
			return false;
	}
	return true;
}

const char *to_string(ComponentKind kind) {
	switch (kind) {
	case ComponentKind::Clique:
		return "clique";
	case ComponentKind::Tree:
		return "tree";
	case ComponentKind::Neither:
		return "neither";
	}
	return "?";
}

std::uint32_t degree(const MultiGraph &g, VertexId v) {
	std::uint32_t d = 2 * g.loops(v);
	for (const auto &[w, m] : g.neighbors(v))
		d += m;
	return d;
}

namespace {

// Components of g restricted to vertices with alive[v] set.
std::vector<VertexSet> components_masked(const MultiGraph &g, const std::vector<char> &alive) {
	std::vector<VertexSet> comps;
	std::vector<char> seen(g.id_bound(), 0);
	std::vector<VertexId> stack;
	for (VertexId s : g.vertices()) {
		if (!alive[s] || seen[s])
			continue;
		VertexSet comp;
		seen[s] = 1;
		stack.push_back(s);
		while (!stack.empty()) {
			VertexId x = stack.back();
			stack.pop_back();
			comp.push_back(x);
			for (const auto &[y, m] : g.neighbors(x)) {
				if (alive[y] && !seen[y]) {
					seen[y] = 1;
					stack.push_back(y);
				}
			}
		}
		std::sort(comp.begin(), comp.end());
		comps.push_back(std::move(comp));
	}
	return comps;
}

// Classifies a component of g - (dead vertices) without validating it.
ComponentKind classify_masked(const MultiGraph &g, std::span<const VertexId> comp, const std::vector<char> &alive) {
	std::size_t twice_edges = 0;
	for (VertexId v : comp) {
		if (g.loops(v) > 0)
			return ComponentKind::Neither;
		for (const auto &[w, m] : g.neighbors(v)) {
			if (!alive[w])
				continue;
			if (m > 1)
				return ComponentKind::Neither;
			++twice_edges;
		}
	}
	const std::size_t n = comp.size();
	const std::size_t m = twice_edges / 2;
	if (n <= 2 || m + 1 == n)
		return ComponentKind::Tree;
	if (m == n * (n - 1) / 2)
		return ComponentKind::Clique;
	return ComponentKind::Neither;
}

bool valid_masked(const MultiGraph &g, const std::vector<char> &alive) {
	for (const auto &comp : components_masked(g, alive))
		if (classify_masked(g, comp, alive) == ComponentKind::Neither)
			return false;
	return true;
}

} // namespace

std::vector<VertexSet> connected_components(const MultiGraph &g) {
	std::vector<char> alive(g.id_bound(), 1);
	return components_masked(g, alive);
}

ComponentKind classify_component(const MultiGraph &g, std::span<const VertexId> comp) {
	if (comp.empty())
		throw GraphError("empty vertex set is not a component");
	std::vector<char> in(g.id_bound(), 0);
	for (VertexId v : comp) {
		if (!g.contains(v))
			throw GraphError("unknown vertex id " + std::to_string(v));
		in[v] = 1;
	}
	// closed under adjacency and connected
	for (VertexId v : comp)
		for (const auto &[w, m] : g.neighbors(v))
			if (!in[w])
				throw GraphError("vertex set is not closed under adjacency");
	std::vector<char> seen(g.id_bound(), 0);
	std::vector<VertexId> stack{comp.front()};
	seen[comp.front()] = 1;
	std::size_t reached = 0;
	while (!stack.empty()) {
		VertexId x = stack.back();
		stack.pop_back();
		++reached;
		for (const auto &[y, m] : g.neighbors(x))
			if (!seen[y]) {
				seen[y] = 1;
				stack.push_back(y);
			}
	}
	std::size_t distinct = 0;
	for (char c : in)
		distinct += static_cast<std::size_t>(c);
	if (reached != distinct)
		throw GraphError("vertex set is not connected");
	std::vector<char> alive(g.id_bound(), 1);
	return classify_masked(g, comp, alive);
}

bool is_solution(const MultiGraph &g, std::span<const VertexId> x, std::int64_t k) {
	std::vector<char> alive(g.id_bound(), 1);
	std::int64_t size = 0;
	for (VertexId v : x) {
		if (!g.contains(v))
			throw GraphError("unknown vertex id " + std::to_string(v));
		if (alive[v]) {
			alive[v] = 0;
			++size;
		}
	}
	if (size > k)
		return false;
	return valid_masked(g, alive);
}

bool is_cliques_or_trees(const MultiGraph &g) {
	std::vector<char> alive(g.id_bound(), 1);
	return valid_masked(g, alive);
}

MultiGraph induced_subgraph(const MultiGraph &g, std::span<const VertexId> keep) {
	std::vector<char> kept(g.id_bound(), 0);
	for (VertexId v : keep) {
		if (!g.contains(v))
			throw GraphError("unknown vertex id " + std::to_string(v));
		kept[v] = 1;
	}
	MultiGraph out = g;
	for (VertexId v : g.vertices())
		if (!kept[v])
			out.remove_vertex(v);
	return out;
}

MultiGraph without(const MultiGraph &g, std::span<const VertexId> removed) {
	MultiGraph out = g;
	out.remove_vertices(removed);
	return out;
}

std::size_t edge_record_count(const MultiGraph &g) {
	std::size_t loops = 0;
	for (VertexId v : g.vertices())
		loops += g.loops(v) > 0;
	return g.num_edge_pairs() + loops;
}

VertexSet make_set(std::vector<VertexId> vs) {
	std::sort(vs.begin(), vs.end());
	vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
	return vs;
}

} // namespace ctvd
