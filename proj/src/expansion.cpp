#include "ctvd/expansion.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <numeric>

namespace ctvd {

BipartiteMatcher::BipartiteMatcher(std::size_t n_left, std::size_t n_right)
	: adj_(n_left), mate_l_(n_left, npos), mate_r_(n_right, npos), dist_(n_left, 0) {}

void BipartiteMatcher::add_edge(std::size_t l, std::size_t r) { adj_[l].push_back(r); }

bool BipartiteMatcher::bfs() {
	constexpr std::size_t inf = std::numeric_limits<std::size_t>::max();
	std::deque<std::size_t> queue;
	for (std::size_t l = 0; l < adj_.size(); ++l) {
		if (mate_l_[l] == npos) {
			dist_[l] = 0;
			queue.push_back(l);
		} else {
			dist_[l] = inf;
		}
	}
	bool found = false;
	while (!queue.empty()) {
		const std::size_t l = queue.front();
		queue.pop_front();
		for (std::size_t r : adj_[l]) {
			const std::size_t next = mate_r_[r];
			if (next == npos)
				found = true;
			else if (dist_[next] == inf) {
				dist_[next] = dist_[l] + 1;
				queue.push_back(next);
			}
		}
	}
	return found;
}

bool BipartiteMatcher::dfs(std::size_t l) {
	for (std::size_t r : adj_[l]) {
		const std::size_t next = mate_r_[r];
		if (next == npos || (dist_[next] == dist_[l] + 1 && dfs(next))) {
			mate_l_[l] = r;
			mate_r_[r] = l;
			return true;
		}
	}
	dist_[l] = std::numeric_limits<std::size_t>::max();
	return false;
}

std::size_t BipartiteMatcher::solve() {
	std::size_t matched = 0;
	for (std::size_t m : mate_l_)
		matched += m != npos;
	while (bfs())
		for (std::size_t l = 0; l < adj_.size(); ++l)
			if (mate_l_[l] == npos && dfs(l))
				++matched;
	return matched;
}

namespace {

struct IndexedBipartition {
	std::map<VertexId, std::size_t> a_index, b_index;
	std::vector<std::vector<std::size_t>> a_adj; // a index -> b indices
	std::vector<std::vector<std::size_t>> b_adj; // b index -> a indices
};

IndexedBipartition index_bipartition(const Bipartition &h) {
	IndexedBipartition ib;
	for (std::size_t i = 0; i < h.a_side.size(); ++i)
		if (!ib.a_index.emplace(h.a_side[i], i).second)
			throw ExpansionError("duplicate label on side A");
	for (std::size_t i = 0; i < h.b_side.size(); ++i)
		if (!ib.b_index.emplace(h.b_side[i], i).second)
			throw ExpansionError("duplicate label on side B");
	ib.a_adj.resize(h.a_side.size());
	ib.b_adj.resize(h.b_side.size());
	for (const auto &[a, b] : h.edges) {
		auto ia = ib.a_index.find(a);
		auto jb = ib.b_index.find(b);
		if (ia == ib.a_index.end() || jb == ib.b_index.end())
			throw ExpansionError("edge endpoint not in the bipartition");
		ib.a_adj[ia->second].push_back(jb->second);
		ib.b_adj[jb->second].push_back(ia->second);
	}
	for (auto &row : ib.a_adj) {
		std::sort(row.begin(), row.end());
		if (std::adjacent_find(row.begin(), row.end()) != row.end())
			throw ExpansionError("duplicate edge in bipartition");
	}
	for (auto &row : ib.b_adj)
		std::sort(row.begin(), row.end());
	return ib;
}

// q copies of every A vertex matched into B; X-hat/Y-hat are the vertices not
// reachable by alternating paths from unmatched copies.
ExpansionCertificate expand_by_matching(const Bipartition &h, const IndexedBipartition &ib, int q) {
	const std::size_t na = h.a_side.size();
	const std::size_t nb = h.b_side.size();
	const std::size_t qq = static_cast<std::size_t>(q);
	BipartiteMatcher matcher(na * qq, nb);
	for (std::size_t a = 0; a < na; ++a)
		for (std::size_t c = 0; c < qq; ++c)
			for (std::size_t b : ib.a_adj[a])
				matcher.add_edge(a * qq + c, b);
	matcher.solve();

	std::vector<char> reach_l(na * qq, 0), reach_r(nb, 0);
	std::deque<std::size_t> queue;
	for (std::size_t l = 0; l < na * qq; ++l)
		if (matcher.mate_of_left(l) == BipartiteMatcher::npos) {
			reach_l[l] = 1;
			queue.push_back(l);
		}
	while (!queue.empty()) {
		const std::size_t l = queue.front();
		queue.pop_front();
		for (std::size_t r : matcher.left_adj(l)) {
			if (reach_r[r])
				continue;
			reach_r[r] = 1;
			const std::size_t next = matcher.mate_of_right(r);
			if (next != BipartiteMatcher::npos && !reach_l[next]) {
				reach_l[next] = 1;
				queue.push_back(next);
			}
		}
	}

	ExpansionCertificate cert;
	cert.q = q;
	for (std::size_t a = 0; a < na; ++a) {
		bool reached = false;
		for (std::size_t c = 0; c < qq; ++c)
			reached = reached || reach_l[a * qq + c];
		if (reached)
			continue;
		cert.x_hat.push_back(h.a_side[a]);
		for (std::size_t c = 0; c < qq; ++c) {
			const std::size_t r = matcher.mate_of_left(a * qq + c);
			if (r != BipartiteMatcher::npos)
				cert.m.emplace_back(h.a_side[a], h.b_side[r]);
		}
	}
	for (std::size_t b = 0; b < nb; ++b)
		if (!reach_r[b])
			cert.y_hat.push_back(h.b_side[b]);
	std::sort(cert.x_hat.begin(), cert.x_hat.end());
	std::sort(cert.y_hat.begin(), cert.y_hat.end());
	std::sort(cert.m.begin(), cert.m.end());
	return cert;
}

} // namespace

ExpansionCertificate q_expansion(const Bipartition &h, int q) {
	if (q < 1)
		throw ExpansionError("q must be at least 1");
	const auto ib = index_bipartition(h);
	if (h.b_side.size() < static_cast<std::size_t>(q) * h.a_side.size())
		throw ExpansionError("|B| < q|A|");
	for (std::size_t b = 0; b < h.b_side.size(); ++b)
		if (ib.b_adj[b].empty())
			throw ExpansionError("B contains an isolated vertex");
	if (h.b_side.empty())
		throw ExpansionError("B is empty");
	auto cert = expand_by_matching(h, ib, q);
	if (auto err = check_expansion(h, cert, ExpansionVariant::Classic))
		throw InternalError("q_expansion produced an invalid certificate: " + *err);
	return cert;
}

ExpansionCertificate new_q_expansion(const Bipartition &h, int q) {
	if (q < 1)
		throw ExpansionError("q must be at least 1");
	const auto ib = index_bipartition(h);
	auto cert = expand_by_matching(h, ib, q);
	if (!check_expansion(h, cert, ExpansionVariant::New))
		return cert;
	if (h.a_side.size() + h.b_side.size() <= 20)
		if (auto fallback = new_q_expansion_exhaustive(h, q))
			return *fallback;
	throw InternalError("new_q_expansion could not produce a valid certificate");
}

std::optional<ExpansionCertificate> new_q_expansion_exhaustive(const Bipartition &h, int q) {
	if (q < 1)
		throw ExpansionError("q must be at least 1");
	const auto ib = index_bipartition(h);
	const std::size_t na = h.a_side.size();
	const std::size_t nb = h.b_side.size();
	if (na >= 31)
		throw ExpansionError("exhaustive expansion limited to |A| <= 30");
	const std::size_t qq = static_cast<std::size_t>(q);
	for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << na); ++mask) {
		// Y-hat: every B vertex whose neighbourhood lies inside X-hat
		std::vector<std::size_t> xs, ys;
		for (std::size_t a = 0; a < na; ++a)
			if (mask >> a & 1)
				xs.push_back(a);
		for (std::size_t b = 0; b < nb; ++b) {
			bool inside = true;
			for (std::size_t a : ib.b_adj[b])
				inside = inside && (mask >> a & 1);
			if (inside)
				ys.push_back(b);
		}
		if (nb - ys.size() > qq * (na - xs.size()))
			continue;
		std::vector<std::size_t> y_pos(nb, BipartiteMatcher::npos);
		for (std::size_t i = 0; i < ys.size(); ++i)
			y_pos[ys[i]] = i;
		BipartiteMatcher matcher(xs.size() * qq, ys.size());
		for (std::size_t i = 0; i < xs.size(); ++i)
			for (std::size_t c = 0; c < qq; ++c)
				for (std::size_t b : ib.a_adj[xs[i]])
					if (y_pos[b] != BipartiteMatcher::npos)
						matcher.add_edge(i * qq + c, y_pos[b]);
		if (matcher.solve() != xs.size() * qq)
			continue;
		ExpansionCertificate cert;
		cert.q = q;
		for (std::size_t a : xs)
			cert.x_hat.push_back(h.a_side[a]);
		for (std::size_t b : ys)
			cert.y_hat.push_back(h.b_side[b]);
		for (std::size_t l = 0; l < xs.size() * qq; ++l)
			cert.m.emplace_back(h.a_side[xs[l / qq]], h.b_side[ys[matcher.mate_of_left(l)]]);
		std::sort(cert.x_hat.begin(), cert.x_hat.end());
		std::sort(cert.y_hat.begin(), cert.y_hat.end());
		std::sort(cert.m.begin(), cert.m.end());
		return cert;
	}
	return std::nullopt;
}

std::optional<std::string> check_expansion(const Bipartition &h, const ExpansionCertificate &c,
                                           ExpansionVariant variant) {
	if (c.q < 1)
		return "q < 1";
	const auto ib = index_bipartition(h);
	std::vector<char> in_x(h.a_side.size(), 0), in_y(h.b_side.size(), 0);
	for (VertexId a : c.x_hat) {
		auto it = ib.a_index.find(a);
		if (it == ib.a_index.end())
			return "x_hat is not a subset of A";
		if (in_x[it->second])
			return "x_hat has duplicates";
		in_x[it->second] = 1;
	}
	for (VertexId b : c.y_hat) {
		auto it = ib.b_index.find(b);
		if (it == ib.b_index.end())
			return "y_hat is not a subset of B";
		if (in_y[it->second])
			return "y_hat has duplicates";
		in_y[it->second] = 1;
	}
	std::vector<int> a_deg(h.a_side.size(), 0), b_deg(h.b_side.size(), 0);
	for (const auto &[a, b] : c.m) {
		auto ia = ib.a_index.find(a);
		auto jb = ib.b_index.find(b);
		if (ia == ib.a_index.end() || jb == ib.b_index.end())
			return "expansion edge endpoint outside the bipartition";
		const auto &row = ib.a_adj[ia->second];
		if (!std::binary_search(row.begin(), row.end(), jb->second))
			return "expansion edge is not an edge of the graph";
		if (!in_x[ia->second] || !in_y[jb->second])
			return "expansion edge leaves x_hat x y_hat";
		++a_deg[ia->second];
		++b_deg[jb->second];
	}
	for (std::size_t a = 0; a < h.a_side.size(); ++a)
		if (in_x[a] && a_deg[a] != c.q)
			return "x_hat vertex not incident to exactly q expansion edges";
	std::size_t saturated = 0;
	for (std::size_t b = 0; b < h.b_side.size(); ++b) {
		if (b_deg[b] > 1)
			return "y_hat vertex saturated twice";
		saturated += static_cast<std::size_t>(b_deg[b]);
	}
	if (saturated != static_cast<std::size_t>(c.q) * c.x_hat.size())
		return "saturated count differs from q|x_hat|";
	for (std::size_t b = 0; b < h.b_side.size(); ++b)
		if (in_y[b])
			for (std::size_t a : ib.b_adj[b])
				if (!in_x[a])
					return "N(y_hat) is not contained in x_hat";
	if (variant == ExpansionVariant::Classic) {
		if (c.x_hat.empty() || c.y_hat.empty())
			return "x_hat or y_hat empty";
	} else {
		const std::size_t outside_b = h.b_side.size() - c.y_hat.size();
		const std::size_t outside_a = h.a_side.size() - c.x_hat.size();
		if (outside_b > static_cast<std::size_t>(c.q) * outside_a)
			return "|B \\ y_hat| > q|A \\ x_hat|";
	}
	return std::nullopt;
}

namespace {

// Simple forest check on g - v.
void require_forest_minus(const MultiGraph &g, VertexId v) {
	std::vector<VertexId> parent(g.id_bound());
	std::iota(parent.begin(), parent.end(), VertexId{0});
	auto find = [&](VertexId x) {
		while (parent[x] != x)
			x = parent[x] = parent[parent[x]];
		return x;
	};
	for (VertexId x : g.vertices()) {
		if (x == v)
			continue;
		if (g.loops(x) > 0)
			throw GraphError("g - v has a self-loop");
		for (const auto &[w, m] : g.neighbors(x)) {
			if (w == v || w < x)
				continue;
			if (m > 1)
				throw GraphError("g - v has a multi-edge");
			const VertexId rx = find(x), rw = find(w);
			if (rx == rw)
				throw GraphError("g - v is not a forest");
			parent[rx] = rw;
		}
	}
}

} // namespace

FlowerResult flower_or_hitting_set(const MultiGraph &g, VertexId v, std::size_t order) {
	if (!g.contains(v))
		throw GraphError("flower core is not a vertex of the graph");
	require_forest_minus(g, v);

	const auto &vadj = g.neighbors(v);
	auto mult_to_v = [&](VertexId x) -> std::uint32_t {
		auto it = vadj.find(x);
		return it == vadj.end() ? 0 : it->second;
	};

	constexpr VertexId none = std::numeric_limits<VertexId>::max();
	std::vector<VertexId> tree_parent(g.id_bound(), none);
	std::vector<char> visited(g.id_bound(), 0);
	std::vector<VertexId> dangling(g.id_bound(), none); // terminal of the open path ending here
	FlowerResult result;
	std::vector<VertexId> tops;

	auto climb = [&](VertexId from, VertexId to) {
		std::vector<VertexId> path;
		for (VertexId y = from; y != to; y = tree_parent[y])
			path.push_back(y);
		return path; // from .. child of `to`
	};

	for (VertexId root : g.vertices()) {
		if (root == v || visited[root])
			continue;
		std::vector<VertexId> bfs{root};
		visited[root] = 1;
		for (std::size_t i = 0; i < bfs.size(); ++i)
			for (const auto &[w, m] : g.neighbors(bfs[i]))
				if (w != v && !visited[w]) {
					visited[w] = 1;
					tree_parent[w] = bfs[i];
					bfs.push_back(w);
				}
		for (auto it = bfs.rbegin(); it != bfs.rend(); ++it) {
			const VertexId x = *it;
			const std::uint32_t mv = mult_to_v(x);
			if (mv >= 2) {
				result.petals.push_back({v, x});
				tops.push_back(x);
				continue;
			}
			std::vector<VertexId> open; // terminals of open paths meeting at x
			if (mv == 1)
				open.push_back(x);
			for (const auto &[c, m] : g.neighbors(x))
				if (c != v && tree_parent[c] == x && dangling[c] != none)
					open.push_back(dangling[c]);
			if (open.size() >= 2) {
				std::vector<VertexId> petal{v};
				auto left = climb(open[0], x);
				auto right = climb(open[1], x);
				petal.insert(petal.end(), left.begin(), left.end());
				petal.push_back(x);
				petal.insert(petal.end(), right.rbegin(), right.rend());
				result.petals.push_back(std::move(petal));
				tops.push_back(x);
			} else if (open.size() == 1) {
				dangling[x] = open[0];
			}
		}
	}
	result.packing = result.petals.size();
	if (result.petals.size() > order) {
		result.kind = FlowerResult::Kind::Flower;
	} else {
		result.kind = FlowerResult::Kind::HittingSet;
		result.petals.clear();
		result.hitting_set = make_set(std::move(tops));
	}
	return result;
}

bool has_cycle_through(const MultiGraph &g, VertexId v) {
	std::vector<VertexId> comp(g.id_bound(), std::numeric_limits<VertexId>::max());
	for (const auto &[u, m] : g.neighbors(v))
		if (m >= 2)
			return true;
	VertexId label = 0;
	for (const auto &[u, m] : g.neighbors(v)) {
		if (comp[u] != std::numeric_limits<VertexId>::max())
			return true;
		std::vector<VertexId> stack{u};
		comp[u] = label;
		while (!stack.empty()) {
			VertexId x = stack.back();
			stack.pop_back();
			for (const auto &[w, mw] : g.neighbors(x))
				if (w != v && comp[w] == std::numeric_limits<VertexId>::max()) {
					comp[w] = label;
					stack.push_back(w);
				}
		}
		++label;
	}
	return false;
}

std::optional<std::string> check_flower(const MultiGraph &g, VertexId v, std::size_t order, const FlowerResult &r) {
	if (r.kind == FlowerResult::Kind::Flower) {
		if (r.petals.size() < order + 1)
			return "flower has fewer than order+1 petals";
		std::vector<char> used(g.id_bound(), 0);
		for (const auto &p : r.petals) {
			if (p.size() < 2 || p.front() != v)
				return "petal does not start at the core";
			if (p.size() == 2) {
				if (!g.contains(p[1]) || g.multiplicity(v, p[1]) < 2)
					return "two-vertex petal without a double edge";
			} else {
				for (std::size_t i = 0; i < p.size(); ++i) {
					const VertexId a = p[i], b = p[(i + 1) % p.size()];
					if (!g.contains(a) || !g.contains(b) || g.multiplicity(a, b) == 0)
						return "petal is not a cycle";
				}
			}
			for (std::size_t i = 1; i < p.size(); ++i) {
				if (p[i] == v || used[p[i]])
					return "petals intersect outside the core";
				used[p[i]] = 1;
			}
		}
		return std::nullopt;
	}
	const auto &z = r.hitting_set;
	if (z.size() > 2 * order)
		return "hitting set larger than 2*order";
	if (std::binary_search(z.begin(), z.end(), v))
		return "hitting set contains the core";
	std::size_t edges_to_z = 0;
	for (VertexId x : z)
		edges_to_z += g.contains(x) ? g.multiplicity(v, x) : 0;
	if (edges_to_z > 2 * order)
		return "more than 2*order edges between the core and the hitting set";
	if (has_cycle_through(without(g, z), v))
		return "a cycle through the core survives the hitting set";
	return std::nullopt;
}

} // namespace ctvd
