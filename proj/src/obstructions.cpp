#include "ctvd/obstructions.hpp"

#include <algorithm>
#include <deque>

namespace ctvd {

const char *to_string(ObstructionKind kind) {
	switch (kind) {
	case ObstructionKind::SelfLoop:
		return "self-loop";
	case ObstructionKind::MultiEdge:
		return "multi-edge";
	case ObstructionKind::Diamond:
		return "diamond";
	case ObstructionKind::Paw:
		return "paw";
	case ObstructionKind::Hole:
		return "hole";
	}
	return "?";
}

namespace {

bool adjacent(const MultiGraph &g, VertexId u, VertexId v) {
	const auto &adj = g.neighbors(u);
	return adj.find(v) != adj.end();
}

std::vector<VertexId> common_neighbors(const MultiGraph &g, VertexId a, VertexId b) {
	std::vector<VertexId> out;
	const auto &na = g.neighbors(a);
	const auto &nb = g.neighbors(b);
	auto ia = na.begin();
	auto ib = nb.begin();
	while (ia != na.end() && ib != nb.end()) {
		if (ia->first < ib->first)
			++ia;
		else if (ib->first < ia->first)
			++ib;
		else {
			out.push_back(ia->first);
			++ia;
			++ib;
		}
	}
	return out;
}

std::optional<Obstruction> find_diamond(const MultiGraph &g) {
	for (VertexId a : g.vertices()) {
		for (const auto &[b, m] : g.neighbors(a)) {
			if (b < a)
				continue;
			auto common = common_neighbors(g, a, b);
			for (std::size_t i = 0; i < common.size(); ++i)
				for (std::size_t j = i + 1; j < common.size(); ++j)
					if (!adjacent(g, common[i], common[j]))
						return Obstruction{ObstructionKind::Diamond, {a, b, common[i], common[j]}};
		}
	}
	return std::nullopt;
}

std::optional<Obstruction> find_paw(const MultiGraph &g) {
	for (VertexId a : g.vertices()) {
		const auto &na = g.neighbors(a);
		for (auto ib = na.upper_bound(a); ib != na.end(); ++ib) {
			const VertexId b = ib->first;
			for (auto ic = std::next(ib); ic != na.end(); ++ic) {
				const VertexId c = ic->first;
				if (!adjacent(g, b, c))
					continue;
				const VertexId tri[3] = {a, b, c};
				for (int r = 0; r < 3; ++r) {
					const VertexId hub = tri[r];
					const VertexId o1 = tri[(r + 1) % 3];
					const VertexId o2 = tri[(r + 2) % 3];
					for (const auto &[d, md] : g.neighbors(hub)) {
						if (d == o1 || d == o2 || adjacent(g, d, o1) || adjacent(g, d, o2))
							continue;
						return Obstruction{ObstructionKind::Paw, {hub, o1, o2, d}};
					}
				}
			}
		}
	}
	return std::nullopt;
}

std::optional<Obstruction> find_c4(const MultiGraph &g) {
	std::vector<char> seen(g.id_bound(), 0);
	for (VertexId a : g.vertices()) {
		std::vector<VertexId> two_hop;
		for (const auto &[b, mb] : g.neighbors(a))
			for (const auto &[c, mc] : g.neighbors(b))
				if (c > a && !seen[c] && !adjacent(g, a, c)) {
					seen[c] = 1;
					two_hop.push_back(c);
				}
		for (VertexId c : two_hop)
			seen[c] = 0;
		std::sort(two_hop.begin(), two_hop.end());
		for (VertexId c : two_hop) {
			auto common = common_neighbors(g, a, c);
			for (std::size_t i = 0; i < common.size(); ++i)
				for (std::size_t j = i + 1; j < common.size(); ++j)
					if (!adjacent(g, common[i], common[j]))
						return Obstruction{ObstructionKind::Hole, {a, common[i], c, common[j]}};
		}
	}
	return std::nullopt;
}

// Shortest a-b path avoiding N[x] \ {a, b}; closes a hole through x.
std::optional<std::vector<VertexId>> hole_through(const MultiGraph &g, VertexId x, VertexId a, VertexId b) {
	std::vector<char> blocked(g.id_bound(), 0);
	blocked[x] = 1;
	for (const auto &[w, m] : g.neighbors(x))
		blocked[w] = 1;
	blocked[a] = 0;
	blocked[b] = 0;
	std::vector<VertexId> parent(g.id_bound(), x);
	std::vector<char> seen(g.id_bound(), 0);
	std::deque<VertexId> queue{a};
	seen[a] = 1;
	while (!queue.empty()) {
		VertexId u = queue.front();
		queue.pop_front();
		for (const auto &[w, m] : g.neighbors(u)) {
			if (blocked[w] || seen[w])
				continue;
			// a and b are only allowed as path endpoints
			if (w == a)
				continue;
			seen[w] = 1;
			parent[w] = u;
			if (w == b) {
				std::vector<VertexId> cycle{x};
				std::vector<VertexId> path;
				for (VertexId y = b; y != a; y = parent[y])
					path.push_back(y);
				path.push_back(a);
				std::reverse(path.begin(), path.end());
				cycle.insert(cycle.end(), path.begin(), path.end());
				return cycle;
			}
			queue.push_back(w);
		}
	}
	return std::nullopt;
}

std::optional<std::vector<VertexId>> hole_at(const MultiGraph &g, VertexId x) {
	std::vector<VertexId> nbrs;
	for (const auto &[w, m] : g.neighbors(x))
		nbrs.push_back(w);
	for (std::size_t i = 0; i < nbrs.size(); ++i)
		for (std::size_t j = i + 1; j < nbrs.size(); ++j)
			if (!adjacent(g, nbrs[i], nbrs[j]))
				if (auto h = hole_through(g, x, nbrs[i], nbrs[j]))
					return h;
	return std::nullopt;
}

// Exhaustive induced-path extension; exponential, for small graphs only.
bool extend_long_hole(const MultiGraph &g, std::vector<VertexId> &path, std::vector<char> &on_path,
                      std::size_t min_len) {
	const VertexId s = path.front();
	const VertexId last = path.back();
	for (const auto &[w, m] : g.neighbors(last)) {
		if (w <= s || on_path[w])
			continue;
		bool chord = false;
		for (std::size_t i = 1; i + 1 < path.size(); ++i)
			if (adjacent(g, w, path[i])) {
				chord = true;
				break;
			}
		if (chord)
			continue;
		const bool closes = path.size() >= 2 && adjacent(g, w, s);
		if (closes) {
			if (path.size() + 1 >= min_len) {
				path.push_back(w);
				return true;
			}
			continue;
		}
		path.push_back(w);
		on_path[w] = 1;
		if (extend_long_hole(g, path, on_path, min_len))
			return true;
		on_path[w] = 0;
		path.pop_back();
	}
	return false;
}

} // namespace

std::vector<VertexId> mcs_order(const MultiGraph &g) {
	const auto verts = g.vertices();
	std::vector<int> weight(g.id_bound(), 0);
	std::vector<char> numbered(g.id_bound(), 0);
	std::vector<VertexId> order;
	order.reserve(verts.size());
	for (std::size_t step = 0; step < verts.size(); ++step) {
		VertexId best = 0;
		int best_w = -1;
		for (VertexId v : verts)
			if (!numbered[v] && weight[v] > best_w) {
				best = v;
				best_w = weight[v];
			}
		numbered[best] = 1;
		order.push_back(best);
		for (const auto &[w, m] : g.neighbors(best))
			if (!numbered[w])
				++weight[w];
	}
	return order;
}

namespace {

// First vertex where the MCS order fails to be a perfect elimination order,
// with its two non-adjacent earlier neighbours.
struct Violation {
	VertexId x, a, b;
};

std::optional<Violation> mcs_violation(const MultiGraph &g) {
	const auto order = mcs_order(g);
	std::vector<std::size_t> pos(g.id_bound(), 0);
	for (std::size_t i = 0; i < order.size(); ++i)
		pos[order[i]] = i;
	for (std::size_t i = 0; i < order.size(); ++i) {
		const VertexId v = order[i];
		std::vector<VertexId> earlier;
		for (const auto &[w, m] : g.neighbors(v))
			if (pos[w] < i)
				earlier.push_back(w);
		if (earlier.size() < 2)
			continue;
		const VertexId f =
			*std::max_element(earlier.begin(), earlier.end(), [&](VertexId p, VertexId q) { return pos[p] < pos[q]; });
		for (VertexId w : earlier)
			if (w != f && !adjacent(g, w, f))
				return Violation{v, std::min(w, f), std::max(w, f)};
	}
	return std::nullopt;
}

} // namespace

bool is_chordal(const MultiGraph &g) { return !mcs_violation(g).has_value(); }

std::optional<std::vector<VertexId>> find_hole(const MultiGraph &g, std::size_t min_len) {
	if (min_len < 4)
		throw GraphError("hole length must be at least 4");
	if (!g.is_simple())
		throw GraphError("find_hole requires a simple graph");
	const auto violation = mcs_violation(g);
	if (!violation)
		return std::nullopt;
	if (min_len == 4) {
		if (auto h = hole_through(g, violation->x, violation->a, violation->b))
			return h;
		for (VertexId x : g.vertices())
			if (auto h = hole_at(g, x))
				return h;
		throw InternalError("MCS reported a non-chordal graph but no hole was found");
	}
	std::vector<char> on_path(g.id_bound(), 0);
	for (VertexId s : g.vertices()) {
		std::vector<VertexId> path{s};
		on_path[s] = 1;
		for (const auto &[p1, m] : g.neighbors(s)) {
			if (p1 <= s)
				continue;
			path.push_back(p1);
			on_path[p1] = 1;
			if (extend_long_hole(g, path, on_path, min_len))
				return path;
			on_path[p1] = 0;
			path.pop_back();
		}
		on_path[s] = 0;
	}
	return std::nullopt;
}

std::optional<Obstruction> find_small_obstruction(const MultiGraph &g) {
	for (VertexId v : g.vertices())
		if (g.loops(v) > 0)
			return Obstruction{ObstructionKind::SelfLoop, {v}};
	for (VertexId v : g.vertices())
		for (const auto &[w, m] : g.neighbors(v))
			if (w > v && m > 1)
				return Obstruction{ObstructionKind::MultiEdge, {v, w}};
	if (auto o = find_diamond(g))
		return o;
	if (auto o = find_paw(g))
		return o;
	return find_c4(g);
}

std::optional<Obstruction> find_any_obstruction(const MultiGraph &g) {
	if (auto o = find_small_obstruction(g))
		return o;
	if (auto h = find_hole(g, 4))
		return Obstruction{ObstructionKind::Hole, std::move(*h)};
	return std::nullopt;
}

bool verify_obstruction(const MultiGraph &g, const Obstruction &o) {
	const auto &w = o.witness;
	for (VertexId v : w)
		if (!g.contains(v))
			return false;
	auto distinct = [&] {
		auto s = make_set(w);
		return s.size() == w.size();
	};
	auto edge = [&](std::size_t i, std::size_t j) { return g.multiplicity(w[i], w[j]); };
	switch (o.kind) {
	case ObstructionKind::SelfLoop:
		return w.size() == 1 && g.loops(w[0]) > 0;
	case ObstructionKind::MultiEdge:
		return w.size() == 2 && w[0] != w[1] && g.multiplicity(w[0], w[1]) > 1;
	case ObstructionKind::Diamond:
	case ObstructionKind::Paw: {
		if (w.size() != 4 || !distinct())
			return false;
		for (VertexId v : w)
			if (g.loops(v) > 0)
				return false;
		const bool diamond = o.kind == ObstructionKind::Diamond;
		// expected adjacency of pairs (0,1) (0,2) (0,3) (1,2) (1,3) (2,3)
		const int expect[6] = {1, 1, 1, 1, diamond ? 1 : 0, 0};
		const std::size_t pairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
		for (int p = 0; p < 6; ++p)
			if (edge(pairs[p][0], pairs[p][1]) != static_cast<std::uint32_t>(expect[p]))
				return false;
		return true;
	}
	case ObstructionKind::Hole: {
		const std::size_t r = w.size();
		if (r < 4 || !distinct())
			return false;
		for (VertexId v : w)
			if (g.loops(v) > 0)
				return false;
		for (std::size_t i = 0; i < r; ++i)
			for (std::size_t j = i + 1; j < r; ++j) {
				const bool consecutive = j == i + 1 || (i == 0 && j == r - 1);
				if (edge(i, j) != (consecutive ? 1u : 0u))
					return false;
			}
		return true;
	}
	}
	return false;
}

std::vector<Degree2Path> degree2_paths(const MultiGraph &g) {
	std::vector<Degree2Path> out;
	for (VertexId x : g.vertices()) {
		if (degree(g, x) <= 2)
			continue;
		for (const auto &[y, mxy] : g.neighbors(x)) {
			if (mxy != 1)
				continue;
			const auto dy = degree(g, y);
			if (dy > 2)
				continue;
			std::vector<VertexId> path{x, y};
			VertexId prev = x;
			VertexId cur = y;
			bool cycle = false;
			while (degree(g, cur) == 2) {
				VertexId next = prev;
				for (const auto &[w, m] : g.neighbors(cur))
					if (w != prev)
						next = w;
				if (next == x) {
					cycle = true;
					break;
				}
				path.push_back(next);
				prev = cur;
				cur = next;
			}
			if (cycle)
				continue;
			if (degree(g, cur) == 1)
				out.push_back({PathKind::Tail, std::move(path)});
			else if (x < cur)
				out.push_back({PathKind::Overbridge, std::move(path)});
		}
	}
	return out;
}

std::optional<Degree2Path> find_degree2_tail(const MultiGraph &g, std::size_t min_len) {
	for (auto &p : degree2_paths(g))
		if (p.kind == PathKind::Tail && p.vertices.size() >= min_len)
			return std::move(p);
	return std::nullopt;
}

std::optional<Degree2Path> find_degree2_overbridge(const MultiGraph &g, std::size_t min_len) {
	for (auto &p : degree2_paths(g))
		if (p.kind == PathKind::Overbridge && p.vertices.size() >= min_len)
			return std::move(p);
	return std::nullopt;
}

} // namespace ctvd
