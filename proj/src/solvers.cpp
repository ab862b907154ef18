#include "ctvd/solvers.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>

#include "ctvd/obstructions.hpp"

namespace ctvd {

namespace {

// Compact copy of a vertex subset with local indices, used by the inner
// validity loop.
struct DenseGraph {
	std::vector<VertexId> ids;
	std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> adj;
	std::vector<std::uint32_t> loops;

	DenseGraph(const MultiGraph &g, std::span<const VertexId> vs) : ids(vs.begin(), vs.end()) {
		std::vector<std::uint32_t> local(g.id_bound(), std::numeric_limits<std::uint32_t>::max());
		for (std::uint32_t i = 0; i < ids.size(); ++i)
			local[ids[i]] = i;
		adj.resize(ids.size());
		loops.resize(ids.size());
		for (std::uint32_t i = 0; i < ids.size(); ++i) {
			loops[i] = g.loops(ids[i]);
			for (const auto &[w, m] : g.neighbors(ids[i]))
				if (local[w] != std::numeric_limits<std::uint32_t>::max())
					adj[i].emplace_back(local[w], m);
		}
	}

	[[nodiscard]] std::size_t size() const { return ids.size(); }

	[[nodiscard]] std::uint32_t degree(std::uint32_t i) const {
		std::uint32_t d = 2 * loops[i];
		for (const auto &[w, m] : adj[i])
			d += m;
		return d;
	}

	// True iff the vertices with removed[i] == 0 induce a valid graph.
	[[nodiscard]] bool valid_without(const std::vector<char> &removed, std::vector<std::uint32_t> &stack,
	                                 std::vector<char> &seen) const {
		const std::size_t n = size();
		seen.assign(n, 0);
		for (std::uint32_t s = 0; s < n; ++s) {
			if (removed[s] || seen[s])
				continue;
			std::uint64_t nv = 0, deg_sum = 0;
			stack.clear();
			stack.push_back(s);
			seen[s] = 1;
			while (!stack.empty()) {
				const std::uint32_t x = stack.back();
				stack.pop_back();
				if (loops[x])
					return false;
				++nv;
				for (const auto &[w, m] : adj[x]) {
					if (removed[w])
						continue;
					if (m > 1)
						return false;
					++deg_sum;
					if (!seen[w]) {
						seen[w] = 1;
						stack.push_back(w);
					}
				}
			}
			const std::uint64_t m = deg_sum / 2;
			if (m != nv - 1 && m != nv * (nv - 1) / 2)
				return false;
		}
		return true;
	}
};

// Lexicographically first valid subset (positions into `cand`) among those of
// size `size` whose first position is `first`.
std::optional<std::vector<std::uint32_t>> first_with_prefix(const DenseGraph &d, const std::vector<std::uint32_t> &cand,
                                                            std::size_t size, std::size_t first) {
	std::vector<char> removed(d.size(), 0);
	std::vector<std::uint32_t> stack;
	std::vector<char> seen;
	const std::size_t rest = size - 1;
	const std::size_t pool = cand.size() - first - 1;
	if (rest > pool)
		return std::nullopt;
	std::vector<std::size_t> idx(rest);
	std::iota(idx.begin(), idx.end(), first + 1);
	removed[cand[first]] = 1;
	while (true) {
		for (std::size_t i : idx)
			removed[cand[i]] = 1;
		const bool ok = d.valid_without(removed, stack, seen);
		for (std::size_t i : idx)
			removed[cand[i]] = 0;
		if (ok) {
			std::vector<std::uint32_t> out{cand[first]};
			for (std::size_t i : idx)
				out.push_back(cand[i]);
			return out;
		}
		// next combination of `rest` positions out of (first, cand.size())
		std::size_t j = rest;
		while (j > 0 && idx[j - 1] == cand.size() - rest + j - 1)
			--j;
		if (j == 0)
			return std::nullopt;
		++idx[j - 1];
		for (std::size_t t = j; t < rest; ++t)
			idx[t] = idx[t - 1] + 1;
	}
}

std::optional<std::vector<std::uint32_t>> first_of_size(const DenseGraph &d, const std::vector<std::uint32_t> &cand,
                                                        std::size_t size, bool parallel) {
	if (size == 0) {
		std::vector<char> removed(d.size(), 0);
		std::vector<std::uint32_t> stack;
		std::vector<char> seen;
		if (d.valid_without(removed, stack, seen))
			return std::vector<std::uint32_t>{};
		return std::nullopt;
	}
	if (size > cand.size())
		return std::nullopt;
	const std::size_t firsts = cand.size() - size + 1;
	if (!parallel) {
		for (std::size_t f = 0; f < firsts; ++f)
			if (auto r = first_with_prefix(d, cand, size, f))
				return r;
		return std::nullopt;
	}
	std::vector<std::optional<std::vector<std::uint32_t>>> found(firsts);
	std::atomic<std::size_t> best{firsts};
#pragma omp parallel for schedule(dynamic, 1)
	for (std::ptrdiff_t f = 0; f < static_cast<std::ptrdiff_t>(firsts); ++f) {
		if (static_cast<std::size_t>(f) > best.load())
			continue;
		found[f] = first_with_prefix(d, cand, size, static_cast<std::size_t>(f));
		if (found[f]) {
			std::size_t cur = best.load();
			while (static_cast<std::size_t>(f) < cur && !best.compare_exchange_weak(cur, static_cast<std::size_t>(f))) {
			}
		}
	}
	for (auto &r : found)
		if (r)
			return r;
	return std::nullopt;
}

// Minimum deletion set of one component, if it has size <= cap.
std::optional<VertexSet> solve_component(const MultiGraph &g, const VertexSet &comp, std::int64_t lower,
                                         std::int64_t cap, bool parallel) {
	DenseGraph d(g, comp);
	std::vector<std::uint32_t> cand(d.size());
	std::iota(cand.begin(), cand.end(), 0u);
	std::vector<std::uint32_t> deg(d.size());
	for (std::uint32_t i = 0; i < d.size(); ++i)
		deg[i] = d.degree(i);
	std::stable_sort(cand.begin(), cand.end(), [&](std::uint32_t a, std::uint32_t b) { return deg[a] > deg[b]; });
	const std::int64_t top = std::min<std::int64_t>(cap, static_cast<std::int64_t>(d.size()));
	for (std::int64_t s = std::max<std::int64_t>(lower, 0); s <= top; ++s) {
		if (auto r = first_of_size(d, cand, static_cast<std::size_t>(s), parallel)) {
			VertexSet out;
			for (std::uint32_t i : *r)
				out.push_back(d.ids[i]);
			return make_set(std::move(out));
		}
	}
	return std::nullopt;
}

SolveResult solve(const MultiGraph &g, std::int64_t k, bool parallel) {
	SolveResult res;
	if (k < 0)
		return res;
	const auto comps = connected_components(g);
	std::vector<std::int64_t> lower(comps.size());
	std::int64_t lower_rest = 0;
	for (std::size_t i = 0; i < comps.size(); ++i) {
		lower[i] = obstruction_packing_bound(induced_subgraph(g, comps[i]));
		lower_rest += lower[i];
	}
	if (lower_rest > k)
		return res;
	VertexSet solution;
	std::int64_t used = 0;
	for (std::size_t i = 0; i < comps.size(); ++i) {
		lower_rest -= lower[i];
		if (lower[i] == 0)
			continue;
		auto part = solve_component(g, comps[i], lower[i], k - used - lower_rest, parallel);
		if (!part)
			return res;
		used += static_cast<std::int64_t>(part->size());
		solution.insert(solution.end(), part->begin(), part->end());
	}
	res.feasible = true;
	res.solution = make_set(std::move(solution));
	res.optimum = used;
	return res;
}

} // namespace

SolveResult brute_force(const MultiGraph &g, std::int64_t k) { return solve(g, k, true); }

SolveResult brute_force_serial(const MultiGraph &g, std::int64_t k) { return solve(g, k, false); }

std::int64_t optimum(const MultiGraph &g) {
	auto r = brute_force(g, static_cast<std::int64_t>(g.num_vertices()));
	if (!r.optimum)
		throw InternalError("deleting every vertex must be feasible");
	return *r.optimum;
}

std::int64_t obstruction_packing_bound(const MultiGraph &g) {
	MultiGraph cur = g;
	std::int64_t count = 0;
	while (auto o = find_any_obstruction(cur)) {
		++count;
		cur.remove_vertices(o->witness);
	}
	return count;
}

SolveResult exhaustive_reference(const MultiGraph &g, std::int64_t k) {
	const VertexSet vs = g.vertices();
	if (vs.size() > 24)
		throw GraphError("exhaustive_reference is limited to 24 vertices");
	SolveResult res;
	if (k < 0)
		return res;
	DenseGraph d(g, vs);
	std::vector<char> removed(vs.size());
	std::vector<std::uint32_t> stack;
	std::vector<char> seen;
	int best = std::numeric_limits<int>::max();
	std::uint32_t best_mask = 0;
	for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << vs.size()); ++mask) {
		const int pc = std::popcount(mask);
		if (pc > k || pc >= best)
			continue;
		for (std::size_t i = 0; i < vs.size(); ++i)
			removed[i] = static_cast<char>(mask >> i & 1);
		if (d.valid_without(removed, stack, seen)) {
			best = pc;
			best_mask = mask;
		}
	}
	if (best == std::numeric_limits<int>::max())
		return res;
	VertexSet x;
	for (std::size_t i = 0; i < vs.size(); ++i)
		if (best_mask >> i & 1)
			x.push_back(vs[i]);
	res.feasible = true;
	res.optimum = best;
	res.solution = std::move(x);
	return res;
}

VertexSet approx_feedback_vertex_set(const MultiGraph &g) {
	if (!g.is_simple())
		throw GraphError("approx_feedback_vertex_set requires a simple graph");
	const VertexSet vs = g.vertices();
	DenseGraph d(g, vs);
	const std::size_t n = d.size();
	std::vector<char> gone(n, 0);
	std::vector<std::uint32_t> deg(n);
	for (std::uint32_t i = 0; i < n; ++i)
		deg[i] = static_cast<std::uint32_t>(d.adj[i].size());
	std::vector<long double> weight(n, 1.0L);
	std::vector<std::uint32_t> stack_f;
	auto drop = [&](std::uint32_t x) {
		gone[x] = 1;
		for (const auto &[w, m] : d.adj[x])
			if (!gone[w])
				--deg[w];
	};
	constexpr long double eps = 1e-12L;
	while (true) {
		std::vector<std::uint32_t> queue;
		for (std::uint32_t i = 0; i < n; ++i)
			if (!gone[i] && deg[i] <= 1)
				queue.push_back(i);
		while (!queue.empty()) {
			const std::uint32_t x = queue.back();
			queue.pop_back();
			if (gone[x])
				continue;
			drop(x);
			for (const auto &[w, m] : d.adj[x])
				if (!gone[w] && deg[w] <= 1)
					queue.push_back(w);
		}
		long double gamma = std::numeric_limits<long double>::infinity();
		for (std::uint32_t i = 0; i < n; ++i)
			if (!gone[i])
				gamma = std::min(gamma, weight[i] / static_cast<long double>(deg[i] - 1));
		if (std::isinf(gamma))
			break;
		std::vector<std::uint32_t> zero;
		for (std::uint32_t i = 0; i < n; ++i) {
			if (gone[i])
				continue;
			weight[i] -= gamma * static_cast<long double>(deg[i] - 1);
			if (weight[i] <= eps)
				zero.push_back(i);
		}
		for (std::uint32_t x : zero) {
			stack_f.push_back(x);
			drop(x);
		}
	}
	// reverse-order redundancy removal
	std::vector<char> in_f(n, 0);
	for (std::uint32_t x : stack_f)
		in_f[x] = 1;
	auto acyclic_without = [&](const std::vector<char> &f) {
		std::vector<std::uint32_t> parent(n);
		std::iota(parent.begin(), parent.end(), 0u);
		auto find = [&](std::uint32_t x) {
			while (parent[x] != x)
				x = parent[x] = parent[parent[x]];
			return x;
		};
		for (std::uint32_t i = 0; i < n; ++i) {
			if (f[i])
				continue;
			for (const auto &[w, m] : d.adj[i]) {
				if (f[w] || w < i)
					continue;
				const std::uint32_t a = find(i), b = find(w);
				if (a == b)
					return false;
				parent[a] = b;
			}
		}
		return true;
	};
	for (auto it = stack_f.rbegin(); it != stack_f.rend(); ++it) {
		in_f[*it] = 0;
		if (!acyclic_without(in_f))
			in_f[*it] = 1;
	}
	VertexSet out;
	for (std::uint32_t i = 0; i < n; ++i)
		if (in_f[i])
			out.push_back(d.ids[i]);
	return out;
}

Modulator approx_deletion_set(const MultiGraph &g) {
	MultiGraph cur = g;
	std::vector<VertexId> s;
	while (auto o = find_small_obstruction(cur)) {
		s.insert(s.end(), o->witness.begin(), o->witness.end());
		cur.remove_vertices(o->witness);
	}
	for (const auto &comp : connected_components(cur)) {
		if (classify_component(cur, comp) != ComponentKind::Neither)
			continue;
		auto f = approx_feedback_vertex_set(induced_subgraph(cur, comp));
		s.insert(s.end(), f.begin(), f.end());
	}
	Modulator mod{make_set(std::move(s)), 6};
	if (!is_solution(g, mod.s, static_cast<std::int64_t>(mod.s.size())))
		throw InternalError("approx_deletion_set produced an invalid modulator");
	return mod;
}

} // namespace ctvd
