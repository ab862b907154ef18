#include "ctvd/kernelizer.hpp"

#include <algorithm>
#include <string>

#include "ctvd/expansion.hpp"
#include "ctvd/obstructions.hpp"
#include "ctvd/solvers.hpp"

namespace ctvd {

namespace {

constexpr std::array<const char *, 11> kRuleNames{
    "multiplicity", "isolated_component", "pendant_dedup", "tail",   "overbridge",     "clique_expansion",
    "unmarked_clique_vertex", "far_leaf", "pendant_tree",  "flower", "tree_expansion",
};

std::vector<char> mask_of(const MultiGraph &g, const VertexSet &vs) {
	std::vector<char> mask(g.id_bound(), 0);
	for (VertexId v : vs)
		mask[v] = 1;
	return mask;
}

bool touches(const MultiGraph &g, VertexId v, const std::vector<char> &mask) {
	for (const auto &[w, m] : g.neighbors(v))
		if (mask[w])
			return true;
	return false;
}

std::int64_t nonneg(std::int64_t k) { return std::max<std::int64_t>(k, 0); }

TraceStep make_step(const KernelState &st, RuleId rule) {
	TraceStep step;
	step.rule = rule;
	step.k_before = st.instance.k;
	step.k_after = st.instance.k;
	return step;
}

std::optional<TraceStep> plan_multiplicity(const KernelState &st) {
	const MultiGraph &g = st.instance.graph;
	auto step = make_step(st, RuleId::Multiplicity);
	for (VertexId v : g.vertices()) {
		if (g.loops(v) > 2)
			step.assignments.push_back({v, v, 2});
		for (const auto &[w, m] : g.neighbors(v))
			if (w > v && m > 2)
				step.assignments.push_back({v, w, 2});
	}
	if (step.assignments.empty())
		return std::nullopt;
	return step;
}

std::optional<TraceStep> plan_isolated_component(const KernelState &st) {
	const MultiGraph &g = st.instance.graph;
	const auto in_s = mask_of(g, st.s);
	std::vector<const VertexSet *> comps;
	for (const auto &c : st.cliques)
		comps.push_back(&c);
	for (const auto &c : st.trees)
		comps.push_back(&c);
	std::sort(comps.begin(), comps.end(), [](const VertexSet *a, const VertexSet *b) { return a->front() < b->front(); });
	for (const VertexSet *c : comps) {
		const bool attached = std::any_of(c->begin(), c->end(), [&](VertexId v) { return touches(g, v, in_s); });
		if (!attached) {
			auto step = make_step(st, RuleId::IsolatedComponent);
			step.deleted = *c;
			return step;
		}
	}
	return std::nullopt;
}

std::optional<TraceStep> plan_pendant_dedup(const KernelState &st, const RuleOptions &opts) {
	const MultiGraph &g = st.instance.graph;
	for (VertexId u : g.vertices()) {
		std::vector<VertexId> pendants;
		for (const auto &[w, m] : g.neighbors(u))
			if (degree(g, w) == 1)
				pendants.push_back(w);
		if (pendants.size() < 2)
			continue;
		auto step = make_step(st, RuleId::PendantDedup);
		step.deleted = {pendants.back()};
		if (opts.fault_pendant_dedup)
			step.k_after = st.instance.k - 1;
		return step;
	}
	return std::nullopt;
}

std::optional<TraceStep> plan_tail(const KernelState &st) {
	auto tail = find_degree2_tail(st.instance.graph, 3);
	if (!tail)
		return std::nullopt;
	auto step = make_step(st, RuleId::Tail);
	step.deleted = make_set({tail->vertices.begin() + 2, tail->vertices.end()});
	return step;
}

std::optional<TraceStep> plan_overbridge(const KernelState &st) {
	auto path = find_degree2_overbridge(st.instance.graph, 5);
	if (!path)
		return std::nullopt;
	const auto &p = path->vertices;
	const std::size_t len = p.size();
	auto step = make_step(st, RuleId::Overbridge);
	step.deleted = make_set({p.begin() + 2, p.end() - 2});
	step.assignments.push_back({p[1], p[len - 2], 1});
	const bool hits_s = std::any_of(step.deleted.begin(), step.deleted.end(),
	                                [&](VertexId z) { return std::binary_search(st.s.begin(), st.s.end(), z); });
	if (hits_s)
		step.aux = {p[1]};
	return step;
}

std::optional<TraceStep> plan_clique_expansion(const KernelState &st) {
	const MultiGraph &g = st.instance.graph;
	const std::size_t nc = st.cliques.size();
	if (nc == 0 || nc < 2 * st.s.size())
		return std::nullopt;
	std::vector<std::size_t> comp_of(g.id_bound(), nc);
	for (std::size_t i = 0; i < nc; ++i)
		for (VertexId v : st.cliques[i])
			comp_of[v] = i;
	Bipartition h;
	h.a_side = st.s;
	for (const auto &c : st.cliques)
		h.b_side.push_back(c.front());
	for (VertexId s : st.s) {
		std::vector<char> seen(nc, 0);
		for (const auto &[w, m] : g.neighbors(s)) {
			const std::size_t i = comp_of[w];
			if (i < nc && !seen[i]) {
				seen[i] = 1;
				h.edges.emplace_back(s, st.cliques[i].front());
			}
		}
	}
	ExpansionCertificate cert;
	try {
		cert = q_expansion(h, 2);
	} catch (const ExpansionError &e) {
		throw InternalError(std::string("clique expansion precondition failed: ") + e.what());
	}
	auto step = make_step(st, RuleId::CliqueExpansion);
	step.deleted = cert.x_hat;
	step.k_after = st.instance.k - static_cast<std::int64_t>(cert.x_hat.size());
	return step;
}

std::optional<TraceStep> plan_unmarked_clique_vertex(const KernelState &st) {
	for (const auto &clique : st.cliques) {
		const auto marking = mark_clique(st, clique);
		for (VertexId v : clique)
			if (!std::binary_search(marking.marked.begin(), marking.marked.end(), v)) {
				auto step = make_step(st, RuleId::UnmarkedCliqueVertex);
				step.deleted = {v};
				return step;
			}
	}
	return std::nullopt;
}

std::optional<TraceStep> plan_far_leaf(const KernelState &st) {
	const MultiGraph &g = st.instance.graph;
	const auto in_s = mask_of(g, st.s);
	const auto in_v2 = mask_of(g, st.v2);
	for (VertexId v : st.v2) {
		if (touches(g, v, in_s))
			continue;
		std::vector<VertexId> tree_nbrs;
		for (const auto &[w, m] : g.neighbors(v))
			if (in_v2[w])
				tree_nbrs.push_back(w);
		if (tree_nbrs.size() != 1 || touches(g, tree_nbrs[0], in_s))
			continue;
		auto step = make_step(st, RuleId::FarLeaf);
		step.deleted = {v};
		return step;
	}
	return std::nullopt;
}

std::optional<TraceStep> plan_pendant_tree(const KernelState &st) {
	const MultiGraph &g = st.instance.graph;
	const auto in_s = mask_of(g, st.s);
	for (const auto &tree : st.trees) {
		if (tree.size() < 2)
			continue;
		std::uint64_t outgoing = 0;
		VertexId attach = tree.front();
		for (VertexId x : tree)
			for (const auto &[w, m] : g.neighbors(x))
				if (in_s[w]) {
					outgoing += m;
					attach = x;
				}
		if (outgoing != 1)
			continue;
		auto step = make_step(st, RuleId::PendantTree);
		for (VertexId x : tree)
			if (x != attach)
				step.deleted.push_back(x);
		return step;
	}
	return std::nullopt;
}

FlowerResult flower_at(const KernelState &st, VertexId v) {
	VertexSet keep = st.v2;
	keep.push_back(v);
	keep = make_set(std::move(keep));
	const auto order = static_cast<std::size_t>(3 * nonneg(st.instance.k) + 1);
	return flower_or_hitting_set(induced_subgraph(st.instance.graph, keep), v, order);
}

std::optional<TraceStep> plan_flower(const KernelState &st) {
	for (VertexId v : st.s) {
		if (flower_at(st, v).kind != FlowerResult::Kind::Flower)
			continue;
		auto step = make_step(st, RuleId::Flower);
		step.deleted = {v};
		step.k_after = st.instance.k - 1;
		return step;
	}
	return std::nullopt;
}

std::optional<TraceStep> plan_tree_expansion(const KernelState &st) {
	const MultiGraph &g = st.instance.graph;
	const std::int64_t k = nonneg(st.instance.k);
	const auto in_v2 = mask_of(g, st.v2);
	const std::uint64_t threshold = 60 * static_cast<std::uint64_t>(k + 1);
	for (VertexId v : st.s) {
		std::uint64_t deg = 0;
		for (const auto &[w, m] : g.neighbors(v))
			if (in_v2[w])
				deg += m;
		if (deg <= threshold)
			continue;

		const auto fr = flower_at(st, v);
		if (fr.kind == FlowerResult::Kind::Flower)
			throw InternalError("tree expansion reached with a flower present");
		const VertexSet &hv = fr.hitting_set;
		if (hv.size() > static_cast<std::size_t>(6 * k + 4))
			throw InternalError("hitting set exceeds 6k+4");

		VertexSet rest;
		std::set_difference(st.v2.begin(), st.v2.end(), hv.begin(), hv.end(), std::back_inserter(rest));
		const auto forest = induced_subgraph(g, rest);
		std::vector<VertexSet> comps;
		for (auto &c : connected_components(forest))
			if (std::any_of(c.begin(), c.end(), [&](VertexId x) { return g.multiplicity(v, x) > 0; }))
				comps.push_back(std::move(c));
		if (comps.size() <= 4 * (st.s.size() + hv.size()))
			throw InternalError("too few components adjacent to a high-degree modulator vertex");

		std::vector<std::size_t> comp_of(g.id_bound(), comps.size());
		for (std::size_t i = 0; i < comps.size(); ++i)
			for (VertexId x : comps[i])
				comp_of[x] = i;
		Bipartition h;
		h.a_side = hv;
		for (VertexId s : st.s)
			if (s != v)
				h.a_side.push_back(s);
		h.a_side = make_set(std::move(h.a_side));
		for (const auto &c : comps)
			h.b_side.push_back(c.front());
		for (VertexId a : h.a_side) {
			std::vector<char> seen(comps.size(), 0);
			for (const auto &[w, m] : g.neighbors(a)) {
				const std::size_t i = comp_of[w];
				if (i < comps.size() && !seen[i]) {
					seen[i] = 1;
					h.edges.emplace_back(a, comps[i].front());
				}
			}
		}
		const auto cert = new_q_expansion(h, 4);
		if (cert.x_hat.empty())
			continue;

		VertexSet saturated;
		for (const auto &[a, b] : cert.m)
			saturated.push_back(b);
		saturated = make_set(std::move(saturated));
		VertexSet kept;
		std::set_difference(cert.y_hat.begin(), cert.y_hat.end(), saturated.begin(), saturated.end(),
		                    std::back_inserter(kept));
		if (kept.empty())
			throw InternalError("tree expansion found no unsaturated component");

		auto step = make_step(st, RuleId::TreeExpansion);
		for (VertexId rep : saturated)
			for (VertexId x : comps[comp_of[rep]])
				if (g.multiplicity(v, x) > 0)
					step.assignments.push_back({v, x, 0});
		for (VertexId a : cert.x_hat)
			step.assignments.push_back({v, a, 2});
		step.aux = {v, kept.front()};
		return step;
	}
	return std::nullopt;
}

void finish_no_instance(KernelResult &res, std::string reason) {
	res.no_instance = true;
	res.reason = std::move(reason);
	res.instance = canonical_no_instance();
	res.trace.outcome = TraceOutcome{};
	res.trace.outcome.no_instance = true;
	res.trace.outcome.reason = res.reason;
}

KernelResult run_pipeline(const Instance &inst, std::optional<VertexSet> supplied, const KernelOptions &opts) {
	KernelResult res;
	res.trace.input_n = inst.graph.num_vertices();
	res.trace.input_m = edge_record_count(inst.graph);
	res.trace.input_k = inst.k;
	if (inst.k < 0) {
		finish_no_instance(res, "negative-budget");
		return res;
	}
	ModulatorRecord first;
	if (supplied) {
		first = {make_set(*supplied), 0};
	} else {
		auto mod = approx_deletion_set(inst.graph);
		first = {mod.s, mod.factor};
	}
	res.trace.records.emplace_back(first);
	if (!supplied && static_cast<std::int64_t>(first.s.size()) > 6 * inst.k) {
		finish_no_instance(res, "modulator");
		return res;
	}

	KernelState st = make_state(inst, first.s);
	std::size_t steps = 0;
	while (true) {
		std::optional<TraceStep> step;
		for (RuleId rule : kRuleOrder)
			if ((step = plan_rule(rule, st, opts.rules)))
				break;
		if (!step && static_cast<std::int64_t>(st.s.size()) > 6 * st.instance.k) {
			// Only reachable with a supplied modulator.
			auto mod = approx_deletion_set(st.instance.graph);
			res.trace.records.emplace_back(ModulatorRecord{mod.s, mod.factor});
			if (static_cast<std::int64_t>(mod.s.size()) > 6 * st.instance.k) {
				finish_no_instance(res, "modulator");
				return res;
			}
			st.s = mod.s;
			refresh_partition(st);
			continue;
		}
		if (!step)
			break;
		if (++steps > opts.max_steps)
			throw InternalError("kernelization did not terminate");
		step->index = steps - 1;
		std::optional<KernelState> before;
		if (opts.observer)
			before = st;
		apply_step(st, *step);
		res.trace.records.emplace_back(*step);
		++res.fired[step->rule];
		if (opts.observer)
			opts.observer(*before, st, *step);

		const std::int64_t k = st.instance.k;
		if (step->k_after < step->k_before && static_cast<std::int64_t>(st.s.size()) > 6 * k) {
			if (k < 0) {
				finish_no_instance(res, "negative-budget");
				return res;
			}
			auto mod = approx_deletion_set(st.instance.graph);
			res.trace.records.emplace_back(ModulatorRecord{mod.s, mod.factor});
			if (static_cast<std::int64_t>(mod.s.size()) > 6 * k) {
				finish_no_instance(res, "modulator");
				return res;
			}
			st.s = mod.s;
			refresh_partition(st);
		}
	}

	res.sizes = size_report(st);
	res.violations = fixpoint_violations(st);
	res.instance = st.instance;
	auto &out = res.trace.outcome;
	out.n = st.instance.graph.num_vertices();
	out.m = edge_record_count(st.instance.graph);
	out.k = st.instance.k;
	out.bound = res.sizes.total_bound;
	out.within_bound = res.sizes.total_ok;
	st.trace = res.trace;
	res.state = std::move(st);
	return res;
}

} // namespace

const char *to_string(RuleId rule) { return kRuleNames[static_cast<std::size_t>(rule)]; }

std::optional<RuleId> rule_from_string(std::string_view name) {
	for (std::size_t i = 0; i < kRuleNames.size(); ++i)
		if (name == kRuleNames[i])
			return static_cast<RuleId>(i);
	return std::nullopt;
}

KernelState make_state(Instance inst, VertexSet s) {
	s = make_set(std::move(s));
	for (VertexId v : s)
		if (!inst.graph.contains(v))
			throw GraphError("modulator vertex " + std::to_string(v) + " is not in the graph");
	if (!is_cliques_or_trees(without(inst.graph, s)))
		throw GraphError("not a modulator: G - S has an obstruction");
	KernelState st;
	st.instance = std::move(inst);
	st.s = std::move(s);
	refresh_partition(st);
	return st;
}

void refresh_partition(KernelState &st) {
	const MultiGraph rest = without(st.instance.graph, st.s);
	st.v1.clear();
	st.v2.clear();
	st.cliques.clear();
	st.trees.clear();
	for (auto &comp : connected_components(rest)) {
		const auto kind = classify_component(rest, comp);
		if (kind == ComponentKind::Neither)
			throw InternalError("G - S contains an obstruction");
		if (kind == ComponentKind::Clique && comp.size() >= 3) {
			st.v1.insert(st.v1.end(), comp.begin(), comp.end());
			st.cliques.push_back(std::move(comp));
		} else {
			st.v2.insert(st.v2.end(), comp.begin(), comp.end());
			st.trees.push_back(std::move(comp));
		}
	}
	std::sort(st.v1.begin(), st.v1.end());
	std::sort(st.v2.begin(), st.v2.end());
}

std::uint64_t epsilon_bound(std::size_t s, std::int64_t k) {
	const std::uint64_t n = s;
	const std::uint64_t c3 = n < 3 ? 0 : n * (n - 1) * (n - 2) / 6;
	const std::uint64_t c2 = n < 2 ? 0 : n * (n - 1) / 2;
	return (8 * c3 + 4 * c2 + 2 * n) * static_cast<std::uint64_t>(nonneg(k) + 4);
}

std::uint64_t kernel_size_bound(std::size_t s, std::int64_t k) {
	const std::uint64_t n = s;
	return n + 2 * n * epsilon_bound(s, k) + 1525 * static_cast<std::uint64_t>(nonneg(k)) * n;
}

CliqueMarking mark_clique(const KernelState &st, const VertexSet &clique) {
	const MultiGraph &g = st.instance.graph;
	const std::size_t ns = st.s.size();
	const std::size_t cap = static_cast<std::size_t>(nonneg(st.instance.k) + 4);
	std::vector<std::vector<char>> adj(clique.size(), std::vector<char>(ns, 0));
	for (std::size_t i = 0; i < clique.size(); ++i)
		for (std::size_t j = 0; j < ns; ++j)
			adj[i][j] = g.multiplicity(clique[i], st.s[j]) > 0;

	std::vector<char> marked(clique.size(), 0);
	auto mark_profiles = [&](const std::vector<std::size_t> &z) {
		std::vector<std::size_t> taken(std::size_t{1} << z.size(), 0);
		for (std::size_t i = 0; i < clique.size(); ++i) {
			std::size_t profile = 0;
			for (std::size_t b = 0; b < z.size(); ++b)
				profile |= static_cast<std::size_t>(adj[i][z[b]]) << b;
			if (taken[profile] < cap) {
				++taken[profile];
				marked[i] = 1;
			}
		}
	};
	for (std::size_t a = 0; a < ns; ++a) {
		mark_profiles({a});
		for (std::size_t b = a + 1; b < ns; ++b) {
			mark_profiles({a, b});
			for (std::size_t c = b + 1; c < ns; ++c)
				mark_profiles({a, b, c});
		}
	}
	CliqueMarking out;
	out.clique = clique;
	for (std::size_t i = 0; i < clique.size(); ++i)
		if (marked[i])
			out.marked.push_back(clique[i]);
	return out;
}

std::optional<TraceStep> plan_rule(RuleId rule, const KernelState &st, const RuleOptions &opts) {
	switch (rule) {
	case RuleId::Multiplicity:
		return plan_multiplicity(st);
	case RuleId::IsolatedComponent:
		return plan_isolated_component(st);
	case RuleId::PendantDedup:
		return plan_pendant_dedup(st, opts);
	case RuleId::Tail:
		return plan_tail(st);
	case RuleId::Overbridge:
		return plan_overbridge(st);
	case RuleId::CliqueExpansion:
		return plan_clique_expansion(st);
	case RuleId::UnmarkedCliqueVertex:
		return plan_unmarked_clique_vertex(st);
	case RuleId::FarLeaf:
		return plan_far_leaf(st);
	case RuleId::PendantTree:
		return plan_pendant_tree(st);
	case RuleId::Flower:
		return plan_flower(st);
	case RuleId::TreeExpansion:
		return plan_tree_expansion(st);
	}
	return std::nullopt;
}

void apply_step(Instance &inst, const TraceStep &step) {
	inst.graph.remove_vertices(step.deleted);
	for (const auto &e : step.assignments)
		inst.graph.set_multiplicity(e.u, e.v, e.mult);
	inst.k = step.k_after;
}

void apply_step(KernelState &st, const TraceStep &step) {
	apply_step(st.instance, step);
	VertexSet s;
	std::set_difference(st.s.begin(), st.s.end(), step.deleted.begin(), step.deleted.end(), std::back_inserter(s));
	if (step.rule == RuleId::Overbridge)
		s.insert(s.end(), step.aux.begin(), step.aux.end());
	st.s = make_set(std::move(s));
	refresh_partition(st);
}

std::optional<KernelState> apply_rule(RuleId rule, const KernelState &st, const RuleOptions &opts) {
	auto step = plan_rule(rule, st, opts);
	if (!step)
		return std::nullopt;
	KernelState next = st;
	apply_step(next, *step);
	next.trace.records.emplace_back(*step);
	return next;
}

std::optional<KernelState> rr_multiplicity(const KernelState &st) { return apply_rule(RuleId::Multiplicity, st); }
std::optional<KernelState> rr_isolated_component(const KernelState &st) {
	return apply_rule(RuleId::IsolatedComponent, st);
}
std::optional<KernelState> rr_pendant_dedup(const KernelState &st) { return apply_rule(RuleId::PendantDedup, st); }
std::optional<KernelState> rr_tail(const KernelState &st) { return apply_rule(RuleId::Tail, st); }
std::optional<KernelState> rr_overbridge(const KernelState &st) { return apply_rule(RuleId::Overbridge, st); }
std::optional<KernelState> rr_clique_expansion(const KernelState &st) {
	return apply_rule(RuleId::CliqueExpansion, st);
}
std::optional<KernelState> rr_unmarked_clique_vertex(const KernelState &st) {
	return apply_rule(RuleId::UnmarkedCliqueVertex, st);
}
std::optional<KernelState> rr_far_leaf(const KernelState &st) { return apply_rule(RuleId::FarLeaf, st); }
std::optional<KernelState> rr_pendant_tree(const KernelState &st) { return apply_rule(RuleId::PendantTree, st); }
std::optional<KernelState> rr_flower(const KernelState &st) { return apply_rule(RuleId::Flower, st); }
std::optional<KernelState> rr_tree_expansion(const KernelState &st) { return apply_rule(RuleId::TreeExpansion, st); }

SizeReport size_report(const KernelState &st) {
	SizeReport r;
	r.s = st.s.size();
	r.v1 = st.v1.size();
	r.v2 = st.v2.size();
	r.clique_components = st.cliques.size();
	r.epsilon = epsilon_bound(r.s, st.instance.k);
	r.total_bound = kernel_size_bound(r.s, st.instance.k);
	r.cliques_ok = r.clique_components <= 2 * r.s;
	r.v1_ok = r.v1 <= 2 * r.s * r.epsilon;
	r.v2_ok = r.v2 <= 1525 * static_cast<std::uint64_t>(nonneg(st.instance.k)) * r.s;
	r.total_ok = st.instance.graph.num_vertices() <= r.total_bound;
	return r;
}

std::vector<std::string> fixpoint_violations(const KernelState &st) {
	const MultiGraph &g = st.instance.graph;
	std::vector<std::string> out;
	auto name = [](VertexId v) { return std::to_string(v); };
	for (VertexId v : g.vertices()) {
		if (g.loops(v) > 2)
			out.push_back("self-loop multiplicity above 2 at " + name(v));
		std::size_t pendants = 0;
		for (const auto &[w, m] : g.neighbors(v)) {
			if (m > 2 && w > v)
				out.push_back("edge multiplicity above 2 at " + name(v) + "-" + name(w));
			pendants += degree(g, w) == 1;
		}
		if (pendants > 1)
			out.push_back("vertex " + name(v) + " has several pendant neighbours");
	}
	for (const auto &p : degree2_paths(g)) {
		const std::size_t limit = p.kind == PathKind::Tail ? 2 : 4;
		if (p.vertices.size() > limit)
			out.push_back(std::string(p.kind == PathKind::Tail ? "tail" : "overbridge") + " with " +
			              std::to_string(p.vertices.size()) + " vertices at " + name(p.vertices.front()));
	}
	if (!is_cliques_or_trees(without(g, st.s)))
		out.push_back("G - S is not a union of cliques and trees");
	const auto in_s = mask_of(g, st.s);
	auto attached = [&](const VertexSet &c) {
		return std::any_of(c.begin(), c.end(), [&](VertexId v) { return touches(g, v, in_s); });
	};
	for (const auto &c : st.cliques)
		if (!attached(c))
			out.push_back("component at " + name(c.front()) + " has no modulator neighbour");
	for (const auto &c : st.trees) {
		if (!attached(c))
			out.push_back("component at " + name(c.front()) + " has no modulator neighbour");
		if (c.size() < 2)
			continue;
		std::uint64_t outgoing = 0;
		for (VertexId x : c)
			for (const auto &[w, m] : g.neighbors(x))
				if (in_s[w])
					outgoing += m;
		if (outgoing == 1)
			out.push_back("pendant tree at " + name(c.front()) + " has more than one vertex");
	}
	if (st.cliques.size() > 2 * st.s.size())
		out.push_back("more than 2|S| clique components");
	return out;
}

std::size_t KernelResult::rules_fired() const {
	std::size_t total = 0;
	for (const auto &[rule, count] : fired)
		total += count;
	return total;
}

Instance canonical_no_instance() {
	Instance inst{MultiGraph(4), 0};
	inst.graph.add_edge(0, 1);
	inst.graph.add_edge(1, 2);
	inst.graph.add_edge(2, 3);
	inst.graph.add_edge(3, 0);
	return inst;
}

KernelResult kernelize(const Instance &inst, const KernelOptions &opts) {
	return run_pipeline(inst, std::nullopt, opts);
}

KernelResult kernelize_with_modulator(const Instance &inst, const VertexSet &s, const KernelOptions &opts) {
	return run_pipeline(inst, s, opts);
}

Instance replay(const Instance &input, const KernelTrace &trace) {
	if (trace.outcome.no_instance)
		return canonical_no_instance();
	Instance cur = input;
	for (const auto &rec : trace.records)
		if (const auto *step = std::get_if<TraceStep>(&rec))
			apply_step(cur, *step);
	return cur;
}

} // namespace ctvd
