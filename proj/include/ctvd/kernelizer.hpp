#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ctvd/graph.hpp"

namespace ctvd {

enum class RuleId {
	Multiplicity,
	IsolatedComponent,
	PendantDedup,
	Tail,
	Overbridge,
	CliqueExpansion,
	UnmarkedCliqueVertex,
	FarLeaf,
	PendantTree,
	Flower,
	TreeExpansion,
};

/// Priority order used by the fixpoint loop.
inline constexpr std::array<RuleId, 11> kRuleOrder{
    RuleId::Multiplicity,    RuleId::IsolatedComponent,    RuleId::PendantDedup, RuleId::Tail,
    RuleId::Overbridge,      RuleId::CliqueExpansion,      RuleId::UnmarkedCliqueVertex,
    RuleId::FarLeaf,         RuleId::PendantTree,          RuleId::Flower,
    RuleId::TreeExpansion,
};

const char *to_string(RuleId rule);
std::optional<RuleId> rule_from_string(std::string_view name);

struct EdgeAssignment {
	VertexId u;
	VertexId v;
	std::uint32_t mult;

	friend bool operator==(const EdgeAssignment &, const EdgeAssignment &) = default;
};

/// One rule application. `deleted` is removed first, then every assignment
/// sets a multiplicity (0 removes the edge).
///
/// `aux` depends on the rule: for Overbridge it lists vertices added to the
/// modulator, for TreeExpansion it is [v, representative of the kept
/// unsaturated component]; empty otherwise.
struct TraceStep {
	std::size_t index = 0;
	RuleId rule = RuleId::Multiplicity;
	std::int64_t k_before = 0;
	std::int64_t k_after = 0;
	VertexSet deleted;
	std::vector<EdgeAssignment> assignments;
	std::vector<VertexId> aux;

	friend bool operator==(const TraceStep &, const TraceStep &) = default;
};

/// Modulator computed or supplied; factor 0 marks a caller-supplied set.
struct ModulatorRecord {
	VertexSet s;
	int factor = 6;

	friend bool operator==(const ModulatorRecord &, const ModulatorRecord &) = default;
};

using TraceRecord = std::variant<ModulatorRecord, TraceStep>;

struct TraceOutcome {
	bool no_instance = false;
	std::string reason; // no-instance only
	std::size_t n = 0;
	std::size_t m = 0;
	std::int64_t k = 0;
	std::uint64_t bound = 0;
	bool within_bound = true;

	friend bool operator==(const TraceOutcome &, const TraceOutcome &) = default;
};

struct KernelTrace {
	std::size_t input_n = 0;
	std::size_t input_m = 0;
	std::int64_t input_k = 0;
	std::vector<TraceRecord> records;
	TraceOutcome outcome;

	friend bool operator==(const KernelTrace &, const KernelTrace &) = default;
};

/// Instance plus modulator S and the split of V(G) \ S into V1 (clique
/// components of G - S with at least 3 vertices) and V2 (the rest, a forest).
struct KernelState {
	Instance instance;
	VertexSet s;
	VertexSet v1;
	VertexSet v2;
	/// Components of G[V1] and G[V2], each ordered by smallest member.
	std::vector<VertexSet> cliques;
	std::vector<VertexSet> trees;
	KernelTrace trace;
};

/// Builds a state; throws GraphError if S is not a modulator of g.
KernelState make_state(Instance inst, VertexSet s);

/// Recomputes V1 and V2; throws InternalError if G - S is not valid.
void refresh_partition(KernelState &st);

struct CliqueMarking {
	VertexSet clique;
	VertexSet marked;
};

/// (8 C(s,3) + 4 C(s,2) + 2 s) (k + 4).
std::uint64_t epsilon_bound(std::size_t s, std::int64_t k);

/// |S| + 2|S| eps(k) + 1525 k |S|.
std::uint64_t kernel_size_bound(std::size_t s, std::int64_t k);

/// Marks, for every Z in S with 1 <= |Z| <= 3 and every adjacency profile
/// f: Z -> {0,1}, the min(count, k+4) smallest vertices of K matching f.
CliqueMarking mark_clique(const KernelState &st, const VertexSet &clique);

struct RuleOptions {
	/// Test fixture: pendant dedup charges the deleted pendant to the budget,
	/// which is unsafe.
	bool fault_pendant_dedup = false;
};

/// Finds the next application of `rule` without changing the state.
std::optional<TraceStep> plan_rule(RuleId rule, const KernelState &st, const RuleOptions &opts = {});

/// Applies a planned step to graph, k and S and refreshes the partition.
void apply_step(KernelState &st, const TraceStep &step);

/// Applies a step to a bare instance (graph and k only).
void apply_step(Instance &inst, const TraceStep &step);

/// One application of a rule; absent when the rule does not apply.
std::optional<KernelState> apply_rule(RuleId rule, const KernelState &st, const RuleOptions &opts = {});

std::optional<KernelState> rr_multiplicity(const KernelState &st);
std::optional<KernelState> rr_isolated_component(const KernelState &st);
std::optional<KernelState> rr_pendant_dedup(const KernelState &st);
std::optional<KernelState> rr_tail(const KernelState &st);
std::optional<KernelState> rr_overbridge(const KernelState &st);
std::optional<KernelState> rr_clique_expansion(const KernelState &st);
std::optional<KernelState> rr_unmarked_clique_vertex(const KernelState &st);
std::optional<KernelState> rr_far_leaf(const KernelState &st);
std::optional<KernelState> rr_pendant_tree(const KernelState &st);
std::optional<KernelState> rr_flower(const KernelState &st);
std::optional<KernelState> rr_tree_expansion(const KernelState &st);

struct SizeReport {
	std::size_t s = 0;
	std::size_t v1 = 0;
	std::size_t v2 = 0;
	std::size_t clique_components = 0;
	std::uint64_t epsilon = 0;
	std::uint64_t total_bound = 0;
	bool cliques_ok = true;
	bool v1_ok = true;
	bool v2_ok = true;
	bool total_ok = true;

	[[nodiscard]] bool ok() const { return cliques_ok && v1_ok && v2_ok && total_ok; }
};

SizeReport size_report(const KernelState &st);

/// Structural properties every fixpoint must have; returns one message per
/// violation.
std::vector<std::string> fixpoint_violations(const KernelState &st);

using StepObserver = std::function<void(const KernelState &before, const KernelState &after, const TraceStep &step)>;

struct KernelOptions {
	RuleOptions rules;
	/// Called after every applied step with the states around it.
	StepObserver observer;
	/// Safety net against non-termination.
	std::size_t max_steps = 1'000'000;
};

struct KernelResult {
	bool no_instance = false;
	std::string reason;
	/// The kernel with original vertex ids, or the canonical no-instance.
	Instance instance;
	/// Final state (meaningful when !no_instance).
	KernelState state;
	SizeReport sizes;
	std::vector<std::string> violations;
	std::map<RuleId, std::size_t> fired;
	KernelTrace trace;

	[[nodiscard]] std::size_t rules_fired() const;
};

/// C4 with k = 0.
Instance canonical_no_instance();

KernelResult kernelize(const Instance &inst, const KernelOptions &opts = {});

/// Same pipeline starting from a caller-supplied modulator. The |S| > 6k
/// test is postponed until the first budget decrease or the first fixpoint,
/// where S is replaced by a computed modulator.
KernelResult kernelize_with_modulator(const Instance &inst, const VertexSet &s, const KernelOptions &opts = {});

/// Re-applies the trace to `input`. The result equals KernelResult::instance.
Instance replay(const Instance &input, const KernelTrace &trace);

} // namespace ctvd
