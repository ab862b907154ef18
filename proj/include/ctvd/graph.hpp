#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

namespace ctvd {

/// Stable vertex identifier. Identifiers are handed out in increasing order
/// and never reused within one graph, so deletions keep every other id valid.
using VertexId = std::uint32_t;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<VertexId>;

/// Thrown on invalid vertex ids, bad multiplicities and similar API misuse.
class GraphError : public std::invalid_argument {
public:
	using std::invalid_argument::invalid_argument;
};

/// Thrown when an internal invariant of an algorithm breaks. Always a bug.
class InternalError : public std::logic_error {
public:
	using std::logic_error::logic_error;
};

/// Undirected multigraph with edge multiplicities and self-loops.
///
/// Multiplicities are stored as-is (no capping); a self-loop contributes 2 to
/// the degree of its vertex.
class MultiGraph {
public:
	using Adjacency = std::map<VertexId, std::uint32_t>;

	MultiGraph() = default;
	/// Graph with isolated vertices 0..n-1.
	explicit MultiGraph(std::size_t n);

	VertexId add_vertex();
	/// Adds `mult` parallel copies of uv (a self-loop when u == v).
	void add_edge(VertexId u, VertexId v, std::uint32_t mult = 1);
	/// Sets the multiplicity of uv; 0 removes the edge.
	void set_multiplicity(VertexId u, VertexId v, std::uint32_t mult);
	void remove_vertex(VertexId v);
	void remove_vertices(std::span<const VertexId> vs);

	[[nodiscard]] bool contains(VertexId v) const noexcept {
		return v < slots_.size() && slots_[v].alive;
	}
	[[nodiscard]] std::uint32_t multiplicity(VertexId u, VertexId v) const;
	[[nodiscard]] std::uint32_t loops(VertexId v) const;
	/// Neighbours other than v itself, with multiplicities.
	[[nodiscard]] const Adjacency &neighbors(VertexId v) const;

	[[nodiscard]] std::size_t num_vertices() const noexcept { return alive_; }
	/// Number of distinct non-loop vertex pairs carrying an edge.
	[[nodiscard]] std::size_t num_edge_pairs() const;
	/// Sum of all multiplicities, loops included.
	[[nodiscard]] std::size_t total_multiplicity() const;
	/// One past the largest id ever issued.
	[[nodiscard]] std::size_t id_bound() const noexcept { return slots_.size(); }
	[[nodiscard]] VertexSet vertices() const;
	[[nodiscard]] bool is_simple() const;

	friend bool operator==(const MultiGraph &a, const MultiGraph &b);

private:
	struct Slot {
		bool alive = false;
		std::uint32_t loops = 0;
		Adjacency adj;
	};

	const Slot &slot(VertexId v) const;
	Slot &slot(VertexId v);

	std::vector<Slot> slots_;
	std::size_t alive_ = 0;
};

struct Instance {
	MultiGraph graph;
	std::int64_t k = 0;
};

enum class ComponentKind { Clique, Tree, Neither };

const char *to_string(ComponentKind kind);

/// Degree counting multiplicities; self-loops count twice.
std::uint32_t degree(const MultiGraph &g, VertexId v);

/// Maximal connected vertex sets, each sorted, ordered by smallest member.
std::vector<VertexSet> connected_components(const MultiGraph &g);

/// Classifies a connected component. K1 and K2 are reported as Tree.
ComponentKind classify_component(const MultiGraph &g, std::span<const VertexId> comp);

/// True iff |x| <= k, g - x is simple and every component of g - x is a
/// clique or a tree.
bool is_solution(const MultiGraph &g, std::span<const VertexId> x, std::int64_t k);

/// True iff g is simple and every component is a clique or a tree.
bool is_cliques_or_trees(const MultiGraph &g);

/// Copy of g restricted to `keep`; vertex ids are preserved.
MultiGraph induced_subgraph(const MultiGraph &g, std::span<const VertexId> keep);

/// Copy of g without the given vertices; vertex ids are preserved.
MultiGraph without(const MultiGraph &g, std::span<const VertexId> removed);

/// Number of lines an edge list needs: distinct vertex pairs plus vertices
/// carrying self-loops.
std::size_t edge_record_count(const MultiGraph &g);

/// Sorts and deduplicates.
VertexSet make_set(std::vector<VertexId> vs);

} // namespace ctvd
