#pragma once

#include <cstdint>
#include <optional>

#include "ctvd/graph.hpp"

namespace ctvd {

struct SolveResult {
	bool feasible = false;
	/// A minimum-size deletion set when feasible.
	std::optional<VertexSet> solution;
	/// Size of `solution`; the optimum whenever feasible.
	std::optional<std::int64_t> optimum;
};

/// A deletion set together with its approximation guarantee.
struct Modulator {
	VertexSet s;
	int factor = 6;
};

/// Exact solver. Works per connected component, searches subsets by
/// increasing size starting at a disjoint-obstruction lower bound. The
/// subsets of each size are split over OpenMP threads by their first element;
/// the result equals brute_force_serial.
SolveResult brute_force(const MultiGraph &g, std::int64_t k);

/// Single-threaded version of brute_force.
SolveResult brute_force_serial(const MultiGraph &g, std::int64_t k);

/// Minimum deletion set size.
std::int64_t optimum(const MultiGraph &g);

/// Plain enumeration of all vertex subsets of size <= k, no decomposition and
/// no pruning. Limited to 24 vertices.
SolveResult exhaustive_reference(const MultiGraph &g, std::int64_t k);

/// Size of a greedily built family of vertex-disjoint obstructions.
std::int64_t obstruction_packing_bound(const MultiGraph &g);

/// Factor-6 approximation: hits disjoint small obstructions, then runs a
/// local-ratio feedback vertex set routine on what remains.
Modulator approx_deletion_set(const MultiGraph &g);

/// Local-ratio 2-approximation of a minimum feedback vertex set. Requires a
/// simple graph.
VertexSet approx_feedback_vertex_set(const MultiGraph &g);

} // namespace ctvd
