#pragma once

#include <optional>
#include <vector>

#include "ctvd/graph.hpp"

namespace ctvd {

enum class ObstructionKind { SelfLoop, MultiEdge, Diamond, Paw, Hole };

const char *to_string(ObstructionKind kind);

/// Witness that a graph is not a disjoint union of cliques and trees.
///
/// Witness layouts:
///   SelfLoop  [v]
///   MultiEdge [u, v]
///   Diamond   [u1, u2, u3, u4]  u1u2u3 triangle, u4 adjacent to u1, u2 only
///   Paw       [u1, u2, u3, u4]  u1u2u3 triangle, u4 adjacent to u1 only
///   Hole      [c1, ..., cr]     chordless cycle in this order, r >= 4
struct Obstruction {
	ObstructionKind kind;
	std::vector<VertexId> witness;

	friend bool operator==(const Obstruction &, const Obstruction &) = default;
};

enum class PathKind { Tail, Overbridge };

/// A path whose internal vertices have degree exactly 2.
/// Tail: vertices.front() has degree > 2, vertices.back() is pendant.
/// Overbridge: both endpoints have degree > 2.
struct Degree2Path {
	PathKind kind;
	std::vector<VertexId> vertices;

	friend bool operator==(const Degree2Path &, const Degree2Path &) = default;
};

/// Self-loop, multi-edge, diamond, paw or induced C4, in that preference order.
std::optional<Obstruction> find_small_obstruction(const MultiGraph &g);

/// Chordless cycle with at least min_len (>= 4) vertices. Requires g simple.
std::optional<std::vector<VertexId>> find_hole(const MultiGraph &g, std::size_t min_len = 4);

/// Maximum cardinality search order (ties to the smallest id), the
/// chordality certificate used by find_hole.
std::vector<VertexId> mcs_order(const MultiGraph &g);
bool is_chordal(const MultiGraph &g);

/// Empty iff g is simple and every component is a clique or a tree.
std::optional<Obstruction> find_any_obstruction(const MultiGraph &g);

/// Re-checks a witness against g by direct adjacency lookups.
bool verify_obstruction(const MultiGraph &g, const Obstruction &o);

std::optional<Degree2Path> find_degree2_tail(const MultiGraph &g, std::size_t min_len);
std::optional<Degree2Path> find_degree2_overbridge(const MultiGraph &g, std::size_t min_len);

/// Every maximal tail and overbridge; each overbridge is listed once, with
/// the smaller endpoint first.
std::vector<Degree2Path> degree2_paths(const MultiGraph &g);

} // namespace ctvd
