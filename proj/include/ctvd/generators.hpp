#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "ctvd/graph.hpp"
#include "ctvd/kernelizer.hpp"

namespace ctvd {

using Rng = std::mt19937_64;

/// G(n, p) with n in [1, max_n], k in [0, max_k], p drawn from a few
/// densities; roughly one instance in ten also gets multi-edges or loops.
Instance random_instance(Rng &rng, std::size_t max_n, std::int64_t max_k);

/// Disjoint cliques (3 to 6 vertices) and random trees (1 to 6 vertices),
/// then `noise` extra vertices wired to random vertices. Deleting the noise
/// vertices solves the instance. Vertex ids are shuffled.
Instance planted_instance(Rng &rng, std::size_t cliques, std::size_t trees, std::size_t noise, std::int64_t k);

/// Planted instance with at most max_n vertices, k in [0, max_k] and up to
/// k+2 noise vertices, so both answers occur.
Instance planted_instance_bounded(Rng &rng, std::size_t max_n, std::int64_t max_k);

/// An instance shaped so that `rule` is likely to fire, with the modulator
/// to start from (absent: let kernelize compute one).
struct RuleCase {
	Instance instance;
	std::optional<VertexSet> modulator;
};

RuleCase rule_case(RuleId rule, Rng &rng);

} // namespace ctvd
