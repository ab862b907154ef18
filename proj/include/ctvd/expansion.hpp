#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ctvd/graph.hpp"

namespace ctvd {

/// Raised when an expansion is requested outside its preconditions.
class ExpansionError : public std::invalid_argument {
public:
	using std::invalid_argument::invalid_argument;
};

/// Bipartite graph between two label spaces. Labels are unique within a
/// side; the two sides are separate namespaces.
struct Bipartition {
	std::vector<VertexId> a_side;
	std::vector<VertexId> b_side;
	std::vector<std::pair<VertexId, VertexId>> edges; // (a, b)
};

/// X-hat, Y-hat and a q-expansion M of X-hat into Y-hat.
struct ExpansionCertificate {
	VertexSet x_hat;
	VertexSet y_hat;
	std::vector<std::pair<VertexId, VertexId>> m;
	int q = 0;
};

/// Maximum bipartite matching (Hopcroft-Karp) over dense left/right indices.
class BipartiteMatcher {
public:
	BipartiteMatcher(std::size_t n_left, std::size_t n_right);
	void add_edge(std::size_t l, std::size_t r);
	std::size_t solve();

	static constexpr std::size_t npos = static_cast<std::size_t>(-1);
	[[nodiscard]] std::size_t mate_of_left(std::size_t l) const { return mate_l_[l]; }
	[[nodiscard]] std::size_t mate_of_right(std::size_t r) const { return mate_r_[r]; }
	[[nodiscard]] const std::vector<std::size_t> &left_adj(std::size_t l) const { return adj_[l]; }
	[[nodiscard]] std::size_t n_left() const { return adj_.size(); }
	[[nodiscard]] std::size_t n_right() const { return mate_r_.size(); }

private:
	bool bfs();
	bool dfs(std::size_t l);

	std::vector<std::vector<std::size_t>> adj_;
	std::vector<std::size_t> mate_l_, mate_r_, dist_;
};

/// Classic q-expansion lemma: requires q >= 1, |B| >= q|A| and no isolated
/// vertex in B; returns non-empty X-hat, Y-hat with N(Y-hat) inside X-hat.
ExpansionCertificate q_expansion(const Bipartition &h, int q);

/// Generalised variant with no size or isolation precondition; additionally
/// guarantees |B \ Y-hat| <= q |A \ X-hat|. X-hat and Y-hat may be empty.
ExpansionCertificate new_q_expansion(const Bipartition &h, int q);

/// Subset search used when the flow-based certificate fails its check;
/// exponential in |A|.
std::optional<ExpansionCertificate> new_q_expansion_exhaustive(const Bipartition &h, int q);

enum class ExpansionVariant { Classic, New };

/// Independent checker. Returns a description of the first violated
/// condition, or nullopt if the certificate is valid.
std::optional<std::string> check_expansion(const Bipartition &h, const ExpansionCertificate &c,
                                           ExpansionVariant variant);

/// Either a v-flower (cycles through v pairwise meeting only in v) or a set
/// Z, v not in Z, meeting every cycle through v.
struct FlowerResult {
	enum class Kind { Flower, HittingSet };
	Kind kind = Kind::HittingSet;
	/// Each petal starts at v; a two-vertex petal [v, u] is a double edge.
	std::vector<std::vector<VertexId>> petals;
	VertexSet hitting_set;
	/// Size of the maximum petal packing found.
	std::size_t packing = 0;
};

/// Requires g - v to be a simple forest (edges at v may be multiple;
/// self-loops at v are ignored). Packs a maximum set of petals greedily
/// bottom-up per tree; returns them if more than `order` exist, otherwise
/// the top vertex of every packed petal as a hitting set (|Z| <= order).
FlowerResult flower_or_hitting_set(const MultiGraph &g, VertexId v, std::size_t order);

/// Checker for flower_or_hitting_set results.
std::optional<std::string> check_flower(const MultiGraph &g, VertexId v, std::size_t order, const FlowerResult &r);

/// True iff g contains a cycle through v (a double edge at v counts).
bool has_cycle_through(const MultiGraph &g, VertexId v);

} // namespace ctvd
