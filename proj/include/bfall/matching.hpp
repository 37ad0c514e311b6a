#pragma once

#include "bfall/graph.hpp"

#include <optional>
#include <span>
#include <vector>

namespace bfall {

/// Set of pairwise vertex-disjoint edges, each stored with u < v, sorted.
struct Matching {
    std::vector<Edge> edges;

    std::size_t size() const { return edges.size(); }
};

/// Disjoint edges of g, or false.
bool is_valid_matching(const Graph &g, const Matching &m);

/// Maximum matching of a bipartite graph via augmenting paths (Kuhn).
/// `left` and `right` must partition V(g) with every edge crossing. Left
/// vertices are processed in the order given, neighbours in index order.
/// Throws PreconditionError if the sides are not a valid bipartition.
Matching max_bipartite_matching(const Graph &g, std::span<const Vertex> left, std::span<const Vertex> right);

/// Maximum cardinality matching in a general graph (Edmonds' blossom
/// contraction).
Matching maximum_matching(const Graph &g);

/// A perfect matching, or nullopt (immediately when |V| is odd).
std::optional<Matching> perfect_matching(const Graph &g);

} // namespace bfall
