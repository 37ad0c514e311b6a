#pragma once

#include "bfall/colouring.hpp"
#include "bfall/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bfall {

/// Colouring of T ∪ S' (S' a subset of the boundary of T) on a tight graph,
/// validated by validate_partial. colours[v] == 0 for every other vertex.
struct PartialBColouring {
    Graph host;
    TightAnalysis analysis;
    VertexSet s_prime;
    std::vector<int> colours;
};

/// Split of the dense set induced by a partial b-colouring.
struct DensePartition {
    VertexSet t1;      // dominating vertices of G[T]
    VertexSet t_prime; // dense vertices sharing a colour with S'
    VertexSet t2;      // the rest of T
    VertexSet s;       // boundary vertices outside S'
};

enum class PartialClause { Valid, Properness, DenseDistinct, UniqueNeighbour };

const char *to_string(PartialClause c);

struct PartialCheck {
    std::optional<PartialBColouring> partial;
    PartialClause clause = PartialClause::Valid;
    std::string detail;
};

/// Checks the three conditions of a partial b-colouring and reports the first
/// one violated. Throws PreconditionError if g is not tight, S' is not inside
/// the boundary, or the coloured vertices are not exactly T ∪ S' with colours
/// in 1..m.
PartialCheck validate_partial(const Graph &g, const VertexSet &s_prime, const std::vector<int> &colours);

DensePartition dense_partition(const PartialBColouring &p);

/// Outcome of a decision procedure: a colouring, or the reason for "no".
struct TightAnswer {
    std::optional<Colouring> colouring;
    std::string reason;

    explicit operator bool() const { return colouring.has_value(); }
};

/// Decides whether p extends to a tight b-colouring that keeps every
/// boundary vertex outside S' out of colour classes holding two or more
/// boundary vertices. Unmatched leftovers are coloured greedily in index
/// order with the least free colour.
TightAnswer extend_partial(const PartialBColouring &p);

/// Tight b-colouring of a tight (2P2+P1)-free graph, or no.
TightAnswer tight_b_2p2p1_free(const Graph &g);

/// Tight b-colouring of a tight disjoint union of complete graphs, or no.
TightAnswer tight_b_clique_union(const Graph &g);

/// Tight b-colouring of a tight (P3+P1)-free graph via its co-components.
TightAnswer tight_b_p3p1_free(const Graph &g);

/// For a tight b-colouring c of g: the first failing structural property
/// among (i) dense vertices are exactly the b-chromatic ones, (ii) every
/// class has one dense vertex with a unique neighbour in each other class,
/// (iii) no dominating vertex of G[T] shares a class with a boundary vertex.
std::optional<std::string> dense_structure_violation(const Graph &g, const Colouring &c);

} // namespace bfall
