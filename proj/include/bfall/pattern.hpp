#pragma once

#include "bfall/graph.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bfall {

/// Builds a forbidden pattern from its name.
///
/// A name is a '+'-separated sum of terms, each an optional multiplicity
/// followed by a base: P<r>, C<r>, K<r>, K1,<r> (or K_{1,r}), claw, paw.
/// Examples: "2P2+P1", "P3+P1", "4P1", "K1,3", "C5". Whitespace is ignored.
/// Throws std::invalid_argument for unknown names.
Graph pattern_graph(std::string_view name);

/// Canonical spelling of a pattern name ("2p2 + p1" -> "2P2+P1").
std::string canonical_pattern_name(std::string_view name);

/// Induced embedding of h into g: witness[i] is the image of vertex i of h.
/// The image set is the lexicographically least vertex subset of g that
/// induces a copy of h. Patterns up to 7 vertices use a precomputed table
/// of ordered induced subgraphs; larger ones fall back to direct search.
std::optional<std::vector<Vertex>> contains_induced(const Graph &g, const Graph &h);

bool is_h_free(const Graph &g, const Graph &h);

/// h is an induced subgraph of the named pattern.
bool is_induced_subgraph_of(const Graph &h, std::string_view pattern);

/// Every vertex has degree <= 2 and the graph is acyclic.
bool is_linear_forest(const Graph &g);

enum class OlariuKind { ThreeP1Free, CliqueUnion, Neither };

/// Classification of one co-component: 3P1-free first, then disjoint union
/// of complete graphs, else Neither.
OlariuKind olariu_kind(const Graph &g);

const char *to_string(OlariuKind kind);

enum class Complexity { Poly, NPHard, NPComplete, Open };

const char *to_string(Complexity c);

struct DichotomyVerdict {
    Complexity verdict;
    std::string reason; // the deciding containment, e.g. "H contains induced 2P2"
    std::string family; // Open verdicts only: "P4+sP1 (s>=1)" etc.
};

DichotomyVerdict classify_b(const Graph &h);
DichotomyVerdict classify_tight(const Graph &h);
DichotomyVerdict classify_fall(const Graph &h);

} // namespace bfall
