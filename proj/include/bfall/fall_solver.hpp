#pragma once

#include "bfall/colouring.hpp"
#include "bfall/graph.hpp"
#include "bfall/oracles.hpp"
#include "bfall/pattern.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bfall {

struct CoComponentFall {
    VertexSet vertices;
    OlariuKind kind = OlariuKind::Neither;
    int dominating = 0;  // 3P1-free case: dominating vertices, each a singleton class
    int pairs = 0;       // 3P1-free case: size of the perfect matching in the complement of the rest
    int clique_size = 0; // clique-union case: the common component size
    int colours = 0;     // colours contributed when the co-component succeeds
    bool ok = false;
    std::string reason;
};

struct FallResult {
    std::vector<int> spectrum; // empty or a single value
    std::optional<Colouring> colouring;
    std::vector<CoComponentFall> per_component;
};

/// Fall spectrum of a (P3+P1)-free graph, which has at most one element.
/// Colour ranges of distinct co-components are disjoint and ascend with the
/// co-component index. Throws PreconditionError if some co-component is
/// neither 3P1-free nor a union of cliques, or g contains P3+P1.
FallResult fall_p3p1_free(const Graph &g);

struct FallUniqueness {
    bool fall_unique = false;
    std::vector<int> spectrum;
    bool polynomial = false; // spectrum came from fall_p3p1_free rather than the oracle
};

/// Polynomial path for (P3+P1)-free graphs, otherwise the oracle (which may
/// throw BudgetExceeded).
FallUniqueness fall_uniqueness_report(const Graph &g, const OracleBudget &budget = {});

} // namespace bfall
