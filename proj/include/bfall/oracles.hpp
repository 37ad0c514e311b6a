#pragma once

#include "bfall/colouring.hpp"
#include "bfall/formula.hpp"
#include "bfall/graph.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace bfall {

/// Size and effort limits for the exponential solvers.
///
/// Vertex limits apply per oracle family; graphs whose independence number
/// is at most 3 get the larger `low_alpha_vertices` limit, since their
/// colour classes have at most three vertices.
struct OracleBudget {
    int max_vertices = 16;      // chromatic / b-chromatic number
    int max_fall_vertices = 14; // fall spectrum
    int low_alpha_vertices = 32;
    std::uint64_t node_limit = 100'000'000;

    /// Defaults, with max_vertices replaced by $ORACLE_BUDGET when set.
    static OracleBudget from_environment();
};

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// "Inconclusive" is never an answer: it means the node limit was hit.
enum class SearchStatus { Found, Absent, Inconclusive };

const char *to_string(SearchStatus s);

template <typename T>
struct SearchResult {
    SearchStatus status = SearchStatus::Absent;
    std::optional<T> witness;
    std::uint64_t nodes = 0;

    bool found() const { return status == SearchStatus::Found; }
};

struct ColouringValue {
    int value = 0;
    Colouring witness;
    std::uint64_t nodes = 0;
};

/// All maximal independent sets as bit masks, ascending. Requires n <= 64.
std::vector<std::uint64_t> maximal_independent_sets(const Graph &g);

int independence_number(const Graph &g);
int clique_number(const Graph &g);

/// Exact chromatic number: branch and bound choosing, for the lowest
/// uncovered vertex, which maximal independent set becomes its colour class.
ColouringValue chromatic_number(const Graph &g, const OracleBudget &budget = {});

/// b-colouring with exactly k colours; backtracking in vertex order with
/// colours ascending, so the witness is the lexicographically least one.
SearchResult<Colouring> b_colouring_with(const Graph &g, int k, const OracleBudget &budget = {});

/// phi(G): the largest k <= m(G) for which b_colouring_with succeeds.
ColouringValue b_chromatic_number(const Graph &g, const OracleBudget &budget = {});

/// Tight b-colouring search on a tight graph.
///
/// Dense vertices are fixed to colours 1..m in index order; a colouring is a
/// tight b-colouring iff it is proper and every closed neighbourhood of a
/// dense vertex is rainbow. Only the boundary of the dense set is searched
/// (smallest domain first, with a Hall check per dense vertex); the
/// remaining vertices have degree <= m-2 and are coloured greedily.
/// Throws PreconditionError when g is not tight. Hitting budget.node_limit
/// gives Inconclusive.
SearchResult<Colouring> tight_b_exact(const Graph &g, const OracleBudget &budget = {});

struct FallSpectrum {
    std::vector<int> values;          // ascending
    std::vector<Colouring> witnesses; // one per value
    std::uint64_t nodes = 0;

    bool empty() const { return values.empty(); }
    int min() const { return values.front(); }
    int max() const { return values.back(); }
    bool contains(int k) const;
};

/// Every k for which V splits into k maximal independent sets (exact cover
/// over the maximal independent sets).
FallSpectrum fall_spectrum(const Graph &g, const OracleBudget &budget = {});

/// Colour (1..3) per edge of g, in g.edges() order.
using EdgeColouring = std::vector<int>;

bool is_three_edge_colouring(const Graph &g, const EdgeColouring &ec);

/// Proper 3-edge-colouring of a cubic graph; throws PreconditionError if g
/// is not cubic.
SearchResult<EdgeColouring> three_edge_colouring(const Graph &g, const OracleBudget &budget = {});

/// Assignment setting exactly one variable per clause.
SearchResult<std::vector<bool>> one_in_three_sat(const Formula33 &f, const OracleBudget &budget = {});

/// Minimum size of a maximal matching.
int min_maximal_matching_size(const Graph &g, const OracleBudget &budget = {});

} // namespace bfall
