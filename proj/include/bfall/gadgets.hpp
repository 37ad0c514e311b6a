#pragma once

#include "bfall/colouring.hpp"
#include "bfall/formula.hpp"
#include "bfall/graph.hpp"
#include "bfall/oracles.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bfall {

// Vertex numbering is deterministic for every construction below; the
// layouts are documented next to each constructor.

/// Union of edge gadgets over a bipartite g. Original vertices keep their
/// indices; edge (u,v), u < v, in g.edges() order, then gets 8 fresh vertices
/// x_uv^1..4 followed by x_vu^1..4. Throws PreconditionError if g is not
/// bipartite.
Graph bonomo_gadget_union(const Graph &g);

/// Complement of bonomo_gadget_union(g): the b-chromatic number instance.
Graph bonomo_instance(const Graph &g);

/// Layout: V (0..n-1), E (n..n+m-1, in g.edges() order), three centres,
/// then for each centre its leaves. Throws PreconditionError unless g is cubic.
Graph hss_instance(const Graph &g);

/// As hss_instance with n leaves per centre and a triangle on the centres.
Graph hss_3p2_instance(const Graph &g);

/// Layout: V, E, A (m+1 vertices), B (3), C (n). V, A, B, C are cliques;
/// V-A, A-B, B-C and C-E are complete; V-E is the incidence relation.
Graph hss_2p3_instance(const Graph &g);

enum class HssVariant { Hss, Hss3P2, Hss2P3 };

const char *to_string(HssVariant v);
Graph hss_variant_instance(HssVariant v, const Graph &g);

/// Forward map of a 3-edge-colouring to a tight b-colouring of the instance.
/// Throws PreconditionError if ec is not a 3-edge-colouring of g.
Colouring edge_colouring_to_tight_bcolouring(HssVariant v, const Graph &g, const EdgeColouring &ec);

/// Backward map: reads the edge colouring off the colours of the edge
/// vertices, or nullopt if c does not induce a 3-edge-colouring.
std::optional<EdgeColouring> tight_bcolouring_to_edge_colouring(HssVariant v, const Graph &g, const Colouring &c);

struct OneInThreeGraph {
    Graph g;
    Graph gbar;
};

/// Clause j occupies vertices 5j..5j+4: c(x), a1, c(y), a2, c(z) along a
/// path, literals in written order. The three occurrences of a variable form
/// a triangle.
OneInThreeGraph one_in_three_graph(const Formula33 &f);

/// Fall colouring of the complement with 7n/3 colours built from a 1-in-3
/// assignment. Throws PreconditionError when a is not 1-in-3 satisfying.
Colouring assignment_to_fall_colouring(const Formula33 &f, const std::vector<bool> &a);

/// Variables whose three occurrences form one colour class; nullopt if the
/// result is not 1-in-3 satisfying.
std::optional<std::vector<bool>> fall_colouring_to_assignment(const Formula33 &f, const Colouring &c);

enum class FallTrick { C3Free, Line };

/// g plus a disjoint fall-unique gadget with spectrum {3}: the stored
/// triangle-free gadget, or K3. Throws PreconditionError for C3Free when g
/// has a triangle.
Graph fall_trick_union(const Graph &g, FallTrick kind);

/// Ten-vertex triangle-free graph with fall spectrum exactly {3}.
Graph c3free_gadget();

/// Three clauses over {x,y,z}.
Formula33 formula_fixture_n3();

/// Six variables, not 1-satisfiable.
Formula33 formula_fixture_unsat_n6();

/// Named families: "knn-pm" (K_{n,n} minus a perfect matching),
/// "fig1-left" (K_{n,n-1} minus a matching of size n-1), "complete",
/// "cycle", "path", "star" (K_{1,n}), "knn", "paw", "petersen", "prism".
/// Throws std::invalid_argument for unknown names or n out of range.
Graph family(std::string_view name, int n = 0);

std::vector<std::string> family_names();

/// The n-colouring of fig1-left: a_i, b_i -> i for i < n and a_n -> n.
Colouring fig1_left_colouring(int n);

/// Fall n-colouring of knn-pm: matched pairs share a colour.
Colouring knn_pm_colouring(int n);

/// Every vertex set splits into a clique and an independent set.
bool is_split(const Graph &g);

struct StructuralCheck {
    std::string name;
    bool passed = false;
};

enum class Equivalence { Verified, StructuralOnly, Inconclusive, Inconsistent };

const char *to_string(Equivalence e);

struct ReductionCertificate {
    std::string kind;
    std::string input_summary;
    Graph instance;
    std::vector<StructuralCheck> checks;
    std::string forward_status;  // oracle answer on the input side
    std::string backward_status; // oracle answer on the instance side
    std::optional<Colouring> forward_witness;
    std::optional<std::vector<int>> backward_witness; // edge colouring or 0/1 assignment
    std::vector<std::pair<std::string, std::string>> measurements;
    Equivalence equivalence = Equivalence::StructuralOnly;

    bool checks_pass() const;
};

/// Kinds: "bonomo", "hss", "hss3p2", "hss2p3", "c3free", "line".
/// Structural checks always run; with solve set, both sides are also
/// solved by the oracles and the answers compared.
/// Throws std::invalid_argument for an unknown kind.
ReductionCertificate verify_reduction(std::string_view kind, const Graph &input, const OracleBudget &budget = {},
                                      bool solve = true);

/// The 1-in-3 reduction.
ReductionCertificate verify_reduction(const Formula33 &f, const OracleBudget &budget = {}, bool solve = true);

} // namespace bfall
