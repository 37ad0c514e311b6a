#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bfall {

using Vertex = int;
using VertexSet = std::vector<Vertex>;

struct Edge {
    Vertex u;
    Vertex v;

    friend bool operator==(const Edge &, const Edge &) = default;
    friend auto operator<=>(const Edge &, const Edge &) = default;
};

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when an operation is called outside its documented input class
/// (not tight, not cubic, not P3+P1-free, ...).
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Undirected simple graph on vertices 0..n-1.
///
/// Built once from an edge list and immutable afterwards. Neighbour lists are
/// kept sorted; an adjacency matrix backs O(1) adjacency queries, and for
/// n <= 64 every vertex also carries its neighbourhood as a bit mask.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges);

    int order() const { return n_; }
    std::size_t size() const { return edge_count_; }
    bool empty() const { return n_ == 0; }

    bool adjacent(Vertex u, Vertex v) const { return matrix_[static_cast<std::size_t>(u) * n_ + v] != 0; }
    const VertexSet &neighbours(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

    /// Only valid when order() <= 64.
    std::uint64_t neighbour_mask(Vertex v) const { return masks_[v]; }
    bool has_masks() const { return !masks_.empty() || n_ == 0; }

    /// Edges with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;

    int min_degree() const;
    int max_degree() const;

    // Optional vertex names; never consulted by any algorithm.
    const std::vector<std::string> &labels() const { return labels_; }
    Graph with_labels(std::vector<std::string> labels) const;

    friend bool operator==(const Graph &a, const Graph &b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

private:
    int n_ = 0;
    std::size_t edge_count_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<std::uint8_t> matrix_;
    std::vector<std::uint64_t> masks_;
    std::vector<std::string> labels_;
};

Graph build_graph(int n, std::span<const Edge> edges);

Graph complement(const Graph &g);
Graph disjoint_union(const Graph &g1, const Graph &g2);
Graph complete_join(const Graph &g1, const Graph &g2);

/// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
Graph induced_subgraph(const Graph &g, std::span<const Vertex> vertices);

/// Connected components, each sorted, ordered by smallest vertex.
std::vector<VertexSet> components(const Graph &g);

/// Connected components of the complement. Distinct co-components are
/// complete to each other in g.
std::vector<VertexSet> co_components(const Graph &g);

bool is_complete(const Graph &g);
bool is_independent(const Graph &g, std::span<const Vertex> vertices);
bool is_clique(const Graph &g, std::span<const Vertex> vertices);

/// Two-colouring side (0/1) per vertex if g is bipartite.
std::optional<std::vector<int>> bipartition(const Graph &g);

bool is_regular(const Graph &g, int degree);

/// Vertices adjacent to every other vertex.
VertexSet dominating_vertices(const Graph &g);

/// Outer boundary: neighbours of `set` that lie outside it.
VertexSet outer_boundary(const Graph &g, std::span<const Vertex> set);

struct TightAnalysis {
    int m = 0;          // m-degree
    VertexSet dense;    // T: vertices of degree >= m-1
    VertexSet boundary; // outer boundary of T
    bool is_tight = false;
};

/// m(G) is the largest k with at least k vertices of degree >= k-1.
/// The empty graph has m = 0 and is not tight.
TightAnalysis analyze_tight(const Graph &g);

/// Stable hex digest of the vertex count and edge set (labels ignored).
std::string digest(const Graph &g);

} // namespace bfall
