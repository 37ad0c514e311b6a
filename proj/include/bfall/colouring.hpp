#pragma once

#include "bfall/graph.hpp"

#include <optional>
#include <span>
#include <vector>

namespace bfall {

/// Total map vertex -> colour in {1..k} where every colour 1..k is used.
/// Properness is relative to a graph and is checked by the validators below.
class Colouring {
public:
    Colouring() = default;

    /// Throws GraphError if some value is < 1 or a colour in 1..max is unused.
    explicit Colouring(std::vector<int> colours);

    /// Builds a colouring from a partition; class i (0-based) becomes colour i+1.
    static Colouring from_classes(int n, const std::vector<VertexSet> &classes);

    int order() const { return static_cast<int>(colours_.size()); }
    int colour_count() const { return k_; }
    int operator[](Vertex v) const { return colours_[v]; }
    const std::vector<int> &values() const { return colours_; }

    /// classes()[i] holds the vertices of colour i+1, ascending.
    std::vector<VertexSet> classes() const;

    friend bool operator==(const Colouring &, const Colouring &) = default;

private:
    std::vector<int> colours_;
    int k_ = 0;
};

class ImproperColouring : public std::runtime_error {
public:
    ImproperColouring(const std::string &what, Edge edge) : std::runtime_error(what), edge_(edge) {}
    Edge edge() const { return edge_; }

private:
    Edge edge_;
};

/// First edge (lexicographic) whose endpoints share a colour.
std::optional<Edge> improper_edge(const Graph &g, const Colouring &c);

/// Vertex adjacent to at least one vertex of every colour other than its own.
bool is_b_chromatic_vertex(const Graph &g, const Colouring &c, Vertex v);

// The three predicates throw ImproperColouring (carrying the violating edge)
// when c is not proper on g, and GraphError on a size mismatch.
bool is_b_colouring(const Graph &g, const Colouring &c);
bool is_fall_colouring(const Graph &g, const Colouring &c);
bool is_tight_b_colouring(const Graph &g, const Colouring &c);

/// Independent and dominating (equivalently: maximal independent).
bool is_maximal_independent(const Graph &g, std::span<const Vertex> set);

} // namespace bfall
