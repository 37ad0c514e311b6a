#include "bfall/colouring.hpp"

#include <algorithm>

namespace bfall {

Colouring::Colouring(std::vector<int> colours) : colours_(std::move(colours))
{
    for (int c : colours_) {
        if (c < 1)
            throw GraphError("colours must be >= 1");
        k_ = std::max(k_, c);
    }
    std::vector<char> used(k_ + 1, 0);
    for (int c : colours_)
        used[c] = 1;
    for (int c = 1; c <= k_; ++c)
        if (!used[c])
            throw GraphError("colour " + std::to_string(c) + " is skipped");
}

Colouring Colouring::from_classes(int n, const std::vector<VertexSet> &classes)
{
    std::vector<int> colours(n, 0);
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (int v : classes[i]) {
            if (v < 0 || v >= n || colours[v] != 0)
                throw GraphError("classes do not partition the vertex set");
            colours[v] = static_cast<int>(i) + 1;
        }
    if (std::find(colours.begin(), colours.end(), 0) != colours.end())
        throw GraphError("classes do not cover the vertex set");
    return Colouring(std::move(colours));
}

std::vector<VertexSet> Colouring::classes() const
{
    std::vector<VertexSet> out(k_);
    for (int v = 0; v < order(); ++v)
        out[colours_[v] - 1].push_back(v);
    return out;
}

std::optional<Edge> improper_edge(const Graph &g, const Colouring &c)
{
    for (auto e : g.edges())
        if (c[e.u] == c[e.v])
            return e;
    return std::nullopt;
}

namespace {

void require_proper(const Graph &g, const Colouring &c)
{
    if (c.order() != g.order())
        throw GraphError("colouring covers " + std::to_string(c.order()) + " vertices, graph has " +
                         std::to_string(g.order()));
    if (auto e = improper_edge(g, c))
        throw ImproperColouring("improper colouring: edge (" + std::to_string(e->u) + "," + std::to_string(e->v) +
                                    ") is monochromatic",
                                *e);
}

} // namespace

bool is_b_chromatic_vertex(const Graph &g, const Colouring &c, Vertex v)
{
    const int k = c.colour_count();
    if (g.degree(v) < k - 1)
        return false;
    std::vector<char> seen(k + 1, 0);
    int count = 0;
    for (int w : g.neighbours(v))
        if (!seen[c[w]] && c[w] != c[v]) {
            seen[c[w]] = 1;
            ++count;
        }
    return count == k - 1;
}

bool is_b_colouring(const Graph &g, const Colouring &c)
{
    require_proper(g, c);
    std::vector<char> has_b(c.colour_count() + 1, 0);
    for (int v = 0; v < g.order(); ++v)
        if (!has_b[c[v]] && is_b_chromatic_vertex(g, c, v))
            has_b[c[v]] = 1;
    return std::count(has_b.begin() + 1, has_b.end(), 1) == c.colour_count();
}

bool is_fall_colouring(const Graph &g, const Colouring &c)
{
    require_proper(g, c);
    for (int v = 0; v < g.order(); ++v)
        if (!is_b_chromatic_vertex(g, c, v))
            return false;
    return true;
}

bool is_tight_b_colouring(const Graph &g, const Colouring &c)
{
    require_proper(g, c);
    auto analysis = analyze_tight(g);
    return analysis.is_tight && c.colour_count() == analysis.m && is_b_colouring(g, c);
}

bool is_maximal_independent(const Graph &g, std::span<const Vertex> set)
{
    if (!is_independent(g, set))
        return false;
    std::vector<char> covered(g.order(), 0);
    for (int v : set) {
        covered[v] = 1;
        for (int w : g.neighbours(v))
            covered[w] = 1;
    }
    return std::all_of(covered.begin(), covered.end(), [](char x) { return x != 0; });
}

} // namespace bfall
