#include "bfall/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <queue>

namespace bfall {

Graph::Graph(int n) : Graph(n, std::span<const Edge>{}) {}

Graph::Graph(int n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size()))
{
}

Graph::Graph(int n, std::span<const Edge> edges) : n_(n)
{
    if (n < 0)
        throw GraphError("negative vertex count");
    adj_.resize(n);
    matrix_.assign(static_cast<std::size_t>(n) * n, 0);
    for (const auto &[u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for n=" +
                             std::to_string(n));
        if (u == v)
            throw GraphError("self-loop at vertex " + std::to_string(u));
        auto &cell = matrix_[static_cast<std::size_t>(u) * n + v];
        if (cell)
            continue;
        cell = 1;
        matrix_[static_cast<std::size_t>(v) * n + u] = 1;
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        ++edge_count_;
    }
    for (auto &row : adj_)
        std::sort(row.begin(), row.end());
    if (n <= 64) {
        masks_.assign(n, 0);
        for (int v = 0; v < n; ++v)
            for (int w : adj_[v])
                masks_[v] |= std::uint64_t{1} << w;
    }
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v)
                out.push_back({u, v});
    return out;
}

int Graph::min_degree() const
{
    int d = n_ == 0 ? 0 : n_;
    for (int v = 0; v < n_; ++v)
        d = std::min(d, degree(v));
    return d;
}

int Graph::max_degree() const
{
    int d = 0;
    for (int v = 0; v < n_; ++v)
        d = std::max(d, degree(v));
    return d;
}

Graph Graph::with_labels(std::vector<std::string> labels) const
{
    if (!labels.empty() && static_cast<int>(labels.size()) != n_)
        throw GraphError("label table size does not match vertex count");
    Graph copy = *this;
    copy.labels_ = std::move(labels);
    return copy;
}

Graph build_graph(int n, std::span<const Edge> edges)
{
    return Graph(n, edges);
}

Graph complement(const Graph &g)
{
    std::vector<Edge> edges;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v))
                edges.push_back({u, v});
    return Graph(g.order(), edges);
}

Graph disjoint_union(const Graph &g1, const Graph &g2)
{
    auto edges = g1.edges();
    const int shift = g1.order();
    for (auto [u, v] : g2.edges())
        edges.push_back({u + shift, v + shift});
    return Graph(g1.order() + g2.order(), edges);
}

Graph complete_join(const Graph &g1, const Graph &g2)
{
    auto edges = g1.edges();
    const int shift = g1.order();
    for (auto [u, v] : g2.edges())
        edges.push_back({u + shift, v + shift});
    for (int u = 0; u < g1.order(); ++u)
        for (int v = 0; v < g2.order(); ++v)
            edges.push_back({u, v + shift});
    return Graph(g1.order() + g2.order(), edges);
}

Graph induced_subgraph(const Graph &g, std::span<const Vertex> vertices)
{
    std::vector<Edge> edges;
    const int k = static_cast<int>(vertices.size());
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.adjacent(vertices[i], vertices[j]))
                edges.push_back({i, j});
    return Graph(k, edges);
}

namespace {

template <typename Adjacent>
std::vector<VertexSet> components_by(int n, Adjacent adjacent)
{
    std::vector<VertexSet> out;
    std::vector<char> seen(n, 0);
    for (int s = 0; s < n; ++s) {
        if (seen[s])
            continue;
        VertexSet comp;
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            comp.push_back(v);
            for (int w = 0; w < n; ++w)
                if (!seen[w] && w != v && adjacent(v, w)) {
                    seen[w] = 1;
                    q.push(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

} // namespace

std::vector<VertexSet> components(const Graph &g)
{
    return components_by(g.order(), [&](int u, int v) { return g.adjacent(u, v); });
}

std::vector<VertexSet> co_components(const Graph &g)
{
    return components_by(g.order(), [&](int u, int v) { return !g.adjacent(u, v); });
}

bool is_complete(const Graph &g)
{
    const auto n = static_cast<std::size_t>(g.order());
    return g.size() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

bool is_independent(const Graph &g, std::span<const Vertex> vertices)
{
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (g.adjacent(vertices[i], vertices[j]))
                return false;
    return true;
}

bool is_clique(const Graph &g, std::span<const Vertex> vertices)
{
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (!g.adjacent(vertices[i], vertices[j]))
                return false;
    return true;
}

std::optional<std::vector<int>> bipartition(const Graph &g)
{
    std::vector<int> side(g.order(), -1);
    for (int s = 0; s < g.order(); ++s) {
        if (side[s] != -1)
            continue;
        side[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbours(v)) {
                if (side[w] == -1) {
                    side[w] = 1 - side[v];
                    q.push(w);
                } else if (side[w] == side[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return side;
}

bool is_regular(const Graph &g, int degree)
{
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) != degree)
            return false;
    return true;
}

VertexSet dominating_vertices(const Graph &g)
{
    VertexSet out;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == g.order() - 1)
            out.push_back(v);
    return out;
}

VertexSet outer_boundary(const Graph &g, std::span<const Vertex> set)
{
    std::vector<char> inside(g.order(), 0), hit(g.order(), 0);
    for (int v : set)
        inside[v] = 1;
    for (int v : set)
        for (int w : g.neighbours(v))
            if (!inside[w])
                hit[w] = 1;
    VertexSet out;
    for (int v = 0; v < g.order(); ++v)
        if (hit[v])
            out.push_back(v);
    return out;
}

TightAnalysis analyze_tight(const Graph &g)
{
    TightAnalysis a;
    const int n = g.order();
    if (n == 0)
        return a;
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v)
        deg[v] = g.degree(v);
    std::sort(deg.begin(), deg.end(), std::greater<>());
    // deg[k-1] >= k-1 is monotone: once it fails it keeps failing.
    for (int k = 1; k <= n; ++k)
        if (deg[k - 1] >= k - 1)
            a.m = k;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) >= a.m - 1)
            a.dense.push_back(v);
    a.is_tight = static_cast<int>(a.dense.size()) == a.m;
    for (int v : a.dense)
        if (g.degree(v) != a.m - 1)
            a.is_tight = false;
    a.boundary = outer_boundary(g, a.dense);
    return a;
}

std::string digest(const Graph &g)
{
    // FNV-1a over the canonical "n;u,v;u,v;..." serialisation.
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto feed = [&h](const std::string &s) {
        for (unsigned char ch : s) {
            h ^= ch;
            h *= 0x100000001b3ULL;
        }
    };
    feed(std::to_string(g.order()));
    for (auto [u, v] : g.edges())
        feed(";" + std::to_string(u) + "," + std::to_string(v));
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace bfall
