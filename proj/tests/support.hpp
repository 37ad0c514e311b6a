#pragma once

#include "bfall/colouring.hpp"
#include "bfall/graph.hpp"
#include "bfall/pattern.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

namespace support {

using bfall::Edge;
using bfall::Graph;

inline std::vector<Edge> all_pairs(int n)
{
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            pairs.push_back({u, v});
    return pairs;
}

inline Graph graph_from_code(int n, std::uint64_t code)
{
    auto pairs = all_pairs(n);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (code >> i & 1)
            edges.push_back(pairs[i]);
    return Graph(n, edges);
}

/// Every labelled graph on n vertices.
inline void for_each_graph(int n, const std::function<void(const Graph &)> &f)
{
    const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t code = 0; code < total; ++code)
        f(graph_from_code(n, code));
}

inline Graph random_graph(std::mt19937_64 &rng, int n, double p)
{
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (auto e : all_pairs(n))
        if (coin(rng))
            edges.push_back(e);
    return Graph(n, edges);
}

/// Independent reference: try every vertex subset and every bijection.
inline bool naive_contains(const Graph &g, const Graph &h)
{
    const int k = h.order(), n = g.order();
    if (k > n)
        return false;
    std::vector<int> pick(n, 0);
    std::fill(pick.end() - k, pick.end(), 1);
    do {
        std::vector<int> subset;
        for (int v = 0; v < n; ++v)
            if (pick[v])
                subset.push_back(v);
        std::vector<int> perm(k);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            bool ok = true;
            for (int a = 0; a < k && ok; ++a)
                for (int b = a + 1; b < k && ok; ++b)
                    ok = h.adjacent(a, b) == g.adjacent(subset[perm[a]], subset[perm[b]]);
            if (ok)
                return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
    } while (std::next_permutation(pick.begin(), pick.end()));
    return false;
}

/// Every partition of 0..n-1 as a restricted growth string (colours 1-based).
inline void for_each_partition(int n, const std::function<void(const std::vector<int> &)> &f)
{
    std::vector<int> col(n, 0);
    std::function<void(int, int)> rec = [&](int v, int used) {
        if (v == n) {
            f(col);
            return;
        }
        for (int c = 1; c <= used + 1; ++c) {
            col[v] = c;
            rec(v + 1, std::max(used, c));
        }
    };
    rec(0, 0);
}

/// Proper colourings only, as restricted growth strings.
inline void for_each_proper_colouring(const Graph &g, const std::function<void(const std::vector<int> &)> &f)
{
    const int n = g.order();
    std::vector<int> col(n, 0);
    std::function<void(int, int)> rec = [&](int v, int used) {
        if (v == n) {
            f(col);
            return;
        }
        for (int c = 1; c <= used + 1; ++c) {
            bool clash = false;
            for (int w : g.neighbours(v))
                if (w < v && col[w] == c)
                    clash = true;
            if (clash)
                continue;
            col[v] = c;
            rec(v + 1, std::max(used, c));
        }
    };
    rec(0, 0);
}

struct NaiveValues {
    int chi = 0;
    int phi = 0;
    std::vector<int> fall; // ascending
    bool tight_b = false;
};

/// chi, phi, fall spectrum and tight b-colourability by enumerating every
/// proper colouring.
inline NaiveValues naive_values(const Graph &g)
{
    NaiveValues out;
    out.chi = g.order() + 1;
    std::vector<char> fall(g.order() + 2, 0);
    bool tight = bfall::analyze_tight(g).is_tight;
    int m = bfall::analyze_tight(g).m;
    for_each_proper_colouring(g, [&](const std::vector<int> &col) {
        bfall::Colouring c(col);
        int k = c.colour_count();
        out.chi = std::min(out.chi, k);
        if (k > out.phi && bfall::is_b_colouring(g, c))
            out.phi = k;
        if (!fall[k] && bfall::is_fall_colouring(g, c))
            fall[k] = 1;
        if (tight && k == m && !out.tight_b && bfall::is_b_colouring(g, c))
            out.tight_b = true;
    });
    for (int k = 0; k < static_cast<int>(fall.size()); ++k)
        if (fall[k])
            out.fall.push_back(k);
    return out;
}

/// Join of the given graphs.
inline Graph join_all(const std::vector<Graph> &parts)
{
    Graph out;
    for (const auto &p : parts)
        out = out.order() == 0 ? p : bfall::complete_join(out, p);
    return out;
}

inline Graph relabel(const Graph &g, std::mt19937_64 &rng)
{
    std::vector<int> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        edges.push_back({perm[u], perm[v]});
    return Graph(g.order(), edges);
}

/// Every colouring of T ∪ S' with T fixed to 1..m in index order, S' ranging
/// over subsets of the boundary and its colours over 1..m. Invalid ones are
/// passed too; callers filter with validate_partial.
inline void for_each_partial(const Graph &g,
                             const std::function<void(const bfall::VertexSet &, const std::vector<int> &)> &f)
{
    auto a = bfall::analyze_tight(g);
    std::vector<int> col(g.order(), 0);
    for (int i = 0; i < a.m; ++i)
        col[a.dense[i]] = i + 1;
    const int b = static_cast<int>(a.boundary.size());
    for (std::uint32_t mask = 0; mask < (1u << b); ++mask) {
        bfall::VertexSet sp;
        for (int i = 0; i < b; ++i)
            if (mask >> i & 1)
                sp.push_back(a.boundary[i]);
        std::function<void(std::size_t)> rec = [&](std::size_t i) {
            if (i == sp.size()) {
                f(sp, col);
                return;
            }
            for (int c = 1; c <= a.m; ++c) {
                col[sp[i]] = c;
                rec(i + 1);
            }
            col[sp[i]] = 0;
        };
        rec(0);
    }
}

/// Colour classes of c that hold two or more boundary vertices contain no
/// boundary vertex outside S'.
inline bool class_condition(const bfall::TightAnalysis &a, const bfall::VertexSet &s_prime, const bfall::Colouring &c)
{
    std::vector<int> boundary_count(c.colour_count() + 1, 0);
    for (int v : a.boundary)
        ++boundary_count[c[v]];
    for (int v : a.boundary)
        if (!std::binary_search(s_prime.begin(), s_prime.end(), v) && boundary_count[c[v]] >= 2)
            return false;
    return true;
}

/// Whether a colouring agreeing with `colours` on T ∪ S' extends to a tight
/// b-colouring meeting the class condition. Enumerates colours 1..m on the
/// remaining boundary; vertices further out have degree <= m-2 and never
/// obstruct.
inline bool restricted_extension_exists(const Graph &g, const bfall::VertexSet &s_prime, const std::vector<int> &colours)
{
    auto a = bfall::analyze_tight(g);
    std::vector<int> col = colours;
    bfall::VertexSet rest;
    for (int v : a.boundary)
        if (!std::binary_search(s_prime.begin(), s_prime.end(), v))
            rest.push_back(v);
    bfall::VertexSet core = a.dense;
    core.insert(core.end(), a.boundary.begin(), a.boundary.end());
    auto ok = [&] {
        for (int u : core)
            for (int w : g.neighbours(u))
                if (col[w] && col[w] == col[u])
                    return false;
        for (int u : a.dense) {
            std::vector<char> seen(a.m + 1, 0);
            seen[col[u]] = 1;
            for (int w : g.neighbours(u)) {
                if (seen[col[w]])
                    return false;
                seen[col[w]] = 1;
            }
        }
        std::vector<int> count(a.m + 1, 0);
        for (int v : a.boundary)
            ++count[col[v]];
        for (int v : rest)
            if (count[col[v]] >= 2)
                return false;
        return true;
    };
    std::function<bool(std::size_t)> rec = [&](std::size_t i) {
        if (i == rest.size())
            return ok();
        for (int c = 1; c <= a.m; ++c) {
            col[rest[i]] = c;
            if (rec(i + 1))
                return true;
        }
        col[rest[i]] = 0;
        return false;
    };
    return rec(0);
}

/// Join of 2P1 with K3+P1: tight, (P3+P1)-free, no tight b-colouring.
inline Graph footnote_graph()
{
    return bfall::complete_join(bfall::pattern_graph("2P1"), bfall::pattern_graph("K3+P1"));
}

/// Random (P3+P1)-free graph: a join of co-components, each the complement
/// of a triangle-free graph or a union of cliques.
inline Graph random_p3p1_free(std::mt19937_64 &rng, int n)
{
    std::vector<Graph> parts;
    int left = n;
    while (left > 0) {
        int size = std::uniform_int_distribution<int>(1, left)(rng);
        left -= size;
        if (std::bernoulli_distribution(0.5)(rng)) {
            Graph h;
            do
                h = random_graph(rng, size, std::uniform_real_distribution<double>(0.1, 0.6)(rng));
            while (!bfall::is_h_free(h, bfall::pattern_graph("K3")));
            parts.push_back(bfall::complement(h));
        } else {
            std::vector<Edge> edges;
            int start = 0;
            while (start < size) {
                int k = std::uniform_int_distribution<int>(1, size - start)(rng);
                for (int a = start; a < start + k; ++a)
                    for (int b = a + 1; b < start + k; ++b)
                        edges.push_back({a, b});
                start += k;
            }
            parts.push_back(Graph(size, edges));
        }
    }
    return relabel(join_all(parts), rng);
}

/// Random graph from a mixture of densities, used with class filters.
inline Graph random_mixed(std::mt19937_64 &rng, int n)
{
    double p = std::uniform_real_distribution<double>(0.2, 0.9)(rng);
    return random_graph(rng, n, p);
}

} // namespace support
