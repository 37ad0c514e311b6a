#include "bfall/tight_solver.hpp"

#include "bfall/matching.hpp"
#include "bfall/oracles.hpp"
#include "bfall/pattern.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace bfall {

namespace {

std::vector<char> membership(int n, const VertexSet &set)
{
    std::vector<char> in(n, 0);
    for (int v : set)
        in[v] = 1;
    return in;
}

// Least free colour in index order; every uncoloured vertex has fewer than
// m-1 neighbours, so the colour stays within 1..m.
Colouring complete_greedily(const Graph &g, std::vector<int> col, int m)
{
    for (int v = 0; v < g.order(); ++v) {
        if (col[v])
            continue;
        std::vector<char> used(m + 2, 0);
        for (int w : g.neighbours(v))
            if (col[w] <= m)
                used[col[w]] = 1;
        int c = 1;
        while (used[c])
            ++c;
        if (c > m)
            throw std::logic_error("greedy completion ran out of colours at vertex " + std::to_string(v));
        col[v] = c;
    }
    return Colouring(std::move(col));
}

std::string vname(int v) { return std::to_string(v); }

TightAnswer no(std::string reason) { return TightAnswer{std::nullopt, std::move(reason)}; }

} // namespace

const char *to_string(PartialClause c)
{
    switch (c) {
    case PartialClause::Valid:
        return "valid";
    case PartialClause::Properness:
        return "properness";
    case PartialClause::DenseDistinct:
        return "dense-distinct";
    case PartialClause::UniqueNeighbour:
        return "unique-neighbour";
    }
    return "?";
}

PartialCheck validate_partial(const Graph &g, const VertexSet &s_prime, const std::vector<int> &colours)
{
    const int n = g.order();
    auto a = analyze_tight(g);
    if (!a.is_tight)
        throw PreconditionError("validate_partial: graph is not tight");
    if (static_cast<int>(colours.size()) != n)
        throw PreconditionError("validate_partial: colour vector has the wrong length");

    auto in_boundary = membership(n, a.boundary);
    auto in_dense = membership(n, a.dense);
    std::vector<char> in_s(n, 0);
    for (int s : s_prime) {
        if (s < 0 || s >= n || !in_boundary[s] || in_s[s])
            throw PreconditionError("validate_partial: S' must be a set of boundary vertices");
        in_s[s] = 1;
    }
    for (int v = 0; v < n; ++v) {
        bool expected = in_dense[v] || in_s[v];
        if (colours[v] < 0 || colours[v] > a.m)
            throw PreconditionError("validate_partial: colour of vertex " + vname(v) + " outside 1.." +
                                    std::to_string(a.m));
        if (expected != (colours[v] != 0))
            throw PreconditionError("validate_partial: coloured vertices must be exactly T and S'");
    }

    PartialCheck out;
    for (auto [u, v] : g.edges()) {
        if (colours[u] && colours[u] == colours[v]) {
            out.clause = PartialClause::Properness;
            out.detail = "adjacent vertices " + vname(u) + " and " + vname(v) + " share colour " +
                         std::to_string(colours[u]);
            return out;
        }
    }
    std::vector<int> owner(a.m + 1, -1);
    for (int u : a.dense) {
        if (owner[colours[u]] != -1) {
            out.clause = PartialClause::DenseDistinct;
            out.detail = "dense vertices " + vname(owner[colours[u]]) + " and " + vname(u) + " share colour " +
                         std::to_string(colours[u]);
            return out;
        }
        owner[colours[u]] = u;
    }
    std::vector<char> on_s_prime(a.m + 1, 0);
    for (int s : s_prime)
        on_s_prime[colours[s]] = 1;
    for (int u : a.dense) {
        int c = colours[u];
        if (!on_s_prime[c])
            continue;
        for (int w : a.dense) {
            if (w == u)
                continue;
            int count = 0;
            for (int x : g.neighbours(w))
                count += colours[x] == c;
            if (count != 1) {
                out.clause = PartialClause::UniqueNeighbour;
                out.detail = "dense vertex " + vname(w) + " has " + std::to_string(count) + " neighbours of colour " +
                             std::to_string(c);
                return out;
            }
        }
    }
    out.partial = PartialBColouring{g, std::move(a), s_prime, colours};
    return out;
}

DensePartition dense_partition(const PartialBColouring &p)
{
    const Graph &g = p.host;
    const auto &t = p.analysis.dense;
    DensePartition part;
    std::vector<char> on_s_prime(p.analysis.m + 1, 0);
    for (int s : p.s_prime)
        on_s_prime[p.colours[s]] = 1;
    for (int u : t) {
        bool dominating = std::all_of(t.begin(), t.end(), [&](int w) { return w == u || g.adjacent(u, w); });
        bool shared = on_s_prime[p.colours[u]];
        if (dominating)
            part.t1.push_back(u);
        if (shared)
            part.t_prime.push_back(u);
        if (!dominating && !shared)
            part.t2.push_back(u);
    }
    auto in_s = membership(g.order(), p.s_prime);
    for (int s : p.analysis.boundary)
        if (!in_s[s])
            part.s.push_back(s);
    return part;
}

TightAnswer extend_partial(const PartialBColouring &p)
{
    const Graph &g = p.host;
    const int m = p.analysis.m;
    auto part = dense_partition(p);

    if (part.t2.empty()) {
        if (!part.s.empty())
            return no("every dense vertex is dominating or precoloured, but boundary vertex " + vname(part.s.front()) +
                      " is uncoloured");
        return TightAnswer{complete_greedily(g, p.colours, m), {}};
    }
    if (part.t2.size() != part.s.size())
        return no("the matching graph has unequal sides (" + std::to_string(part.t2.size()) + " dense vs " +
                  std::to_string(part.s.size()) + " boundary)");

    const int k = static_cast<int>(part.t2.size());
    auto relevant = membership(g.order(), part.t2);
    for (int u : part.t_prime)
        relevant[u] = 1;
    std::vector<Edge> star_edges;
    for (int i = 0; i < k; ++i) {
        int u = part.t2[i];
        for (int j = 0; j < k; ++j) {
            int s = part.s[j];
            if (g.adjacent(u, s))
                continue;
            bool common = false;
            for (int w : g.neighbours(s))
                if (w != u && relevant[w] && g.adjacent(u, w)) {
                    common = true;
                    break;
                }
            if (!common)
                star_edges.push_back({i, k + j});
        }
    }
    Graph star(2 * k, star_edges);
    VertexSet left(k), right(k);
    for (int i = 0; i < k; ++i) {
        left[i] = i;
        right[i] = k + i;
    }
    auto matching = max_bipartite_matching(star, left, right);
    if (static_cast<int>(matching.size()) != k)
        return no("the matching graph has no perfect matching (maximum " + std::to_string(matching.size()) + " of " +
                  std::to_string(k) + ")");

    auto col = p.colours;
    for (auto [i, j] : matching.edges)
        col[part.s[j - k]] = col[part.t2[i]];
    return TightAnswer{complete_greedily(g, std::move(col), m), {}};
}

TightAnswer tight_b_2p2p1_free(const Graph &g)
{
    auto a = analyze_tight(g);
    if (!a.is_tight)
        throw PreconditionError("tight_b_2p2p1_free: graph is not tight");
    if (!is_h_free(g, pattern_graph("2P2+P1")))
        throw PreconditionError("tight_b_2p2p1_free: graph contains an induced 2P2+P1");

    const int n = g.order();
    std::vector<int> col(n, 0);
    for (int i = 0; i < a.m; ++i)
        col[a.dense[i]] = i + 1;

    // A boundary vertex s can only share the colour of a non-neighbour u in T
    // when the dense neighbours of s outside N(u) are complete to the rest of T.
    // When s has no such neighbour, every dense neighbour of s also sees u, so
    // s can never take u's colour.
    auto in_dense = membership(n, a.dense);
    VertexSet s_prime;
    for (int s : a.boundary) {
        int forced = 0;
        for (int u : a.dense) {
            if (g.adjacent(u, s))
                continue;
            VertexSet tus;
            for (int w : g.neighbours(s))
                if (in_dense[w] && !g.adjacent(u, w))
                    tus.push_back(w);
            if (tus.empty())
                continue;
            auto in_tus = membership(n, tus);
            bool complete = true;
            for (int w : tus) {
                for (int x : a.dense)
                    if (x != u && !in_tus[x] && !g.adjacent(w, x)) {
                        complete = false;
                        break;
                    }
                if (!complete)
                    break;
            }
            if (!complete)
                continue;
            if (forced && forced != col[u])
                return no("boundary vertex " + vname(s) + " is forced to colours " + std::to_string(forced) + " and " +
                          std::to_string(col[u]));
            forced = col[u];
        }
        if (forced) {
            col[s] = forced;
            s_prime.push_back(s);
        }
    }

    auto check = validate_partial(g, s_prime, col);
    if (!check.partial)
        return no(std::string("forced partial colouring fails the ") + to_string(check.clause) + " condition: " +
                  check.detail);
    return extend_partial(*check.partial);
}

TightAnswer tight_b_clique_union(const Graph &g)
{
    auto a = analyze_tight(g);
    if (!a.is_tight)
        throw PreconditionError("tight_b_clique_union: graph is not tight");
    auto comps = components(g);
    for (const auto &comp : comps)
        if (!is_clique(g, comp))
            throw PreconditionError("tight_b_clique_union: a component is not complete");

    // Tightness leaves exactly one component of size m (its vertices are the
    // dense ones) and smaller cliques elsewhere; rainbow every clique.
    std::vector<int> col(g.order(), 0);
    for (const auto &comp : comps)
        for (std::size_t i = 0; i < comp.size(); ++i)
            col[comp[i]] = static_cast<int>(i) + 1;
    TightAnswer answer{Colouring(std::move(col)), {}};

#ifdef BFALL_ORACLE_SHADOW
    if (g.order() <= OracleBudget{}.max_vertices) {
        auto exact = tight_b_exact(g);
        if (exact.status != SearchStatus::Inconclusive && exact.found() != answer.colouring.has_value())
            throw std::logic_error("tight_b_clique_union disagrees with the exhaustive search");
    }
#endif
    return answer;
}

TightAnswer tight_b_p3p1_free(const Graph &g)
{
    auto a = analyze_tight(g);
    if (!a.is_tight)
        throw PreconditionError("tight_b_p3p1_free: graph is not tight");
    if (!is_h_free(g, pattern_graph("P3+P1")))
        throw PreconditionError("tight_b_p3p1_free: graph contains an induced P3+P1");

    auto in_dense = membership(g.order(), a.dense);
    auto parts = co_components(g);
    std::vector<Graph> subgraphs;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        Graph gi = induced_subgraph(g, parts[i]);
        int mi = static_cast<int>(std::count_if(parts[i].begin(), parts[i].end(), [&](int v) { return in_dense[v]; }));
        int pi = gi.max_degree();
        if (mi > pi + 1)
            return no("co-component " + std::to_string(i) + " has " + std::to_string(mi) +
                      " dense vertices but maximum degree " + std::to_string(pi));
        subgraphs.push_back(std::move(gi));
    }

    std::vector<int> col(g.order(), 0);
    int offset = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const Graph &gi = subgraphs[i];
        TightAnswer sub;
        switch (olariu_kind(gi)) {
        case OlariuKind::ThreeP1Free:
            sub = tight_b_2p2p1_free(gi);
            break;
        case OlariuKind::CliqueUnion:
            sub = tight_b_clique_union(gi);
            break;
        case OlariuKind::Neither:
            throw PreconditionError("tight_b_p3p1_free: co-component " + std::to_string(i) +
                                    " is neither 3P1-free nor a union of cliques");
        }
        if (!sub)
            return no("co-component " + std::to_string(i) + ": " + sub.reason);
        for (std::size_t j = 0; j < parts[i].size(); ++j)
            col[parts[i][j]] = (*sub.colouring)[static_cast<int>(j)] + offset;
        offset += sub.colouring->colour_count();
    }
    return TightAnswer{Colouring(std::move(col)), {}};
}

std::optional<std::string> dense_structure_violation(const Graph &g, const Colouring &c)
{
    auto a = analyze_tight(g);
    auto in_dense = membership(g.order(), a.dense);
    for (int v = 0; v < g.order(); ++v)
        if (is_b_chromatic_vertex(g, c, v) != static_cast<bool>(in_dense[v]))
            return "vertex " + vname(v) + (in_dense[v] ? " is dense but not b-chromatic" : " is b-chromatic but not dense");

    auto classes = c.classes();
    for (std::size_t i = 0; i < classes.size(); ++i) {
        int dense_count = 0;
        for (int v : classes[i])
            dense_count += in_dense[v];
        if (dense_count != 1)
            return "colour " + std::to_string(i + 1) + " holds " + std::to_string(dense_count) + " dense vertices";
    }
    for (int u : a.dense) {
        std::vector<int> count(c.colour_count() + 1, 0);
        for (int w : g.neighbours(u))
            ++count[c[w]];
        for (int k = 1; k <= c.colour_count(); ++k)
            if (k != c[u] && count[k] != 1)
                return "dense vertex " + vname(u) + " has " + std::to_string(count[k]) + " neighbours of colour " +
                       std::to_string(k);
    }

    auto in_boundary = membership(g.order(), a.boundary);
    for (int u : a.dense) {
        bool dominating =
            std::all_of(a.dense.begin(), a.dense.end(), [&](int w) { return w == u || g.adjacent(u, w); });
        if (!dominating)
            continue;
        for (int v : classes[c[u] - 1])
            if (in_boundary[v])
                return "dominating dense vertex " + vname(u) + " shares its colour with boundary vertex " + vname(v);
    }
    return std::nullopt;
}

} // namespace bfall
