#include "bfall/fall_solver.hpp"

#include "bfall/matching.hpp"

#include <algorithm>

namespace bfall {

namespace {

// Fills local colours (1-based within the co-component) or sets ok = false.
CoComponentFall solve_part(const Graph &gi, const VertexSet &vertices, std::vector<int> &local)
{
    CoComponentFall part;
    part.vertices = vertices;
    part.kind = olariu_kind(gi);
    const int n = gi.order();
    local.assign(n, 0);

    if (part.kind == OlariuKind::ThreeP1Free) {
        VertexSet dom = dominating_vertices(gi);
        part.dominating = static_cast<int>(dom.size());
        int next = 1;
        std::vector<char> is_dom(n, 0);
        for (int v : dom) {
            is_dom[v] = 1;
            local[v] = next++;
        }
        VertexSet rest;
        for (int v = 0; v < n; ++v)
            if (!is_dom[v])
                rest.push_back(v);
        if (rest.size() % 2 != 0) {
            part.reason = "odd number of non-dominating vertices";
            return part;
        }
        auto pm = perfect_matching(complement(induced_subgraph(gi, rest)));
        if (!pm) {
            part.reason = "complement of the non-dominating part has no perfect matching";
            return part;
        }
        for (auto [a, b] : pm->edges) {
            local[rest[a]] = next;
            local[rest[b]] = next;
            ++next;
        }
        part.pairs = static_cast<int>(pm->size());
        part.colours = part.dominating + part.pairs;
        part.ok = true;
        return part;
    }

    if (part.kind == OlariuKind::CliqueUnion) {
        auto comps = components(gi);
        std::size_t p = comps.front().size();
        for (const auto &comp : comps)
            if (comp.size() != p) {
                part.reason = "clique components of different sizes";
                return part;
            }
        for (const auto &comp : comps)
            for (std::size_t i = 0; i < comp.size(); ++i)
                local[comp[i]] = static_cast<int>(i) + 1;
        part.clique_size = static_cast<int>(p);
        part.colours = part.clique_size;
        part.ok = true;
        return part;
    }

    throw PreconditionError("fall_p3p1_free: a co-component is neither 3P1-free nor a union of cliques");
}

} // namespace

FallResult fall_p3p1_free(const Graph &g)
{
    if (!is_h_free(g, pattern_graph("P3+P1")))
        throw PreconditionError("fall_p3p1_free: graph contains an induced P3+P1");
    FallResult result;
    if (g.order() == 0)
        return result;

    std::vector<int> col(g.order(), 0);
    int offset = 0;
    bool ok = true;
    for (const auto &vertices : co_components(g)) {
        std::vector<int> local;
        auto part = solve_part(induced_subgraph(g, vertices), vertices, local);
        if (part.ok) {
            for (std::size_t j = 0; j < vertices.size(); ++j)
                col[vertices[j]] = local[j] + offset;
            offset += part.colours;
        }
        ok = ok && part.ok;
        result.per_component.push_back(std::move(part));
    }
    if (ok) {
        result.spectrum = {offset};
        result.colouring = Colouring(std::move(col));
    }
    return result;
}

FallUniqueness fall_uniqueness_report(const Graph &g, const OracleBudget &budget)
{
    FallUniqueness out;
    if (g.order() > 0 && is_h_free(g, pattern_graph("P3+P1"))) {
        out.spectrum = fall_p3p1_free(g).spectrum;
        out.polynomial = true;
    } else {
        out.spectrum = fall_spectrum(g, budget).values;
    }
    out.fall_unique = out.spectrum.size() == 1;
    return out;
}

} // namespace bfall
