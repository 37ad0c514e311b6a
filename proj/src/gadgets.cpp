#include "bfall/gadgets.hpp"

#include "bfall/pattern.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace bfall {

namespace {

void require_cubic(const Graph &g, const char *what)
{
    if (g.order() == 0 || !is_regular(g, 3))
        throw PreconditionError(std::string(what) + ": input graph is not cubic");
}

void add_clique(std::vector<Edge> &edges, int first, int count)
{
    for (int i = 0; i < count; ++i)
        for (int j = i + 1; j < count; ++j)
            edges.push_back({first + i, first + j});
}

void add_complete(std::vector<Edge> &edges, int a, int a_count, int b, int b_count)
{
    for (int i = 0; i < a_count; ++i)
        for (int j = 0; j < b_count; ++j)
            edges.push_back({a + i, b + j});
}

// V clique plus V-E incidences; shared by all three variants.
void add_split_part(std::vector<Edge> &edges, const Graph &g)
{
    const int n = g.order();
    add_clique(edges, 0, n);
    auto ge = g.edges();
    for (int j = 0; j < static_cast<int>(ge.size()); ++j) {
        edges.push_back({ge[j].u, n + j});
        edges.push_back({ge[j].v, n + j});
    }
}

Graph stars_instance(const Graph &g, int leaves, bool centre_triangle)
{
    const int n = g.order();
    const int m = static_cast<int>(g.size());
    std::vector<Edge> edges;
    add_split_part(edges, g);
    const int centres = n + m;
    const int first_leaf = centres + 3;
    for (int r = 0; r < 3; ++r)
        for (int k = 0; k < leaves; ++k)
            edges.push_back({centres + r, first_leaf + r * leaves + k});
    if (centre_triangle)
        add_clique(edges, centres, 3);
    return Graph(first_leaf + 3 * leaves, edges);
}

StructuralCheck check(std::string name, bool passed) { return {std::move(name), passed}; }

std::vector<int> as_ints(const std::vector<bool> &a)
{
    std::vector<int> out;
    for (bool b : a)
        out.push_back(b ? 1 : 0);
    return out;
}

} // namespace

Graph bonomo_gadget_union(const Graph &g)
{
    if (!bipartition(g))
        throw PreconditionError("bonomo_instance: input graph is not bipartite");
    const int n = g.order();
    auto ge = g.edges();
    std::vector<Edge> edges;
    for (int j = 0; j < static_cast<int>(ge.size()); ++j) {
        int u = ge[j].u, v = ge[j].v;
        int base = n + 8 * j;
        auto xuv = [&](int i) { return base + i - 1; };
        auto xvu = [&](int i) { return base + 4 + i - 1; };
        edges.push_back({u, xvu(1)});
        edges.push_back({v, xuv(1)});
        edges.push_back({xuv(1), xvu(1)});
        edges.push_back({xuv(1), xvu(2)});
        edges.push_back({xvu(1), xuv(2)});
        edges.push_back({xuv(2), xvu(3)});
        edges.push_back({xvu(2), xuv(3)});
        edges.push_back({xuv(3), xvu(4)});
        edges.push_back({xvu(3), xuv(4)});
    }
    return Graph(n + 8 * static_cast<int>(ge.size()), edges);
}

Graph bonomo_instance(const Graph &g) { return complement(bonomo_gadget_union(g)); }

Graph hss_instance(const Graph &g)
{
    require_cubic(g, "hss_instance");
    return stars_instance(g, g.order() + 2, false);
}

Graph hss_3p2_instance(const Graph &g)
{
    require_cubic(g, "hss_3p2_instance");
    return stars_instance(g, g.order(), true);
}

Graph hss_2p3_instance(const Graph &g)
{
    require_cubic(g, "hss_2p3_instance");
    const int n = g.order();
    const int m = static_cast<int>(g.size());
    const int a = n + m, b = a + m + 1, c = b + 3;
    std::vector<Edge> edges;
    add_split_part(edges, g);
    add_clique(edges, a, m + 1);
    add_clique(edges, b, 3);
    add_clique(edges, c, n);
    add_complete(edges, 0, n, a, m + 1);
    add_complete(edges, a, m + 1, b, 3);
    add_complete(edges, b, 3, c, n);
    add_complete(edges, c, n, n, m);
    return Graph(c + n, edges);
}

const char *to_string(HssVariant v)
{
    switch (v) {
    case HssVariant::Hss:
        return "hss";
    case HssVariant::Hss3P2:
        return "hss3p2";
    case HssVariant::Hss2P3:
        return "hss2p3";
    }
    return "?";
}

Graph hss_variant_instance(HssVariant v, const Graph &g)
{
    switch (v) {
    case HssVariant::Hss:
        return hss_instance(g);
    case HssVariant::Hss3P2:
        return hss_3p2_instance(g);
    case HssVariant::Hss2P3:
        return hss_2p3_instance(g);
    }
    throw std::invalid_argument("unknown variant");
}

Colouring edge_colouring_to_tight_bcolouring(HssVariant v, const Graph &g, const EdgeColouring &ec)
{
    if (!is_three_edge_colouring(g, ec))
        throw PreconditionError("edge_colouring_to_tight_bcolouring: not a 3-edge-colouring of the input");
    const int n = g.order();
    const int m = static_cast<int>(g.size());
    Graph h = hss_variant_instance(v, g);
    std::vector<int> col(h.order(), 0);
    for (int j = 0; j < m; ++j)
        col[n + j] = ec[j];
    for (int i = 0; i < n; ++i)
        col[i] = 4 + i;

    if (v == HssVariant::Hss2P3) {
        const int a = n + m, b = a + m + 1, c = b + 3;
        for (int r = 0; r <= m; ++r)
            col[a + r] = n + 4 + r;
        for (int s = 0; s < 3; ++s)
            col[b + s] = s + 1;
        for (int t = 0; t < n; ++t)
            col[c + t] = 4 + t;
        return Colouring(std::move(col));
    }

    // Centre r takes colour r+1; its leaves take the other colours in order.
    const int total = n + 3;
    const int leaves = v == HssVariant::Hss ? n + 2 : n;
    const int centres = n + m;
    const int first_leaf = centres + 3;
    for (int r = 0; r < 3; ++r) {
        col[centres + r] = r + 1;
        int k = 0;
        for (int colour = 1; colour <= total && k < leaves; ++colour) {
            if (colour == r + 1 || (v == HssVariant::Hss3P2 && colour <= 3))
                continue;
            col[first_leaf + r * leaves + k++] = colour;
        }
    }
    return Colouring(std::move(col));
}

std::optional<EdgeColouring> tight_bcolouring_to_edge_colouring(HssVariant v, const Graph &g, const Colouring &c)
{
    const int n = g.order();
    const int m = static_cast<int>(g.size());
    int anchor = v == HssVariant::Hss2P3 ? n + m + m + 1 : n + m; // B or the centres
    EdgeColouring ec(m, 0);
    for (int j = 0; j < m; ++j) {
        for (int r = 0; r < 3; ++r)
            if (c[n + j] == c[anchor + r])
                ec[j] = r + 1;
        if (ec[j] == 0)
            return std::nullopt;
    }
    if (!is_three_edge_colouring(g, ec))
        return std::nullopt;
    return ec;
}

OneInThreeGraph one_in_three_graph(const Formula33 &f)
{
    const int n = f.clause_count();
    std::vector<Edge> edges;
    std::vector<VertexSet> occurrences(f.variable_count());
    for (int j = 0; j < n; ++j) {
        int base = 5 * j;
        for (int i = 0; i < 4; ++i)
            edges.push_back({base + i, base + i + 1});
        for (int pos = 0; pos < 3; ++pos)
            occurrences[f.clauses()[j][pos]].push_back(base + 2 * pos);
    }
    for (const auto &occ : occurrences)
        for (std::size_t i = 0; i < occ.size(); ++i)
            for (std::size_t k = i + 1; k < occ.size(); ++k)
                edges.push_back({occ[i], occ[k]});
    Graph g(5 * n, edges);
    Graph gbar = complement(g);
    return {std::move(g), std::move(gbar)};
}

Colouring assignment_to_fall_colouring(const Formula33 &f, const std::vector<bool> &a)
{
    if (static_cast<int>(a.size()) != f.variable_count() || !f.one_in_three(a))
        throw PreconditionError("assignment_to_fall_colouring: assignment is not 1-in-3 satisfying");
    const int n = f.clause_count();
    std::vector<VertexSet> classes;
    std::vector<VertexSet> triangles(f.variable_count());
    for (int j = 0; j < n; ++j)
        for (int pos = 0; pos < 3; ++pos)
            triangles[f.clauses()[j][pos]].push_back(5 * j + 2 * pos);
    for (int x = 0; x < f.variable_count(); ++x)
        if (a[x])
            classes.push_back(triangles[x]);
    // a1 sits between positions 0 and 1, a2 between 1 and 2; the true literal
    // leaves exactly one false neighbour for each.
    for (int j = 0; j < n; ++j) {
        int base = 5 * j;
        int t = 0;
        while (!a[f.clauses()[j][t]])
            ++t;
        int first = t == 0 ? 1 : 0;
        int second = t == 2 ? 1 : 2;
        classes.push_back({base + 2 * first, base + 1});
        classes.push_back({base + 2 * second, base + 3});
    }
    for (auto &cls : classes)
        std::sort(cls.begin(), cls.end());
    std::sort(classes.begin(), classes.end());
    return Colouring::from_classes(5 * n, classes);
}

std::optional<std::vector<bool>> fall_colouring_to_assignment(const Formula33 &f, const Colouring &c)
{
    std::vector<bool> a(f.variable_count(), false);
    std::vector<VertexSet> triangles(f.variable_count());
    for (int j = 0; j < f.clause_count(); ++j)
        for (int pos = 0; pos < 3; ++pos)
            triangles[f.clauses()[j][pos]].push_back(5 * j + 2 * pos);
    for (int x = 0; x < f.variable_count(); ++x) {
        const auto &tri = triangles[x];
        int colour = c[tri[0]];
        bool whole = c[tri[1]] == colour && c[tri[2]] == colour;
        int size = 0;
        for (int v : c.values())
            size += v == colour;
        a[x] = whole && size == 3;
    }
    if (!f.one_in_three(a))
        return std::nullopt;
    return a;
}

Graph c3free_gadget()
{
    static const std::vector<Edge> edges = {{0, 3}, {0, 9}, {1, 3}, {1, 5}, {1, 7}, {1, 8}, {2, 4},
                                            {2, 6}, {2, 8}, {3, 6}, {4, 7}, {5, 6}, {5, 9}, {8, 9}};
    return Graph(10, edges);
}

Graph fall_trick_union(const Graph &g, FallTrick kind)
{
    if (kind == FallTrick::C3Free) {
        if (!is_h_free(g, pattern_graph("K3")))
            throw PreconditionError("fall_trick_union: input graph contains a triangle");
        return disjoint_union(g, c3free_gadget());
    }
    return disjoint_union(g, pattern_graph("K3"));
}

Formula33 formula_fixture_n3() { return Formula33({{0, 1, 2}, {0, 1, 2}, {0, 1, 2}}); }

Formula33 formula_fixture_unsat_n6()
{
    return Formula33({{0, 1, 2}, {0, 1, 3}, {0, 4, 5}, {1, 4, 5}, {2, 3, 4}, {2, 3, 5}});
}

std::vector<std::string> family_names()
{
    return {"knn-pm", "fig1-left", "complete", "cycle", "path", "star", "knn", "paw", "petersen", "prism"};
}

Graph family(std::string_view name, int n)
{
    std::vector<Edge> edges;
    auto need = [&](int least) {
        if (n < least)
            throw std::invalid_argument("family " + std::string(name) + " needs n >= " + std::to_string(least));
    };
    if (name == "knn-pm" || name == "knn") {
        need(name == "knn" ? 1 : 2);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j || name == "knn")
                    edges.push_back({i, n + j});
        return Graph(2 * n, edges);
    }
    if (name == "fig1-left") {
        need(2);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n - 1; ++j)
                if (i != j)
                    edges.push_back({i, n + j});
        return Graph(2 * n - 1, edges);
    }
    if (name == "complete") {
        need(1);
        add_clique(edges, 0, n);
        return Graph(n, edges);
    }
    if (name == "cycle") {
        need(3);
        for (int i = 0; i < n; ++i)
            edges.push_back({i, (i + 1) % n});
        return Graph(n, edges);
    }
    if (name == "path") {
        need(1);
        for (int i = 0; i + 1 < n; ++i)
            edges.push_back({i, i + 1});
        return Graph(n, edges);
    }
    if (name == "star") {
        need(1);
        for (int i = 1; i <= n; ++i)
            edges.push_back({0, i});
        return Graph(n + 1, edges);
    }
    if (name == "paw")
        return pattern_graph("paw");
    if (name == "petersen") {
        for (int i = 0; i < 5; ++i) {
            edges.push_back({i, (i + 1) % 5});
            edges.push_back({i, i + 5});
            edges.push_back({5 + i, 5 + (i + 2) % 5});
        }
        return Graph(10, edges);
    }
    if (name == "prism") {
        add_clique(edges, 0, 3);
        add_clique(edges, 3, 3);
        for (int i = 0; i < 3; ++i)
            edges.push_back({i, i + 3});
        return Graph(6, edges);
    }
    throw std::invalid_argument("unknown family: " + std::string(name));
}

Colouring fig1_left_colouring(int n)
{
    if (n < 2)
        throw std::invalid_argument("fig1_left_colouring needs n >= 2");
    std::vector<int> col(2 * n - 1);
    for (int i = 0; i < n; ++i)
        col[i] = i + 1;
    for (int j = 0; j < n - 1; ++j)
        col[n + j] = j + 1;
    return Colouring(std::move(col));
}

Colouring knn_pm_colouring(int n)
{
    if (n < 2)
        throw std::invalid_argument("knn_pm_colouring needs n >= 2");
    std::vector<int> col(2 * n);
    for (int i = 0; i < n; ++i)
        col[i] = col[n + i] = i + 1;
    return Colouring(std::move(col));
}

bool is_split(const Graph &g)
{
    // Degree-sequence characterisation.
    std::vector<int> d;
    for (int v = 0; v < g.order(); ++v)
        d.push_back(g.degree(v));
    std::sort(d.rbegin(), d.rend());
    int k = 0;
    while (k < static_cast<int>(d.size()) && d[k] >= k)
        ++k;
    long long left = 0, right = 0;
    for (int i = 0; i < static_cast<int>(d.size()); ++i)
        (i < k ? left : right) += d[i];
    return left == static_cast<long long>(k) * (k - 1) + right;
}

const char *to_string(Equivalence e)
{
    switch (e) {
    case Equivalence::Verified:
        return "verified";
    case Equivalence::StructuralOnly:
        return "structural-only";
    case Equivalence::Inconclusive:
        return "inconclusive";
    case Equivalence::Inconsistent:
        return "inconsistent";
    }
    return "?";
}

bool ReductionCertificate::checks_pass() const
{
    return std::all_of(checks.begin(), checks.end(), [](const StructuralCheck &c) { return c.passed; });
}

namespace {

ReductionCertificate verify_hss(HssVariant v, const Graph &g, const OracleBudget &budget, bool solve)
{
    ReductionCertificate cert;
    cert.kind = to_string(v);
    cert.input_summary = "cubic graph, n=" + std::to_string(g.order()) + ", m=" + std::to_string(g.size());
    cert.instance = hss_variant_instance(v, g);
    const Graph &h = cert.instance;
    const int n = g.order();
    const int m = static_cast<int>(g.size());
    auto a = analyze_tight(h);

    if (v == HssVariant::Hss2P3) {
        const int ai = n + m, bi = ai + m + 1, ci = bi + 3;
        bool degrees = true;
        for (int x = 0; x < h.order(); ++x) {
            int want = x < n ? m + n + 3 : x < ai ? n + 2 : x < ci ? m + n + 3 : m + n + 2;
            degrees = degrees && h.degree(x) == want;
        }
        cert.checks.push_back(check("degree table", degrees));
        cert.checks.push_back(check("m(H') = m+n+4", a.m == m + n + 4));
        cert.checks.push_back(check("tight", a.is_tight));
        cert.checks.push_back(check("2P3-free", is_h_free(h, pattern_graph("2P3"))));
    } else {
        cert.checks.push_back(check("m(H) = n+3", a.m == n + 3));
        cert.checks.push_back(check("tight", a.is_tight));
        if (v == HssVariant::Hss) {
            VertexSet split_part(n + m);
            for (int i = 0; i < n + m; ++i)
                split_part[i] = i;
            cert.checks.push_back(check("H[V+E] split", is_split(induced_subgraph(h, split_part))));
        } else {
            cert.checks.push_back(check("3P2-free", is_h_free(h, pattern_graph("3P2"))));
        }
    }

    if (!solve)
        return cert;
    auto forward = three_edge_colouring(g, budget);
    cert.forward_status = to_string(forward.status);
    if (forward.found()) {
        cert.forward_witness = edge_colouring_to_tight_bcolouring(v, g, *forward.witness);
        cert.checks.push_back(check("forward witness is a tight b-colouring", is_tight_b_colouring(h, *cert.forward_witness)));
    }

    auto backward = tight_b_exact(h, budget);
    cert.backward_status = to_string(backward.status);
    cert.measurements.push_back({"instance search nodes", std::to_string(backward.nodes)});
    if (backward.found()) {
        auto ec = tight_bcolouring_to_edge_colouring(v, g, *backward.witness);
        cert.checks.push_back(check("backward witness maps to a 3-edge-colouring", ec.has_value()));
        if (ec)
            cert.backward_witness = *ec;
    }

    if (forward.status == SearchStatus::Inconclusive || backward.status == SearchStatus::Inconclusive)
        cert.equivalence = Equivalence::Inconclusive;
    else if (forward.found() == backward.found())
        cert.equivalence = Equivalence::Verified;
    else
        cert.equivalence = Equivalence::Inconsistent;
    return cert;
}

ReductionCertificate verify_bonomo(const Graph &g, const OracleBudget &budget, bool solve)
{
    ReductionCertificate cert;
    cert.kind = "bonomo";
    cert.input_summary = "bipartite graph, n=" + std::to_string(g.order()) + ", m=" + std::to_string(g.size());
    Graph h = bonomo_gadget_union(g);
    cert.instance = complement(h);
    cert.checks.push_back(check("gadget union bipartite", bipartition(h).has_value()));
    cert.checks.push_back(check("gadget union C4-free", is_h_free(h, pattern_graph("C4"))));
    cert.checks.push_back(check("instance 3P1-free", is_h_free(cert.instance, pattern_graph("3P1"))));
    cert.checks.push_back(check("instance 2P2-free", is_h_free(cert.instance, pattern_graph("2P2"))));
    cert.forward_status = "not run";
    cert.backward_status = "not run";
    if (!solve)
        return cert;
    try {
        cert.measurements.push_back({"minimum maximal matching", std::to_string(min_maximal_matching_size(g, budget))});
    } catch (const BudgetExceeded &) {
        cert.measurements.push_back({"minimum maximal matching", "over budget"});
    }
    try {
        auto phi = b_chromatic_number(cert.instance, budget);
        cert.measurements.push_back({"b-chromatic number of instance", std::to_string(phi.value)});
    } catch (const BudgetExceeded &) {
        cert.measurements.push_back({"b-chromatic number of instance", "over budget"});
    }
    return cert;
}

ReductionCertificate verify_fall_trick(FallTrick kind, const Graph &g, const OracleBudget &budget, bool solve)
{
    ReductionCertificate cert;
    cert.kind = kind == FallTrick::C3Free ? "c3free" : "line";
    cert.input_summary = "graph, n=" + std::to_string(g.order()) + ", m=" + std::to_string(g.size());
    cert.instance = fall_trick_union(g, kind);
    Graph gadget = kind == FallTrick::C3Free ? c3free_gadget() : pattern_graph("K3");
    if (kind == FallTrick::C3Free) {
        cert.checks.push_back(check("gadget triangle-free", is_h_free(gadget, pattern_graph("K3"))));
        cert.checks.push_back(check("instance triangle-free", is_h_free(cert.instance, pattern_graph("K3"))));
    }
    if (!solve)
        return cert;
    auto gadget_spectrum = fall_spectrum(gadget, budget);
    cert.checks.push_back(check("gadget fall spectrum is {3}", gadget_spectrum.values == std::vector<int>{3}));
    try {
        auto input = fall_spectrum(g, budget);
        bool yes = input.contains(3);
        cert.forward_status = yes ? "found" : "absent";
        if (yes)
            cert.measurements.push_back({"input has fall 3-colouring", "yes"});
        auto whole = fall_spectrum(cert.instance, budget);
        bool unique = whole.values.size() == 1;
        cert.backward_status = unique ? "fall-unique" : "not fall-unique";
        if (unique)
            cert.forward_witness = whole.witnesses.front();
        cert.equivalence = yes == (unique && whole.values.front() == 3) ? Equivalence::Verified : Equivalence::Inconsistent;
    } catch (const BudgetExceeded &) {
        cert.forward_status = cert.backward_status = "over budget";
        cert.equivalence = Equivalence::StructuralOnly;
    }
    return cert;
}

} // namespace

ReductionCertificate verify_reduction(std::string_view kind, const Graph &input, const OracleBudget &budget, bool solve)
{
    if (kind == "hss")
        return verify_hss(HssVariant::Hss, input, budget, solve);
    if (kind == "hss3p2")
        return verify_hss(HssVariant::Hss3P2, input, budget, solve);
    if (kind == "hss2p3")
        return verify_hss(HssVariant::Hss2P3, input, budget, solve);
    if (kind == "bonomo")
        return verify_bonomo(input, budget, solve);
    if (kind == "c3free")
        return verify_fall_trick(FallTrick::C3Free, input, budget, solve);
    if (kind == "line")
        return verify_fall_trick(FallTrick::Line, input, budget, solve);
    throw std::invalid_argument("unknown reduction kind: " + std::string(kind));
}

ReductionCertificate verify_reduction(const Formula33 &f, const OracleBudget &budget, bool solve)
{
    ReductionCertificate cert;
    cert.kind = "one_in_three";
    const int n = f.variable_count();
    cert.input_summary = "(3,3)-formula, n=" + std::to_string(n);
    auto built = one_in_three_graph(f);
    cert.instance = built.gbar;
    const Graph &gbar = built.gbar;
    cert.checks.push_back(check("|V| = 5n", gbar.order() == 5 * n));
    cert.checks.push_back(check("clique number 3", clique_number(built.g) == 3));
    for (const char *p : {"C5", "2P2", "P2+2P1", "4P1"})
        cert.checks.push_back(check(std::string("complement ") + p + "-free", is_h_free(gbar, pattern_graph(p))));
    if (!solve)
        return cert;

    auto forward = one_in_three_sat(f, budget);
    cert.forward_status = to_string(forward.status);
    if (forward.found()) {
        cert.forward_witness = assignment_to_fall_colouring(f, *forward.witness);
        cert.checks.push_back(check("forward witness is a fall colouring", is_fall_colouring(gbar, *cert.forward_witness)));
        cert.checks.push_back(check("forward witness uses 7n/3 colours", 3 * cert.forward_witness->colour_count() == 7 * n));
    }

    try {
        auto spectrum = fall_spectrum(gbar, budget);
        cert.measurements.push_back({"instance search nodes", std::to_string(spectrum.nodes)});
        std::string values;
        for (int k : spectrum.values)
            values += (values.empty() ? "" : ",") + std::to_string(k);
        cert.measurements.push_back({"fall spectrum", "{" + values + "}"});
        bool target = spectrum.values.size() == 1 && 3 * spectrum.values.front() == 7 * n;
        cert.backward_status = target ? "found" : spectrum.empty() ? "absent" : "other spectrum";
        if (target) {
            auto a = fall_colouring_to_assignment(f, spectrum.witnesses.front());
            cert.checks.push_back(check("backward witness maps to a 1-in-3 assignment", a.has_value()));
            if (a)
                cert.backward_witness = as_ints(*a);
        }
        if (forward.status == SearchStatus::Inconclusive)
            cert.equivalence = Equivalence::Inconclusive;
        else if ((forward.found() && target) || (!forward.found() && spectrum.empty()))
            cert.equivalence = Equivalence::Verified;
        else
            cert.equivalence = Equivalence::Inconsistent;
    } catch (const BudgetExceeded &) {
        cert.backward_status = "over budget";
        cert.equivalence = Equivalence::StructuralOnly;
    }
    return cert;
}

} // namespace bfall
