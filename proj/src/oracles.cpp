#include "bfall/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <string>

namespace bfall {

namespace {

using Mask = std::uint64_t;

Mask bit(int v) { return Mask{1} << v; }

Mask full_mask(int n) { return n == 64 ? ~Mask{0} : bit(n) - 1; }

int popcount(Mask m) { return std::popcount(m); }

void require_masks(const Graph &g, const char *what)
{
    if (g.order() > 64)
        throw BudgetExceeded(std::string(what) + ": graphs above 64 vertices are not supported");
}

// Bron-Kerbosch with pivoting on the complement: cliques there are the
// independent sets here.
void bron_kerbosch(const std::vector<Mask> &non_adj, Mask r, Mask p, Mask x, std::vector<Mask> &out)
{
    if (p == 0 && x == 0) {
        out.push_back(r);
        return;
    }
    Mask px = p | x;
    int pivot = std::countr_zero(px);
    int best = -1;
    for (Mask it = px; it; it &= it - 1) {
        int u = std::countr_zero(it);
        int c = popcount(p & non_adj[u]);
        if (c > best) {
            best = c;
            pivot = u;
        }
    }
    for (Mask it = p & ~non_adj[pivot]; it; it &= it - 1) {
        int v = std::countr_zero(it);
        bron_kerbosch(non_adj, r | bit(v), p & non_adj[v], x & non_adj[v], out);
        p &= ~bit(v);
        x |= bit(v);
    }
}

std::vector<Mask> non_adjacency(const Graph &g)
{
    const int n = g.order();
    std::vector<Mask> out(n);
    for (int v = 0; v < n; ++v)
        out[v] = full_mask(n) & ~g.neighbour_mask(v) & ~bit(v);
    return out;
}

std::vector<VertexSet> mask_classes(const std::vector<Mask> &sets)
{
    std::vector<VertexSet> classes;
    for (Mask s : sets) {
        VertexSet cls;
        for (Mask it = s; it; it &= it - 1)
            cls.push_back(std::countr_zero(it));
        classes.push_back(std::move(cls));
    }
    return classes;
}

// Vertex limit for chromatic-type searches; small independence number lifts it.
void check_vertex_budget(const Graph &g, int limit, const OracleBudget &budget, const char *what)
{
    if (g.order() <= limit)
        return;
    if (g.order() <= budget.low_alpha_vertices && g.order() <= 64 && independence_number(g) <= 3)
        return;
    throw BudgetExceeded(std::string(what) + ": " + std::to_string(g.order()) + " vertices exceeds the budget of " +
                         std::to_string(limit));
}

Colouring greedy_colouring(const Graph &g)
{
    std::vector<int> col(g.order(), 0);
    for (int v = 0; v < g.order(); ++v) {
        std::vector<char> used(g.order() + 2, 0);
        for (int w : g.neighbours(v))
            used[col[w]] = 1;
        int c = 1;
        while (used[c])
            ++c;
        col[v] = c;
    }
    return Colouring(std::move(col));
}

} // namespace

OracleBudget OracleBudget::from_environment()
{
    OracleBudget b;
    if (const char *env = std::getenv("ORACLE_BUDGET")) {
        try {
            int v = std::stoi(env);
            if (v > 0)
                b.max_vertices = v;
        } catch (const std::exception &) {
        }
    }
    return b;
}

const char *to_string(SearchStatus s)
{
    switch (s) {
    case SearchStatus::Found:
        return "found";
    case SearchStatus::Absent:
        return "absent";
    case SearchStatus::Inconclusive:
        return "inconclusive";
    }
    return "?";
}

bool FallSpectrum::contains(int k) const { return std::binary_search(values.begin(), values.end(), k); }

std::vector<std::uint64_t> maximal_independent_sets(const Graph &g)
{
    require_masks(g, "maximal_independent_sets");
    std::vector<Mask> out;
    if (g.order() == 0)
        return out;
    bron_kerbosch(non_adjacency(g), 0, full_mask(g.order()), 0, out);
    std::sort(out.begin(), out.end());
    return out;
}

int independence_number(const Graph &g)
{
    int best = 0;
    for (Mask s : maximal_independent_sets(g))
        best = std::max(best, popcount(s));
    return best;
}

int clique_number(const Graph &g) { return independence_number(complement(g)); }

ColouringValue chromatic_number(const Graph &g, const OracleBudget &budget)
{
    check_vertex_budget(g, budget.max_vertices, budget, "chromatic_number");
    const int n = g.order();
    ColouringValue result;
    if (n == 0)
        return result;

    auto sets = maximal_independent_sets(g);
    int alpha = 0;
    for (Mask s : sets)
        alpha = std::max(alpha, popcount(s));

    Colouring greedy = greedy_colouring(g);
    int best = greedy.colour_count();
    std::vector<Mask> best_cover;
    std::vector<Mask> chosen;
    std::uint64_t nodes = 0;

    auto search = [&](auto &&self, Mask uncovered) -> void {
        if (++nodes > budget.node_limit)
            throw BudgetExceeded("chromatic_number: node limit reached");
        if (uncovered == 0) {
            best = static_cast<int>(chosen.size());
            best_cover = chosen;
            return;
        }
        int lower = static_cast<int>(chosen.size()) + (popcount(uncovered) + alpha - 1) / alpha;
        if (lower >= best)
            return;
        int v = std::countr_zero(uncovered);
        // Distinct restrictions to the uncovered part; dominated ones are skipped.
        std::vector<Mask> options;
        for (Mask s : sets)
            if (s & bit(v))
                options.push_back(s & uncovered);
        std::sort(options.begin(), options.end(), [](Mask a, Mask b) {
            return popcount(a) != popcount(b) ? popcount(a) > popcount(b) : a < b;
        });
        options.erase(std::unique(options.begin(), options.end()), options.end());
        std::vector<Mask> kept;
        for (Mask o : options) {
            bool dominated = std::any_of(kept.begin(), kept.end(), [o](Mask k) { return (o & k) == o; });
            if (!dominated)
                kept.push_back(o);
        }
        for (Mask o : kept) {
            chosen.push_back(o);
            self(self, uncovered & ~o);
            chosen.pop_back();
        }
    };
    search(search, full_mask(n));

    result.nodes = nodes;
    result.value = best;
    result.witness = best_cover.empty() ? greedy : Colouring::from_classes(n, mask_classes(best_cover));
    return result;
}

SearchResult<Colouring> b_colouring_with(const Graph &g, int k, const OracleBudget &budget)
{
    check_vertex_budget(g, budget.max_vertices, budget, "b_colouring_with");
    const int n = g.order();
    SearchResult<Colouring> result;
    if (k < 1 || k > n)
        return result;
    if (k > analyze_tight(g).m)
        return result;

    std::vector<int> col(n, 0);
    std::vector<int> high; // vertices that could be b-vertices
    for (int v = 0; v < n; ++v)
        if (g.degree(v) >= k - 1)
            high.push_back(v);

    // A colour still needs a b-vertex; candidates are uncoloured high-degree
    // vertices or coloured ones whose neighbourhood can still see k-1 colours.
    auto feasible = [&]() {
        std::vector<char> has_candidate(k + 1, 0);
        int free_high = 0;
        for (int v : high) {
            if (col[v] == 0) {
                ++free_high;
                continue;
            }
            std::uint64_t seen = 0;
            int open = 0;
            for (int w : g.neighbours(v)) {
                if (col[w] == 0)
                    ++open;
                else
                    seen |= bit(col[w] - 1);
            }
            if (popcount(seen) + open >= k - 1)
                has_candidate[col[v]] = 1;
        }
        int missing = 0;
        for (int c = 1; c <= k; ++c)
            missing += !has_candidate[c];
        return missing <= free_high;
    };

    std::uint64_t nodes = 0;
    bool aborted = false;
    auto search = [&](auto &&self, int v, int used) -> bool {
        if (++nodes > budget.node_limit) {
            aborted = true;
            return false;
        }
        if (n - v < k - used)
            return false;
        if (!feasible())
            return false;
        if (v == n) {
            Colouring c(col);
            return is_b_colouring(g, c);
        }
        std::uint64_t blocked = 0;
        for (int w : g.neighbours(v))
            if (col[w])
                blocked |= bit(col[w] - 1);
        int top = std::min(used + 1, k);
        for (int c = 1; c <= top; ++c) {
            if (blocked & bit(c - 1))
                continue;
            col[v] = c;
            if (self(self, v + 1, std::max(used, c)))
                return true;
            if (aborted)
                break;
        }
        col[v] = 0;
        return false;
    };
    if (k > 64)
        throw BudgetExceeded("b_colouring_with: more than 64 colours");
    bool ok = search(search, 0, 0);
    result.nodes = nodes;
    if (ok) {
        result.status = SearchStatus::Found;
        result.witness = Colouring(col);
    } else {
        result.status = aborted ? SearchStatus::Inconclusive : SearchStatus::Absent;
    }
    return result;
}

ColouringValue b_chromatic_number(const Graph &g, const OracleBudget &budget)
{
    check_vertex_budget(g, budget.max_vertices, budget, "b_chromatic_number");
    ColouringValue result;
    if (g.order() == 0)
        return result;
    for (int k = analyze_tight(g).m; k >= 1; --k) {
        auto r = b_colouring_with(g, k, budget);
        result.nodes += r.nodes;
        if (r.status == SearchStatus::Inconclusive)
            throw BudgetExceeded("b_chromatic_number: node limit reached at k=" + std::to_string(k));
        if (r.found()) {
            result.value = k;
            result.witness = *r.witness;
            return result;
        }
    }
    throw std::logic_error("b_chromatic_number: no b-colouring found, but k=chi always works");
}

SearchResult<Colouring> tight_b_exact(const Graph &g, const OracleBudget &budget)
{
    auto a = analyze_tight(g);
    if (!a.is_tight)
        throw PreconditionError("tight_b_exact: graph is not tight");
    const int n = g.order();
    const int m = a.m;
    if (m > 64)
        throw BudgetExceeded("tight_b_exact: more than 64 colours");

    std::vector<int> col(n, 0);
    std::vector<int> dense_index(n, -1);
    for (int i = 0; i < m; ++i) {
        col[a.dense[i]] = i + 1;
        dense_index[a.dense[i]] = i;
    }
    const Mask all = full_mask(m);
    const auto &vars = a.boundary;

    // For each boundary vertex, the dense vertices it is adjacent to.
    std::vector<VertexSet> dense_nbrs(n);
    for (int s : vars)
        for (int w : g.neighbours(s))
            if (dense_index[w] >= 0)
                dense_nbrs[s].push_back(w);

    // Colours already present in N[u] for u dense.
    auto seen_at = [&](int u) {
        Mask seen = bit(col[u] - 1);
        for (int w : g.neighbours(u))
            if (col[w])
                seen |= bit(col[w] - 1);
        return seen;
    };

    auto domain = [&](int s) {
        Mask d = all;
        for (int w : g.neighbours(s))
            if (col[w])
                d &= ~bit(col[w] - 1);
        for (int u : dense_nbrs[s])
            d &= ~seen_at(u);
        return d;
    };

    // Every dense vertex must be able to see its missing colours on distinct
    // uncoloured neighbours.
    auto hall_ok = [&](const std::vector<Mask> &dom) {
        for (int u : a.dense) {
            Mask missing = all & ~seen_at(u);
            std::vector<Mask> options;
            for (int w : g.neighbours(u))
                if (!col[w])
                    options.push_back(dom[w] & missing);
            if (static_cast<int>(options.size()) != popcount(missing))
                return false;
            std::vector<int> owner(m, -1);
            for (int i = 0; i < static_cast<int>(options.size()); ++i) {
                Mask visited = 0;
                auto augment = [&](auto &&self, int x) -> bool {
                    for (Mask it = options[x] & ~visited; it; it &= it - 1) {
                        int c = std::countr_zero(it);
                        visited |= bit(c);
                        if (owner[c] == -1 || self(self, owner[c])) {
                            owner[c] = x;
                            return true;
                        }
                    }
                    return false;
                };
                if (!augment(augment, i))
                    return false;
            }
        }
        return true;
    };

    SearchResult<Colouring> result;
    std::uint64_t nodes = 0;
    bool aborted = false;
    std::vector<Mask> dom(n, 0);

    auto search = [&](auto &&self) -> bool {
        if (++nodes > budget.node_limit) {
            aborted = true;
            return false;
        }
        int pick = -1;
        int best = 65;
        for (int s : vars) {
            if (col[s])
                continue;
            dom[s] = domain(s);
            int size = popcount(dom[s]);
            if (size == 0)
                return false;
            if (size < best) {
                best = size;
                pick = s;
            }
        }
        if (!hall_ok(dom))
            return false;
        if (pick == -1)
            return true;
        for (Mask it = dom[pick]; it; it &= it - 1) {
            col[pick] = std::countr_zero(it) + 1;
            if (self(self))
                return true;
            if (aborted)
                break;
        }
        col[pick] = 0;
        return false;
    };

    bool ok = search(search);
    result.nodes = nodes;
    if (!ok) {
        result.status = aborted ? SearchStatus::Inconclusive : SearchStatus::Absent;
        return result;
    }
    for (int v = 0; v < n; ++v) {
        if (col[v])
            continue;
        Mask used = 0;
        for (int w : g.neighbours(v))
            if (col[w])
                used |= bit(col[w] - 1);
        col[v] = std::countr_one(used) + 1;
    }
    result.status = SearchStatus::Found;
    result.witness = Colouring(col);
    return result;
}

FallSpectrum fall_spectrum(const Graph &g, const OracleBudget &budget)
{
    check_vertex_budget(g, budget.max_fall_vertices, budget, "fall_spectrum");
    const int n = g.order();
    FallSpectrum result;
    if (n == 0)
        return result;
    auto sets = maximal_independent_sets(g);
    std::vector<std::vector<Mask>> containing(n);
    for (Mask s : sets)
        for (Mask it = s; it; it &= it - 1)
            containing[std::countr_zero(it)].push_back(s);

    std::map<int, std::vector<Mask>> found;
    std::vector<Mask> chosen;
    std::uint64_t nodes = 0;
    auto search = [&](auto &&self, Mask uncovered) -> void {
        if (++nodes > budget.node_limit)
            throw BudgetExceeded("fall_spectrum: node limit reached");
        if (uncovered == 0) {
            found.try_emplace(static_cast<int>(chosen.size()), chosen);
            return;
        }
        int v = std::countr_zero(uncovered);
        for (Mask s : containing[v]) {
            if ((s & uncovered) != s)
                continue;
            chosen.push_back(s);
            self(self, uncovered & ~s);
            chosen.pop_back();
        }
    };
    search(search, full_mask(n));

    result.nodes = nodes;
    for (const auto &[k, cover] : found) {
        result.values.push_back(k);
        result.witnesses.push_back(Colouring::from_classes(n, mask_classes(cover)));
    }
    return result;
}

bool is_three_edge_colouring(const Graph &g, const EdgeColouring &ec)
{
    auto edges = g.edges();
    if (ec.size() != edges.size())
        return false;
    std::vector<int> seen(g.order(), 0);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        int c = ec[i];
        if (c < 1 || c > 3)
            return false;
        auto [u, v] = edges[i];
        if ((seen[u] | seen[v]) & (1 << c))
            return false;
        seen[u] |= 1 << c;
        seen[v] |= 1 << c;
    }
    return true;
}

SearchResult<EdgeColouring> three_edge_colouring(const Graph &g, const OracleBudget &budget)
{
    if (!is_regular(g, 3))
        throw PreconditionError("three_edge_colouring: graph is not cubic");
    auto edges = g.edges();
    const int e = static_cast<int>(edges.size());
    EdgeColouring ec(e, 0);
    std::vector<int> used(g.order(), 0);
    std::uint64_t nodes = 0;
    bool aborted = false;

    auto search = [&](auto &&self, int i) -> bool {
        if (++nodes > budget.node_limit) {
            aborted = true;
            return false;
        }
        if (i == e)
            return true;
        auto [u, v] = edges[i];
        // The first edge may take colour 1 without loss of generality.
        int top = i == 0 ? 1 : 3;
        for (int c = 1; c <= top; ++c) {
            if ((used[u] | used[v]) & (1 << c))
                continue;
            ec[i] = c;
            used[u] |= 1 << c;
            used[v] |= 1 << c;
            bool ok = self(self, i + 1);
            used[u] &= ~(1 << c);
            used[v] &= ~(1 << c);
            if (ok)
                return true;
            if (aborted)
                break;
        }
        ec[i] = 0;
        return false;
    };

    SearchResult<EdgeColouring> result;
    bool ok = search(search, 0);
    result.nodes = nodes;
    if (ok) {
        result.status = SearchStatus::Found;
        result.witness = ec;
    } else {
        result.status = aborted ? SearchStatus::Inconclusive : SearchStatus::Absent;
    }
    return result;
}

SearchResult<std::vector<bool>> one_in_three_sat(const Formula33 &f, const OracleBudget &budget)
{
    const int n = f.variable_count();
    std::vector<std::vector<int>> occurs(n);
    for (int j = 0; j < f.clause_count(); ++j)
        for (int x : f.clauses()[j])
            occurs[x].push_back(j);

    std::vector<int> trues(f.clause_count(), 0), open(f.clause_count(), 3);
    std::vector<bool> value(n, false);
    std::uint64_t nodes = 0;
    bool aborted = false;

    auto search = [&](auto &&self, int x) -> bool {
        if (++nodes > budget.node_limit) {
            aborted = true;
            return false;
        }
        if (x == n)
            return true;
        for (bool v : {true, false}) {
            bool ok = true;
            for (int j : occurs[x]) {
                --open[j];
                trues[j] += v;
                if (trues[j] > 1 || (trues[j] == 0 && open[j] == 0))
                    ok = false;
            }
            value[x] = v;
            if (ok && self(self, x + 1))
                return true;
            for (int j : occurs[x]) {
                ++open[j];
                trues[j] -= v;
            }
            if (aborted)
                return false;
        }
        return false;
    };

    SearchResult<std::vector<bool>> result;
    bool ok = search(search, 0);
    result.nodes = nodes;
    if (ok) {
        result.status = SearchStatus::Found;
        result.witness = value;
    } else {
        result.status = aborted ? SearchStatus::Inconclusive : SearchStatus::Absent;
    }
    return result;
}

int min_maximal_matching_size(const Graph &g, const OracleBudget &budget)
{
    check_vertex_budget(g, budget.max_vertices, budget, "min_maximal_matching_size");
    auto edges = g.edges();
    const int e = static_cast<int>(edges.size());
    std::vector<char> matched(g.order(), 0);
    int best = g.order() / 2;
    std::uint64_t nodes = 0;

    auto search = [&](auto &&self, int i, int size) -> void {
        if (++nodes > budget.node_limit)
            throw BudgetExceeded("min_maximal_matching_size: node limit reached");
        if (size >= best)
            return;
        if (i == e) {
            // Maximal iff every edge has a matched end.
            for (auto [u, v] : edges)
                if (!matched[u] && !matched[v])
                    return;
            best = size;
            return;
        }
        auto [u, v] = edges[i];
        if (!matched[u] && !matched[v]) {
            matched[u] = matched[v] = 1;
            self(self, i + 1, size + 1);
            matched[u] = matched[v] = 0;
        }
        self(self, i + 1, size);
    };
    search(search, 0, 0);
    // best starts at the trivial upper bound; a maximum matching attains it.
    return best;
}

} // namespace bfall
