#include "bfall/matching.hpp"

#include <algorithm>
#include <queue>

namespace bfall {

namespace {

Matching from_mate(const std::vector<int> &mate)
{
    Matching m;
    for (int v = 0; v < static_cast<int>(mate.size()); ++v)
        if (mate[v] > v)
            m.edges.push_back({v, mate[v]});
    return m;
}

class Blossom {
public:
    explicit Blossom(const Graph &g)
        : g_(g), n_(g.order()), mate_(n_, -1), parent_(n_), base_(n_), used_(n_), in_blossom_(n_)
    {
    }

    std::vector<int> solve()
    {
        for (int v = 0; v < n_; ++v) {
            if (mate_[v] != -1)
                continue;
            int end = find_path(v);
            while (end != -1) {
                int pv = parent_[end];
                int next = mate_[pv];
                mate_[end] = pv;
                mate_[pv] = end;
                end = next;
            }
        }
        return mate_;
    }

private:
    int lowest_common_base(int a, int b) const
    {
        std::vector<char> seen(n_, 0);
        for (;;) {
            a = base_[a];
            seen[a] = 1;
            if (mate_[a] == -1)
                break;
            a = parent_[mate_[a]];
        }
        for (;;) {
            b = base_[b];
            if (seen[b])
                return b;
            b = parent_[mate_[b]];
        }
    }

    void mark_path(int v, int b, int child)
    {
        while (base_[v] != b) {
            in_blossom_[base_[v]] = in_blossom_[base_[mate_[v]]] = 1;
            parent_[v] = child;
            child = mate_[v];
            v = parent_[mate_[v]];
        }
    }

    int find_path(int root)
    {
        std::fill(used_.begin(), used_.end(), 0);
        std::fill(parent_.begin(), parent_.end(), -1);
        for (int i = 0; i < n_; ++i)
            base_[i] = i;
        used_[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : g_.neighbours(v)) {
                if (base_[v] == base_[to] || mate_[v] == to)
                    continue;
                if (to == root || (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
                    int b = lowest_common_base(v, to);
                    std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
                    mark_path(v, b, to);
                    mark_path(to, b, v);
                    for (int i = 0; i < n_; ++i)
                        if (in_blossom_[base_[i]]) {
                            base_[i] = b;
                            if (!used_[i]) {
                                used_[i] = 1;
                                q.push(i);
                            }
                        }
                } else if (parent_[to] == -1) {
                    parent_[to] = v;
                    if (mate_[to] == -1)
                        return to;
                    used_[mate_[to]] = 1;
                    q.push(mate_[to]);
                }
            }
        }
        return -1;
    }

    const Graph &g_;
    int n_;
    std::vector<int> mate_, parent_, base_;
    std::vector<char> used_, in_blossom_;
};

} // namespace

bool is_valid_matching(const Graph &g, const Matching &m)
{
    std::vector<char> covered(g.order(), 0);
    for (auto [u, v] : m.edges) {
        if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.adjacent(u, v))
            return false;
        if (covered[u] || covered[v])
            return false;
        covered[u] = covered[v] = 1;
    }
    return true;
}

Matching max_bipartite_matching(const Graph &g, std::span<const Vertex> left, std::span<const Vertex> right)
{
    const int n = g.order();
    std::vector<int> side(n, -1);
    for (int v : left) {
        if (v < 0 || v >= n || side[v] != -1)
            throw PreconditionError("left side is not a set of distinct vertices");
        side[v] = 0;
    }
    for (int v : right) {
        if (v < 0 || v >= n || side[v] != -1)
            throw PreconditionError("sides overlap or contain invalid vertices");
        side[v] = 1;
    }
    if (std::find(side.begin(), side.end(), -1) != side.end())
        throw PreconditionError("sides do not cover the vertex set");
    for (auto [u, v] : g.edges())
        if (side[u] == side[v])
            throw PreconditionError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") does not cross the bipartition");

    std::vector<int> mate(n, -1);
    std::vector<int> visit_stamp(n, -1);
    int stamp = 0;
    auto augment = [&](auto &&self, int u) -> bool {
        for (int w : g.neighbours(u)) {
            if (visit_stamp[w] == stamp)
                continue;
            visit_stamp[w] = stamp;
            if (mate[w] == -1 || self(self, mate[w])) {
                mate[w] = u;
                mate[u] = w;
                return true;
            }
        }
        return false;
    };
    for (int u : left) {
        ++stamp;
        augment(augment, u);
    }
    return from_mate(mate);
}

Matching maximum_matching(const Graph &g)
{
    return from_mate(Blossom(g).solve());
}

std::optional<Matching> perfect_matching(const Graph &g)
{
    if (g.order() % 2 != 0)
        return std::nullopt;
    auto m = maximum_matching(g);
    if (2 * m.size() != static_cast<std::size_t>(g.order()))
        return std::nullopt;
    return m;
}

} // namespace bfall
