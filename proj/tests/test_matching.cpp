#include "support.hpp"

#include "bfall/gadgets.hpp"
#include "bfall/matching.hpp"

#include <doctest.h>

#include <random>

using namespace bfall;

namespace {

int brute_matching(const Graph &g)
{
    auto edges = g.edges();
    int best = 0;
    std::vector<char> used(g.order(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int size) {
        best = std::max(best, size);
        if (size + static_cast<int>(edges.size() - i) <= best)
            return;
        for (; i < edges.size(); ++i) {
            auto [u, v] = edges[i];
            if (used[u] || used[v])
                continue;
            used[u] = used[v] = 1;
            rec(i + 1, size + 1);
            used[u] = used[v] = 0;
        }
    };
    rec(0, 0);
    return best;
}

} // namespace

TEST_CASE("small matchings")
{
    CHECK(maximum_matching(pattern_graph("C5")).size() == 2);
    CHECK(maximum_matching(pattern_graph("P4")).size() == 2);
    CHECK(maximum_matching(pattern_graph("K1,3")).size() == 1);
    CHECK(maximum_matching(Graph()).size() == 0);
    CHECK_FALSE(perfect_matching(pattern_graph("C5")));
    CHECK(perfect_matching(pattern_graph("C6")));
    CHECK_FALSE(perfect_matching(pattern_graph("claw")));
}

TEST_CASE("blossom handles odd cycles")
{
    // Two triangles joined through a path; needs a blossom to reach the optimum.
    Graph g(8, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 5}});
    auto m = maximum_matching(g);
    CHECK(is_valid_matching(g, m));
    CHECK(m.size() == 4);
}

TEST_CASE("bipartite matcher")
{
    Graph k33 = family("knn", 3);
    std::vector<Vertex> left{0, 1, 2}, right{3, 4, 5};
    auto m = max_bipartite_matching(k33, left, right);
    CHECK(m.size() == 3);
    CHECK(is_valid_matching(k33, m));

    std::vector<Vertex> bad_left{0, 3}, bad_right{1, 2, 4, 5};
    CHECK_THROWS_AS(max_bipartite_matching(k33, bad_left, bad_right), PreconditionError);
}

TEST_CASE("matchers agree with brute force")
{
    std::mt19937_64 rng(21);
    for (int t = 0; t < 400; ++t) {
        int n = std::uniform_int_distribution<int>(0, 9)(rng);
        Graph g = support::random_mixed(rng, n);
        auto m = maximum_matching(g);
        CHECK(is_valid_matching(g, m));
        CHECK(static_cast<int>(m.size()) == brute_matching(g));
        if (auto side = bipartition(g)) {
            std::vector<Vertex> l, r;
            for (int v = 0; v < n; ++v)
                ((*side)[v] == 0 ? l : r).push_back(v);
            auto b = max_bipartite_matching(g, l, r);
            CHECK(is_valid_matching(g, b));
            CHECK(b.size() == m.size());
        }
    }
}
