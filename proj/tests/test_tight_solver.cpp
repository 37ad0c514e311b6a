#include "support.hpp"

#include "bfall/oracles.hpp"
#include "bfall/tight_solver.hpp"

#include <doctest.h>

#include <random>

using namespace bfall;

namespace {

// m = 5: T = {0..4} is K5 minus {0-1, 2-3}; boundary a=5, b=6, c=7, d=8 hang
// off 0, 1, 2, 3.
Graph five_dense()
{
    std::vector<Edge> edges;
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v)
            if (!(u == 0 && v == 1) && !(u == 2 && v == 3))
                edges.push_back({u, v});
    edges.insert(edges.end(), {{0, 5}, {1, 6}, {2, 7}, {3, 8}});
    return Graph(9, edges);
}

std::vector<int> t_colours(int n)
{
    std::vector<int> col(n, 0);
    for (int i = 0; i < 5; ++i)
        col[i] = i + 1;
    return col;
}

bool extends(const Colouring &c, const std::vector<int> &partial)
{
    for (std::size_t v = 0; v < partial.size(); ++v)
        if (partial[v] && c[static_cast<int>(v)] != partial[v])
            return false;
    return true;
}

} // namespace

TEST_CASE("validate_partial accepts a partial b-colouring")
{
    Graph g = five_dense();
    REQUIRE(analyze_tight(g).is_tight);
    auto col = t_colours(9);
    col[5] = 2; // a takes the colour of its non-neighbour 1
    auto check = validate_partial(g, {5}, col);
    REQUIRE(check.clause == PartialClause::Valid);
    REQUIRE(check.partial);

    auto part = dense_partition(*check.partial);
    CHECK(part.t1 == VertexSet{4});
    CHECK(part.t_prime == VertexSet{1});
    CHECK(part.t2 == VertexSet{0, 2, 3});
    CHECK(part.s == VertexSet{6, 7, 8});

    auto ext = extend_partial(*check.partial);
    REQUIRE(ext);
    CHECK(is_tight_b_colouring(g, *ext.colouring));
    CHECK(extends(*ext.colouring, col));
    CHECK(support::class_condition(analyze_tight(g), {5}, *ext.colouring));
}

TEST_CASE("validate_partial reports the violated clause")
{
    Graph g = five_dense();
    auto col = t_colours(9);
    col[5] = 1; // a is adjacent to 0
    CHECK(validate_partial(g, {5}, col).clause == PartialClause::Properness);

    col[5] = 3; // 0 now sees colour 3 twice
    CHECK(validate_partial(g, {5}, col).clause == PartialClause::UniqueNeighbour);

    auto same = t_colours(9);
    same[1] = 1;
    CHECK(validate_partial(g, {}, same).clause == PartialClause::DenseDistinct);
    CHECK_THROWS_AS(validate_partial(g, {4}, t_colours(9)), PreconditionError);
    CHECK_THROWS_AS(validate_partial(pattern_graph("C4"), {}, {1, 2, 3, 0}), PreconditionError);
}

TEST_CASE("extend_partial with nothing left to match")
{
    Graph g = disjoint_union(pattern_graph("K3"), Graph(2));
    auto check = validate_partial(g, {}, {1, 2, 3, 0, 0});
    REQUIRE(check.partial);
    auto ext = extend_partial(*check.partial);
    REQUIRE(ext);
    CHECK(ext.colouring->values() == std::vector<int>{1, 2, 3, 1, 1});
}

TEST_CASE("extend_partial with unequal sides")
{
    // K5 minus 0-1; vertex 5 is adjacent to both 0 and 1.
    std::vector<Edge> edges;
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v)
            if (!(u == 0 && v == 1))
                edges.push_back({u, v});
    edges.insert(edges.end(), {{0, 5}, {1, 5}});
    Graph g(6, edges);
    REQUIRE(analyze_tight(g).is_tight);
    auto check = validate_partial(g, {}, {1, 2, 3, 4, 5, 0});
    REQUIRE(check.partial);
    auto part = dense_partition(*check.partial);
    CHECK(part.t2.size() == 2);
    CHECK(part.s.size() == 1);
    CHECK_FALSE(extend_partial(*check.partial));
    CHECK(tight_b_exact(g).status == SearchStatus::Absent);
}

TEST_CASE("small examples")
{
    for (int m = 1; m <= 6; ++m) {
        Graph k = pattern_graph("K" + std::to_string(m));
        auto r = tight_b_2p2p1_free(k);
        REQUIRE(r);
        CHECK(r.colouring->colour_count() == m);
        CHECK(tight_b_p3p1_free(k));
        CHECK(tight_b_clique_union(k));
    }
    auto foot = tight_b_p3p1_free(support::footnote_graph());
    CHECK_FALSE(foot);
    CHECK_FALSE(foot.reason.empty());
    CHECK_THROWS_AS(tight_b_2p2p1_free(pattern_graph("C4")), PreconditionError);
}

TEST_CASE("boundary vertex without witnesses is not forced")
{
    // P5 x-a-b-c-y: forcing x to share the colour of c would be wrong.
    Graph p5 = pattern_graph("P5");
    REQUIRE(analyze_tight(p5).is_tight);
    auto r = tight_b_2p2p1_free(p5);
    REQUIRE(r);
    CHECK(is_tight_b_colouring(p5, *r.colouring));
    CHECK(tight_b_exact(p5).found());
}

TEST_CASE("clique unions")
{
    for (auto [a, b] : std::vector<std::pair<int, int>>{{3, 3}, {4, 2}, {4, 1}, {5, 3}, {2, 2}}) {
        Graph g = disjoint_union(pattern_graph("K" + std::to_string(a)), pattern_graph("K" + std::to_string(b)));
        if (!analyze_tight(g).is_tight)
            continue;
        auto r = tight_b_clique_union(g);
        CHECK(r.colouring.has_value() == tight_b_exact(g).found());
        if (r)
            CHECK(is_tight_b_colouring(g, *r.colouring));
    }
}

namespace {

void check_against_oracle(const Graph &g)
{
    bool in_2p2p1 = is_h_free(g, pattern_graph("2P2+P1"));
    bool in_p3p1 = is_h_free(g, pattern_graph("P3+P1"));
    if (!in_2p2p1 && !in_p3p1)
        return;
    bool expected = tight_b_exact(g).found();
    if (in_2p2p1) {
        auto r = tight_b_2p2p1_free(g);
        CHECK(r.colouring.has_value() == expected);
        if (r) {
            CHECK(is_tight_b_colouring(g, *r.colouring));
            CHECK_FALSE(dense_structure_violation(g, *r.colouring));
        }
    }
    if (in_p3p1) {
        auto r = tight_b_p3p1_free(g);
        CHECK(r.colouring.has_value() == expected);
        if (r) {
            CHECK(is_tight_b_colouring(g, *r.colouring));
            CHECK_FALSE(dense_structure_violation(g, *r.colouring));
        }
    }
}

} // namespace

TEST_CASE("solvers agree with the oracle on small tight graphs")
{
    for (int n = 1; n <= 5; ++n)
        support::for_each_graph(n, [](const Graph &g) {
            if (analyze_tight(g).is_tight)
                check_against_oracle(g);
        });
    std::mt19937_64 rng(41);
    int tried = 0;
    while (tried < 150) {
        Graph g = support::random_p3p1_free(rng, std::uniform_int_distribution<int>(6, 8)(rng));
        if (!analyze_tight(g).is_tight)
            continue;
        ++tried;
        check_against_oracle(g);
    }
}

TEST_CASE("extension engine on small tight graphs")
{
    for (int n = 1; n <= 5; ++n)
        support::for_each_graph(n, [](const Graph &g) {
            auto a = analyze_tight(g);
            if (!a.is_tight)
                return;
            support::for_each_partial(g, [&](const VertexSet &sp, const std::vector<int> &col) {
                auto check = validate_partial(g, sp, col);
                if (!check.partial)
                    return;
                auto part = dense_partition(*check.partial);
                for (int v : part.t1)
                    CHECK_FALSE(std::binary_search(part.t_prime.begin(), part.t_prime.end(), v));
                auto ext = extend_partial(*check.partial);
                if (ext) {
                    CHECK(is_tight_b_colouring(g, *ext.colouring));
                    CHECK(extends(*ext.colouring, col));
                    CHECK(support::class_condition(a, sp, *ext.colouring));
                } else {
                    CHECK_FALSE(support::restricted_extension_exists(g, sp, col));
                }
            });
        });
}

TEST_CASE("dense structure holds for oracle witnesses")
{
    std::mt19937_64 rng(42);
    int seen = 0;
    while (seen < 100) {
        Graph g = support::random_mixed(rng, std::uniform_int_distribution<int>(4, 9)(rng));
        if (!analyze_tight(g).is_tight)
            continue;
        auto r = tight_b_exact(g);
        if (!r.found())
            continue;
        ++seen;
        auto v = dense_structure_violation(g, *r.witness);
        CHECK_MESSAGE(!v, v.value_or(""));
    }
}
