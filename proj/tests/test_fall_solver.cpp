#include "support.hpp"

#include "bfall/fall_solver.hpp"
#include "bfall/gadgets.hpp"

#include <doctest.h>

#include <random>

using namespace bfall;

TEST_CASE("fall examples")
{
    CHECK(fall_p3p1_free(pattern_graph("K3")).spectrum == std::vector<int>{3});
    CHECK(fall_p3p1_free(pattern_graph("paw")).spectrum.empty());
    CHECK(fall_p3p1_free(pattern_graph("3K2")).spectrum == std::vector<int>{2});
    CHECK(fall_p3p1_free(pattern_graph("C4")).spectrum == std::vector<int>{2});
    CHECK_THROWS_AS(fall_p3p1_free(pattern_graph("P4+P1")), PreconditionError);

    auto c3 = fall_uniqueness_report(pattern_graph("C3"));
    CHECK(c3.fall_unique);
    CHECK(c3.polynomial);
    auto paw = fall_uniqueness_report(pattern_graph("paw"));
    CHECK_FALSE(paw.fall_unique);
    CHECK(paw.spectrum.empty());

    auto k44 = fall_uniqueness_report(family("knn-pm", 4));
    CHECK_FALSE(k44.polynomial);
    CHECK(std::find(k44.spectrum.begin(), k44.spectrum.end(), 4) != k44.spectrum.end());
}

TEST_CASE("per co-component report")
{
    Graph g = complete_join(pattern_graph("C5"), pattern_graph("2K2"));
    auto r = fall_p3p1_free(g);
    REQUIRE(r.per_component.size() == 2);
    CHECK(r.spectrum.empty()); // C5 has odd order and no dominating vertex
    Graph h = complete_join(pattern_graph("C4"), pattern_graph("2K2"));
    auto s = fall_p3p1_free(h);
    CHECK(s.spectrum == std::vector<int>{4});
    REQUIRE(s.colouring);
    CHECK(is_fall_colouring(h, *s.colouring));
}

TEST_CASE("fall solver agrees with the oracle")
{
    for (int n = 1; n <= 5; ++n)
        support::for_each_graph(n, [](const Graph &g) {
            if (!is_h_free(g, pattern_graph("P3+P1")))
                return;
            auto r = fall_p3p1_free(g);
            CHECK(r.spectrum == fall_spectrum(g).values);
            CHECK(r.spectrum.size() <= 1);
            if (r.colouring)
                CHECK(is_fall_colouring(g, *r.colouring));
        });
    std::mt19937_64 rng(51);
    for (int t = 0; t < 200; ++t) {
        Graph g = support::random_p3p1_free(rng, std::uniform_int_distribution<int>(6, 10)(rng));
        auto r = fall_p3p1_free(g);
        CHECK(r.spectrum == fall_spectrum(g).values);
        CHECK(r.colouring.has_value() == !r.spectrum.empty());
        if (r.colouring) {
            CHECK(is_fall_colouring(g, *r.colouring));
            CHECK(r.colouring->colour_count() == r.spectrum.front());
        }
    }
}
