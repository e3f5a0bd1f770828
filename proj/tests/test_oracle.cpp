#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "untangle/error.hpp"
#include "untangle/generators.hpp"
#include "untangle/oracle.hpp"

using namespace untangle;
using namespace testing;

TEST_SUITE("oracle") {

TEST_CASE("planar order enumeration") {
    Graph c4 = Graph::numbered(4);
    for (int i = 0; i < 4; ++i) c4.add_edge(i, (i + 1) % 4);
    CHECK(enumerate_planar_orders(c4).size() == 2);

    Graph k4 = Graph::numbered(4);
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) k4.add_edge(i, j);
    }
    CHECK(enumerate_planar_orders(k4).empty());

    Graph tri = Graph::numbered(4);
    tri.add_edge(0, 1);
    tri.add_edge(1, 2);
    tri.add_edge(2, 0);
    tri.add_edge(0, 3);
    CHECK(enumerate_planar_orders(tri).size() == 4);

    CHECK_THROWS_AS(enumerate_planar_orders(Graph::numbered(12), 9), TooLarge);
}

TEST_CASE("backtracking agrees with the naive filter") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 40; ++t) {
        const Graph g = random_outerplanar_graph(2 + t % 6, rng, 0.5);
        const auto a = enumerate_planar_orders(g), b = enumerate_planar_orders_naive(g);
        CHECK(std::set<Order>(a.begin(), a.end()) == std::set<Order>(b.begin(), b.end()));
    }
}

TEST_CASE("oracle lccs against subsets") {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 200; ++t) {
        const int n = 1 + t % 8;
        Order a(n), b(n);
        std::iota(a.begin(), a.end(), 0);
        std::iota(b.begin(), b.end(), 0);
        std::shuffle(a.begin(), a.end(), rng);
        std::shuffle(b.begin(), b.end(), rng);
        CHECK(oracle_lccs(a, b) == brute_lccs(a, b));
    }
}

TEST_CASE("exact minimum untangling") {
    Graph c4 = Graph::numbered(4);
    for (int i = 0; i < 4; ++i) c4.add_edge(i, (i + 1) % 4);
    CHECK(exact_min_untangle(CircularDrawing::identity(c4)).moved_count == 0);
    CHECK(exact_min_untangle(gen_fig5(6)).moved_count == 2);
    const auto c = exact_min_untangle(crossed_c4());
    CHECK(c.moved_count == 1);
    CHECK(c.fixed.size() == 3);
    CHECK(exact_min_untangle_edge_fixed(crossed_c4(), Edge(0, 1)).moved_count == 1);
    CHECK(exact_min_untangle_edge_fixed(CircularDrawing::identity(c4), Edge(0, 1)).moved_count == 0);
}

TEST_CASE("keeping an edge fixed can cost more") {
    bool found = false;
    for (std::uint64_t seed = 1; seed <= 400 && !found; ++seed) {
        const auto d = gen_random({7, seed, RandomProfile::AlmostPlanar});
        const int free = exact_min_untangle(d).moved_count;
        for (const auto& sp : classify(d).candidates) {
            if (exact_min_untangle_edge_fixed(d, sp.edge).moved_count > free) found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("Dist-ICOR solver") {
    const DistIcorInstance fig3{{{2, 5}, {1, 8, 4}, {6, 7, 9, 3}}, 5};
    const auto w = exact_disticor(fig3);
    REQUIRE(w.has_value());
    CHECK(w->valid_for(fig3));
    CHECK(w->subsequence.size() == 5);
    auto m1 = fig3;
    m1.M = 1;
    CHECK(exact_disticor(m1).has_value());
    auto over = fig3;
    over.M = 10;
    CHECK_FALSE(exact_disticor(over).has_value());
    // C2, C1, C3 in forward order carries 1, 2, 5, 6, 7, 9.
    auto six = fig3;
    six.M = 6;
    CHECK(exact_disticor(six).has_value());
    auto seven = fig3;
    seven.M = 7;
    CHECK_FALSE(exact_disticor(seven).has_value());
}

TEST_CASE("3-Partition solver") {
    CHECK(exact_3partition({1, 7, {2, 2, 3}}).has_value());
    CHECK_FALSE(exact_3partition({1, 7, {2, 2, 2}}).has_value());
    const auto p = exact_3partition({2, 20, {6, 7, 7, 6, 6, 8}});
    REQUIRE(p.has_value());
    CHECK(p->size() == 2);
    CHECK_THROWS_AS(exact_3partition({5, 20, std::vector<long long>(15, 6)}), TooLarge);
}

}  // TEST_SUITE
