#include <doctest.h>

#include "untangle/error.hpp"
#include "untangle/general.hpp"
#include "untangle/generators.hpp"
#include "untangle/oracle.hpp"

using namespace untangle;

TEST_SUITE("general") {

TEST_CASE("bound values") {
    CHECK(general_bound(4) == 1);
    CHECK(general_bound(6) == 2);
    CHECK(general_bound(8) == 4);
    CHECK(general_bound(11) == 6);
}

TEST_CASE("planar input needs no moves") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto d = gen_random({30, seed, RandomProfile::OuterplanarOrderPerturbed, 0});
        REQUIRE(is_planar(d));
        CHECK(untangle_general(d).moved_count() == 0);
    }
}

TEST_CASE("tight cycles reach the bound") {
    for (int n : {4, 6}) {
        const auto d = gen_tight_general(n);
        const auto u = untangle_general(d);
        CHECK(verify_untangling(d, u).planar_ok);
        CHECK(exact_min_untangle(d, 9).moved_count == general_bound(n));
        CHECK(static_cast<int>(u.moved_count()) == general_bound(n));
    }
    CHECK_THROWS_AS(gen_tight_general(3), InvalidArgument);
}

TEST_CASE("Fig. 5, n=8") {
    const auto d = gen_fig5(8);
    const auto u = untangle_general(d);
    CHECK(static_cast<int>(u.moved_count()) <= general_bound(8));
    CHECK(verify_untangling(d, u).planar_ok);
    CHECK(exact_min_untangle(d).moved_count == 3);
}

TEST_CASE("random drawings stay within the bound") {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const int n = 3 + static_cast<int>(seed % 60);
        const auto d = gen_random({n, seed, RandomProfile::OuterplanarOrderPerturbed, n});
        const auto u = untangle_general(d);
        const auto rep = verify_untangling(d, u);
        CHECK(rep.planar_ok);
        CHECK(rep.fixed_set_ok);
        CHECK(static_cast<int>(u.moved_count()) <= general_bound(n));
    }
}

TEST_CASE("non-outerplanar input") {
    Graph g = Graph::numbered(4);
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) g.add_edge(i, j);
    }
    CHECK_THROWS_AS(untangle_general(CircularDrawing::identity(g)), NotOuterplanar);
}

}  // TEST_SUITE
