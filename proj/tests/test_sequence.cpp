#include <doctest.h>

#include <numeric>
#include <random>

#include "helpers.hpp"
#include "untangle/error.hpp"
#include "untangle/sequence.hpp"

using namespace untangle;
using namespace testing;

TEST_SUITE("sequence") {

TEST_CASE("lis examples") {
    const std::vector<int> s{2, 5, 1, 8, 4};
    CHECK(lis_length(s) == 3);
    const auto w = lis(s);
    CHECK(w.size() == 3);
    CHECK(std::is_sorted(w.begin(), w.end()));
    const std::vector<int> inc{1, 2, 3, 4, 5}, dec{5, 4, 3, 2, 1};
    CHECK(lis(inc) == inc);
    CHECK(lis_length(dec) == 1);
    CHECK(lis_length(std::vector<int>{}) == 0);
}

TEST_CASE("lis matches subset enumeration") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 300; ++t) {
        std::vector<int> s(1 + t % 12);
        for (int& x : s) x = static_cast<int>(rng() % 10);
        CHECK(static_cast<int>(lis_length(s)) == brute_lis(s));
        const auto idx = lis_indices(s);
        for (std::size_t i = 1; i < idx.size(); ++i) {
            CHECK(idx[i - 1] < idx[i]);
            CHECK(s[idx[i - 1]] < s[idx[i]]);
        }
    }
}

TEST_CASE("lics examples") {
    CHECK(lics_length(std::vector<int>{1, 2, 3, 4}) == 4);
    CHECK(lics_length(std::vector<int>{3, 1, 4, 2}) == static_cast<std::size_t>(brute_lics({3, 1, 4, 2}, true)));
    CHECK(lics_length(std::vector<int>{3, 1, 4, 2}) == 3);
    const auto w = lics(std::vector<int>{3, 1, 4, 2}, Direction::Decreasing);
    CHECK(w.size() == static_cast<std::size_t>(brute_lics({3, 1, 4, 2}, false)));
}

TEST_CASE("lics matches rotation and subset enumeration") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 300; ++t) {
        std::vector<int> s(1 + t % 10);
        std::iota(s.begin(), s.end(), 0);
        std::shuffle(s.begin(), s.end(), rng);
        CHECK(static_cast<int>(lics_length(s, Direction::Increasing)) == brute_lics(s, true));
        CHECK(static_cast<int>(lics_length(s, Direction::Decreasing)) == brute_lics(s, false));
        const auto w = lics(s, Direction::Increasing);
        CHECK(std::is_sorted(w.values.begin(), w.values.end()));
    }
}

TEST_CASE("every cyclic permutation of 6 ranks has a monotone run of 4") {
    std::vector<int> p{0, 1, 2, 3, 4, 5};
    do {
        CHECK((lics_length(p, Direction::Increasing) >= 4 || lics_length(p, Direction::Decreasing) >= 4));
    } while (std::next_permutation(p.begin() + 1, p.end()));
}

TEST_CASE("lccs examples and subset oracle") {
    const std::vector<VertexId> a{0, 1, 2, 3}, b{0, 2, 1, 3};
    CHECK(lccs(a, a).size() == 4);
    CHECK(lccs(a, b).size() == 3);
    const std::vector<VertexId> f{0, 1, 2, 3, 4}, r{4, 3, 2, 1, 0};
    CHECK(lccs(f, r).size() == 2);
    CHECK(brute_lccs({0, 1, 2, 3, 4}, {4, 3, 2, 1, 0}) == 2);
    std::mt19937_64 rng(9);
    for (int t = 0; t < 300; ++t) {
        const int n = 1 + t % 9;
        std::vector<VertexId> x(n), y(n);
        std::iota(x.begin(), x.end(), 0);
        std::iota(y.begin(), y.end(), 0);
        std::shuffle(x.begin(), x.end(), rng);
        std::shuffle(y.begin(), y.end(), rng);
        const auto w = lccs(x, y);
        CHECK(static_cast<int>(w.size()) == brute_lccs(x, y));
        std::vector<bool> keep(n, false);
        for (VertexId v : w) keep[v] = true;
        CHECK(same_cyclic(restrict_order(x, keep), restrict_order(y, keep)));
    }
}

TEST_CASE("lccs with required vertices") {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 200; ++t) {
        const int n = 2 + t % 8;
        std::vector<VertexId> x(n), y(n);
        std::iota(x.begin(), x.end(), 0);
        std::iota(y.begin(), y.end(), 0);
        std::shuffle(y.begin(), y.end(), rng);
        const std::vector<VertexId> req{0, 1};
        const auto w = lccs_containing(x, y, req);
        // Any two vertices agree cyclically, so the constraint is always satisfiable.
        REQUIRE(w.has_value());
        CHECK(std::binary_search(w->begin(), w->end(), 0));
        CHECK(std::binary_search(w->begin(), w->end(), 1));
        int best = 0;
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            if ((mask & 3u) != 3u) continue;
            std::vector<bool> keep(n);
            for (int i = 0; i < n; ++i) keep[i] = mask >> i & 1;
            if (same_cyclic(restrict_order(x, keep), restrict_order(y, keep)))
                best = std::max(best, __builtin_popcount(mask));
        }
        CHECK(static_cast<int>(w->size()) == best);
    }
}

TEST_CASE("Erdos-Szekeres tight sequences") {
    for (int s = 1; s <= 5; ++s) {
        for (int r = 1; r <= 5; ++r) {
            const auto p = es_tight_cyclic(s, r);
            CHECK(static_cast<int>(p.size()) == s * r + 1);
            CHECK(static_cast<int>(lics_length(p, Direction::Increasing)) <= s + 1);
            CHECK(static_cast<int>(lics_length(p, Direction::Decreasing)) <= r + 1);
            std::vector<int> sorted(p.begin(), p.end());
            std::sort(sorted.begin(), sorted.end());
            for (int i = 0; i < static_cast<int>(sorted.size()); ++i) CHECK(sorted[i] == i);
        }
    }
    CHECK_THROWS_AS(es_tight_cyclic(0, 2), InvalidArgument);
    CHECK(es_tight_cyclic(1, 1).size() == 2);
}

}  // TEST_SUITE
