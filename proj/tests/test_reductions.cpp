#include <doctest.h>

#include <set>

#include "untangle/error.hpp"
#include "untangle/oracle.hpp"
#include "untangle/reductions.hpp"

using namespace untangle;

TEST_SUITE("reductions") {

TEST_CASE("chunk sizes follow the closed form") {
    const auto red = reduce_3p_to_disticor({1, 7, {2, 2, 3}});
    const auto& n = red.normalized;
    REQUIRE(red.instance.chunks.size() == 3);
    for (int i = 0; i < 3; ++i) {
        const auto& info = red.info[i];
        CHECK(info.starts.size() == static_cast<std::size_t>(3 * n.m * (n.K - n.a[i] + 1)));
        CHECK(red.instance.chunks[i].size() == static_cast<std::size_t>((n.a[i] + red.X) * info.starts.size()));
    }
    CHECK(red.cell == n.K + 3 * red.X);
    CHECK(red.instance.M == n.m * red.cell);
}

TEST_CASE("ranks are a bijection onto 1..L") {
    const auto red = reduce_3p_to_disticor({2, 20, {6, 7, 7, 6, 6, 8}});
    CHECK(red.instance.distinct());
    std::set<int> ranks;
    for (const auto& c : red.instance.chunks) ranks.insert(c.begin(), c.end());
    CHECK(static_cast<int>(ranks.size()) == red.instance.total_length());
    CHECK(*ranks.begin() == 1);
    CHECK(*ranks.rbegin() == red.instance.total_length());
}

TEST_CASE("chunk properties hold and catch corruption") {
    auto red = reduce_3p_to_disticor({1, 7, {2, 2, 3}});
    CHECK(chunk_property_check(red).lines.size() == 5);
    auto& c = red.instance.chunks[0];
    std::swap(c[0], c[c.size() - 1]);
    CHECK_THROWS_AS(chunk_property_check(red), PropertyViolation);
}

TEST_CASE("forward witness, m=1") {
    const auto red = reduce_3p_to_disticor({1, 7, {2, 2, 3}});
    const auto w = witness_3p_to_disticor(red, {{0, 1, 2}});
    CHECK(w.valid_for(red.instance));
    REQUIRE(static_cast<long long>(w.subsequence.size()) == red.cell);
    std::vector<long long> proj;
    for (const auto& [chunk, pos] : w.picks) proj.push_back(red.info[chunk].projection[pos]);
    for (std::size_t i = 0; i < proj.size(); ++i) CHECK(proj[i] == static_cast<long long>(i + 1));
}

TEST_CASE("forward witness, m=2") {
    const ThreePartitionInstance inst{2, 20, {6, 7, 7, 6, 6, 8}};
    const auto red = reduce_3p_to_disticor(inst);
    const auto part = exact_3partition(inst);
    REQUIRE(part.has_value());
    const auto w = witness_3p_to_disticor(red, *part);
    CHECK(w.valid_for(red.instance));
    CHECK(static_cast<long long>(w.subsequence.size()) == 2 * red.cell);
    CHECK_THROWS_AS(witness_3p_to_disticor(red, {{0, 1, 3}, {2, 4, 5}}), NotAWitness);
}

TEST_CASE("invalid 3-Partition instances") {
    CHECK_THROWS_AS(reduce_3p_to_disticor({1, 7, {2, 2}}), InvalidInstance);
    CHECK_THROWS_AS(reduce_3p_to_disticor({1, 8, {1, 3, 4}}), InvalidInstance);
}

TEST_CASE("Dist-ICOR to circular untangling, Fig. 3") {
    const DistIcorInstance fig3{{{2, 5}, {1, 8, 4}, {6, 7, 9, 3}}, 5};
    const auto cu = reduce_disticor_to_cu(fig3);
    const auto& g = cu.drawing.graph();
    CHECK(g.size() == 10);
    CHECK(cu.K == 4);
    for (int i = 0; i < 10; ++i) CHECK(cu.drawing.order()[i] == g.id("v" + std::to_string(i)));
    const std::vector<std::vector<std::string>> cycles{{"v0", "v2", "v5"}, {"v0", "v1", "v8", "v4"},
                                                       {"v0", "v6", "v7", "v9", "v3"}};
    std::size_t edges = 0;
    for (const auto& c : cycles) {
        for (std::size_t i = 0; i < c.size(); ++i) CHECK(g.has_edge(g.id(c[i]), g.id(c[(i + 1) % c.size()])));
        edges += c.size();
    }
    CHECK(g.edge_count() == edges);
}

TEST_CASE("increasing single chunk gives a planar drawing") {
    const auto cu = reduce_disticor_to_cu({{{1, 2, 3, 4, 5}}, 5});
    CHECK(cu.K == 0);
    CHECK(is_planar(cu.drawing));
    CHECK_THROWS_AS(reduce_disticor_to_cu({{{1, 2}, {2, 3}}, 1}), NotDistinct);
}

}  // TEST_SUITE
