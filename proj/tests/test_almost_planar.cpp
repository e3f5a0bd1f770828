#include <doctest.h>

#include "helpers.hpp"
#include "untangle/almost_planar.hpp"
#include "untangle/blocks.hpp"
#include "untangle/error.hpp"
#include "untangle/generators.hpp"
#include "untangle/oracle.hpp"

using namespace untangle;
using namespace testing;

namespace {

std::size_t best_side(const CircularDrawing& d) {
    std::size_t best = d.size();
    for (const auto& sp : classify(d).candidates) best = std::min({best, sp.left.size(), sp.right.size()});
    return best;
}

bool keeps(const Untangling& u, Edge e) {
    const auto mv = u.moved_vertices();
    return !std::binary_search(mv.begin(), mv.end(), e.a) && !std::binary_search(mv.begin(), mv.end(), e.b);
}

}  // namespace

TEST_SUITE("almost-planar") {

TEST_CASE("planar input") {
    const auto d = gen_random({15, 3, RandomProfile::OuterplanarOrderPerturbed, 0});
    CHECK(one_side_untangle(d).moves.empty());
    CHECK(edge_fixed_untangle(d).moves.empty());
    CHECK(min_untangle(d).moves.empty());
}

TEST_CASE("not almost-planar") {
    const auto d = make(numbered(8), {"v1", "v3", "v2", "v4", "v5", "v7", "v6", "v8"},
                        {{"v1", "v2"}, {"v3", "v4"}, {"v5", "v6"}, {"v7", "v8"}});
    CHECK_THROWS_AS(one_side_untangle(d), NotAlmostPlanar);
    CHECK_THROWS_AS(edge_fixed_untangle(d), NotAlmostPlanar);
    CHECK_THROWS_AS(min_untangle(d), NotAlmostPlanar);
}

TEST_CASE("Fig. 5 family") {
    for (int n = 4; n <= 20; n += 2) {
        const auto d = gen_fig5(n);
        const auto m = min_untangle(d);
        CHECK(static_cast<int>(m.moved_count()) == n / 2 - 1);
        CHECK(verify_untangling(d, m).planar_ok);
        const auto o = one_side_untangle(d);
        CHECK(static_cast<int>(o.moved_count()) == n / 2 - 1);
        CHECK(verify_untangling(d, o).planar_ok);
        if (n <= 8) CHECK(exact_min_untangle(d).moved_count == n / 2 - 1);
    }
    CHECK_THROWS_AS(gen_fig5(5), InvalidArgument);
    CHECK_THROWS_AS(gen_fig5(2), InvalidArgument);
}

TEST_CASE("one side moves the smaller side") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const auto prof = std::array{RandomProfile::AlmostPlanar, RandomProfile::Case22,
                                     RandomProfile::Disconnected}[seed % 3];
        const auto d = gen_random({50, seed, prof});
        const auto u = one_side_untangle(d);
        const auto rep = verify_untangling(d, u);
        CHECK(rep.planar_ok);
        CHECK(rep.fixed_set_ok);
        CHECK(u.moved_count() == best_side(d));
        CHECK(static_cast<int>(u.moved_count()) <= 50 / 2 - 1);
    }
}

TEST_CASE("one side for a chosen direction") {
    const auto d = gen_fig5(6);
    const auto sp = classify(d).candidates.at(0);
    const auto a = one_side_untangle(d, sp.u, sp.v);
    const auto b = one_side_untangle(d, sp.v, sp.u);
    CHECK(a.moved_count() == sp.right.size());
    CHECK(b.moved_count() == sp.left.size());
    CHECK(verify_untangling(d, a).planar_ok);
    CHECK(verify_untangling(d, b).planar_ok);
}

TEST_CASE("single component moves keep the drawing almost-planar") {
    int tried = 0;
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        const auto d = gen_random({9, seed, RandomProfile::Case22});
        for (const auto& sp : classify(d).candidates) {
            for (auto [u, v] : {std::pair{sp.u, sp.v}, std::pair{sp.v, sp.u}}) {
                const Graph gp = d.graph().without_edge(Edge(u, v));
                if (gp.component_labels()[u] != gp.component_labels()[v]) continue;
                if (two_connected(block_decomposition(gp), u, v)) continue;
                const auto cc = classify_components(d, u, v);
                for (int k = 0; k < static_cast<int>(cc.components.size()); ++k) {
                    const auto& comp = cc.components[k];
                    if (comp.side != Side::UV) continue;
                    const bool inner = std::any_of(comp.vertices.begin(), comp.vertices.end(),
                                                   [&](VertexId x) { return x != u && x != v; });
                    if (!inner) continue;
                    const auto m = comp.connecting ? move_connecting(d, cc, k) : move_non_connecting(d, cc, k);
                    const auto after = apply(d, m);
                    CHECK(is_crossing_free(gp, after.order()));
                    for (VertexId x : m.moved_vertices())
                        CHECK(std::binary_search(comp.vertices.begin(), comp.vertices.end(), x));
                    if (!comp.connecting && comp.vertices.size() == 1) CHECK(m.moved_count() == 1);
                    ++tried;
                }
            }
        }
    }
    CHECK(tried > 100);
}

TEST_CASE("edge-fixed examples") {
    const auto c4 = crossed_c4();
    const auto u = edge_fixed_untangle(c4, Edge(0, 1));
    CHECK(u.moved_count() == 1);
    CHECK(keeps(u, Edge(0, 1)));
    CHECK_THROWS_AS(edge_fixed_untangle(c4, Edge(1, 2)), InvalidArgument);

    // Two chords straddling u-v, each in its own component.
    const auto two = make({"u", "v", "a1", "a2", "b1", "b2"}, {"u", "a1", "b1", "v", "b2", "a2"},
                          {{"u", "v"}, {"a1", "a2"}, {"b1", "b2"}});
    const Edge uv(0, 1);
    const auto w = edge_fixed_untangle(two, uv);
    CHECK(w.moved_count() == 2);
    CHECK(keeps(w, uv));
    CHECK(exact_min_untangle_edge_fixed(two, uv).moved_count == 2);
}

TEST_CASE("edge-fixed counterexample to the component-wise formula") {
    // The component holding u has one vertex on each side plus a vertex a
    // adjacent to both u and v; moving the single l1 suffices.
    const auto d = make({"u", "l1", "a", "v", "b", "r1"}, {"u", "l1", "a", "v", "b", "r1"},
                        {{"u", "v"}, {"u", "l1"}, {"u", "a"}, {"a", "v"}, {"a", "b"}, {"u", "r1"}});
    const auto cl = classify(d);
    REQUIRE(cl.kind == DrawingKind::AlmostPlanar);
    const Edge uv(0, 3);
    CHECK(edge_fixed_untangle(d, uv).moved_count() == 1);
    CHECK(exact_min_untangle_edge_fixed(d, uv).moved_count == 1);
    for (const auto& sp : cl.candidates) {
        const auto u = edge_fixed_untangle(d, sp.edge);
        CHECK(static_cast<int>(u.moved_count()) == exact_min_untangle_edge_fixed(d, sp.edge).moved_count);
    }
}

TEST_CASE("agreement with the exact oracle on small random drawings") {
    for (std::uint64_t seed = 1; seed <= 150; ++seed) {
        const auto prof = std::array{RandomProfile::AlmostPlanar, RandomProfile::Case22,
                                     RandomProfile::Disconnected}[seed % 3];
        const int n = 4 + static_cast<int>(seed % 5);
        CircularDrawing d;
        try {
            d = gen_random({n, seed, prof});
        } catch (const GenerationFailed&) {
            continue;
        }
        const auto orders = enumerate_planar_orders(d.graph(), 9);
        const auto m = min_untangle(d);
        CHECK(verify_untangling(d, m).planar_ok);
        CHECK(static_cast<int>(m.moved_count()) == exact_min_untangle(d, orders).moved_count);
        for (const auto& sp : classify(d).candidates) {
            const auto f = edge_fixed_untangle(d, sp.edge);
            CHECK(verify_untangling(d, f).planar_ok);
            CHECK(keeps(f, sp.edge));
            CHECK(static_cast<int>(f.moved_count()) == exact_min_untangle_edge_fixed(d, sp.edge, orders).moved_count);
        }
    }
}

TEST_CASE("unwrap targets leave the apex uncovered") {
    int seen = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const auto d = gen_random({9, seed, RandomProfile::Disconnected});
        for (const auto& sp : classify(d).candidates) {
            const auto gp = d.graph().without_edge(sp.edge);
            if (gp.component_labels()[sp.u] == gp.component_labels()[sp.v]) continue;
            for (VertexId apex : {sp.u, sp.v}) {
                const auto targets = unwrap_targets(d, sp.edge, apex);
                CHECK_FALSE(targets.empty());
                for (const auto& t : targets) {
                    std::vector<int> pos(d.size(), -1);
                    for (std::size_t i = 0; i < t.order.size(); ++i) pos[t.order[i]] = static_cast<int>(i);
                    REQUIRE(pos[apex] >= 0);
                    std::vector<bool> in(d.size(), false);
                    for (VertexId x : t.order) in[x] = true;
                    const Graph comp = gp.induced(in);
                    for (const Edge& f : comp.edges()) {
                        const int lo = std::min(pos[f.a], pos[f.b]), hi = std::max(pos[f.a], pos[f.b]);
                        CHECK_FALSE((lo < pos[apex] && pos[apex] < hi));
                    }
                    std::vector<VertexId> cyc = t.order;
                    for (VertexId x = 0; x < d.size(); ++x) {
                        if (!in[x]) cyc.push_back(x);
                    }
                    CHECK(is_crossing_free(comp, cyc));
                    ++seen;
                }
            }
        }
    }
    CHECK(seen > 0);
}

TEST_CASE("K4 with a crossing is rejected") {
    Graph g = Graph::numbered(4);
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) g.add_edge(i, j);
    }
    const CircularDrawing d(g, {0, 1, 2, 3});
    CHECK_THROWS_AS(min_untangle(d), NotOuterplanar);
}

}  // TEST_SUITE
