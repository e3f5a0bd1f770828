#include "untangle/generators.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "untangle/blocks.hpp"
#include "untangle/error.hpp"

namespace untangle {

CircularDrawing gen_fig5(int n) {
    if (n < 4 || n % 2 != 0) throw InvalidArgument("gen_fig5: n must be an even number >= 4");
    Graph g = Graph::numbered(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    std::vector<VertexId> order;
    for (int k = 2; k <= n; k += 2) order.push_back(k - 1);
    for (int k = n - 1; k >= 1; k -= 2) order.push_back(k - 1);
    return CircularDrawing(std::move(g), std::move(order));
}

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Edges of a random triangulation of the polygon 0..n-1.
std::vector<Edge> triangulation(int n, std::mt19937_64& rng) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    if (n >= 3) edges.emplace_back(0, n - 1);
    std::vector<std::pair<int, int>> stack{{0, n - 1}};
    while (!stack.empty()) {
        const auto [i, j] = stack.back();
        stack.pop_back();
        if (j - i < 2) continue;
        const int k = uniform(rng, i + 1, j - 1);
        if (k - i >= 2) edges.emplace_back(i, k);
        if (j - k >= 2) edges.emplace_back(k, j);
        stack.emplace_back(i, k);
        stack.emplace_back(k, j);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

}  // namespace

Graph random_outerplanar_graph(int n, std::mt19937_64& rng, double extra) {
    if (n < 0) throw InvalidArgument("random_outerplanar_graph: negative size");
    auto edges = triangulation(n, rng);
    std::shuffle(edges.begin(), edges.end(), rng);
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    std::vector<VertexId> relabel(n);
    std::iota(relabel.begin(), relabel.end(), 0);
    std::shuffle(relabel.begin(), relabel.end(), rng);
    Graph g = Graph::numbered(n);
    std::bernoulli_distribution keep(extra);
    for (const Edge& e : edges) {
        const int a = find(e.a), b = find(e.b);
        if (a != b) {
            parent[a] = b;
            g.add_edge(relabel[e.a], relabel[e.b]);
        } else if (keep(rng)) {
            g.add_edge(relabel[e.a], relabel[e.b]);
        }
    }
    return g;
}

std::vector<VertexId> random_planar_order(const Graph& g, std::mt19937_64& rng) {
    const auto bd = block_decomposition(g);
    const int n = g.size();
    std::vector<bool> placed(n, false);
    // Sequence for the subtree hanging at x, excluding the block it came from.
    std::function<std::vector<VertexId>(VertexId, int)> expand = [&](VertexId x, int parent) {
        placed[x] = true;
        std::vector<int> kids;
        for (int bi : bd.blocks_of[x]) {
            if (bi != parent) kids.push_back(bi);
        }
        std::shuffle(kids.begin(), kids.end(), rng);
        std::vector<VertexId> before, after;
        for (int bi : kids) {
            auto cyc = bd.blocks[bi].cycle;
            if (uniform(rng, 0, 1) == 1) std::reverse(cyc.begin(), cyc.end());
            cyc = rotate_to(cyc, x);
            std::vector<VertexId> seq;
            for (std::size_t i = 1; i < cyc.size(); ++i) {
                const auto sub = expand(cyc[i], bi);
                seq.insert(seq.end(), sub.begin(), sub.end());
            }
            auto& side = uniform(rng, 0, 1) == 1 ? before : after;
            side.insert(side.end(), seq.begin(), seq.end());
        }
        std::vector<VertexId> out = std::move(before);
        out.push_back(x);
        out.insert(out.end(), after.begin(), after.end());
        return out;
    };
    std::vector<VertexId> roots(n);
    std::iota(roots.begin(), roots.end(), 0);
    std::shuffle(roots.begin(), roots.end(), rng);
    std::vector<VertexId> order;
    for (VertexId r : roots) {
        if (placed[r]) continue;
        const auto comp = expand(r, -1);
        // Nest the new component into a random gap.
        const int gap = order.empty() ? 0 : uniform(rng, 0, static_cast<int>(order.size()));
        order.insert(order.begin() + gap, comp.begin(), comp.end());
    }
    if (!order.empty()) std::rotate(order.begin(), order.begin() + uniform(rng, 0, n - 1), order.end());
    if (!is_crossing_free(g, order)) throw StructuralAssertionFailed("random planar order has crossings");
    return order;
}

namespace {

// Union of `parts` random outerplanar graphs on n vertices in total.
Graph random_forest_of(int n, int parts, std::mt19937_64& rng, double extra) {
    std::vector<int> sizes(parts, 1);
    for (int i = parts; i < n; ++i) ++sizes[uniform(rng, 0, parts - 1)];
    Graph g = Graph::numbered(n);
    std::vector<VertexId> ids(n);
    std::iota(ids.begin(), ids.end(), 0);
    std::shuffle(ids.begin(), ids.end(), rng);
    int at = 0;
    for (int s : sizes) {
        const Graph part = random_outerplanar_graph(s, rng, extra);
        for (const Edge& e : part.edges()) g.add_edge(ids[at + e.a], ids[at + e.b]);
        at += s;
    }
    return g;
}

std::optional<CircularDrawing> crossed_drawing(const Graph& g, Edge e, std::mt19937_64& rng) {
    const Graph gp = g.without_edge(e);
    auto order = random_planar_order(gp, rng);
    CircularDrawing d(g, std::move(order));
    if (edges_crossing(d, e).empty()) return std::nullopt;
    return d;
}

}  // namespace

CircularDrawing gen_random(const RandomOptions& opt) {
    std::mt19937_64 rng(opt.seed);
    const int n = opt.n;
    if (n < 0) throw InvalidArgument("gen_random: negative size");
    if (opt.profile == RandomProfile::OuterplanarOrderPerturbed) {
        const Graph g = random_outerplanar_graph(n, rng, opt.extra);
        auto order = random_planar_order(g, rng);
        for (int k = 0; k < opt.perturb && n >= 2; ++k) {
            const int i = uniform(rng, 0, n - 1);
            const VertexId x = order[i];
            order.erase(order.begin() + i);
            const int j = uniform(rng, 0, n - 2);
            order.insert(order.begin() + j + 1, x);
        }
        return CircularDrawing(g, std::move(order));
    }
    for (int attempt = 0; attempt < opt.max_retries; ++attempt) {
        if (opt.profile == RandomProfile::Disconnected) {
            if (n < 4) break;
            const int parts = uniform(rng, 2, std::max(2, std::min(4, n / 2)));
            Graph g = random_forest_of(n, parts, rng, opt.extra);
            const auto labels = g.component_labels();
            VertexId a = uniform(rng, 0, n - 1), b = uniform(rng, 0, n - 1);
            if (labels[a] == labels[b]) continue;
            g.add_edge(a, b);
            if (auto d = crossed_drawing(g, Edge(a, b), rng)) return *d;
            continue;
        }
        const Graph g = random_outerplanar_graph(n, rng, opt.extra);
        if (g.edge_count() == 0) break;
        const Edge e = g.edges()[uniform(rng, 0, static_cast<int>(g.edge_count()) - 1)];
        if (opt.profile == RandomProfile::Case22) {
            const Graph gp = g.without_edge(e);
            const auto labels = gp.component_labels();
            if (labels[e.a] != labels[e.b]) continue;
            if (two_connected(block_decomposition(gp), e.a, e.b)) continue;
        }
        if (auto d = crossed_drawing(g, e, rng)) return *d;
    }
    throw GenerationFailed(std::string("gen_random: no ") + to_string(opt.profile) + " instance with n=" +
                           std::to_string(n));
}

std::optional<RandomProfile> parse_profile(const std::string& s) {
    if (s == "outerplanar-order-perturbed") return RandomProfile::OuterplanarOrderPerturbed;
    if (s == "almost-planar") return RandomProfile::AlmostPlanar;
    if (s == "case-2-2") return RandomProfile::Case22;
    if (s == "disconnected") return RandomProfile::Disconnected;
    return std::nullopt;
}

const char* to_string(RandomProfile p) {
    switch (p) {
        case RandomProfile::OuterplanarOrderPerturbed: return "outerplanar-order-perturbed";
        case RandomProfile::AlmostPlanar: return "almost-planar";
        case RandomProfile::Case22: return "case-2-2";
        case RandomProfile::Disconnected: return "disconnected";
    }
    return "?";
}

}  // namespace untangle
