#include "untangle/drawing.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "untangle/error.hpp"

namespace untangle {

CircularDrawing::CircularDrawing(std::shared_ptr<const Graph> graph, std::vector<VertexId> order)
    : graph_(std::move(graph)), order_(std::move(order)) {
    const int n = graph_->size();
    if (static_cast<int>(order_.size()) != n) throw InvalidArgument("order length differs from vertex count");
    pos_.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        const VertexId v = order_[i];
        if (v < 0 || v >= n || pos_[v] >= 0) throw InvalidArgument("order is not a permutation of the vertices");
        pos_[v] = i;
    }
}

CircularDrawing::CircularDrawing(Graph graph, std::vector<VertexId> order)
    : CircularDrawing(std::make_shared<const Graph>(std::move(graph)), std::move(order)) {}

CircularDrawing CircularDrawing::identity(Graph graph) {
    std::vector<VertexId> order(graph.size());
    std::iota(order.begin(), order.end(), 0);
    return {std::move(graph), std::move(order)};
}

VertexId CircularDrawing::after(VertexId v, int k) const {
    const int n = size();
    return order_[((pos_[v] + k) % n + n) % n];
}

CircularDrawing CircularDrawing::reflected() const {
    std::vector<VertexId> rev(order_.rbegin(), order_.rend());
    return with_order(std::move(rev));
}

bool CircularDrawing::operator==(const CircularDrawing& other) const {
    if (!graph_->same_as(*other.graph_)) return false;
    if (order_.empty()) return true;
    std::vector<VertexId> mapped;
    mapped.reserve(order_.size());
    for (VertexId v : other.order_) mapped.push_back(graph_->id(other.graph_->name(v)));
    return same_cyclic(order_, mapped);
}

std::vector<CrossingPair> crossings(const Graph& g, std::span<const VertexId> order) {
    std::vector<int> pos(g.size());
    for (int i = 0; i < static_cast<int>(order.size()); ++i) pos[order[i]] = i;
    const auto& edges = g.edges();
    std::vector<CrossingPair> out;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            if (chords_cross(edges[i], edges[j], pos)) out.emplace_back(edges[i], edges[j]);
        }
    }
    return out;
}

std::vector<CrossingPair> crossings(const CircularDrawing& d) { return crossings(d.graph(), d.order()); }

bool is_crossing_free(const Graph& g, std::span<const VertexId> order) {
    const int n = g.size();
    std::vector<int> pos(n);
    for (int i = 0; i < static_cast<int>(order.size()); ++i) pos[order[i]] = i;
    // Chords are crossing-free iff their position intervals are laminar.
    std::vector<std::vector<int>> starting(n);
    std::vector<int> ending(n, 0);
    for (const Edge& e : g.edges()) {
        const int a = std::min(pos[e.a], pos[e.b]), b = std::max(pos[e.a], pos[e.b]);
        starting[a].push_back(b);
        ++ending[b];
    }
    std::vector<int> open;
    for (int p = 0; p < n; ++p) {
        int closed = 0;
        while (!open.empty() && open.back() == p) {
            open.pop_back();
            ++closed;
        }
        if (closed != ending[p]) return false;
        auto& s = starting[p];
        std::sort(s.begin(), s.end(), std::greater<>());
        open.insert(open.end(), s.begin(), s.end());
    }
    return true;
}

std::vector<Edge> edges_crossing(const CircularDrawing& d, Edge e) {
    std::vector<Edge> out;
    for (const Edge& f : d.graph().edges()) {
        if (chords_cross(e, f, d.positions())) out.push_back(f);
    }
    return out;
}

SidePartition side_partition(const CircularDrawing& d, Edge e) {
    if (e.a < 0 || e.b >= d.graph().size() || !d.graph().has_edge(e.a, e.b))
        throw UnknownEdge("not an edge of the drawing");
    SidePartition s;
    s.edge = e;
    s.u = e.a;
    s.v = e.b;
    const int n = d.size();
    for (int k = 1; k < n; ++k) {
        VertexId x = d.after(s.u, k);
        if (x == s.v) {
            for (int j = k + 1; j < n; ++j) s.left.push_back(d.after(s.u, j));
            break;
        }
        s.right.push_back(x);
    }
    return s;
}

AlmostPlanarClassification classify(const CircularDrawing& d) {
    AlmostPlanarClassification c;
    c.crossing_pairs = crossings(d);
    if (c.crossing_pairs.empty()) {
        c.kind = DrawingKind::Planar;
        return c;
    }
    std::vector<Edge> common{c.crossing_pairs.front().first, c.crossing_pairs.front().second};
    for (const auto& [e, f] : c.crossing_pairs) {
        std::erase_if(common, [&](const Edge& x) { return x != e && x != f; });
    }
    std::sort(common.begin(), common.end());
    if (common.empty()) {
        c.kind = DrawingKind::NotAlmostPlanar;
        return c;
    }
    c.kind = DrawingKind::AlmostPlanar;
    for (const Edge& e : common) c.candidates.push_back(side_partition(d, e));
    return c;
}

const char* to_string(DrawingKind kind) {
    switch (kind) {
        case DrawingKind::Planar: return "planar";
        case DrawingKind::AlmostPlanar: return "almost-planar";
        case DrawingKind::NotAlmostPlanar: return "not-almost-planar";
    }
    return "?";
}

std::vector<VertexId> Untangling::moved_vertices() const {
    std::vector<VertexId> out;
    for (const auto& m : moves) out.push_back(m.vertex);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

CircularDrawing apply(const CircularDrawing& d, const Untangling& u) {
    const int n = d.size();
    std::vector<VertexId> order = d.order();
    for (const auto& m : u.moves) {
        if (m.vertex < 0 || m.vertex >= n) throw UnknownVertex("#" + std::to_string(m.vertex));
        if (m.anchor < 0 || m.anchor >= n) throw UnknownVertex("#" + std::to_string(m.anchor));
        if (m.vertex == m.anchor) throw InvalidArgument("vertex " + d.graph().name(m.vertex) + " moved after itself");
        order.erase(std::find(order.begin(), order.end(), m.vertex));
        auto at = std::find(order.begin(), order.end(), m.anchor);
        order.insert(at + 1, m.vertex);
    }
    return d.with_order(std::move(order));
}

UntanglingReport verify_untangling(const CircularDrawing& d, const Untangling& u) {
    UntanglingReport r;
    r.moved_count = u.moved_count();
    CircularDrawing result;
    try {
        result = apply(d, u);
    } catch (const Error&) {
        return r;
    }
    std::vector<bool> fixed(d.size(), true);
    for (VertexId v : u.moved_vertices()) fixed[v] = false;
    r.fixed_set_ok = same_cyclic(restrict_order(d.order(), fixed), restrict_order(result.order(), fixed));
    r.planar_ok = is_planar(result);
    return r;
}

Untangling untangling_to(const CircularDrawing& d, std::span<const VertexId> target, const std::vector<bool>& fixed) {
    Untangling u;
    if (target.size() != d.order().size()) throw StructuralAssertionFailed("target order has wrong length");
    const auto src = restrict_order(d.order(), fixed);
    const auto dst = restrict_order(target, fixed);
    if (!same_cyclic(src, dst)) throw StructuralAssertionFailed("fixed vertices change their cyclic order");
    if (src.empty()) {
        // Everything moves: keep target[0] in place and rebuild from there.
        if (target.empty()) return u;
        VertexId prev = target[0];
        for (std::size_t i = 1; i < target.size(); ++i) {
            u.moves.push_back({target[i], prev});
            prev = target[i];
        }
        return u;
    }
    const auto rotated = rotate_to(target, src.front());
    VertexId prev = rotated.front();
    for (std::size_t i = 1; i < rotated.size(); ++i) {
        const VertexId x = rotated[i];
        if (!fixed[x]) u.moves.push_back({x, prev});
        prev = x;
    }
    return u;
}

Untangling untangling_to_moving(const CircularDrawing& d, std::span<const VertexId> target,
                                std::span<const VertexId> moved) {
    std::vector<bool> fixed(d.size(), true);
    for (VertexId v : moved) fixed[v] = false;
    return untangling_to(d, target, fixed);
}

std::vector<VertexId> restrict_order(std::span<const VertexId> order, const std::vector<bool>& keep) {
    std::vector<VertexId> out;
    for (VertexId v : order) {
        if (keep[v]) out.push_back(v);
    }
    return out;
}

bool same_cyclic(std::span<const VertexId> a, std::span<const VertexId> b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    auto it = std::find(b.begin(), b.end(), a[0]);
    if (it == b.end()) return false;
    const std::size_t off = static_cast<std::size_t>(it - b.begin());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[(i + off) % b.size()]) return false;
    }
    return true;
}

std::vector<VertexId> rotate_to(std::span<const VertexId> order, VertexId first) {
    auto it = std::find(order.begin(), order.end(), first);
    std::vector<VertexId> out(it, order.end());
    out.insert(out.end(), order.begin(), it);
    return out;
}

}  // namespace untangle
