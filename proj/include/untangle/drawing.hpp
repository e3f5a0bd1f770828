#pragma once

#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "untangle/graph.hpp"

namespace untangle {

/// A graph together with a clockwise cyclic order of its vertices.
///
/// Only the cyclic order matters: two drawings compare equal when their
/// orders agree up to rotation. Reflection is significant.
class CircularDrawing {
public:
    CircularDrawing() : graph_(std::make_shared<const Graph>()) {}
    /// Throws InvalidArgument unless `order` is a permutation of the vertices.
    CircularDrawing(std::shared_ptr<const Graph> graph, std::vector<VertexId> order);
    CircularDrawing(Graph graph, std::vector<VertexId> order);
    /// Drawing whose order is the vertex numbering 0..n-1.
    static CircularDrawing identity(Graph graph);

    const Graph& graph() const { return *graph_; }
    const std::shared_ptr<const Graph>& graph_ptr() const { return graph_; }
    const std::vector<VertexId>& order() const { return order_; }
    int size() const { return static_cast<int>(order_.size()); }
    int position(VertexId v) const { return pos_[v]; }
    const std::vector<int>& positions() const { return pos_; }

    /// Vertex at cyclic offset `k` clockwise after `v`.
    VertexId after(VertexId v, int k = 1) const;

    /// Same graph, different order.
    CircularDrawing with_order(std::vector<VertexId> order) const { return {graph_, std::move(order)}; }
    /// Counterclockwise reading of the same drawing.
    CircularDrawing reflected() const;

    /// Equal graphs (by names) and equal orders up to rotation.
    bool operator==(const CircularDrawing& other) const;

private:
    std::shared_ptr<const Graph> graph_;
    std::vector<VertexId> order_;
    std::vector<int> pos_;
};

/// True iff the chords e and f cross for the given vertex positions.
inline bool chords_cross(const Edge& e, const Edge& f, std::span<const int> pos) {
    if (e.shares_endpoint(f)) return false;
    int lo = pos[e.a], hi = pos[e.b];
    if (lo > hi) std::swap(lo, hi);
    const bool c_in = lo < pos[f.a] && pos[f.a] < hi;
    const bool d_in = lo < pos[f.b] && pos[f.b] < hi;
    return c_in != d_in;
}

using CrossingPair = std::pair<Edge, Edge>;  // first < second

/// All pairs of crossing edges; each pair listed once with first < second, sorted.
std::vector<CrossingPair> crossings(const CircularDrawing& d);
std::vector<CrossingPair> crossings(const Graph& g, std::span<const VertexId> order);
bool is_crossing_free(const Graph& g, std::span<const VertexId> order);
inline bool is_planar(const CircularDrawing& d) { return is_crossing_free(d.graph(), d.order()); }
/// Edges crossing `e` in the drawing.
std::vector<Edge> edges_crossing(const CircularDrawing& d, Edge e);

/// Partition of V \ {u, v} by the chord u-v.
struct SidePartition {
    Edge edge;
    VertexId u = 0;                 ///< tail of the directed edge
    VertexId v = 0;                 ///< head of the directed edge
    std::vector<VertexId> left;     ///< strictly clockwise from v to u, in clockwise order
    std::vector<VertexId> right;    ///< strictly clockwise from u to v, in clockwise order
};

/// Throws UnknownEdge when `e` is not an edge of the drawing's graph.
SidePartition side_partition(const CircularDrawing& d, Edge e);

enum class DrawingKind { Planar, AlmostPlanar, NotAlmostPlanar };

struct AlmostPlanarClassification {
    DrawingKind kind = DrawingKind::Planar;
    std::vector<CrossingPair> crossing_pairs;
    /// Every edge involved in all crossings, sorted, each with its sides.
    std::vector<SidePartition> candidates;
};

AlmostPlanarClassification classify(const CircularDrawing& d);
const char* to_string(DrawingKind kind);

/// Reinsert `vertex` immediately clockwise of `anchor`.
struct VertexMove {
    VertexId vertex = 0;
    VertexId anchor = 0;
    bool operator==(const VertexMove&) const = default;
};

struct Untangling {
    std::vector<VertexMove> moves;

    /// Distinct moved vertices, sorted.
    std::vector<VertexId> moved_vertices() const;
    std::size_t moved_count() const { return moved_vertices().size(); }
};

/// Applies the moves left to right. Throws UnknownVertex on bad ids and
/// InvalidArgument when a vertex is moved after itself.
CircularDrawing apply(const CircularDrawing& d, const Untangling& u);

struct UntanglingReport {
    std::size_t moved_count = 0;
    bool fixed_set_ok = false;  ///< unmoved vertices keep their cyclic order
    bool planar_ok = false;     ///< the result is crossing-free
};

/// Never throws; an inapplicable untangling reports planar_ok = false.
UntanglingReport verify_untangling(const CircularDrawing& d, const Untangling& u);

/// Moves transforming `d` into the cyclic order `target`, moving exactly the
/// vertices with fixed[v] == false. Throws StructuralAssertionFailed when the
/// fixed vertices do not appear in the same cyclic order in both.
Untangling untangling_to(const CircularDrawing& d, std::span<const VertexId> target, const std::vector<bool>& fixed);
/// Same, with the fixed set taken as the complement of `moved`.
Untangling untangling_to_moving(const CircularDrawing& d, std::span<const VertexId> target,
                                std::span<const VertexId> moved);

/// Elements of `order` with keep[v], in order.
std::vector<VertexId> restrict_order(std::span<const VertexId> order, const std::vector<bool>& keep);
/// Equality of cyclic sequences up to rotation.
bool same_cyclic(std::span<const VertexId> a, std::span<const VertexId> b);
/// Rotation of `order` beginning with `first` (which must occur).
std::vector<VertexId> rotate_to(std::span<const VertexId> order, VertexId first);

}  // namespace untangle
