#pragma once

#include <optional>
#include <vector>

#include "untangle/drawing.hpp"

namespace untangle {

/// Which side of the directed chord u->v a vertex lies on.
enum class Side {
    UV,  ///< strictly clockwise from u to v
    VU,  ///< strictly clockwise from v to u
};

/// Decomposition of the component of G - uv containing u and v, when u and v
/// are connected but not 2-connected there.
struct ComponentClassification {
    VertexId u = 0, v = 0;
    VertexId f = 0, l = 0;  ///< first and last cut vertex separating u from v
    std::vector<bool> in_scope;      ///< per vertex: belongs to the component of u and v
    std::vector<Side> side;          ///< per vertex in scope (u and v take the side of f and l)
    std::vector<Edge> X;             ///< in-scope edges joining the two sides
    struct Component {
        std::vector<VertexId> vertices;  ///< sorted
        Side side = Side::UV;
        bool connecting = false;
        std::vector<int> adjacent;       ///< indices of components joined by an edge of X
    };
    std::vector<Component> components;
    std::vector<int> component_of;   ///< per vertex, -1 outside the scope
};

/// Throws InvalidArgument unless u, v are connected but not 2-connected in G - uv.
ComponentClassification classify_components(const CircularDrawing& d, VertexId u, VertexId v);

/// Moves the given non-connecting component lying strictly clockwise between
/// u and v to the other side, reversing it. Throws StructuralAssertionFailed.
Untangling move_non_connecting(const CircularDrawing& d, const ComponentClassification& cc, int component);
/// Same for a connecting component, by the two-phase merge-then-reverse procedure.
Untangling move_connecting(const CircularDrawing& d, const ComponentClassification& cc, int component);

/// Moves every vertex strictly clockwise from u to v to the other side of uv.
/// Requires every crossing to lie on uv. Throws StructuralAssertionFailed.
Untangling one_side_untangle(const CircularDrawing& d, VertexId u, VertexId v);
/// Over all candidate edges and both sides, the cheapest such untangling
/// (ties: lexicographically smallest moved set). Throws NotAlmostPlanar.
Untangling one_side_untangle(const CircularDrawing& d);

/// Minimum untangling that never moves u or v, for a candidate edge uv.
/// Throws NotAlmostPlanar, UnknownEdge, NotOuterplanar.
Untangling edge_fixed_untangle(const CircularDrawing& d, Edge e);
/// Best edge-fixed untangling over all candidate edges.
Untangling edge_fixed_untangle(const CircularDrawing& d);

/// A canonical final order of C_v (or C_u) that leaves the apex uncovered.
struct UnwrapTarget {
    VertexId apex = 0;
    std::vector<VertexId> block;   ///< vertices of the chosen block containing the apex
    bool reversed = false;
    std::vector<VertexId> order;   ///< linear order of the component
};

/// All canonical unwrappings of `apex` in its component of G - uv (deduplicated).
/// Throws StructuralAssertionFailed if no block qualifies.
std::vector<UnwrapTarget> unwrap_targets(const CircularDrawing& d, Edge e, VertexId apex);

/// Minimum untangling with respect to the candidate edge e.
Untangling min_untangle(const CircularDrawing& d, Edge e);
/// Minimum untangling. Throws NotAlmostPlanar, NotOuterplanar.
Untangling min_untangle(const CircularDrawing& d);

/// Upper limit on canonical targets tried per candidate edge before the
/// enumeration keeps only attachment cuts next to the block vertex.
inline constexpr std::size_t kMaxCanonicalTargets = std::size_t{1} << 16;

}  // namespace untangle
