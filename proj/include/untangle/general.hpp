#pragma once

#include "untangle/drawing.hpp"

namespace untangle {

/// Keeps a longest monotone cyclic subsequence (relative to a planar order of
/// the graph) fixed and moves everything else into that planar order.
/// Moves at most n - floor(sqrt(n-2)) - 2 vertices for n >= 3. Throws NotOuterplanar.
Untangling untangle_general(const CircularDrawing& d);

/// n - floor(sqrt(n-2)) - 2, the worst-case bound for n >= 3 (0 below).
int general_bound(int n);

/// A drawing of the n-cycle v1..vn whose shifting number equals general_bound(n).
/// Throws InvalidArgument for n < 4, Unsupported if no permutation is found.
CircularDrawing gen_tight_general(int n);

}  // namespace untangle
