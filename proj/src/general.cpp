#include "untangle/general.hpp"

#include <algorithm>

#include "untangle/blocks.hpp"
#include "untangle/error.hpp"
#include "untangle/sequence.hpp"

namespace untangle {

namespace {

int isqrt(int x) {
    int k = 0;
    while ((k + 1) * (k + 1) <= x) ++k;
    return k;
}

}  // namespace

int general_bound(int n) { return n < 3 ? 0 : n - isqrt(n - 2) - 2; }

Untangling untangle_general(const CircularDrawing& d) {
    if (is_planar(d)) return {};
    const auto planar = planar_circular_order(d.graph_ptr());
    const int n = d.size();
    std::vector<int> seq(n);
    for (int i = 0; i < n; ++i) seq[i] = planar.position(d.order()[i]);

    const auto inc = lics(seq, Direction::Increasing);
    const auto dec = lics(seq, Direction::Decreasing);
    const bool use_inc = inc.size() >= dec.size();
    const auto& w = use_inc ? inc : dec;

    std::vector<VertexId> target = planar.order();
    if (!use_inc) std::reverse(target.begin(), target.end());
    std::vector<bool> fixed(n, false);
    for (std::size_t i : w.indices) fixed[d.order()[i]] = true;
    return untangling_to(d, target, fixed);
}

CircularDrawing gen_tight_general(int n) {
    if (n < 4) throw InvalidArgument("gen_tight_general: n must be at least 4");
    const int k = isqrt(n - 2);
    // Deleting entries never lengthens a monotone cyclic subsequence, so any
    // prefix-by-value of a tight sequence for (k+1, k+1) stays within k+2.
    std::vector<int> perm;
    for (int x : es_tight_cyclic(k + 1, k + 1)) {
        if (x < n) perm.push_back(x);
    }
    if (static_cast<int>(perm.size()) != n ||
        std::max(lics_length(perm, Direction::Increasing), lics_length(perm, Direction::Decreasing)) >
            static_cast<std::size_t>(k + 2))
        throw Unsupported("gen_tight_general: no suitable permutation for n=" + std::to_string(n));

    Graph g = Graph::numbered(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return CircularDrawing(std::move(g), perm);
}

}  // namespace untangle
