#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "untangle/drawing.hpp"

namespace testing {

using untangle::CircularDrawing;
using untangle::Graph;
using untangle::VertexId;

// Drawing over the given names; vertex indices follow `names`, the cyclic
// order is `order`.
inline CircularDrawing make(const std::vector<std::string>& names, const std::vector<std::string>& order,
                            const std::vector<std::pair<std::string, std::string>>& edges) {
    Graph g = Graph::with_vertices(names);
    for (const auto& [a, b] : edges) g.add_edge(a, b);
    std::vector<VertexId> o;
    for (const auto& s : order) o.push_back(g.id(s));
    return CircularDrawing(std::move(g), std::move(o));
}

inline std::vector<std::string> numbered(int n) {
    std::vector<std::string> out;
    for (int i = 1; i <= n; ++i) out.push_back("v" + std::to_string(i));
    return out;
}

// C4 drawn as v1, v3, v2, v4.
inline CircularDrawing crossed_c4() {
    return make(numbered(4), {"v1", "v3", "v2", "v4"}, {{"v1", "v2"}, {"v2", "v3"}, {"v3", "v4"}, {"v4", "v1"}});
}

inline std::vector<std::string> names_of(const CircularDrawing& d, const std::vector<VertexId>& vs) {
    std::vector<std::string> out;
    for (VertexId v : vs) out.push_back(d.graph().name(v));
    return out;
}

// Longest strictly increasing subsequence length by trying every subset.
inline int brute_lis(const std::vector<int>& s) {
    const int n = static_cast<int>(s.size());
    int best = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        int last = 0, len = 0;
        bool ok = true, any = false;
        for (int i = 0; i < n && ok; ++i) {
            if (!(mask >> i & 1)) continue;
            if (any && s[i] <= last) ok = false;
            last = s[i];
            any = true;
            ++len;
        }
        if (ok) best = std::max(best, len);
    }
    return best;
}

inline int brute_lics(std::vector<int> s, bool increasing) {
    if (!increasing) {
        for (int& x : s) x = -x;
    }
    int best = 0;
    for (std::size_t r = 0; r < s.size(); ++r) {
        std::rotate(s.begin(), s.begin() + 1, s.end());
        best = std::max(best, brute_lis(s));
    }
    return best;
}

// Largest vertex subset on which both cyclic sequences agree up to rotation.
inline int brute_lccs(const std::vector<int>& a, const std::vector<int>& b) {
    const int n = static_cast<int>(a.size());
    int best = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        const int k = __builtin_popcount(mask);
        if (k <= best) continue;
        std::vector<int> ra, rb;
        for (int x : a) {
            if (mask >> x & 1) ra.push_back(x);
        }
        for (int x : b) {
            if (mask >> x & 1) rb.push_back(x);
        }
        if (untangle::same_cyclic(ra, rb)) best = k;
    }
    return best;
}

}  // namespace testing
