#include "untangle/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "untangle/error.hpp"
#include "untangle/sequence.hpp"

namespace untangle {

namespace {

void check_budget(const Graph& g, int nmax) {
    if (g.size() > nmax)
        throw TooLarge("oracle: " + std::to_string(g.size()) + " vertices exceed the limit of " +
                       std::to_string(nmax));
}

}  // namespace

std::vector<Order> enumerate_planar_orders(const Graph& g, int nmax) {
    check_budget(g, nmax);
    const int n = g.size();
    std::vector<Order> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    Order cur{0};
    std::vector<int> pos(n, -1);
    pos[0] = 0;
    std::vector<Edge> placed_edges;
    std::function<void()> rec = [&]() {
        if (static_cast<int>(cur.size()) == n) {
            out.push_back(cur);
            return;
        }
        for (VertexId x = 1; x < n; ++x) {
            if (pos[x] >= 0) continue;
            pos[x] = static_cast<int>(cur.size());
            // Edges from x back to already placed vertices must not cross placed edges.
            const std::size_t before = placed_edges.size();
            bool ok = true;
            for (VertexId y : g.neighbors(x)) {
                if (pos[y] < 0) continue;
                const Edge e(x, y);
                for (std::size_t i = 0; i < before && ok; ++i) ok = !chords_cross(e, placed_edges[i], pos);
                if (!ok) break;
                placed_edges.push_back(e);
            }
            if (ok) {
                cur.push_back(x);
                rec();
                cur.pop_back();
            }
            placed_edges.resize(before);
            pos[x] = -1;
        }
    };
    rec();
    return out;
}

std::vector<Order> enumerate_planar_orders_naive(const Graph& g, int nmax) {
    check_budget(g, nmax);
    const int n = g.size();
    std::vector<Order> out;
    Order p(n);
    std::iota(p.begin(), p.end(), 0);
    if (n == 0) {
        out.push_back(p);
        return out;
    }
    do {
        if (is_crossing_free(g, p)) out.push_back(p);
    } while (std::next_permutation(p.begin() + 1, p.end()));
    return out;
}

namespace {

// Linear LCS of two sequences of distinct vertices by the textbook DP.
int lcs(const Order& x, const Order& y, std::vector<VertexId>* out) {
    const std::size_t a = x.size(), b = y.size();
    std::vector<std::vector<int>> t(a + 1, std::vector<int>(b + 1, 0));
    for (std::size_t i = a; i-- > 0;)
        for (std::size_t j = b; j-- > 0;)
            t[i][j] = x[i] == y[j] ? t[i + 1][j + 1] + 1 : std::max(t[i + 1][j], t[i][j + 1]);
    if (out) {
        std::size_t i = 0, j = 0;
        while (i < a && j < b) {
            if (x[i] == y[j]) {
                out->push_back(x[i]);
                ++i, ++j;
            } else if (t[i + 1][j] >= t[i][j + 1]) {
                ++i;
            } else {
                ++j;
            }
        }
    }
    return t[0][0];
}

Order rotated(const Order& o, VertexId first) {
    Order r(o.size());
    const auto k = static_cast<std::size_t>(std::find(o.begin(), o.end(), first) - o.begin());
    for (std::size_t i = 0; i < o.size(); ++i) r[i] = o[(k + i) % o.size()];
    return r;
}

}  // namespace

int oracle_lccs(const Order& a, const Order& b, std::vector<VertexId>* witness, const std::vector<VertexId>& must) {
    if (a.empty()) return 0;
    int best = -1;
    std::vector<VertexId> best_w;
    // Any nonempty witness contains some first element x; read both from x.
    for (VertexId x : a) {
        if (!must.empty() && x != must[0]) continue;
        const Order ra = rotated(a, x), rb = rotated(b, x);
        std::vector<VertexId> w;
        int len;
        if (must.size() >= 2) {
            const VertexId y = must[1];
            const auto pa = static_cast<std::size_t>(std::find(ra.begin(), ra.end(), y) - ra.begin());
            const auto pb = static_cast<std::size_t>(std::find(rb.begin(), rb.end(), y) - rb.begin());
            const Order xa(ra.begin() + 1, ra.begin() + pa), xb(rb.begin() + 1, rb.begin() + pb);
            const Order za(ra.begin() + pa + 1, ra.end()), zb(rb.begin() + pb + 1, rb.end());
            w.push_back(x);
            len = 2 + lcs(xa, xb, &w);
            w.push_back(y);
            len += lcs(za, zb, &w);
        } else {
            const Order ta(ra.begin() + 1, ra.end()), tb(rb.begin() + 1, rb.end());
            w.push_back(x);
            len = 1 + lcs(ta, tb, &w);
        }
        if (len > best) {
            best = len;
            best_w = std::move(w);
        }
    }
    if (witness) {
        std::sort(best_w.begin(), best_w.end());
        *witness = std::move(best_w);
    }
    return best;
}

namespace {

ExactUntangling best_over(const CircularDrawing& d, const std::vector<Order>& orders,
                          const std::vector<VertexId>& must) {
    if (orders.empty()) throw NotOuterplanar();
    ExactUntangling best;
    best.moved_count = d.size() + 1;
    for (const Order& o : orders) {
        std::vector<VertexId> w;
        const int keep = oracle_lccs(d.order(), o, &w, must);
        if (d.size() - keep < best.moved_count) {
            best.moved_count = d.size() - keep;
            best.target = o;
            best.fixed = std::move(w);
        }
    }
    return best;
}

}  // namespace

ExactUntangling exact_min_untangle(const CircularDrawing& d, int nmax) {
    return exact_min_untangle(d, enumerate_planar_orders(d.graph(), nmax));
}

ExactUntangling exact_min_untangle(const CircularDrawing& d, const std::vector<Order>& planar_orders) {
    return best_over(d, planar_orders, {});
}

ExactUntangling exact_min_untangle_edge_fixed(const CircularDrawing& d, Edge e, int nmax) {
    return exact_min_untangle_edge_fixed(d, e, enumerate_planar_orders(d.graph(), nmax));
}

ExactUntangling exact_min_untangle_edge_fixed(const CircularDrawing& d, Edge e,
                                              const std::vector<Order>& planar_orders) {
    if (!d.graph().has_edge(e.a, e.b)) throw UnknownEdge("edge not in graph");
    return best_over(d, planar_orders, {e.a, e.b});
}

std::optional<DistIcorWitness> exact_disticor(const DistIcorInstance& inst, DistIcorBudget budget) {
    const int l = static_cast<int>(inst.chunks.size());
    if (l > budget.max_chunks) throw TooLarge("Dist-ICOR oracle: too many chunks");
    if (inst.total_length() > budget.max_length) throw TooLarge("Dist-ICOR oracle: instance too long");
    std::vector<int> perm(l);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        for (unsigned mask = 0; mask < (1U << l); ++mask) {
            std::vector<int> seq;
            std::vector<std::pair<int, int>> where;
            for (int c : perm) {
                const auto& ch = inst.chunks[c];
                const bool rev = (mask >> c) & 1U;
                for (std::size_t k = 0; k < ch.size(); ++k) {
                    const std::size_t p = rev ? ch.size() - 1 - k : k;
                    seq.push_back(ch[p]);
                    where.emplace_back(c, static_cast<int>(p));
                }
            }
            const auto idx = lis_indices(seq);
            if (static_cast<int>(idx.size()) >= inst.M) {
                DistIcorWitness w;
                w.order = perm;
                for (int c = 0; c < l; ++c) w.reversed.push_back((mask >> c) & 1U);
                for (int k = 0; k < inst.M; ++k) {
                    w.picks.push_back(where[idx[k]]);
                    w.subsequence.push_back(seq[idx[k]]);
                }
                return w;
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

std::optional<std::vector<Triplet>> exact_3partition(const ThreePartitionInstance& inst) {
    if (inst.m > 4) throw TooLarge("3-partition oracle: m exceeds 4");
    const int n = static_cast<int>(inst.a.size());
    if (n != 3 * inst.m || inst.sum() != inst.m * inst.K) return std::nullopt;
    std::vector<bool> used(n, false);
    std::vector<Triplet> cur;
    std::function<bool()> rec = [&]() {
        int i = 0;
        while (i < n && used[i]) ++i;
        if (i == n) return true;
        used[i] = true;
        for (int j = i + 1; j < n; ++j) {
            if (used[j]) continue;
            used[j] = true;
            for (int k = j + 1; k < n; ++k) {
                if (used[k] || inst.a[i] + inst.a[j] + inst.a[k] != inst.K) continue;
                used[k] = true;
                cur.push_back({i, j, k});
                if (rec()) return true;
                cur.pop_back();
                used[k] = false;
            }
            used[j] = false;
        }
        used[i] = false;
        return false;
    };
    if (rec()) return cur;
    return std::nullopt;
}

}  // namespace untangle
