#include "untangle/reductions.hpp"

#include <algorithm>
#include <numeric>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "untangle/error.hpp"
#include "untangle/sequence.hpp"

namespace untangle {

void ThreePartitionInstance::validate() const {
    if (m < 1) throw InvalidInstance("3-partition: m must be positive");
    if (static_cast<int>(a.size()) != 3 * m)
        throw InvalidInstance("3-partition: expected " + std::to_string(3 * m) + " elements, got " +
                              std::to_string(a.size()));
    if (K <= 0) throw InvalidInstance("3-partition: K must be positive");
    for (long long x : a) {
        if (!(4 * x > K && 2 * x < K))
            throw InvalidInstance("3-partition: element " + std::to_string(x) + " outside (K/4, K/2)");
    }
}

long long ThreePartitionInstance::sum() const { return std::accumulate(a.begin(), a.end(), 0LL); }

int DistIcorInstance::total_length() const {
    int L = 0;
    for (const auto& c : chunks) L += static_cast<int>(c.size());
    return L;
}

bool DistIcorInstance::distinct() const {
    std::vector<int> all;
    for (const auto& c : chunks) all.insert(all.end(), c.begin(), c.end());
    std::sort(all.begin(), all.end());
    return std::adjacent_find(all.begin(), all.end()) == all.end();
}

ReducedThreePartition reduce_3p_to_disticor(const ThreePartitionInstance& inst) {
    inst.validate();
    ReducedThreePartition out;
    out.normalized = inst;
    const int m = inst.m;
    const bool scaled = std::any_of(inst.a.begin(), inst.a.end(), [&](long long x) { return x % (3 * m) != 0; });
    if (scaled) {
        for (long long& x : out.normalized.a) x *= 3 * m;
        out.normalized.K *= 3 * m;
    }
    const long long K = out.normalized.K;
    const long long X = 3 * m * K;
    out.X = X;
    out.cell = K + 3 * X;

    std::vector<long long> concat;
    for (int i = 0; i < 3 * m; ++i) {
        ChunkInfo ci;
        ci.element = i;
        ci.a = out.normalized.a[i];
        for (long long alpha = 0; alpha < m; ++alpha)
            for (long long beta = 0; beta < 3; ++beta)
                for (long long gamma = 1; gamma <= K - ci.a + 1; ++gamma)
                    ci.starts.push_back(alpha * out.cell + beta * X + gamma);
        std::sort(ci.starts.rbegin(), ci.starts.rend());
        for (long long s : ci.starts)
            for (long long j = 0; j < ci.a + X; ++j) ci.projection.push_back(s + j);
        concat.insert(concat.end(), ci.projection.begin(), ci.projection.end());
        out.info.push_back(std::move(ci));
    }

    // Word at 1-based position p is (value, |C| - p); rank words lexicographically.
    const std::size_t total = concat.size();
    std::vector<std::size_t> idx(total);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
        if (concat[x] != concat[y]) return concat[x] < concat[y];
        return x > y;  // larger position, smaller second entry
    });
    std::vector<int> rank(total);
    for (std::size_t r = 0; r < total; ++r) rank[idx[r]] = static_cast<int>(r + 1);

    std::size_t at = 0;
    for (const auto& ci : out.info) {
        std::vector<int> chunk(rank.begin() + static_cast<std::ptrdiff_t>(at),
                               rank.begin() + static_cast<std::ptrdiff_t>(at + ci.projection.size()));
        at += ci.projection.size();
        out.instance.chunks.push_back(std::move(chunk));
    }
    out.instance.M = static_cast<int>(m * out.cell);
    return out;
}

namespace {

[[noreturn]] void violation(const std::string& prop, int chunk, const std::string& detail) {
    throw PropertyViolation("property " + prop + " fails on chunk " + std::to_string(chunk) + ": " + detail);
}

// Greedy match of the incremental projection start..start+len-1; positions or empty.
std::vector<int> match_incremental(const std::vector<long long>& proj, long long start, long long len) {
    std::vector<int> pos;
    long long want = start;
    for (std::size_t i = 0; i < proj.size() && want < start + len; ++i) {
        if (proj[i] == want) {
            pos.push_back(static_cast<int>(i));
            ++want;
        }
    }
    if (want != start + len) pos.clear();
    return pos;
}

}  // namespace

PropertyReport chunk_property_check(const ReducedThreePartition& reduced) {
    const auto& chunks = reduced.instance.chunks;
    const int m = reduced.normalized.m;
    const long long X = reduced.X;
    PropertyReport report;
    if (chunks.size() != reduced.info.size()) throw PropertyViolation("chunk count differs from metadata");

    // (i) ranks agree with projections, and equal projections never increase in rank.
    std::vector<std::pair<long long, int>> all;
    for (std::size_t c = 0; c < chunks.size(); ++c) {
        const auto& proj = reduced.info[c].projection;
        if (proj.size() != chunks[c].size()) violation("(i)", static_cast<int>(c), "length differs from metadata");
        for (std::size_t i = 0; i < proj.size(); ++i) all.emplace_back(proj[i], chunks[c][i]);
    }
    std::sort(all.begin(), all.end(), [](const auto& x, const auto& y) { return x.second < y.second; });
    for (std::size_t i = 1; i < all.size(); ++i) {
        if (all[i].first < all[i - 1].first)
            throw PropertyViolation("property (i) fails: rank " + std::to_string(all[i].second) +
                                    " has a smaller projection than rank " + std::to_string(all[i - 1].second));
    }
    for (std::size_t c = 0; c < chunks.size(); ++c) {
        const auto& proj = reduced.info[c].projection;
        std::map<long long, int> last_rank;
        for (std::size_t i = 0; i < proj.size(); ++i) {
            auto it = last_rank.find(proj[i]);
            if (it != last_rank.end() && chunks[c][i] > it->second)
                violation("(i)", static_cast<int>(c),
                          "projection " + std::to_string(proj[i]) + " repeats with increasing rank at position " +
                              std::to_string(i));
            last_rank[proj[i]] = chunks[c][i];
        }
    }
    report.lines.push_back("(i) projections of strictly increasing subsequences are strictly increasing");

    // (ii) no increasing pair straddles a multiple of K + 3X.
    for (std::size_t c = 0; c < chunks.size(); ++c) {
        const auto& proj = reduced.info[c].projection;
        for (int t = 1; t < m; ++t) {
            const long long b = t * reduced.cell;
            int min_low = std::numeric_limits<int>::max();
            for (std::size_t i = 0; i < proj.size(); ++i) {
                if (proj[i] <= b) {
                    min_low = std::min(min_low, chunks[c][i]);
                } else if (chunks[c][i] > min_low) {
                    violation("(ii)", static_cast<int>(c),
                              "increasing pair crosses " + std::to_string(b) + " at position " + std::to_string(i));
                }
            }
        }
    }
    report.lines.push_back("(ii) no increasing subsequence crosses a multiple of K+3X");

    // (iii) sampled incremental subsequences exist.
    std::size_t sampled = 0;
    for (std::size_t c = 0; c < chunks.size(); ++c) {
        const auto& ci = reduced.info[c];
        const std::size_t k = ci.starts.size();
        std::set<std::size_t> picks{0, k - 1};
        for (std::size_t j = 1; j < 8; ++j) picks.insert(j * (k - 1) / 8);
        for (std::size_t j : picks) {
            if (match_incremental(ci.projection, ci.starts[j], ci.a + X).empty())
                violation("(iii)", static_cast<int>(c),
                          "no incremental subsequence starting at " + std::to_string(ci.starts[j]));
            ++sampled;
        }
    }
    report.lines.push_back("(iii) incremental subsequences found for " + std::to_string(sampled) + " sampled starts");

    // (iv) and (v) exactly.
    for (std::size_t c = 0; c < chunks.size(); ++c) {
        const long long want = reduced.info[c].a + X;
        const auto fwd = static_cast<long long>(lis_length(chunks[c]));
        if (fwd != want)
            violation("(iv)", static_cast<int>(c),
                      "lis is " + std::to_string(fwd) + ", expected " + std::to_string(want));
        std::vector<int> rev(chunks[c].rbegin(), chunks[c].rend());
        const auto back = static_cast<long long>(lis_length(rev));
        if (back > X)
            violation("(v)", static_cast<int>(c),
                      "reversed lis is " + std::to_string(back) + ", exceeds X=" + std::to_string(X));
    }
    report.lines.push_back("(iv) lis(C_i) = a_i + X for every chunk");
    report.lines.push_back("(v) lis of every reversed chunk is at most X");
    return report;
}

bool DistIcorWitness::valid_for(const DistIcorInstance& inst) const {
    const int l = static_cast<int>(inst.chunks.size());
    if (static_cast<int>(order.size()) != l || static_cast<int>(reversed.size()) != l) return false;
    std::vector<int> slot(l, -1);
    for (int i = 0; i < l; ++i) {
        if (order[i] < 0 || order[i] >= l || slot[order[i]] >= 0) return false;
        slot[order[i]] = i;
    }
    if (picks.size() != subsequence.size()) return false;
    std::pair<int, int> prev{-1, -1};
    for (std::size_t k = 0; k < picks.size(); ++k) {
        const auto [c, p] = picks[k];
        if (c < 0 || c >= l || p < 0 || p >= static_cast<int>(inst.chunks[c].size())) return false;
        const int offset = reversed[c] ? static_cast<int>(inst.chunks[c].size()) - 1 - p : p;
        const std::pair<int, int> here{slot[c], offset};
        if (here <= prev) return false;
        prev = here;
        if (inst.chunks[c][p] != subsequence[k]) return false;
        if (k > 0 && subsequence[k] <= subsequence[k - 1]) return false;
    }
    return true;
}

DistIcorWitness witness_3p_to_disticor(const ReducedThreePartition& reduced, const std::vector<Triplet>& partition) {
    const auto& A = reduced.normalized.a;
    const int m = reduced.normalized.m;
    if (static_cast<int>(partition.size()) != m)
        throw NotAWitness("expected " + std::to_string(m) + " triplets");
    std::vector<bool> used(A.size(), false);
    for (const auto& t : partition) {
        long long s = 0;
        for (int x : t) {
            if (x < 0 || x >= static_cast<int>(A.size()) || used[x])
                throw NotAWitness("triplets do not partition the elements");
            used[x] = true;
            s += A[x];
        }
        if (s != reduced.normalized.K) throw NotAWitness("a triplet does not sum to K");
    }

    DistIcorWitness w;
    w.reversed.assign(A.size(), false);
    const long long X = reduced.X;
    for (int i = 0; i < m; ++i) {
        Triplet t = partition[i];
        std::sort(t.begin(), t.end());
        const long long base = i * reduced.cell;
        const long long starts[3] = {base + 1, base + X + A[t[0]] + 1, base + 2 * X + A[t[0]] + A[t[1]] + 1};
        for (int j = 0; j < 3; ++j) {
            const int c = t[j];
            w.order.push_back(c);
            const auto pos = match_incremental(reduced.info[c].projection, starts[j], A[c] + X);
            if (pos.empty())
                throw PropertyViolation("chunk " + std::to_string(c) + " lacks the incremental subsequence from " +
                                        std::to_string(starts[j]));
            for (int p : pos) {
                w.picks.emplace_back(c, p);
                w.subsequence.push_back(reduced.instance.chunks[c][p]);
            }
        }
    }
    if (static_cast<int>(w.subsequence.size()) != reduced.instance.M || !w.valid_for(reduced.instance))
        throw PropertyViolation("constructed witness is not a strictly increasing subsequence of length M");
    return w;
}

CircularUntanglingInstance reduce_disticor_to_cu(const DistIcorInstance& inst) {
    if (!inst.distinct()) throw NotDistinct();
    if (inst.M < 1) throw InvalidInstance("Dist-ICOR: M must be positive");
    std::vector<int> all;
    for (const auto& c : inst.chunks) all.insert(all.end(), c.begin(), c.end());
    std::sort(all.begin(), all.end());
    const int L = static_cast<int>(all.size());
    auto rank = [&](int x) { return static_cast<int>(std::lower_bound(all.begin(), all.end(), x) - all.begin()) + 1; };

    std::vector<std::string> names;
    for (int i = 0; i <= L; ++i) names.push_back("v" + std::to_string(i));
    Graph g = Graph::with_vertices(std::move(names));
    for (const auto& c : inst.chunks) {
        if (c.empty()) continue;
        int prev = 0;
        for (int x : c) {
            g.add_edge(prev, rank(x));
            prev = rank(x);
        }
        if (c.size() >= 2) g.add_edge(prev, 0);
    }
    std::vector<VertexId> order(L + 1);
    std::iota(order.begin(), order.end(), 0);
    return {CircularDrawing(std::move(g), std::move(order)), L - inst.M};
}

}  // namespace untangle
