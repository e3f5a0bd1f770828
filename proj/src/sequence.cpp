#include "untangle/sequence.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "untangle/error.hpp"

namespace untangle {

std::vector<std::size_t> lis_indices(std::span<const int> s) {
    std::vector<int> tail_val;
    std::vector<std::size_t> tail_idx;
    std::vector<std::ptrdiff_t> prev(s.size(), -1);
    for (std::size_t i = 0; i < s.size(); ++i) {
        const auto k = static_cast<std::size_t>(std::lower_bound(tail_val.begin(), tail_val.end(), s[i]) -
                                                tail_val.begin());
        if (k > 0) prev[i] = static_cast<std::ptrdiff_t>(tail_idx[k - 1]);
        if (k == tail_val.size()) {
            tail_val.push_back(s[i]);
            tail_idx.push_back(i);
        } else {
            tail_val[k] = s[i];
            tail_idx[k] = i;
        }
    }
    std::vector<std::size_t> out(tail_idx.size());
    if (out.empty()) return out;
    std::ptrdiff_t cur = static_cast<std::ptrdiff_t>(tail_idx.back());
    for (std::size_t k = out.size(); k-- > 0;) {
        out[k] = static_cast<std::size_t>(cur);
        cur = prev[cur];
    }
    return out;
}

std::vector<int> lis(std::span<const int> s) {
    std::vector<int> out;
    for (std::size_t i : lis_indices(s)) out.push_back(s[i]);
    return out;
}

std::size_t lis_length(std::span<const int> s) {
    std::vector<int> tail;
    for (int x : s) {
        auto it = std::lower_bound(tail.begin(), tail.end(), x);
        if (it == tail.end()) {
            tail.push_back(x);
        } else {
            *it = x;
        }
    }
    return tail.size();
}

namespace {

std::vector<int> oriented(std::span<const int> s, Direction dir) {
    std::vector<int> t(s.begin(), s.end());
    if (dir == Direction::Decreasing) {
        for (int& x : t) x = -x;
    }
    return t;
}

}  // namespace

CyclicWitness lics(std::span<const int> s, Direction dir) {
    const std::size_t n = s.size();
    const auto t = oriented(s, dir);
    CyclicWitness best;
    std::vector<int> rot(n);
    std::size_t best_len = 0;
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t i = 0; i < n; ++i) rot[i] = t[(r + i) % n];
        const std::size_t len = lis_length(rot);
        if (len > best_len) {
            best_len = len;
            best.rotation = r;
        }
    }
    if (n == 0) return best;
    for (std::size_t i = 0; i < n; ++i) rot[i] = t[(best.rotation + i) % n];
    for (std::size_t i : lis_indices(rot)) {
        const std::size_t orig = (best.rotation + i) % n;
        best.indices.push_back(orig);
        best.values.push_back(s[orig]);
    }
    return best;
}

std::size_t lics_length(std::span<const int> s, Direction dir) {
    const std::size_t n = s.size();
    const auto t = oriented(s, dir);
    std::vector<int> rot(n);
    std::size_t best = 0;
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t i = 0; i < n; ++i) rot[i] = t[(r + i) % n];
        best = std::max(best, lis_length(rot));
    }
    return best;
}

namespace {

// Ranks of a's elements under b's positions, as a sequence aligned with a.
std::vector<int> ranks_through(std::span<const VertexId> a, std::span<const VertexId> b) {
    if (a.size() != b.size()) throw InvalidArgument("lccs: sequences differ in length");
    VertexId hi = -1;
    for (VertexId v : b) hi = std::max(hi, v);
    std::vector<int> pos(static_cast<std::size_t>(hi + 1), -1);
    for (std::size_t i = 0; i < b.size(); ++i) pos[b[i]] = static_cast<int>(i);
    std::vector<int> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < 0 || a[i] > hi || pos[a[i]] < 0) throw InvalidArgument("lccs: sequences differ in content");
        out[i] = pos[a[i]];
    }
    return out;
}

}  // namespace

std::vector<VertexId> lccs(std::span<const VertexId> a, std::span<const VertexId> b) {
    const auto ranked = ranks_through(a, b);
    const auto w = lics(ranked);
    std::vector<VertexId> out;
    for (std::size_t i : w.indices) out.push_back(a[i]);
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<std::vector<VertexId>> lccs_containing(std::span<const VertexId> a, std::span<const VertexId> b,
                                                     std::span<const VertexId> required) {
    if (required.empty()) return lccs(a, b);
    const auto ranked = ranks_through(a, b);
    const std::size_t n = a.size();
    // Read both sequences starting at the first required vertex: the witness
    // then becomes a linear increasing subsequence starting at rank 0.
    const auto start_a = static_cast<std::size_t>(std::find(a.begin(), a.end(), required[0]) - a.begin());
    const int offset = ranked[start_a];
    std::vector<int> seq(n);
    for (std::size_t i = 0; i < n; ++i) {
        const int r = ranked[(start_a + i) % n] - offset;
        seq[i] = r < 0 ? r + static_cast<int>(n) : r;
    }
    std::vector<std::pair<std::size_t, int>> req;
    for (VertexId v : required) {
        const auto p = static_cast<std::size_t>(std::find(a.begin(), a.end(), v) - a.begin());
        if (p == n) throw InvalidArgument("lccs: required vertex missing");
        const std::size_t q = (p + n - start_a) % n;
        req.emplace_back(q, seq[q]);
    }
    std::sort(req.begin(), req.end());
    for (std::size_t i = 1; i < req.size(); ++i) {
        if (req[i].second <= req[i - 1].second) return std::nullopt;
    }
    std::vector<int> kept;
    std::vector<std::size_t> kept_pos;
    for (std::size_t i = 0; i < n; ++i) {
        bool ok = true;
        for (const auto& [q, val] : req) {
            if ((i < q && seq[i] >= val) || (i > q && seq[i] <= val)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            kept.push_back(seq[i]);
            kept_pos.push_back(i);
        }
    }
    std::vector<VertexId> out;
    for (std::size_t i : lis_indices(kept)) out.push_back(a[(start_a + kept_pos[i]) % n]);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

bool within(std::span<const int> s, int inc, int dec) {
    return lics_length(s, Direction::Increasing) <= static_cast<std::size_t>(inc) &&
           lics_length(s, Direction::Decreasing) <= static_cast<std::size_t>(dec);
}

int excess(std::span<const int> s, int inc, int dec) {
    const int a = static_cast<int>(lics_length(s, Direction::Increasing)) - inc;
    const int b = static_cast<int>(lics_length(s, Direction::Decreasing)) - dec;
    return std::max(a, 0) + std::max(b, 0);
}

}  // namespace

std::optional<std::vector<int>> find_cyclic_permutation(int n, int inc, int dec) {
    if (n <= 0) return std::vector<int>{};
    std::vector<int> s(n);
    // Multiplier patterns i -> a*i mod n.
    for (int a = 1; a < n; ++a) {
        if (std::gcd(a, n) != 1) continue;
        for (int i = 0; i < n; ++i) s[i] = static_cast<int>((static_cast<long long>(a) * i) % n);
        if (within(s, inc, dec)) return s;
    }
    if (n <= 9) {
        // Exhaustive with the first entry fixed (rotations are equivalent).
        std::iota(s.begin(), s.end(), 0);
        do {
            if (within(s, inc, dec)) return s;
        } while (std::next_permutation(s.begin() + 1, s.end()));
        return std::nullopt;
    }
    // Deterministic local search by random transpositions.
    std::mt19937_64 rng(static_cast<std::uint64_t>(n) * 1000003ULL + inc * 1009 + dec);
    for (int restart = 0; restart < 8; ++restart) {
        std::iota(s.begin(), s.end(), 0);
        std::shuffle(s.begin(), s.end(), rng);
        int cur = excess(s, inc, dec);
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int step = 0; step < 1500 && cur > 0; ++step) {
            const int i = pick(rng), j = pick(rng);
            if (i == j) continue;
            std::swap(s[i], s[j]);
            const int e = excess(s, inc, dec);
            if (e <= cur) {
                cur = e;
            } else {
                std::swap(s[i], s[j]);
            }
        }
        if (cur == 0) return s;
    }
    return std::nullopt;
}

std::vector<int> es_tight_cyclic(int s, int r) {
    if (s < 1 || r < 1) throw InvalidArgument("es_tight_cyclic: s and r must be at least 1");
    const int n = s * r + 1;
    auto found = find_cyclic_permutation(n, s + 1, r + 1);
    if (!found) throw Unsupported("es_tight_cyclic: no construction found for s=" + std::to_string(s) +
                                  ", r=" + std::to_string(r));
    if (!within(*found, s + 1, r + 1) || static_cast<int>(found->size()) != n)
        throw ConstructionFailed("es_tight_cyclic: output failed verification");
    return *found;
}

}  // namespace untangle
