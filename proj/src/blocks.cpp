#include "untangle/blocks.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "untangle/error.hpp"

namespace untangle {

bool Block::contains(VertexId v) const { return std::binary_search(vertices.begin(), vertices.end(), v); }

int BlockDecomposition::block_of_edge(const Graph& g, Edge e) const {
    const auto& edges = g.edges();
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it == edges.end() || *it != e) return -1;
    return edge_block[it - edges.begin()];
}

namespace {

int edge_index(const Graph& g, Edge e) {
    const auto& edges = g.edges();
    return static_cast<int>(std::lower_bound(edges.begin(), edges.end(), e) - edges.begin());
}

// Hamiltonian cycle of a 2-connected outerplanar block with >= 3 vertices.
// Peels degree-2 vertices, bridging their neighbours with a virtual edge when
// needed, then reinserts them in reverse order.
std::vector<VertexId> peel_hamiltonian_cycle(const Block& block) {
    const int k = static_cast<int>(block.vertices.size());
    auto local = [&](VertexId v) {
        return static_cast<int>(std::lower_bound(block.vertices.begin(), block.vertices.end(), v) -
                                block.vertices.begin());
    };
    std::vector<std::set<int>> adj(k);
    for (const Edge& e : block.edges) {
        adj[local(e.a)].insert(local(e.b));
        adj[local(e.b)].insert(local(e.a));
    }
    struct Ear {
        int x, a, b;
    };
    std::vector<Ear> ears;
    std::vector<bool> alive(k, true);
    std::vector<int> queue;
    for (int i = 0; i < k; ++i) {
        if (adj[i].size() == 2) queue.push_back(i);
    }
    int remaining = k;
    while (remaining > 3) {
        int x = -1;
        while (!queue.empty()) {
            const int c = queue.back();
            queue.pop_back();
            if (alive[c] && adj[c].size() == 2) {
                x = c;
                break;
            }
        }
        if (x < 0) throw NotOuterplanar("block without a removable degree-2 vertex");
        const int a = *adj[x].begin();
        const int b = *adj[x].rbegin();
        ears.push_back({x, a, b});
        alive[x] = false;
        --remaining;
        adj[a].erase(x);
        adj[b].erase(x);
        adj[x].clear();
        adj[a].insert(b);
        adj[b].insert(a);
        if (adj[a].size() == 2) queue.push_back(a);
        if (adj[b].size() == 2) queue.push_back(b);
    }
    std::vector<int> cycle;
    for (int i = 0; i < k; ++i) {
        if (alive[i]) cycle.push_back(i);
    }
    if (cycle.size() != 3 || !adj[cycle[0]].count(cycle[1]) || !adj[cycle[1]].count(cycle[2]) ||
        !adj[cycle[0]].count(cycle[2]))
        throw NotOuterplanar("block does not reduce to a triangle");
    for (auto it = ears.rbegin(); it != ears.rend(); ++it) {
        const int m = static_cast<int>(cycle.size());
        const int pa = static_cast<int>(std::find(cycle.begin(), cycle.end(), it->a) - cycle.begin());
        const int pb = static_cast<int>(std::find(cycle.begin(), cycle.end(), it->b) - cycle.begin());
        if ((pa + 1) % m == pb) {
            cycle.insert(cycle.begin() + pa + 1, it->x);
        } else if ((pb + 1) % m == pa) {
            cycle.insert(cycle.begin() + pb + 1, it->x);
        } else {
            throw NotOuterplanar("ear endpoints are not consecutive on the cycle");
        }
    }
    std::vector<VertexId> out;
    out.reserve(k);
    for (int i : cycle) out.push_back(block.vertices[i]);
    std::rotate(out.begin(), std::min_element(out.begin(), out.end()), out.end());
    return out;
}

void verify_block_cycle(const Graph& g, const Block& block) {
    const auto& c = block.cycle;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!g.has_edge(c[i], c[(i + 1) % c.size()]))
            throw NotOuterplanar("reconstructed cycle uses a non-edge");
    }
    std::vector<int> pos(g.size(), 0);
    for (std::size_t i = 0; i < c.size(); ++i) pos[c[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < block.edges.size(); ++i) {
        for (std::size_t j = i + 1; j < block.edges.size(); ++j) {
            if (chords_cross(block.edges[i], block.edges[j], pos))
                throw NotOuterplanar("block chords cross on its Hamiltonian cycle");
        }
    }
}

}  // namespace

BlockDecomposition block_decomposition(const Graph& g) {
    const int n = g.size();
    BlockDecomposition bd;
    bd.blocks_of.assign(n, {});
    bd.edge_block.assign(g.edge_count(), -1);

    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<bool> is_cut(n, false);
    std::vector<Edge> edge_stack;
    int timer = 0;

    struct Frame {
        VertexId v;
        VertexId parent;
        std::size_t next;
        int children;
    };
    for (VertexId root = 0; root < n; ++root) {
        if (disc[root] >= 0) continue;
        std::vector<Frame> stack{{root, -1, 0, 0}};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& nb = g.neighbors(f.v);
            if (f.next < nb.size()) {
                const VertexId w = nb[f.next++];
                if (disc[w] < 0) {
                    edge_stack.emplace_back(f.v, w);
                    ++f.children;
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, f.v, 0, 0});
                } else if (w != f.parent && disc[w] < disc[f.v]) {
                    edge_stack.emplace_back(f.v, w);
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
                continue;
            }
            const Frame done = f;
            stack.pop_back();
            if (stack.empty()) {
                if (done.children > 1) is_cut[done.v] = true;
                continue;
            }
            Frame& p = stack.back();
            low[p.v] = std::min(low[p.v], low[done.v]);
            if (low[done.v] >= disc[p.v]) {
                if (p.parent >= 0) is_cut[p.v] = true;
                Block b;
                const Edge stop(p.v, done.v);
                while (true) {
                    const Edge e = edge_stack.back();
                    edge_stack.pop_back();
                    b.edges.push_back(e);
                    if (e == stop) break;
                }
                for (const Edge& e : b.edges) {
                    b.vertices.push_back(e.a);
                    b.vertices.push_back(e.b);
                }
                std::sort(b.vertices.begin(), b.vertices.end());
                b.vertices.erase(std::unique(b.vertices.begin(), b.vertices.end()), b.vertices.end());
                std::sort(b.edges.begin(), b.edges.end());
                bd.blocks.push_back(std::move(b));
            }
        }
    }
    // Root cut vertices with >1 DFS child were flagged above.
    for (int i = 0; i < static_cast<int>(bd.blocks.size()); ++i) {
        Block& b = bd.blocks[i];
        for (VertexId v : b.vertices) bd.blocks_of[v].push_back(i);
        for (const Edge& e : b.edges) bd.edge_block[edge_index(g, e)] = i;
        if (b.vertices.size() >= 3) {
            b.cycle = peel_hamiltonian_cycle(b);
            verify_block_cycle(g, b);
        } else {
            b.cycle = b.vertices;
        }
    }
    for (VertexId v = 0; v < n; ++v) {
        if (bd.blocks_of[v].size() > 1) bd.cut_vertices.push_back(v);
    }
    return bd;
}

std::vector<VertexId> attachment(const Graph& g, const Block& block, VertexId root) {
    std::vector<bool> seen(g.size(), false);
    std::vector<VertexId> stack{root}, out;
    seen[root] = true;
    while (!stack.empty()) {
        const VertexId x = stack.back();
        stack.pop_back();
        out.push_back(x);
        for (VertexId y : g.neighbors(x)) {
            if (seen[y]) continue;
            if (block.contains(x) && block.contains(y) &&
                std::binary_search(block.edges.begin(), block.edges.end(), Edge(x, y)))
                continue;
            seen[y] = true;
            stack.push_back(y);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<VertexId>> attachments(const Graph& g, const Block& block) {
    std::vector<std::vector<VertexId>> out;
    for (VertexId b : block.cycle) out.push_back(attachment(g, block, b));
    return out;
}

CircularDrawing planar_circular_order(std::shared_ptr<const Graph> gp) {
    const Graph& g = *gp;
    const auto bd = block_decomposition(g);
    std::vector<VertexId> order;
    std::vector<bool> placed(g.size(), false);
    std::function<void(VertexId, int)> expand = [&](VertexId b, int parent_block) {
        order.push_back(b);
        placed[b] = true;
        for (int bi : bd.blocks_of[b]) {
            if (bi == parent_block) continue;
            const auto cyc = rotate_to(bd.blocks[bi].cycle, b);
            for (std::size_t i = 1; i < cyc.size(); ++i) expand(cyc[i], bi);
        }
    };
    for (VertexId r = 0; r < g.size(); ++r) {
        if (!placed[r]) expand(r, -1);
    }
    CircularDrawing d(gp, std::move(order));
    if (!is_planar(d)) throw StructuralAssertionFailed("assembled planar order has crossings");
    return d;
}

CircularDrawing planar_circular_order(const Graph& g) {
    return planar_circular_order(std::make_shared<const Graph>(g));
}

bool is_outerplanar(const Graph& g) {
    try {
        block_decomposition(g);
        return true;
    } catch (const NotOuterplanar&) {
        return false;
    }
}

bool two_connected(const BlockDecomposition& bd, VertexId u, VertexId v) {
    for (int bi : bd.blocks_of[u]) {
        const Block& b = bd.blocks[bi];
        if (b.vertices.size() >= 3 && b.contains(v)) return true;
    }
    return false;
}

}  // namespace untangle
