#include "untangle/almost_planar.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "untangle/blocks.hpp"
#include "untangle/error.hpp"
#include "untangle/sequence.hpp"

namespace untangle {

namespace {

using Order = std::vector<VertexId>;

void require(bool ok, const char* what) {
    if (!ok) throw StructuralAssertionFailed(what);
}

std::vector<int> positions_in(const Order& o, int n) {
    std::vector<int> pos(n, -1);
    for (std::size_t i = 0; i < o.size(); ++i) pos[o[i]] = static_cast<int>(i);
    return pos;
}

int cw(const std::vector<int>& pos, VertexId from, VertexId x) {
    const int n = static_cast<int>(pos.size());
    return ((pos[x] - pos[from]) % n + n) % n;
}

/// Vertices strictly clockwise from a to b.
Order between(const Order& o, VertexId a, VertexId b) {
    const auto n = o.size();
    const auto pa = static_cast<std::size_t>(std::find(o.begin(), o.end(), a) - o.begin());
    Order out;
    for (std::size_t i = 1; i < n; ++i) {
        const VertexId x = o[(pa + i) % n];
        if (x == b) break;
        out.push_back(x);
    }
    return out;
}

void erase_all(Order& o, const Order& block) {
    std::vector<bool> gone;
    for (VertexId x : block) {
        if (x >= static_cast<VertexId>(gone.size())) gone.resize(x + 1, false);
        gone[x] = true;
    }
    std::erase_if(o, [&](VertexId x) { return x < static_cast<VertexId>(gone.size()) && gone[x]; });
}

void insert_after(Order& o, VertexId anchor, const Order& block) {
    auto it = std::find(o.begin(), o.end(), anchor);
    o.insert(it + 1, block.begin(), block.end());
}

void insert_before(Order& o, VertexId anchor, const Order& block) {
    auto it = std::find(o.begin(), o.end(), anchor);
    o.insert(it, block.begin(), block.end());
}

/// Removes `block` and reinserts it, in the given order, right after `anchor`.
void relocate_after(Order& o, const Order& block, VertexId anchor) {
    erase_all(o, block);
    insert_after(o, anchor, block);
}

void relocate_before(Order& o, const Order& block, VertexId anchor) {
    erase_all(o, block);
    insert_before(o, anchor, block);
}

/// BFS inside `scope`, never entering `blocked` and never using edge `skip`.
std::vector<bool> reach(const Graph& g, VertexId s, const std::vector<bool>& scope, const std::vector<bool>& blocked,
                        std::optional<Edge> skip = std::nullopt) {
    std::vector<bool> seen(g.size(), false);
    if (!scope[s] || blocked[s]) return seen;
    std::deque<VertexId> q{s};
    seen[s] = true;
    while (!q.empty()) {
        const VertexId x = q.front();
        q.pop_front();
        for (VertexId y : g.neighbors(x)) {
            if (seen[y] || !scope[y] || blocked[y]) continue;
            if (skip && Edge(x, y) == *skip) continue;
            seen[y] = true;
            q.push_back(y);
        }
    }
    return seen;
}

std::vector<bool> mask_of(int n, const std::vector<VertexId>& vs) {
    std::vector<bool> m(n, false);
    for (VertexId x : vs) m[x] = true;
    return m;
}

std::vector<VertexId> members(const std::vector<bool>& m) {
    std::vector<VertexId> out;
    for (VertexId x = 0; x < static_cast<VertexId>(m.size()); ++x) {
        if (m[x]) out.push_back(x);
    }
    return out;
}

Order sorted_by_cw(std::vector<VertexId> vs, const std::vector<int>& pos, VertexId from) {
    std::sort(vs.begin(), vs.end(), [&](VertexId a, VertexId b) { return cw(pos, from, a) < cw(pos, from, b); });
    return vs;
}

// ---------------------------------------------------------------------------
// Component classification for one-side untangling.

ComponentClassification classify_impl(const Graph& gp, const Order& order, VertexId u, VertexId v) {
    const int n = gp.size();
    const auto labels = gp.component_labels();
    if (labels[u] != labels[v]) throw InvalidArgument("classify_components: u and v are not connected");
    ComponentClassification cc;
    cc.u = u;
    cc.v = v;
    cc.in_scope.assign(n, false);
    for (VertexId x = 0; x < n; ++x) cc.in_scope[x] = labels[x] == labels[u];

    // Cut vertices separating u from v, ordered by distance from u.
    std::vector<bool> none(n, false);
    std::vector<int> dist(n, -1);
    {
        std::deque<VertexId> q{u};
        dist[u] = 0;
        while (!q.empty()) {
            const VertexId x = q.front();
            q.pop_front();
            for (VertexId y : gp.neighbors(x)) {
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    q.push_back(y);
                }
            }
        }
    }
    std::vector<VertexId> separators;
    for (VertexId c = 0; c < n; ++c) {
        if (!cc.in_scope[c] || c == u || c == v) continue;
        std::vector<bool> blocked(n, false);
        blocked[c] = true;
        if (!reach(gp, u, cc.in_scope, blocked)[v]) separators.push_back(c);
    }
    if (separators.empty()) throw InvalidArgument("classify_components: u and v are 2-connected");
    std::sort(separators.begin(), separators.end(), [&](VertexId a, VertexId b) { return dist[a] < dist[b]; });
    cc.f = separators.front();
    cc.l = separators.back();

    const auto pos = positions_in(order, n);
    const int span = cw(pos, u, v);
    cc.side.assign(n, Side::UV);
    for (VertexId x = 0; x < n; ++x) {
        if (cc.in_scope[x] && x != u && x != v) cc.side[x] = cw(pos, u, x) < span ? Side::UV : Side::VU;
    }
    cc.side[u] = cc.side[cc.f];
    cc.side[v] = cc.side[cc.l];

    for (const Edge& e : gp.edges()) {
        if (cc.in_scope[e.a] && cc.side[e.a] != cc.side[e.b]) cc.X.push_back(e);
    }

    cc.component_of.assign(n, -1);
    for (VertexId s = 0; s < n; ++s) {
        if (!cc.in_scope[s] || cc.component_of[s] >= 0) continue;
        const int id = static_cast<int>(cc.components.size());
        ComponentClassification::Component comp;
        comp.side = cc.side[s];
        std::deque<VertexId> q{s};
        cc.component_of[s] = id;
        while (!q.empty()) {
            const VertexId x = q.front();
            q.pop_front();
            comp.vertices.push_back(x);
            for (VertexId y : gp.neighbors(x)) {
                if (cc.component_of[y] >= 0 || cc.side[y] != cc.side[x]) continue;
                cc.component_of[y] = id;
                q.push_back(y);
            }
        }
        std::sort(comp.vertices.begin(), comp.vertices.end());
        cc.components.push_back(std::move(comp));
    }
    for (auto& comp : cc.components) {
        const auto blocked = mask_of(n, comp.vertices);
        comp.connecting = blocked[u] || blocked[v] || !reach(gp, u, cc.in_scope, blocked)[v];
    }
    for (const Edge& e : cc.X) {
        auto& a = cc.components[cc.component_of[e.a]].adjacent;
        auto& b = cc.components[cc.component_of[e.b]].adjacent;
        a.push_back(cc.component_of[e.b]);
        b.push_back(cc.component_of[e.a]);
    }
    for (auto& comp : cc.components) {
        std::sort(comp.adjacent.begin(), comp.adjacent.end());
        comp.adjacent.erase(std::unique(comp.adjacent.begin(), comp.adjacent.end()), comp.adjacent.end());
    }
    return cc;
}

// Gap for non-connecting component k, lying strictly clockwise from fu to fv:
// the component goes right after the returned vertex, or right before fu when
// the vertex is fu itself.
VertexId prop9_anchor(const Order& o, const Graph& gp, const ComponentClassification& cc, int k, VertexId fv) {
    const int n = gp.size();
    const auto& comp = cc.components[k];
    require(comp.adjacent.size() == 1, "non-connecting component is not adjacent to exactly one component");
    const int kp = comp.adjacent[0];
    const auto& other = cc.components[kp];
    require(other.connecting, "non-connecting component is adjacent to a non-connecting one");

    std::set<VertexId> att;
    for (VertexId x : comp.vertices) {
        for (VertexId y : gp.neighbors(x)) {
            if (cc.component_of[y] == kp) att.insert(y);
        }
    }
    require(!att.empty() && att.size() <= 2, "non-connecting component has more than two attachment vertices");
    if (att.size() == 1) return *att.begin();
    const auto pos = positions_in(o, n);
    VertexId w = *att.begin(), x = *att.rbegin();
    if (cw(pos, fv, x) < cw(pos, fv, w)) std::swap(w, x);
    require(gp.has_edge(w, x), "attachment vertices of a non-connecting component are not adjacent");
    const auto scope = mask_of(n, other.vertices);
    const std::vector<bool> blocked(n, false);
    const auto part = reach(gp, w, scope, blocked, Edge(w, x));
    require(!part[x], "edge between attachment vertices is not a bridge");
    VertexId y = w;
    const int len = cw(pos, w, x);
    for (int i = 0; i <= len; ++i) {
        const VertexId z = o[(pos[w] + i) % n];
        if (part[z]) y = z;
    }
    return y;
}

void place_reversed(Order& o, Order block, VertexId y, VertexId fu) {
    const auto pos = positions_in(o, static_cast<int>(o.size()));
    block = sorted_by_cw(std::move(block), pos, fu);
    std::reverse(block.begin(), block.end());
    if (y == fu) {
        relocate_before(o, block, fu);
    } else {
        relocate_after(o, block, y);
    }
}

// Moves non-connecting component k, lying strictly clockwise from fu to fv,
// into the gap after its anchor on the other side, reversed.
void prop9(Order& o, const Graph& gp, const ComponentClassification& cc, int k, VertexId fu, VertexId fv) {
    const VertexId y = prop9_anchor(o, gp, cc, k, fv);
    place_reversed(o, cc.components[k].vertices, y, fu);
}

// Vertex incident to every edge of `edges`, if any.
bool share_vertex(const std::vector<Edge>& edges) {
    if (edges.empty()) return true;
    for (VertexId c : {edges[0].a, edges[0].b}) {
        if (std::all_of(edges.begin(), edges.end(), [&](const Edge& e) { return e.has(c); })) return true;
    }
    return false;
}

// Moves connecting component k (strictly clockwise from u to v, apart from u
// and v themselves) to the other side by merge-then-reverse.
void prop12(Order& o, const Graph& gp, const ComponentClassification& cc, int k) {
    const int n = gp.size();
    const VertexId u = cc.u, v = cc.v;
    const auto& comp = cc.components[k];
    std::vector<int> conn;
    for (int j : comp.adjacent) {
        if (!cc.components[j].connecting) continue;
        conn.push_back(j);
        std::vector<Edge> between_edges;
        for (const Edge& e : cc.X) {
            const int ca = cc.component_of[e.a], cb = cc.component_of[e.b];
            if ((ca == k && cb == j) || (ca == j && cb == k)) between_edges.push_back(e);
        }
        require(share_vertex(between_edges), "edges between adjacent connecting components share no vertex");
    }
    auto pos = positions_in(o, n);
    auto first_of = [&](int j) {
        const auto& vs = cc.components[j].vertices;
        return *std::min_element(vs.begin(), vs.end(),
                                 [&](VertexId a, VertexId b) { return cw(pos, v, a) < cw(pos, v, b); });
    };
    auto last_of = [&](int j) {
        const auto& vs = cc.components[j].vertices;
        return *std::max_element(vs.begin(), vs.end(),
                                 [&](VertexId a, VertexId b) { return cw(pos, v, a) < cw(pos, v, b); });
    };
    const bool has_u = std::binary_search(comp.vertices.begin(), comp.vertices.end(), u);
    const bool has_v = std::binary_search(comp.vertices.begin(), comp.vertices.end(), v);
    VertexId w;
    if (has_u && has_v) {
        w = v;
    } else if (has_v) {
        require(conn.size() == 1, "connecting component with v has no unique connecting neighbour");
        w = v;
    } else if (has_u) {
        require(conn.size() == 1, "connecting component with u has no unique connecting neighbour");
        w = last_of(conn[0]);
    } else {
        require(conn.size() == 2, "inner connecting component does not have two connecting neighbours");
        std::sort(conn.begin(), conn.end(), [&](int a, int b) { return cw(pos, v, first_of(a)) < cw(pos, v, first_of(b)); });
        w = last_of(conn[0]);
    }

    std::vector<bool> in_comp(n, false);
    for (VertexId x : comp.vertices) {
        if (x != u && x != v) in_comp[x] = true;
    }
    const Order before = o;
    // Components of G' away from u and v, on the far side, keyed by the
    // in-scope vertex preceding them.
    std::vector<std::pair<VertexId, Order>> loose;
    {
        VertexId last = v;
        for (VertexId x : between(o, v, u)) {
            if (cc.in_scope[x]) {
                last = x;
                continue;
            }
            if (loose.empty() || loose.back().first != last) loose.emplace_back(last, Order{});
            loose.back().second.push_back(x);
        }
    }
    Order merged;
    std::map<VertexId, Order> gaps;
    for (int j : comp.adjacent) {
        if (cc.components[j].connecting) continue;
        auto& g = gaps[prop9_anchor(o, gp, cc, j, u)];
        g.insert(g.end(), cc.components[j].vertices.begin(), cc.components[j].vertices.end());
        merged.insert(merged.end(), cc.components[j].vertices.begin(), cc.components[j].vertices.end());
    }
    for (auto& [y, vs] : gaps) place_reversed(o, vs, y, v);
    pos = positions_in(o, n);
    Order block = members(in_comp);
    block.insert(block.end(), merged.begin(), merged.end());
    block = sorted_by_cw(block, pos, u);
    std::reverse(block.begin(), block.end());
    relocate_after(o, block, w);
    require(is_crossing_free(gp, o), "connecting component does not fit between w and w'");
    for (const auto& [p, run] : loose) relocate_after(o, run, p);

    std::vector<bool> keep(n, true);
    for (VertexId x = 0; x < n; ++x) keep[x] = !in_comp[x];
    require(same_cyclic(restrict_order(before, keep), restrict_order(o, keep)),
            "merge-then-reverse moved vertices outside the component");
}

}  // namespace

ComponentClassification classify_components(const CircularDrawing& d, VertexId u, VertexId v) {
    if (!d.graph().has_edge(u, v)) throw UnknownEdge("classify_components: uv is not an edge");
    return classify_impl(d.graph().without_edge(Edge(u, v)), d.order(), u, v);
}

Untangling move_non_connecting(const CircularDrawing& d, const ComponentClassification& cc, int component) {
    const auto& comp = cc.components.at(component);
    if (comp.connecting || comp.side != Side::UV)
        throw InvalidArgument("move_non_connecting: expects a non-connecting component clockwise from u to v");
    const Graph gp = d.graph().without_edge(Edge(cc.u, cc.v));
    Order o = d.order();
    prop9(o, gp, cc, component, cc.u, cc.v);
    std::vector<bool> fixed(d.size(), true);
    for (VertexId x : comp.vertices) fixed[x] = false;
    return untangling_to(d, o, fixed);
}

Untangling move_connecting(const CircularDrawing& d, const ComponentClassification& cc, int component) {
    const auto& comp = cc.components.at(component);
    if (!comp.connecting || comp.side != Side::UV)
        throw InvalidArgument("move_connecting: expects a connecting component clockwise from u to v");
    const Graph gp = d.graph().without_edge(Edge(cc.u, cc.v));
    Order o = d.order();
    prop12(o, gp, cc, component);
    std::vector<bool> fixed(d.size(), true);
    for (VertexId x : comp.vertices) {
        if (x != cc.u && x != cc.v) fixed[x] = false;
    }
    return untangling_to(d, o, fixed);
}

namespace {

// Moves the vertices of component `comp` lying strictly clockwise from fu to
// fv to the other side, keeping their order. The component contains at most
// one of fu, fv. Returns false when the component lies entirely on that side
// and contains neither endpoint.
bool prop6(Order& o, const std::vector<bool>& comp, VertexId fu, VertexId fv) {
    const int n = static_cast<int>(comp.size());
    const auto pos = positions_in(o, n);
    const int span = cw(pos, fu, fv);
    Order inside, outside;
    for (VertexId x = 0; x < n; ++x) {
        if (!comp[x] || x == fu || x == fv) continue;
        (cw(pos, fu, x) < span ? inside : outside).push_back(x);
    }
    if (inside.empty()) return true;
    inside = sorted_by_cw(inside, pos, fu);
    if (comp[fv]) {
        // Mirror image: insert after the first component vertex counterclockwise from fu.
        VertexId anchor = fv;
        for (VertexId x : outside) {
            if (cw(pos, fv, x) > cw(pos, fv, anchor)) anchor = x;
        }
        relocate_after(o, inside, anchor);
        return true;
    }
    if (comp[fu]) outside.push_back(fu);
    if (outside.empty()) return false;
    VertexId target = outside[0];
    for (VertexId x : outside) {
        if (cw(pos, fv, x) < cw(pos, fv, target)) target = x;
    }
    relocate_before(o, inside, target);
    return true;
}

// Everything still strictly clockwise from u to v goes right after v, in order.
void flush_after(Order& o, VertexId u, VertexId v) {
    const Order rest = between(o, u, v);
    if (!rest.empty()) relocate_after(o, rest, v);
}

Order one_side_order(const CircularDrawing& d, VertexId u, VertexId v) {
    const Graph& g = d.graph();
    const int n = g.size();
    const Edge e(u, v);
    if (!g.has_edge(u, v)) throw UnknownEdge("one_side_untangle: uv is not an edge");
    const Graph gp = g.without_edge(e);
    const auto labels = gp.component_labels();
    Order o = d.order();

    if (labels[u] != labels[v]) {
        const int k = gp.component_count();
        for (int c = 0; c < k; ++c) {
            std::vector<bool> comp(n, false);
            for (VertexId x = 0; x < n; ++x) comp[x] = labels[x] == c;
            prop6(o, comp, u, v);
        }
        flush_after(o, u, v);
        return o;
    }

    const auto bd = block_decomposition(gp);
    if (two_connected(bd, u, v)) {
        require(edges_crossing(d, e).empty(), "edge crossed although its endpoints are 2-connected without it");
        return o;
    }

    const int scope = labels[u];
    while (true) {
        bool pending = false;
        for (VertexId x : between(o, u, v)) pending = pending || labels[x] == scope;
        if (!pending) break;
        const auto cc = classify_impl(gp, o, u, v);
        const auto pos = positions_in(o, n);
        const int span = cw(pos, u, v);
        int pick = -1;
        for (int pass = 0; pass < 2 && pick < 0; ++pass) {
            for (int j = 0; j < static_cast<int>(cc.components.size()); ++j) {
                const auto& comp = cc.components[j];
                if (comp.side != Side::UV || comp.connecting != (pass == 1)) continue;
                const bool movable = std::any_of(comp.vertices.begin(), comp.vertices.end(), [&](VertexId x) {
                    return x != u && x != v && cw(pos, u, x) < span;
                });
                if (movable) {
                    pick = j;
                    break;
                }
            }
        }
        require(pick >= 0, "vertices remain between u and v but no component can be moved");
        if (cc.components[pick].connecting) {
            prop12(o, gp, cc, pick);
        } else {
            prop9(o, gp, cc, pick, u, v);
        }
    }
    flush_after(o, u, v);
    return o;
}

}  // namespace

Untangling one_side_untangle(const CircularDrawing& d, VertexId u, VertexId v) {
    const Order final_order = one_side_order(d, u, v);
    require(is_crossing_free(d.graph(), final_order), "one-side untangling left crossings");
    std::vector<bool> fixed(d.size(), true);
    for (VertexId x : between(d.order(), u, v)) fixed[x] = false;
    // Case 2.1 returns the input unchanged.
    if (final_order == d.order()) return {};
    return untangling_to(d, final_order, fixed);
}

namespace {

AlmostPlanarClassification require_almost_planar(const CircularDrawing& d) {
    auto cls = classify(d);
    if (cls.kind == DrawingKind::NotAlmostPlanar) throw NotAlmostPlanar();
    if (cls.kind == DrawingKind::AlmostPlanar && !is_outerplanar(d.graph())) throw NotOuterplanar();
    return cls;
}

}  // namespace

Untangling one_side_untangle(const CircularDrawing& d) {
    const auto cls = require_almost_planar(d);
    if (cls.kind == DrawingKind::Planar) return {};
    std::optional<std::pair<VertexId, VertexId>> best;
    std::vector<VertexId> best_set;
    for (const auto& sp : cls.candidates) {
        for (const auto& [a, b] : {std::pair{sp.u, sp.v}, std::pair{sp.v, sp.u}}) {
            Order side = between(d.order(), a, b);
            std::sort(side.begin(), side.end());
            if (!best || side.size() < best_set.size() || (side.size() == best_set.size() && side < best_set)) {
                best = std::pair{a, b};
                best_set = std::move(side);
            }
        }
    }
    return one_side_untangle(d, best->first, best->second);
}

namespace {

struct Plan {
    int cost = 0;
    std::vector<VertexId> moved;  // sorted
    Order final_order;
};

bool better(const Plan& a, const Plan& b) { return a.cost < b.cost || (a.cost == b.cost && a.moved < b.moved); }

bool covered_in(VertexId x, const std::vector<Edge>& edges, const std::vector<int>& local) {
    const int p = local[x];
    for (const Edge& e : edges) {
        const int a = local[e.a], b = local[e.b];
        if (a < 0 || b < 0) continue;
        if (std::min(a, b) < p && p < std::max(a, b)) return true;
    }
    return false;
}

// Rotations of the cyclic order `seq` in which `root` lies under no edge.
std::vector<Order> linearizations(const Graph& h, const Order& seq, VertexId root) {
    const std::size_t k = seq.size();
    std::vector<Edge> inner;
    std::vector<bool> in(h.size(), false);
    for (VertexId x : seq) in[x] = true;
    for (const Edge& e : h.edges()) {
        if (in[e.a] && in[e.b]) inner.push_back(e);
    }
    std::vector<Order> out;
    std::vector<int> local(h.size(), -1);
    for (std::size_t r = 0; r < k; ++r) {
        Order lin(k);
        for (std::size_t i = 0; i < k; ++i) {
            lin[i] = seq[(r + i) % k];
            local[lin[i]] = static_cast<int>(i);
        }
        if (!covered_in(root, inner, local)) out.push_back(std::move(lin));
    }
    return out;
}

struct Slot {
    VertexId root;
    std::vector<Order> options;
};

std::vector<Slot> attachment_slots(const Graph& h, const Order& drawing_order, const Block& block, const Order& cyc) {
    std::vector<Slot> slots;
    for (VertexId b : cyc) {
        const auto att = attachment(h, block, b);
        const auto seq = restrict_order(drawing_order, mask_of(h.size(), att));
        Slot s{b, linearizations(h, seq, b)};
        require(!s.options.empty(), "attachment admits no linearization");
        slots.push_back(std::move(s));
    }
    return slots;
}

std::size_t product(const std::vector<Slot>& slots) {
    std::size_t p = 1;
    for (const auto& s : slots) {
        if (p > kMaxCanonicalTargets) return p;
        p *= s.options.size();
    }
    return p;
}

// Keeps the combination count under `cap`, first by restricting every slot to
// runs that begin or end at their root, then to a single run.
void trim(std::vector<Slot>& slots, std::size_t cap) {
    if (product(slots) <= cap) return;
    for (auto& s : slots) {
        std::vector<Order> kept;
        for (auto& o : s.options) {
            if (o.front() == s.root || o.back() == s.root) kept.push_back(std::move(o));
        }
        s.options = std::move(kept);
    }
    if (product(slots) <= cap) return;
    for (auto& s : slots) s.options.resize(1);
}

template <class F>
void for_each_concatenation(const std::vector<Slot>& slots, F&& f) {
    std::vector<std::size_t> idx(slots.size(), 0);
    while (true) {
        Order out;
        for (std::size_t s = 0; s < slots.size(); ++s)
            out.insert(out.end(), slots[s].options[idx[s]].begin(), slots[s].options[idx[s]].end());
        f(out);
        std::size_t s = 0;
        while (s < slots.size() && ++idx[s] == slots[s].options.size()) idx[s++] = 0;
        if (s == slots.size()) break;
    }
}

// Final order: `cur` restricted to non-S and witness vertices, with each run of
// moved S-vertices in `target` placed right after its witness predecessor.
Order realize(const Order& cur, const std::vector<bool>& S, const Order& target, const std::vector<VertexId>& W) {
    const int n = static_cast<int>(S.size());
    const auto Wm = mask_of(n, W);
    std::vector<Order> run_after(n);
    const std::size_t len = target.size();
    std::size_t start = 0;
    while (!Wm[target[start]]) ++start;
    VertexId anchor = target[start];
    for (std::size_t k = 1; k < len; ++k) {
        const VertexId x = target[(start + k) % len];
        if (Wm[x]) {
            anchor = x;
        } else {
            run_after[anchor].push_back(x);
        }
    }
    Order out;
    for (VertexId x : cur) {
        if (S[x] && !Wm[x]) continue;
        out.push_back(x);
        if (Wm[x]) out.insert(out.end(), run_after[x].begin(), run_after[x].end());
    }
    return out;
}

std::vector<VertexId> complement_in(const std::vector<bool>& S, const std::vector<VertexId>& W) {
    const auto Wm = mask_of(static_cast<int>(S.size()), W);
    std::vector<VertexId> out;
    for (VertexId x = 0; x < static_cast<VertexId>(S.size()); ++x) {
        if (S[x] && !Wm[x]) out.push_back(x);
    }
    return out;
}

struct Scorer {
    const Order& ds;  // drawing order restricted to S
    const std::vector<bool>& S;
    VertexId u, v;
    bool forced;
    int offset = 0;
    std::vector<VertexId> pre_moved;  // sorted, disjoint from S

    std::optional<Plan> score(const Order& target, const Order& cur) const {
        std::optional<std::vector<VertexId>> W;
        if (forced) {
            const VertexId req[2] = {u, v};
            W = lccs_containing(ds, target, req);
        } else {
            W = lccs(ds, target);
        }
        if (!W) return std::nullopt;
        Plan p;
        p.cost = offset + static_cast<int>(ds.size() - W->size());
        p.moved = complement_in(S, *W);
        p.moved.insert(p.moved.end(), pre_moved.begin(), pre_moved.end());
        std::sort(p.moved.begin(), p.moved.end());
        p.final_order = realize(cur, S, target, *W);
        return p;
    }
};

void keep_best(std::optional<Plan>& best, std::optional<Plan> cand) {
    if (cand && (!best || better(*cand, *best))) best = std::move(cand);
}

void check_canonical(const Order& final_order, const std::vector<bool>& S, const Graph& h, const Block& block) {
    const int n = h.size();
    const auto in_block = mask_of(n, block.vertices);
    const auto seen = restrict_order(final_order, in_block);
    Order rev(block.cycle.rbegin(), block.cycle.rend());
    require(same_cyclic(seen, block.cycle) || same_cyclic(seen, rev),
            "block order in a planar drawing differs from its Hamiltonian cycle");
    const auto within = restrict_order(final_order, S);
    for (VertexId b : block.cycle) {
        const auto att = mask_of(n, attachment(h, block, b));
        int changes = 0;
        for (std::size_t i = 0; i < within.size(); ++i)
            changes += att[within[i]] != att[within[(i + 1) % within.size()]];
        require(changes <= 2, "attachment is not consecutive in a planar drawing");
    }
}

std::optional<Plan> connected_plan(const CircularDrawing& d, const std::vector<int>& labels, Edge e, bool forced) {
    const Graph& g = d.graph();
    const int n = g.size();
    std::vector<bool> S(n, false);
    for (VertexId x = 0; x < n; ++x) S[x] = labels[x] == labels[e.a];
    const Graph h = g.induced(S);
    const auto bd = block_decomposition(h);
    const Block& block = bd.blocks[bd.block_of_edge(h, e)];
    const Order ds = restrict_order(d.order(), S);
    const Scorer scorer{ds, S, e.a, e.b, forced, 0, {}};

    std::optional<Plan> best;
    for (bool rev : {false, true}) {
        Order cyc = block.cycle;
        if (rev) std::reverse(cyc.begin(), cyc.end());
        auto slots = attachment_slots(h, d.order(), block, cyc);
        trim(slots, kMaxCanonicalTargets / 2);
        for_each_concatenation(slots, [&](const Order& target) { keep_best(best, scorer.score(target, d.order())); });
    }
    if (best) check_canonical(best->final_order, S, h, block);
    return best;
}

std::vector<UnwrapTarget> unwrap_impl(const CircularDrawing& d, const std::vector<int>& labels, VertexId apex,
                                      VertexId other) {
    const Graph& g = d.graph();
    const int n = g.size();
    std::vector<bool> C(n, false);
    for (VertexId x = 0; x < n; ++x) C[x] = labels[x] == labels[apex];
    const auto cv = members(C);
    if (cv.size() == 1) return {UnwrapTarget{apex, {apex}, false, {apex}}};

    const Graph h = g.induced(C);
    const auto bd = block_decomposition(h);
    const auto& pos = d.positions();
    const Edge e(apex, other);
    std::vector<int> qualifying;
    for (int bi : bd.blocks_of[apex]) {
        const auto att = mask_of(n, attachment(h, bd.blocks[bi], apex));
        bool ok = true;
        for (const Edge& f : h.edges()) {
            if (att[f.a] && att[f.b] && chords_cross(f, e, pos)) ok = false;
        }
        if (ok) qualifying.push_back(bi);
    }
    require(!qualifying.empty(), "no block at the apex has an uncovered attachment");

    std::vector<UnwrapTarget> out;
    std::set<Order> seen;
    std::vector<int> local(n, -1);
    const std::size_t per_block = std::max<std::size_t>(1, kMaxCanonicalTargets / (4 * qualifying.size() * cv.size()));
    for (int bi : qualifying) {
        const Block& block = bd.blocks[bi];
        for (bool rev : {false, true}) {
            Order cyc = block.cycle;
            if (rev) std::reverse(cyc.begin(), cyc.end());
            cyc = rotate_to(cyc, apex);
            auto slots = attachment_slots(h, d.order(), block, cyc);
            trim(slots, per_block);
            for_each_concatenation(slots, [&](const Order& ring) {
                const std::size_t k = ring.size();
                for (std::size_t c = 0; c < k; ++c) {
                    Order lin(k);
                    for (std::size_t i = 0; i < k; ++i) {
                        lin[i] = ring[(c + i) % k];
                        local[lin[i]] = static_cast<int>(i);
                    }
                    if (covered_in(apex, h.edges(), local)) continue;
                    if (seen.insert(lin).second) out.push_back(UnwrapTarget{apex, block.vertices, rev, lin});
                }
            });
        }
    }
    return out;
}

std::optional<Plan> disconnected_plan(const CircularDrawing& d, const std::vector<int>& labels, Edge e,
                                      bool forced) {
    const Graph& g = d.graph();
    const int n = g.size();
    const VertexId u = e.a, v = e.b;
    const int lu = labels[u], lv = labels[v];

    // Components without u and v end up on one side, paying their smaller side.
    Order cur = d.order();
    int offset = 0;
    std::vector<VertexId> pre_moved;
    {
        const auto pos = d.positions();
        const int span = cw(pos, u, v);
        const int k = *std::max_element(labels.begin(), labels.end()) + 1;
        for (int c = 0; c < k; ++c) {
            if (c == lu || c == lv) continue;
            std::vector<bool> comp(n, false);
            std::vector<VertexId> uv_part, vu_part;
            for (VertexId x = 0; x < n; ++x) {
                if (labels[x] != c) continue;
                comp[x] = true;
                (cw(pos, u, x) < span ? uv_part : vu_part).push_back(x);
            }
            if (uv_part.empty() || vu_part.empty()) continue;
            const bool move_uv = uv_part.size() < vu_part.size() || (uv_part.size() == vu_part.size() && uv_part < vu_part);
            if (move_uv) {
                prop6(cur, comp, u, v);
            } else {
                prop6(cur, comp, v, u);
            }
            const auto& moved = move_uv ? uv_part : vu_part;
            offset += static_cast<int>(moved.size());
            pre_moved.insert(pre_moved.end(), moved.begin(), moved.end());
        }
    }
    std::sort(pre_moved.begin(), pre_moved.end());

    std::vector<bool> S(n, false);
    for (VertexId x = 0; x < n; ++x) S[x] = labels[x] == lu || labels[x] == lv;
    const Order ds = restrict_order(d.order(), S);
    int changes = 0;
    for (std::size_t i = 0; i < ds.size(); ++i) changes += labels[ds[i]] != labels[ds[(i + 1) % ds.size()]];
    require(changes <= 2, "components of the crossed edge's endpoints are not consecutive");

    std::optional<Plan> best;
    auto tv = unwrap_impl(d, labels, v, u);
    auto tu = unwrap_impl(d, labels, u, v);
    while (tv.size() * tu.size() > kMaxCanonicalTargets) {
        if (tv.size() >= tu.size()) {
            tv.resize(tv.size() / 2);
        } else {
            tu.resize(tu.size() / 2);
        }
    }
    Scorer scorer{ds, S, u, v, forced, offset, pre_moved};
    for (const auto& a : tv) {
        for (const auto& b : tu) {
            Order target = a.order;
            target.insert(target.end(), b.order.begin(), b.order.end());
            keep_best(best, scorer.score(target, cur));
        }
    }
    if (!forced) {
        // Move one whole component next to the other endpoint.
        for (const auto& [mover, anchor] : {std::pair{u, v}, std::pair{v, u}}) {
            std::vector<bool> comp(n, false);
            for (VertexId x = 0; x < n; ++x) comp[x] = labels[x] == labels[mover];
            Plan p;
            p.moved = members(comp);
            p.cost = static_cast<int>(p.moved.size());
            const Order sigma = rotate_to(restrict_order(d.order(), comp), mover);
            p.final_order = d.order();
            relocate_after(p.final_order, sigma, anchor);
            keep_best(best, std::move(p));
        }
    }
    return best;
}

Plan plan_for(const CircularDrawing& d, Edge e, bool forced) {
    const Graph gp = d.graph().without_edge(e);
    const auto labels = gp.component_labels();
    std::optional<Plan> best;
    if (labels[e.a] == labels[e.b]) {
        const auto bd = block_decomposition(gp);
        if (two_connected(bd, e.a, e.b)) {
            require(edges_crossing(d, e).empty(), "edge crossed although its endpoints are 2-connected without it");
            return Plan{0, {}, d.order()};
        }
        best = connected_plan(d, labels, e, forced);
    } else {
        best = disconnected_plan(d, labels, e, forced);
    }
    require(best.has_value(), "no canonical target admits the required fixed vertices");
    require(is_crossing_free(d.graph(), best->final_order), "canonical target is not crossing-free");
    return *best;
}

Untangling realize_plan(const CircularDrawing& d, const Plan& p) {
    if (p.moved.empty()) return {};
    std::vector<bool> fixed(d.size(), true);
    for (VertexId x : p.moved) fixed[x] = false;
    return untangling_to(d, p.final_order, fixed);
}

const SidePartition& candidate(const AlmostPlanarClassification& cls, Edge e) {
    for (const auto& sp : cls.candidates) {
        if (sp.edge == e) return sp;
    }
    throw InvalidArgument("edge is not involved in every crossing");
}

Untangling best_over_candidates(const CircularDrawing& d, bool forced) {
    const auto cls = require_almost_planar(d);
    if (cls.kind == DrawingKind::Planar) return {};
    std::optional<Plan> best;
    for (const auto& sp : cls.candidates) keep_best(best, plan_for(d, sp.edge, forced));
    return realize_plan(d, *best);
}

Untangling for_edge(const CircularDrawing& d, Edge e, bool forced) {
    if (!d.graph().has_edge(e.a, e.b)) throw UnknownEdge("edge is not in the graph");
    const auto cls = require_almost_planar(d);
    if (cls.kind == DrawingKind::Planar) return {};
    candidate(cls, e);
    return realize_plan(d, plan_for(d, e, forced));
}

}  // namespace

std::vector<UnwrapTarget> unwrap_targets(const CircularDrawing& d, Edge e, VertexId apex) {
    if (!d.graph().has_edge(e.a, e.b)) throw UnknownEdge("edge is not in the graph");
    if (!e.has(apex)) throw InvalidArgument("apex must be an endpoint of the edge");
    const Graph gp = d.graph().without_edge(e);
    const auto labels = gp.component_labels();
    if (labels[e.a] == labels[e.b]) throw InvalidArgument("unwrap_targets: endpoints are connected without the edge");
    return unwrap_impl(d, labels, apex, e.other(apex));
}

Untangling min_untangle(const CircularDrawing& d, Edge e) { return for_edge(d, e, false); }
Untangling min_untangle(const CircularDrawing& d) { return best_over_candidates(d, false); }
Untangling edge_fixed_untangle(const CircularDrawing& d, Edge e) { return for_edge(d, e, true); }
Untangling edge_fixed_untangle(const CircularDrawing& d) { return best_over_candidates(d, true); }

}  // namespace untangle
