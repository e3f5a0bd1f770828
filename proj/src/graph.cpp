#include "untangle/graph.hpp"

#include <algorithm>
#include <numeric>

#include "untangle/error.hpp"

namespace untangle {

Graph Graph::with_vertices(std::vector<std::string> names) {
    Graph g;
    for (auto& n : names) g.add_vertex(n);
    return g;
}

Graph Graph::numbered(int n, const std::string& prefix) {
    Graph g;
    for (int i = 0; i < n; ++i) g.add_vertex(prefix + std::to_string(i + 1));
    return g;
}

VertexId Graph::add_vertex(const std::string& name) {
    if (name.empty()) throw InvalidArgument("empty vertex name");
    for (char c : name) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r')
            throw InvalidArgument("vertex name contains whitespace: '" + name + "'");
    }
    if (index_.count(name)) throw InvalidArgument("duplicate vertex '" + name + "'");
    const VertexId v = size();
    names_.push_back(name);
    index_.emplace(name, v);
    adj_.emplace_back();
    return v;
}

void Graph::add_edge(VertexId a, VertexId b) {
    if (a < 0 || b < 0 || a >= size() || b >= size()) throw InvalidArgument("edge endpoint out of range");
    if (a == b) throw InvalidArgument("self-loop at '" + names_[a] + "'");
    const Edge e(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it != edges_.end() && *it == e)
        throw InvalidArgument("duplicate edge " + names_[a] + "-" + names_[b]);
    edges_.insert(it, e);
    adj_[a].insert(std::lower_bound(adj_[a].begin(), adj_[a].end(), b), b);
    adj_[b].insert(std::lower_bound(adj_[b].begin(), adj_[b].end(), a), a);
}

void Graph::add_edge(const std::string& a, const std::string& b) { add_edge(id(a), id(b)); }

bool Graph::has_edge(VertexId a, VertexId b) const {
    if (a == b) return false;
    const auto& n = adj_[a];
    return std::binary_search(n.begin(), n.end(), b);
}

std::optional<VertexId> Graph::find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

VertexId Graph::id(const std::string& name) const {
    auto v = find(name);
    if (!v) throw UnknownVertex(name);
    return *v;
}

Graph Graph::without_edge(Edge e) const {
    Graph g = with_vertices(names_);
    for (const Edge& f : edges_) {
        if (f != e) g.add_edge(f.a, f.b);
    }
    return g;
}

Graph Graph::induced(const std::vector<bool>& keep) const {
    Graph g = with_vertices(names_);
    for (const Edge& f : edges_) {
        if (keep[f.a] && keep[f.b]) g.add_edge(f.a, f.b);
    }
    return g;
}

std::vector<int> Graph::component_labels() const {
    std::vector<int> label(size(), -1);
    int next = 0;
    std::vector<VertexId> stack;
    for (VertexId s = 0; s < size(); ++s) {
        if (label[s] >= 0) continue;
        label[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            VertexId x = stack.back();
            stack.pop_back();
            for (VertexId y : adj_[x]) {
                if (label[y] < 0) {
                    label[y] = next;
                    stack.push_back(y);
                }
            }
        }
        ++next;
    }
    return label;
}

int Graph::component_count() const {
    auto labels = component_labels();
    return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

bool Graph::same_as(const Graph& other) const {
    if (size() != other.size() || edge_count() != other.edge_count()) return false;
    for (const auto& n : names_) {
        if (!other.find(n)) return false;
    }
    for (const Edge& e : edges_) {
        if (!other.has_edge(other.id(names_[e.a]), other.id(names_[e.b]))) return false;
    }
    return true;
}

}  // namespace untangle
