#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace untangle {

using VertexId = int;

/// Undirected edge, normalized so that a < b.
struct Edge {
    VertexId a = 0;
    VertexId b = 0;

    Edge() = default;
    Edge(VertexId x, VertexId y) : a(x < y ? x : y), b(x < y ? y : x) {}

    bool has(VertexId v) const { return a == v || b == v; }
    bool shares_endpoint(const Edge& o) const { return has(o.a) || has(o.b); }
    VertexId other(VertexId v) const { return v == a ? b : a; }

    auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph over string-labeled vertices.
///
/// Vertices are numbered 0..n-1 in insertion order; names are opaque
/// non-empty strings without whitespace.
class Graph {
public:
    Graph() = default;

    /// Builds a graph with vertices named `names` (in this index order).
    static Graph with_vertices(std::vector<std::string> names);
    /// Builds a graph with vertices "v1".."vn" (index i named "v{i+1}").
    static Graph numbered(int n, const std::string& prefix = "v");

    VertexId add_vertex(const std::string& name);
    /// Throws InvalidArgument on self-loops, duplicates or unknown endpoints.
    void add_edge(VertexId a, VertexId b);
    void add_edge(const std::string& a, const std::string& b);

    int size() const { return static_cast<int>(names_.size()); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<VertexId>& neighbors(VertexId v) const { return adj_[v]; }
    int degree(VertexId v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(VertexId a, VertexId b) const;

    const std::string& name(VertexId v) const { return names_[v]; }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<VertexId> find(const std::string& name) const;
    /// Throws UnknownVertex.
    VertexId id(const std::string& name) const;

    /// Subgraph with the given edge removed (vertex numbering unchanged).
    Graph without_edge(Edge e) const;
    /// Subgraph keeping only edges whose both endpoints satisfy `keep`.
    Graph induced(const std::vector<bool>& keep) const;

    /// Connected-component label per vertex, labels 0..k-1 in order of first vertex.
    std::vector<int> component_labels() const;
    int component_count() const;

    /// Same vertex names (as sets) and same edges by name.
    bool same_as(const Graph& other) const;

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, VertexId> index_;
    std::vector<std::vector<VertexId>> adj_;
    std::vector<Edge> edges_;  // sorted
};

}  // namespace untangle
