#pragma once

#include <vector>

#include "untangle/drawing.hpp"
#include "untangle/graph.hpp"

namespace untangle {

/// A 2-connected component (or a bridge).
struct Block {
    std::vector<VertexId> vertices;  ///< sorted
    std::vector<Edge> edges;         ///< sorted
    /// Hamiltonian cycle order H(B). For a bridge, its two endpoints.
    std::vector<VertexId> cycle;

    bool contains(VertexId v) const;
};

struct BlockDecomposition {
    std::vector<Block> blocks;
    std::vector<VertexId> cut_vertices;        ///< sorted
    std::vector<std::vector<int>> blocks_of;   ///< per vertex, indices of blocks containing it
    std::vector<int> edge_block;               ///< parallel to Graph::edges()

    /// Index of the block containing edge e, or -1.
    int block_of_edge(const Graph& g, Edge e) const;
};

/// Blocks, cut vertices and per-block Hamiltonian cycles.
/// Throws NotOuterplanar if some block has no crossing-free Hamiltonian order.
BlockDecomposition block_decomposition(const Graph& g);

/// Vertex set (sorted) of the connected component of G - E(B) containing `root`.
std::vector<VertexId> attachment(const Graph& g, const Block& block, VertexId root);

/// All attachments of `block`, in the order of block.cycle.
std::vector<std::vector<VertexId>> attachments(const Graph& g, const Block& block);

/// A crossing-free circular drawing. Components are concatenated in order of
/// their smallest vertex. Throws NotOuterplanar.
CircularDrawing planar_circular_order(const Graph& g);
CircularDrawing planar_circular_order(std::shared_ptr<const Graph> g);

bool is_outerplanar(const Graph& g);

/// True iff u and v lie on a common cycle (share a block with >= 3 vertices).
bool two_connected(const BlockDecomposition& bd, VertexId u, VertexId v);

}  // namespace untangle
