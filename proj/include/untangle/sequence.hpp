#pragma once

#include <optional>
#include <span>
#include <vector>

#include "untangle/graph.hpp"

namespace untangle {

enum class Direction { Increasing, Decreasing };

/// Indices of one longest strictly increasing subsequence. O(L log L).
std::vector<std::size_t> lis_indices(std::span<const int> s);
/// Values of one longest strictly increasing subsequence.
std::vector<int> lis(std::span<const int> s);
/// Length only.
std::size_t lis_length(std::span<const int> s);

/// Longest strictly monotone cyclic subsequence.
struct CyclicWitness {
    std::size_t rotation = 0;          ///< the sequence is read starting at this index
    std::vector<std::size_t> indices;  ///< indices into the original (unrotated) sequence
    std::vector<int> values;
    std::size_t size() const { return values.size(); }
};

/// Best lis over all rotations; among equal lengths the smallest rotation wins.
CyclicWitness lics(std::span<const int> s, Direction dir = Direction::Increasing);
std::size_t lics_length(std::span<const int> s, Direction dir = Direction::Increasing);

/// Longest set of vertices whose relative cyclic order agrees in a and b.
/// Both must be permutations of the same vertex set. Returned sorted.
std::vector<VertexId> lccs(std::span<const VertexId> a, std::span<const VertexId> b);

/// Like lccs, but the witness must contain every vertex of `required`.
/// Returns nullopt when the required vertices disagree in cyclic order.
std::optional<std::vector<VertexId>> lccs_containing(std::span<const VertexId> a, std::span<const VertexId> b,
                                                     std::span<const VertexId> required);

/// A cyclic sequence of the ranks 0..sr with no increasing cyclic subsequence
/// of s+2 terms and no decreasing one of r+2 terms.
/// Throws InvalidArgument for s or r < 1, Unsupported when the search gives up.
std::vector<int> es_tight_cyclic(int s, int r);

/// A cyclic permutation of 0..n-1 with lics_inc <= inc and lics_dec <= dec,
/// or nullopt if the bounded search finds none.
std::optional<std::vector<int>> find_cyclic_permutation(int n, int inc, int dec);

}  // namespace untangle
