#pragma once

#include <optional>
#include <vector>

#include "untangle/drawing.hpp"
#include "untangle/reductions.hpp"

namespace untangle {

inline constexpr int kDefaultOracleMaxN = 9;

using Order = std::vector<VertexId>;

/// All crossing-free cyclic orders of g, each starting with vertex 0.
/// Reflections are distinct orders. Throws TooLarge when |V| > nmax.
std::vector<Order> enumerate_planar_orders(const Graph& g, int nmax = kDefaultOracleMaxN);
/// Same set, by filtering every permutation that starts with vertex 0.
std::vector<Order> enumerate_planar_orders_naive(const Graph& g, int nmax = kDefaultOracleMaxN);

struct ExactUntangling {
    int moved_count = 0;
    Order target;                 ///< optimal final order
    std::vector<VertexId> fixed;  ///< sorted, kept in place
};

/// Longest common cyclic subsequence size by a cubic DP, independent of the
/// sequence module. If both `must` vertices are given they are forced in.
int oracle_lccs(const Order& a, const Order& b, std::vector<VertexId>* witness = nullptr,
                const std::vector<VertexId>& must = {});

/// Minimum number of moved vertices over all planar target orders.
/// Throws TooLarge, NotOuterplanar.
ExactUntangling exact_min_untangle(const CircularDrawing& d, int nmax = kDefaultOracleMaxN);
ExactUntangling exact_min_untangle(const CircularDrawing& d, const std::vector<Order>& planar_orders);

/// Same, restricted to untanglings that keep both endpoints of e fixed.
ExactUntangling exact_min_untangle_edge_fixed(const CircularDrawing& d, Edge e, int nmax = kDefaultOracleMaxN);
ExactUntangling exact_min_untangle_edge_fixed(const CircularDrawing& d, Edge e,
                                              const std::vector<Order>& planar_orders);

struct DistIcorBudget {
    int max_chunks = 8;
    int max_length = 10000;
};

/// Exhaustive over chunk permutations and reversals; a witness when solvable.
/// Throws TooLarge.
std::optional<DistIcorWitness> exact_disticor(const DistIcorInstance& inst, DistIcorBudget budget = {});

/// Exhaustive over triplet partitions; a witness when solvable. Throws TooLarge for m > 4.
std::optional<std::vector<Triplet>> exact_3partition(const ThreePartitionInstance& inst);

}  // namespace untangle
