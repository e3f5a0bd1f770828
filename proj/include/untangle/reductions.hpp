#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "untangle/drawing.hpp"

namespace untangle {

struct ThreePartitionInstance {
    int m = 0;
    long long K = 0;
    std::vector<long long> a;  ///< 3m elements

    /// Throws InvalidInstance unless |a| = 3m and K/4 < a_i < K/2.
    void validate() const;
    long long sum() const;
};

struct DistIcorInstance {
    std::vector<std::vector<int>> chunks;
    int M = 1;

    /// Total number of entries L.
    int total_length() const;
    /// All entries globally distinct.
    bool distinct() const;
};

/// Per-chunk bookkeeping of the 3-Partition reduction.
struct ChunkInfo {
    int element = 0;                     ///< index into the (normalized) multiset
    long long a = 0;                     ///< its value
    std::vector<long long> starts;       ///< incremental-sequence starts, decreasing
    std::vector<long long> projection;   ///< first word entry per position
};

struct ReducedThreePartition {
    ThreePartitionInstance normalized;
    long long X = 0;
    long long cell = 0;                  ///< K + 3X
    DistIcorInstance instance;           ///< chunk i corresponds to element i
    std::vector<ChunkInfo> info;
};

/// Throws InvalidInstance.
ReducedThreePartition reduce_3p_to_disticor(const ThreePartitionInstance& inst);

struct PropertyReport {
    /// One line per property (i)..(v) describing what was checked.
    std::vector<std::string> lines;
};

/// Verifies the five chunk properties. Throws PropertyViolation naming the
/// failing property and a witness.
PropertyReport chunk_property_check(const ReducedThreePartition& reduced);

/// A chunk arrangement together with a strictly increasing subsequence of its concatenation.
struct DistIcorWitness {
    std::vector<int> order;                       ///< chunk indices
    std::vector<bool> reversed;                   ///< per chunk index
    std::vector<std::pair<int, int>> picks;       ///< (chunk, position inside the chunk as stored)
    std::vector<int> subsequence;                 ///< the ranks, strictly increasing

    /// Checks that the witness is a strictly increasing subsequence of the arrangement.
    bool valid_for(const DistIcorInstance& inst) const;
};

using Triplet = std::array<int, 3>;

/// Builds the length-M increasing subsequence from a 3-Partition solution.
/// Throws NotAWitness if `partition` is not one.
DistIcorWitness witness_3p_to_disticor(const ReducedThreePartition& reduced, const std::vector<Triplet>& partition);

struct CircularUntanglingInstance {
    CircularDrawing drawing;
    int K = 0;  ///< move budget L - M
};

/// Cycles through a shared vertex v0, one per chunk; order v0, v1, ..., vL.
/// Entries are first replaced by their ranks 1..L. Throws NotDistinct.
CircularUntanglingInstance reduce_disticor_to_cu(const DistIcorInstance& inst);

}  // namespace untangle
