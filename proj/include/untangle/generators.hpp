#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "untangle/drawing.hpp"

namespace untangle {

/// The n-cycle v1..vn drawn as v2, v4, ..., vn, v(n-1), ..., v3, v1.
/// Throws InvalidArgument unless n >= 4 is even.
CircularDrawing gen_fig5(int n);

/// Connected random outerplanar graph on n vertices named v1..vn: a random
/// spanning tree of a random polygon triangulation plus each remaining edge
/// with probability `extra`. Vertex numbering is shuffled.
Graph random_outerplanar_graph(int n, std::mt19937_64& rng, double extra = 0.3);

/// A uniformly shuffled crossing-free cyclic order (block orientations,
/// child placement and component nesting chosen at random). Throws NotOuterplanar.
std::vector<VertexId> random_planar_order(const Graph& g, std::mt19937_64& rng);

enum class RandomProfile { OuterplanarOrderPerturbed, AlmostPlanar, Case22, Disconnected };

struct RandomOptions {
    int n = 10;
    std::uint64_t seed = 1;
    RandomProfile profile = RandomProfile::AlmostPlanar;
    int perturb = 3;       ///< relocations for OuterplanarOrderPerturbed
    double extra = 0.3;    ///< extra-edge probability
    int max_retries = 500;
};

/// Deterministic in the options. Throws GenerationFailed when retries run out.
CircularDrawing gen_random(const RandomOptions& opt);

std::optional<RandomProfile> parse_profile(const std::string& s);
const char* to_string(RandomProfile p);

}  // namespace untangle
