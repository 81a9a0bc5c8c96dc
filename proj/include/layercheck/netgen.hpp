#pragma once

#include <cstdint>
#include <vector>

#include "layercheck/graph.hpp"

namespace layercheck {

// Synthetic layered network description. Each ordered node pair draws an arc
// with the probability of its class, determined by the pair's layers:
// immediately adjacent downward, intra-layer, upward (back), or downward by
// two or more (skip). Generation is reproducible: same spec, same graph.
struct GenSpec {
    std::vector<int> nodes_per_layer;  // one entry per layer, top first
    double p_down_adjacent = 0.0;
    double p_intra = 0.0;
    double p_back = 0.0;
    double p_skip = 0.0;
    std::uint64_t seed = 0;
};

// Pinned pseudo-random source: std::mt19937_64 seeded with spec.seed, one
// draw per ordered pair in row-major (src, dst) order, mapped to [0,1) via
// the top 53 bits. Node names are "l<layer>.n<index>".
LayeredGraph generate(const GenSpec& spec);

}  // namespace layercheck
