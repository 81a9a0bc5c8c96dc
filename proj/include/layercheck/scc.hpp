#pragma once

#include <vector>

#include "layercheck/graph.hpp"

namespace layercheck {

// Strongly-connected-component partition of a LayeredGraph. Components are
// ordered by their smallest contained node id, members ascending.
// component_edges[c] holds the ids of edges with both endpoints in
// components[c], ascending.
struct SccDecomposition {
    std::vector<std::vector<NodeId>> components;
    std::vector<int> component_of;
    std::vector<std::vector<EdgeId>> component_edges;
};

SccDecomposition scc_decompose(const LayeredGraph& g);

// An edge lies on some cycle iff its endpoints share a component (self-loops
// are banned, so that component has at least two nodes).
inline bool edge_on_cycle(const SccDecomposition& scc, const DependencyEdge& e) {
    return scc.component_of[e.src] == scc.component_of[e.dst];
}

inline constexpr int kDefaultCycleLimit = 10000;

// Elementary cycles as node sequences, each rotated to start at its smallest
// node id, in lexicographic order of that form. Parallel edges do not
// duplicate cycles. Enumeration stops once `limit` cycles are collected;
// `truncated` reports that at least one further cycle exists.
struct CycleEnumeration {
    std::vector<std::vector<NodeId>> cycles;
    bool truncated = false;
};

CycleEnumeration enumerate_simple_cycles(const LayeredGraph& g, int limit = kDefaultCycleLimit);

}  // namespace layercheck
