#pragma once

#include <optional>
#include <string>
#include <vector>

#include "layercheck/graph.hpp"

namespace layercheck {

// Trie over the dot-separated segments of element names. Each tree node
// carries the graph nodes at or below it; children are ordered by segment.
struct ResponsibilityTree {
    struct Node {
        std::string path;     // dotted prefix, empty at the root
        std::string segment;  // last path segment
        int depth = 0;        // root is 0
        std::vector<int> children;
        std::optional<NodeId> element;  // graph node whose name equals path
        std::vector<NodeId> members;    // graph nodes in this subtree, ascending
    };
    std::vector<Node> nodes;  // nodes[0] is the root
};

ResponsibilityTree build_responsibility_tree(const LayeredGraph& g);

// Longest path length from the root to any tree node.
int tree_depth(const ResponsibilityTree& tree);

// Disjoint groups of graph nodes sharing a namespace prefix of depth at most
// `granularity`; elements whose names are shorter cluster at their own leaf.
struct ClusterSet {
    int granularity = 1;
    struct Cluster {
        std::string label;
        std::vector<NodeId> members;

        friend bool operator==(const Cluster&, const Cluster&) = default;
    };
    std::vector<Cluster> clusters;  // ordered by label
};

ClusterSet cluster_at_granularity(const ResponsibilityTree& tree, int granularity);

// Orders clusters to minimize the total arc weight pointing from lower
// layers to higher ones. Up to 15 clusters the minimum is found exactly by a
// subset sweep; beyond that a bottom-up greedy (least new back weight; ties
// prefer more arcs into the placed stack, then larger incoming weight, then
// the smaller label) plus insertion improvement approximates it. Returned
// indices list the top cluster first; the result is deterministic either
// way.
std::vector<int> order_clusters(const std::vector<std::vector<int>>& weight,
                                const std::vector<std::string>& labels);

// Total weight of arcs that point from a lower cluster to a higher one under
// the given top-first order.
int back_arc_weight(const std::vector<std::vector<int>>& weight, const std::vector<int>& order);

// Condenses the graph onto the clusters, orders them, then merges adjacent
// ranks (smallest combined member count first) until exactly layer_count
// layers remain.
LayerAssignment order_clusters_into_layers(const LayeredGraph& g, const ClusterSet& clusters,
                                           int layer_count);

}  // namespace layercheck
