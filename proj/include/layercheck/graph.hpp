#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace layercheck {

using NodeId = int;
using EdgeId = int;

// Layers are numbered 1..n with 1 the topmost layer; indices grow downward.
using LayerIndex = int;

struct ProgramElement {
    NodeId id = 0;
    std::string name;
    std::map<std::string, std::string> metadata;
};

struct DependencyEdge {
    EdgeId id = 0;
    NodeId src = 0;
    NodeId dst = 0;
};

struct LayerAssignment {
    int layer_count = 1;
    std::vector<LayerIndex> layer_of;  // indexed by node id, values in 1..layer_count
    std::map<LayerIndex, std::string> layer_names;
};

struct NodeDegrees {
    int in = 0;
    int out = 0;
    int total = 0;
};

// Per-layer degrees. in/out count every arc whose destination/source lies in
// the layer, so intra-layer arcs appear in both; total = in + out =
// external_in + external_out + 2 * intra.
struct LayerDegrees {
    int in = 0;
    int out = 0;
    int total = 0;
    int intra = 0;
};

// Directed multigraph of program elements plus a total layer assignment.
// Immutable once constructed; construction validates every invariant
// (dense ids, non-empty names, no self-loops, endpoints in range, every
// node assigned a layer in 1..n), so lookups afterwards are total given a
// valid id. Safe to share across threads.
class LayeredGraph {
public:
    LayeredGraph(std::vector<ProgramElement> elements,
                 std::vector<DependencyEdge> edges,
                 LayerAssignment layers);

    int node_count() const { return static_cast<int>(elements_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int layer_count() const { return layers_.layer_count; }

    const std::vector<ProgramElement>& elements() const { return elements_; }
    const std::vector<DependencyEdge>& edges() const { return edges_; }
    const LayerAssignment& layers() const { return layers_; }

    const ProgramElement& element(NodeId id) const;
    const DependencyEdge& edge(EdgeId id) const;

    // Successors of each node as (neighbor, edge id) pairs, in edge order.
    const std::vector<std::vector<std::pair<NodeId, EdgeId>>>& out_adjacency() const {
        return out_adj_;
    }

    bool has_node(NodeId id) const { return id >= 0 && id < node_count(); }
    bool has_edge(EdgeId id) const { return id >= 0 && id < edge_count(); }
    bool has_layer(LayerIndex l) const { return l >= 1 && l <= layer_count(); }

    // Number of elements assigned to layer l.
    int layer_size(LayerIndex l) const;

private:
    std::vector<ProgramElement> elements_;
    std::vector<DependencyEdge> edges_;
    LayerAssignment layers_;
    std::vector<std::vector<std::pair<NodeId, EdgeId>>> out_adj_;
    std::vector<NodeDegrees> node_degrees_;
    std::vector<LayerDegrees> layer_degrees_;
    std::vector<int> layer_sizes_;

    friend NodeDegrees node_degrees(const LayeredGraph&, NodeId);
    friend LayerDegrees layer_degrees(const LayeredGraph&, LayerIndex);
};

NodeId edge_src(const LayeredGraph& g, EdgeId e);
NodeId edge_dst(const LayeredGraph& g, EdgeId e);
LayerIndex layer_of(const LayeredGraph& g, NodeId p);
NodeDegrees node_degrees(const LayeredGraph& g, NodeId m);
LayerDegrees layer_degrees(const LayeredGraph& g, LayerIndex l);

}  // namespace layercheck
