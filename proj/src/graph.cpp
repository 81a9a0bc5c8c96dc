#include "layercheck/graph.hpp"

#include <string>

#include "layercheck/errors.hpp"

namespace layercheck {

LayeredGraph::LayeredGraph(std::vector<ProgramElement> elements,
                           std::vector<DependencyEdge> edges,
                           LayerAssignment layers)
    : elements_(std::move(elements)), edges_(std::move(edges)), layers_(std::move(layers)) {
    const int m = node_count();
    if (m < 1)
        throw GraphError("graph must contain at least one element");
    for (int i = 0; i < m; ++i) {
        if (elements_[i].id != i)
            throw GraphError("element ids must be dense from 0; got id " +
                             std::to_string(elements_[i].id) + " at position " + std::to_string(i));
        if (elements_[i].name.empty())
            throw GraphError("element " + std::to_string(i) + " has an empty name");
    }

    if (layers_.layer_count < 1)
        throw GraphError("layer count must be at least 1");
    if (static_cast<int>(layers_.layer_of.size()) != m)
        throw GraphError("layer assignment covers " + std::to_string(layers_.layer_of.size()) +
                         " elements, graph has " + std::to_string(m));
    for (int i = 0; i < m; ++i) {
        const LayerIndex l = layers_.layer_of[i];
        if (l < 1 || l > layers_.layer_count)
            throw GraphError("element '" + elements_[i].name + "' assigned to layer " +
                             std::to_string(l) + ", valid range is 1.." +
                             std::to_string(layers_.layer_count));
    }

    out_adj_.assign(m, {});
    node_degrees_.assign(m, {});
    layer_degrees_.assign(layers_.layer_count, {});
    layer_sizes_.assign(layers_.layer_count, 0);
    for (int i = 0; i < m; ++i)
        ++layer_sizes_[layers_.layer_of[i] - 1];

    for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
        const DependencyEdge& e = edges_[i];
        if (e.id != i)
            throw GraphError("edge ids must be dense from 0; got id " + std::to_string(e.id) +
                             " at position " + std::to_string(i));
        if (e.src < 0 || e.src >= m || e.dst < 0 || e.dst >= m)
            throw GraphError("edge " + std::to_string(i) + " references a missing element");
        if (e.src == e.dst)
            throw GraphError("edge " + std::to_string(i) + " is a self-loop on '" +
                             elements_[e.src].name + "'");
        out_adj_[e.src].emplace_back(e.dst, e.id);
        ++node_degrees_[e.src].out;
        ++node_degrees_[e.dst].in;
        LayerDegrees& src_layer = layer_degrees_[layers_.layer_of[e.src] - 1];
        LayerDegrees& dst_layer = layer_degrees_[layers_.layer_of[e.dst] - 1];
        ++src_layer.out;
        ++dst_layer.in;
        if (layers_.layer_of[e.src] == layers_.layer_of[e.dst])
            ++src_layer.intra;
    }
    for (auto& d : node_degrees_)
        d.total = d.in + d.out;
    for (auto& d : layer_degrees_)
        d.total = d.in + d.out;
}

const ProgramElement& LayeredGraph::element(NodeId id) const {
    if (!has_node(id))
        throw GraphError("unknown element id " + std::to_string(id));
    return elements_[id];
}

const DependencyEdge& LayeredGraph::edge(EdgeId id) const {
    if (!has_edge(id))
        throw GraphError("unknown edge id " + std::to_string(id));
    return edges_[id];
}

int LayeredGraph::layer_size(LayerIndex l) const {
    if (!has_layer(l))
        throw GraphError("layer index " + std::to_string(l) + " out of range 1.." +
                         std::to_string(layer_count()));
    return layer_sizes_[l - 1];
}

NodeId edge_src(const LayeredGraph& g, EdgeId e) {
    return g.edge(e).src;
}

NodeId edge_dst(const LayeredGraph& g, EdgeId e) {
    return g.edge(e).dst;
}

LayerIndex layer_of(const LayeredGraph& g, NodeId p) {
    g.element(p);
    return g.layers().layer_of[p];
}

NodeDegrees node_degrees(const LayeredGraph& g, NodeId m) {
    g.element(m);
    return g.node_degrees_[m];
}

LayerDegrees layer_degrees(const LayeredGraph& g, LayerIndex l) {
    if (!g.has_layer(l))
        throw GraphError("layer index " + std::to_string(l) + " out of range 1.." +
                         std::to_string(g.layer_count()));
    return g.layer_degrees_[l - 1];
}

}  // namespace layercheck
