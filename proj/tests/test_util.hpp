#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "layercheck/graph.hpp"
#include "layercheck/ingest.hpp"

namespace test_util {

inline std::string fixture_path(const std::string& name) {
    return std::string(LAYERCHECK_FIXTURE_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(static_cast<bool>(in), "cannot open " << path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline layercheck::LayeredGraph load_sample_network2() {
    const auto doc = layercheck::parse_json_graph(read_file(fixture_path("sample_network2.json")));
    const auto layers =
        layercheck::parse_layer_assignment(read_file(fixture_path("sample_network2_layers.json")));
    return layercheck::bind_graph(doc, layers).graph;
}

// Node id of the fixture element with the given name ("1".."10").
inline layercheck::NodeId node_named(const layercheck::LayeredGraph& g, const std::string& name) {
    for (const auto& el : g.elements())
        if (el.name == name)
            return el.id;
    REQUIRE_MESSAGE(false, "no element named " << name);
    return -1;
}

// Edge id of the unique arc name_src -> name_dst.
inline layercheck::EdgeId edge_named(const layercheck::LayeredGraph& g, const std::string& src,
                                     const std::string& dst) {
    for (const auto& e : g.edges())
        if (g.element(e.src).name == src && g.element(e.dst).name == dst)
            return e.id;
    REQUIRE_MESSAGE(false, "no arc " << src << "->" << dst);
    return -1;
}

// Arbitrary layered multigraph: uniform layer assignment (empty layers
// possible), uniform ordered pairs with replacement (parallel edges
// possible), no self-loops.
inline layercheck::LayeredGraph random_layered_graph(std::mt19937_64& rng, int max_nodes = 30,
                                                     int max_layers = 5, int max_edges = 120) {
    using namespace layercheck;
    const int m = 1 + static_cast<int>(rng() % max_nodes);
    const int n = 1 + static_cast<int>(rng() % max_layers);
    std::vector<ProgramElement> elements;
    LayerAssignment layers;
    layers.layer_count = n;
    for (int i = 0; i < m; ++i) {
        elements.push_back({i, "n" + std::to_string(i), {}});
        layers.layer_of.push_back(1 + static_cast<int>(rng() % n));
    }
    std::vector<DependencyEdge> edges;
    if (m > 1) {
        const int e = static_cast<int>(rng() % (max_edges + 1));
        for (int i = 0; i < e; ++i) {
            const NodeId src = static_cast<NodeId>(rng() % m);
            NodeId dst = static_cast<NodeId>(rng() % (m - 1));
            if (dst >= src)
                ++dst;
            edges.push_back({static_cast<EdgeId>(edges.size()), src, dst});
        }
    }
    return LayeredGraph(std::move(elements), std::move(edges), std::move(layers));
}

}  // namespace test_util
