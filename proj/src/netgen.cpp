#include "layercheck/netgen.hpp"

#include <random>
#include <string>

#include "layercheck/errors.hpp"

namespace layercheck {

LayeredGraph generate(const GenSpec& spec) {
    if (spec.nodes_per_layer.empty())
        throw GraphError("generator spec needs at least one layer");
    for (int count : spec.nodes_per_layer)
        if (count < 1)
            throw GraphError("every layer must hold at least one node");
    for (double p : {spec.p_down_adjacent, spec.p_intra, spec.p_back, spec.p_skip})
        if (p < 0.0 || p > 1.0)
            throw GraphError("arc probabilities must lie in [0,1]");

    const int n = static_cast<int>(spec.nodes_per_layer.size());
    std::vector<ProgramElement> elements;
    LayerAssignment layers;
    layers.layer_count = n;
    for (int l = 1; l <= n; ++l) {
        for (int i = 1; i <= spec.nodes_per_layer[l - 1]; ++i) {
            const NodeId id = static_cast<NodeId>(elements.size());
            elements.push_back({id, "l" + std::to_string(l) + ".n" + std::to_string(i), {}});
            layers.layer_of.push_back(l);
        }
    }

    std::mt19937_64 rng(spec.seed);
    // top 53 bits -> uniform double in [0,1); pinned, unlike the
    // distribution adapters in <random>
    auto draw = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

    const int m = static_cast<int>(elements.size());
    std::vector<DependencyEdge> edges;
    for (NodeId u = 0; u < m; ++u) {
        for (NodeId v = 0; v < m; ++v) {
            if (u == v)
                continue;
            const double x = draw();
            const LayerIndex lu = layers.layer_of[u];
            const LayerIndex lv = layers.layer_of[v];
            double p = 0.0;
            if (lv == lu)
                p = spec.p_intra;
            else if (lv == lu + 1)
                p = spec.p_down_adjacent;
            else if (lv < lu)
                p = spec.p_back;
            else
                p = spec.p_skip;
            if (x < p)
                edges.push_back({static_cast<EdgeId>(edges.size()), u, v});
        }
    }
    return LayeredGraph(std::move(elements), std::move(edges), std::move(layers));
}

}  // namespace layercheck
