#include <doctest.h>

#include <numeric>
#include <random>

#include "layercheck/errors.hpp"
#include "layercheck/graph.hpp"
#include "test_util.hpp"

using namespace layercheck;
using test_util::edge_named;
using test_util::load_sample_network2;
using test_util::node_named;
using test_util::random_layered_graph;

namespace {

LayeredGraph tiny_graph(std::vector<DependencyEdge> edges, std::vector<LayerIndex> layer_of,
                        int layer_count) {
    std::vector<ProgramElement> elements;
    for (size_t i = 0; i < layer_of.size(); ++i)
        elements.push_back({static_cast<NodeId>(i), "n" + std::to_string(i), {}});
    LayerAssignment layers;
    layers.layer_count = layer_count;
    layers.layer_of = std::move(layer_of);
    return LayeredGraph(std::move(elements), std::move(edges), std::move(layers));
}

}  // namespace

TEST_CASE("edge src and dst lookups") {
    const LayeredGraph g = load_sample_network2();
    CHECK(edge_src(g, edge_named(g, "4", "1")) == node_named(g, "4"));
    CHECK(edge_src(g, edge_named(g, "1", "2")) == node_named(g, "1"));
    CHECK(edge_dst(g, edge_named(g, "2", "10")) == node_named(g, "10"));
    CHECK(edge_dst(g, edge_named(g, "5", "3")) == node_named(g, "3"));
    CHECK_THROWS_AS(edge_src(g, 99), GraphError);
    CHECK_THROWS_AS(edge_dst(g, -1), GraphError);

    const LayeredGraph h = tiny_graph({{0, 1, 0}}, {1, 1}, 1);
    CHECK(edge_src(h, 0) == 1);
    CHECK(edge_dst(h, 0) == 0);
}

TEST_CASE("layer lookup is total after construction") {
    const LayeredGraph g = load_sample_network2();
    CHECK(layer_of(g, node_named(g, "1")) == 1);
    CHECK(layer_of(g, node_named(g, "6")) == 2);
    CHECK(layer_of(g, node_named(g, "10")) == 3);
    CHECK_THROWS_AS(layer_of(g, 42), GraphError);

    const LayeredGraph single = tiny_graph({}, {1, 1, 1}, 1);
    for (NodeId m = 0; m < single.node_count(); ++m)
        CHECK(layer_of(single, m) == 1);
}

TEST_CASE("node degrees match the worked example") {
    const LayeredGraph g = load_sample_network2();
    const NodeDegrees d2 = node_degrees(g, node_named(g, "2"));
    CHECK(d2.in == 1);
    CHECK(d2.out == 3);
    CHECK(d2.total == 4);
    const NodeDegrees d4 = node_degrees(g, node_named(g, "4"));
    CHECK(d4.in == 2);
    CHECK(d4.out == 3);
    CHECK(d4.total == 5);

    const LayeredGraph h = tiny_graph({{0, 0, 1}}, {1, 1, 1}, 1);
    const NodeDegrees isolated = node_degrees(h, 2);
    CHECK(isolated.in == 0);
    CHECK(isolated.out == 0);
    CHECK(isolated.total == 0);
}

TEST_CASE("layer degrees match the worked example") {
    const LayeredGraph g = load_sample_network2();
    const LayerDegrees l1 = layer_degrees(g, 1);
    CHECK(l1.in == 3);
    CHECK(l1.out == 6);
    CHECK(l1.total == 9);
    CHECK(l1.intra == 1);
    const LayerDegrees l2 = layer_degrees(g, 2);
    CHECK(l2.in == 5);
    CHECK(l2.out == 9);
    CHECK(l2.total == 14);
    CHECK(l2.intra == 2);
    const LayerDegrees l3 = layer_degrees(g, 3);
    CHECK(l3.in == 7);
    CHECK(l3.out == 0);
    CHECK(l3.total == 7);
    CHECK(l3.intra == 0);
    CHECK_THROWS_AS(layer_degrees(g, 0), GraphError);
    CHECK_THROWS_AS(layer_degrees(g, 4), GraphError);
}

TEST_CASE("construction rejects broken invariants") {
    CHECK_THROWS_AS(tiny_graph({{0, 0, 0}}, {1, 1}, 1), GraphError);           // self-loop
    CHECK_THROWS_AS(tiny_graph({{0, 0, 7}}, {1, 1}, 1), GraphError);           // dangling endpoint
    CHECK_THROWS_AS(tiny_graph({}, {1, 2}, 1), GraphError);                    // layer out of range
    CHECK_THROWS_AS(tiny_graph({}, {0, 1}, 1), GraphError);                    // layer below 1
    CHECK_THROWS_AS(LayeredGraph({}, {}, LayerAssignment{}), GraphError);      // empty graph
    CHECK_THROWS_AS(LayeredGraph({{0, "", {}}}, {}, LayerAssignment{1, {1}, {}}), GraphError);
    CHECK_THROWS_AS(LayeredGraph({{1, "x", {}}}, {}, LayerAssignment{1, {1}, {}}), GraphError);
    CHECK_THROWS_AS(tiny_graph({{1, 0, 1}}, {1, 1}, 1), GraphError);           // non-dense edge id
}

TEST_CASE("degree identities on random graphs") {
    std::mt19937_64 rng(7001);
    for (int trial = 0; trial < 100; ++trial) {
        const LayeredGraph g = random_layered_graph(rng);
        int in_sum = 0, out_sum = 0;
        for (NodeId m = 0; m < g.node_count(); ++m) {
            const NodeDegrees d = node_degrees(g, m);
            in_sum += d.in;
            out_sum += d.out;
        }
        CHECK(in_sum == g.edge_count());
        CHECK(out_sum == g.edge_count());

        int inter_layer = 0;
        for (const DependencyEdge& e : g.edges())
            if (layer_of(g, e.src) != layer_of(g, e.dst))
                ++inter_layer;

        int ext_in_sum = 0, ext_out_sum = 0;
        for (LayerIndex l = 1; l <= g.layer_count(); ++l) {
            const LayerDegrees d = layer_degrees(g, l);
            int node_total = 0;
            for (NodeId m = 0; m < g.node_count(); ++m)
                if (layer_of(g, m) == l)
                    node_total += node_degrees(g, m).total;
            CHECK(d.total == node_total);
            CHECK(d.total == (d.in - d.intra) + (d.out - d.intra) + 2 * d.intra);
            ext_in_sum += d.in - d.intra;
            ext_out_sum += d.out - d.intra;
        }
        CHECK(ext_in_sum == inter_layer);
        CHECK(ext_out_sum == inter_layer);
    }
}
