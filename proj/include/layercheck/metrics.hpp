#pragma once

#include <string>
#include <vector>

#include "layercheck/graph.hpp"
#include "layercheck/scc.hpp"

namespace layercheck {

// Per-arc classification. With layer 1 on top:
//   Back   iff layer(src) > layer(dst)          (a call upward)
//   Skip   iff layer(src) < layer(dst) - 1      (a downward call bypassing a layer)
//   Normal otherwise (intra-layer or the immediately adjacent lower layer)
// The classes are mutually exclusive and exhaustive.
enum class EdgeClass { Normal, Back, Skip };

const char* to_string(EdgeClass c);

EdgeClass classify_edge(LayerIndex src_layer, LayerIndex dst_layer);
std::vector<EdgeClass> classify_edges(const LayeredGraph& g);

// Ratio of two counts. A zero denominator marks the entry degenerate (no
// incident arcs) and the value falls back to a stated default.
struct Ratio {
    double num = 0.0;
    double den = 0.0;
    double value = 0.0;
    bool degenerate = false;
};

Ratio make_ratio(double num, double den, double degenerate_value = 0.0);

bool operator==(const Ratio& a, const Ratio& b);

// bcc/bcr: back-call arcs leaving/arriving; scc/scr: skip-call arcs
// leaving/arriving. Kept per node and aggregated per layer.
struct RoleCounts {
    int bcc = 0;
    int bcr = 0;
    int scc = 0;
    int scr = 0;
};

struct ViolationSets {
    std::vector<EdgeId> bv;  // back-call arcs, ascending
    std::vector<EdgeId> sv;  // skip-call arcs, ascending
    std::vector<EdgeId> cb;  // back-call arcs whose endpoints share an SCC
    std::vector<EdgeId> cs;  // skip-call arcs whose endpoints share an SCC
    std::vector<EdgeId> rb;  // bv minus cb
    std::vector<EdgeId> rs;  // sv minus cs
    std::vector<RoleCounts> per_node;   // by node id
    std::vector<RoleCounts> per_layer;  // by layer index - 1
};

ViolationSets violation_sets(const LayeredGraph& g, const SccDecomposition& scc);

struct PenaltyConfig {
    double alpha = 0.0;
    double beta = 0.0;
    PenaltyConfig(double a, double b);  // both must lie in [0,1]
};

// Node-level indices.
Ratio bvm_caller(const ViolationSets& v, const LayeredGraph& g, NodeId m);
Ratio bvm_called(const ViolationSets& v, const LayeredGraph& g, NodeId m);
Ratio bvm(const ViolationSets& v, const LayeredGraph& g, NodeId m);
Ratio svm_caller(const ViolationSets& v, const LayeredGraph& g, NodeId m);
Ratio svm_called(const ViolationSets& v, const LayeredGraph& g, NodeId m);
Ratio svm(const ViolationSets& v, const LayeredGraph& g, NodeId m);
Ratio node_av(const ViolationSets& v, const LayeredGraph& g, NodeId m);

// Layer-level indices; the denominator is the layer's full incident-arc
// degree (intra-layer arcs counted twice).
Ratio bvl(const ViolationSets& v, const LayeredGraph& g, LayerIndex l);
Ratio svl(const ViolationSets& v, const LayeredGraph& g, LayerIndex l);

// Logical separation: share of back-call arcs incident to the layer and its
// complement 1 - ls. An isolated layer is fully separated (ls 0, lsi 1,
// marked degenerate on ls).
struct LayerSeparation {
    Ratio ls;
    double lsi = 1.0;
};

LayerSeparation logical_separation(const ViolationSets& v, const LayeredGraph& g, LayerIndex l);

// System-level ratios |BV|/|E| and |SV|/|E|.
Ratio bvs(const ViolationSets& v, const LayeredGraph& g);
Ratio svs(const ViolationSets& v, const LayeredGraph& g);

// Violation shares inside each strongly connected component with at least two
// nodes, ordered largest component first (ties by smallest node id).
//   cv:   share of component arcs classified Back or Skip
//   dcvi: share of component arcs crossing any layer boundary
struct ComponentViolation {
    int component = 0;  // index into SccDecomposition::components
    std::vector<NodeId> nodes;
    int edge_count = 0;
    Ratio cv;
    Ratio dcvi;
};

std::vector<ComponentViolation> cyclic_violation(const ViolationSets& v, const LayeredGraph& g,
                                                 const SccDecomposition& scc);

// Penalty-weighted system violation; arcs on cycles are charged twice:
//   (2a|CB| + a|RB| + 2b|CS| + b|RS|) / (|E| + |CB| + |CS|)
Ratio asv(const ViolationSets& v, const LayeredGraph& g, const PenaltyConfig& p);

// Module-based baseline indices computed from violating caller nodes.
// The system-level aggregate is one minus the mean over layers with a
// positive per-layer index (1.0 when no layer violates).
struct BaselineReport {
    std::vector<NodeId> back_nodes;  // sources of bv, distinct ascending
    std::vector<LayerIndex> back_layers;
    std::vector<Ratio> bcvi;  // per layer: violating members / layer size
    double bcvi_system = 1.0;
    std::vector<NodeId> skip_nodes;
    std::vector<LayerIndex> skip_layers;
    std::vector<Ratio> scvi;
    double scvi_system = 1.0;
};

BaselineReport baseline_indices(const ViolationSets& v, const LayeredGraph& g);

enum class LayeringStyle { ClosedConformant, Open, NonLayered };

const char* to_string(LayeringStyle s);

struct StyleThresholds {
    double tau_back = 0.0;
    StyleThresholds() = default;
    explicit StyleThresholds(double tau);  // must lie in [0,1]
};

// bvs <= tau_back and svs == 0 -> closed-conformant
// bvs <= tau_back and svs > 0  -> open
// bvs >  tau_back              -> non-layered
LayeringStyle classify_style(const ViolationSets& v, const LayeredGraph& g,
                             const StyleThresholds& thresholds = {});

// ---- aggregated report ----

struct EdgeClassEntry {
    EdgeId id = 0;
    EdgeClass cls = EdgeClass::Normal;
    LayerIndex src_layer = 1;
    LayerIndex dst_layer = 1;
};

struct NodeRow {
    NodeId id = 0;
    LayerIndex layer = 1;
    int in_deg = 0;
    int out_deg = 0;
    int deg = 0;
    Ratio bvc, bvr, tbv;
    Ratio svc, svr, tsv;
    Ratio av;
};

struct LayerRow {
    LayerIndex layer = 1;
    int in_deg = 0;
    int out_deg = 0;
    int deg = 0;
    int intra = 0;
    Ratio bvc, bvr, tbv;  // tbv is the layer back-call index
    Ratio svc, svr, tsv;  // tsv is the layer skip-call index
    Ratio av;
    Ratio ls;
    double lsi = 1.0;
};

struct AsvEntry {
    double alpha = 0.0;
    double beta = 0.0;
    Ratio value;
};

struct SystemReport {
    Ratio bvs;
    Ratio svs;
    double bvs_conformance = 1.0;  // 1 - bvs
    double svs_conformance = 1.0;  // 1 - svs
    std::vector<AsvEntry> asv;
    std::vector<ComponentViolation> components;
    double cv_system = 0.0;  // largest component's cv, 0 when acyclic
};

struct MetricsReport {
    std::vector<EdgeClassEntry> edge_classes;
    std::vector<NodeRow> node_table;
    std::vector<LayerRow> layer_table;
    SystemReport system;
    BaselineReport baseline;
    LayeringStyle style = LayeringStyle::ClosedConformant;
    double tau_back = 0.0;
};

// The seven (alpha, beta) pairs swept by default.
std::vector<PenaltyConfig> default_penalty_sweep();

struct ReportOptions {
    std::vector<PenaltyConfig> penalties = default_penalty_sweep();
    StyleThresholds thresholds;
};

MetricsReport compute_report(const LayeredGraph& g, const ReportOptions& options = {});

}  // namespace layercheck
