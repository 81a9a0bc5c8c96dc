#include "layercheck/metrics.hpp"

#include <algorithm>
#include <set>

#include "layercheck/errors.hpp"

namespace layercheck {

const char* to_string(EdgeClass c) {
    switch (c) {
        case EdgeClass::Normal: return "Normal";
        case EdgeClass::Back: return "Back";
        case EdgeClass::Skip: return "Skip";
    }
    return "?";
}

EdgeClass classify_edge(LayerIndex src_layer, LayerIndex dst_layer) {
    if (src_layer > dst_layer)
        return EdgeClass::Back;
    if (dst_layer - src_layer >= 2)
        return EdgeClass::Skip;
    return EdgeClass::Normal;
}

std::vector<EdgeClass> classify_edges(const LayeredGraph& g) {
    std::vector<EdgeClass> out;
    out.reserve(g.edge_count());
    for (const DependencyEdge& e : g.edges())
        out.push_back(classify_edge(layer_of(g, e.src), layer_of(g, e.dst)));
    return out;
}

Ratio make_ratio(double num, double den, double degenerate_value) {
    Ratio r;
    r.num = num;
    r.den = den;
    if (den == 0.0) {
        r.value = degenerate_value;
        r.degenerate = true;
    } else {
        r.value = num / den;
    }
    return r;
}

bool operator==(const Ratio& a, const Ratio& b) {
    return a.num == b.num && a.den == b.den && a.value == b.value && a.degenerate == b.degenerate;
}

ViolationSets violation_sets(const LayeredGraph& g, const SccDecomposition& scc) {
    ViolationSets v;
    v.per_node.assign(g.node_count(), {});
    v.per_layer.assign(g.layer_count(), {});
    for (const DependencyEdge& e : g.edges()) {
        const EdgeClass cls = classify_edge(layer_of(g, e.src), layer_of(g, e.dst));
        if (cls == EdgeClass::Normal)
            continue;
        const bool cyclic = edge_on_cycle(scc, e);
        if (cls == EdgeClass::Back) {
            v.bv.push_back(e.id);
            (cyclic ? v.cb : v.rb).push_back(e.id);
            ++v.per_node[e.src].bcc;
            ++v.per_node[e.dst].bcr;
            ++v.per_layer[layer_of(g, e.src) - 1].bcc;
            ++v.per_layer[layer_of(g, e.dst) - 1].bcr;
        } else {
            v.sv.push_back(e.id);
            (cyclic ? v.cs : v.rs).push_back(e.id);
            ++v.per_node[e.src].scc;
            ++v.per_node[e.dst].scr;
            ++v.per_layer[layer_of(g, e.src) - 1].scc;
            ++v.per_layer[layer_of(g, e.dst) - 1].scr;
        }
    }
    return v;
}

PenaltyConfig::PenaltyConfig(double a, double b) : alpha(a), beta(b) {
    if (a < 0.0 || a > 1.0 || b < 0.0 || b > 1.0)
        throw GraphError("penalties must lie in [0,1]");
}

Ratio bvm_caller(const ViolationSets& v, const LayeredGraph& g, NodeId m) {
    const NodeDegrees d = node_degrees(g, m);  // validates m
    return make_ratio(v.per_node[m].bcc, d.out);
}

Ratio bvm_called(const ViolationSets& v, const LayeredGraph& g, NodeId m) {
    const NodeDegrees d = node_degrees(g, m);
    return make_ratio(v.per_node[m].bcr, d.in);
}

Ratio bvm(const ViolationSets& v, const LayeredGraph& g, NodeId m) {
    const NodeDegrees d = node_degrees(g, m);
    const RoleCounts& c = v.per_node[m];
    return make_ratio(c.bcc + c.bcr, d.total);
}

Ratio svm_caller(const ViolationSets& v, const LayeredGraph& g, NodeId m) {
    const NodeDegrees d = node_degrees(g, m);
    return make_ratio(v.per_node[m].scc, d.out);
}

Ratio svm_called(const ViolationSets& v, const LayeredGraph& g, NodeId m) {
    const NodeDegrees d = node_degrees(g, m);
    return make_ratio(v.per_node[m].scr, d.in);
}

Ratio svm(const ViolationSets& v, const LayeredGraph& g, NodeId m) {
    const NodeDegrees d = node_degrees(g, m);
    const RoleCounts& c = v.per_node[m];
    return make_ratio(c.scc + c.scr, d.total);
}

Ratio node_av(const ViolationSets& v, const LayeredGraph& g, NodeId m) {
    const NodeDegrees d = node_degrees(g, m);
    const RoleCounts& c = v.per_node[m];
    return make_ratio(c.bcc + c.bcr + c.scc + c.scr, d.total);
}

Ratio bvl(const ViolationSets& v, const LayeredGraph& g, LayerIndex l) {
    if (!g.has_layer(l))
        throw GraphError("layer index " + std::to_string(l) + " out of range");
    const RoleCounts& c = v.per_layer[l - 1];
    return make_ratio(c.bcc + c.bcr, layer_degrees(g, l).total);
}

Ratio svl(const ViolationSets& v, const LayeredGraph& g, LayerIndex l) {
    if (!g.has_layer(l))
        throw GraphError("layer index " + std::to_string(l) + " out of range");
    const RoleCounts& c = v.per_layer[l - 1];
    return make_ratio(c.scc + c.scr, layer_degrees(g, l).total);
}

LayerSeparation logical_separation(const ViolationSets& v, const LayeredGraph& g, LayerIndex l) {
    if (!g.has_layer(l))
        throw GraphError("layer index " + std::to_string(l) + " out of range");
    const RoleCounts& c = v.per_layer[l - 1];
    LayerSeparation sep;
    sep.ls = make_ratio(c.bcc + c.bcr, layer_degrees(g, l).total, 0.0);
    sep.lsi = 1.0 - sep.ls.value;
    return sep;
}

Ratio bvs(const ViolationSets& v, const LayeredGraph& g) {
    return make_ratio(static_cast<double>(v.bv.size()), g.edge_count());
}

Ratio svs(const ViolationSets& v, const LayeredGraph& g) {
    return make_ratio(static_cast<double>(v.sv.size()), g.edge_count());
}

std::vector<ComponentViolation> cyclic_violation(const ViolationSets&, const LayeredGraph& g,
                                                 const SccDecomposition& scc) {
    std::vector<ComponentViolation> rows;
    for (int c = 0; c < static_cast<int>(scc.components.size()); ++c) {
        if (scc.components[c].size() < 2)
            continue;
        ComponentViolation row;
        row.component = c;
        row.nodes = scc.components[c];
        row.edge_count = static_cast<int>(scc.component_edges[c].size());
        int violating = 0;
        int crossing = 0;
        for (EdgeId e : scc.component_edges[c]) {
            const DependencyEdge& de = g.edge(e);
            if (classify_edge(layer_of(g, de.src), layer_of(g, de.dst)) != EdgeClass::Normal)
                ++violating;
            if (layer_of(g, de.src) != layer_of(g, de.dst))
                ++crossing;
        }
        row.cv = make_ratio(violating, row.edge_count);
        row.dcvi = make_ratio(crossing, row.edge_count);
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end(), [](const ComponentViolation& a, const ComponentViolation& b) {
        if (a.nodes.size() != b.nodes.size())
            return a.nodes.size() > b.nodes.size();
        return a.nodes.front() < b.nodes.front();
    });
    return rows;
}

Ratio asv(const ViolationSets& v, const LayeredGraph& g, const PenaltyConfig& p) {
    const double cb = static_cast<double>(v.cb.size());
    const double rb = static_cast<double>(v.rb.size());
    const double cs = static_cast<double>(v.cs.size());
    const double rs = static_cast<double>(v.rs.size());
    const double num = 2.0 * p.alpha * cb + p.alpha * rb + 2.0 * p.beta * cs + p.beta * rs;
    const double den = static_cast<double>(g.edge_count()) + cb + cs;
    return make_ratio(num, den);
}

namespace {

// One minus the mean of the positive per-layer indices; 1.0 when none violate.
double one_minus_mean_of_violating(const std::vector<Ratio>& per_layer) {
    double sum = 0.0;
    int count = 0;
    for (const Ratio& r : per_layer) {
        if (r.value > 0.0) {
            sum += r.value;
            ++count;
        }
    }
    const double mean = count > 0 ? sum / static_cast<double>(count) : 0.0;
    return 1.0 - mean;
}

}  // namespace

BaselineReport baseline_indices(const ViolationSets& v, const LayeredGraph& g) {
    BaselineReport rep;
    std::set<NodeId> back_nodes, skip_nodes;
    std::set<LayerIndex> back_layers, skip_layers;
    for (EdgeId e : v.bv) {
        back_nodes.insert(edge_src(g, e));
        back_layers.insert(layer_of(g, edge_src(g, e)));
    }
    for (EdgeId e : v.sv) {
        skip_nodes.insert(edge_src(g, e));
        skip_layers.insert(layer_of(g, edge_src(g, e)));
    }
    rep.back_nodes.assign(back_nodes.begin(), back_nodes.end());
    rep.back_layers.assign(back_layers.begin(), back_layers.end());
    rep.skip_nodes.assign(skip_nodes.begin(), skip_nodes.end());
    rep.skip_layers.assign(skip_layers.begin(), skip_layers.end());

    for (LayerIndex l = 1; l <= g.layer_count(); ++l) {
        int back_members = 0;
        int skip_members = 0;
        for (NodeId m : rep.back_nodes)
            if (layer_of(g, m) == l)
                ++back_members;
        for (NodeId m : rep.skip_nodes)
            if (layer_of(g, m) == l)
                ++skip_members;
        rep.bcvi.push_back(make_ratio(back_members, g.layer_size(l)));
        rep.scvi.push_back(make_ratio(skip_members, g.layer_size(l)));
    }
    rep.bcvi_system = one_minus_mean_of_violating(rep.bcvi);
    rep.scvi_system = one_minus_mean_of_violating(rep.scvi);
    return rep;
}

const char* to_string(LayeringStyle s) {
    switch (s) {
        case LayeringStyle::ClosedConformant: return "closed-conformant";
        case LayeringStyle::Open: return "open";
        case LayeringStyle::NonLayered: return "non-layered";
    }
    return "?";
}

StyleThresholds::StyleThresholds(double tau) : tau_back(tau) {
    if (tau < 0.0 || tau > 1.0)
        throw GraphError("style threshold must lie in [0,1]");
}

LayeringStyle classify_style(const ViolationSets& v, const LayeredGraph& g,
                             const StyleThresholds& thresholds) {
    const double b = bvs(v, g).value;
    const double s = svs(v, g).value;
    if (b > thresholds.tau_back)
        return LayeringStyle::NonLayered;
    return s > 0.0 ? LayeringStyle::Open : LayeringStyle::ClosedConformant;
}

std::vector<PenaltyConfig> default_penalty_sweep() {
    return {{0.5, 0.5}, {0.75, 0.5}, {1.0, 0.5}, {1.0, 1.0}, {0.5, 0.0}, {0.75, 0.0}, {1.0, 0.0}};
}

MetricsReport compute_report(const LayeredGraph& g, const ReportOptions& options) {
    const SccDecomposition scc = scc_decompose(g);
    const ViolationSets v = violation_sets(g, scc);

    MetricsReport rep;
    rep.tau_back = options.thresholds.tau_back;

    for (const DependencyEdge& e : g.edges()) {
        EdgeClassEntry entry;
        entry.id = e.id;
        entry.src_layer = layer_of(g, e.src);
        entry.dst_layer = layer_of(g, e.dst);
        entry.cls = classify_edge(entry.src_layer, entry.dst_layer);
        rep.edge_classes.push_back(entry);
    }

    for (NodeId m = 0; m < g.node_count(); ++m) {
        NodeRow row;
        row.id = m;
        row.layer = layer_of(g, m);
        const NodeDegrees d = node_degrees(g, m);
        row.in_deg = d.in;
        row.out_deg = d.out;
        row.deg = d.total;
        row.bvc = bvm_caller(v, g, m);
        row.bvr = bvm_called(v, g, m);
        row.tbv = bvm(v, g, m);
        row.svc = svm_caller(v, g, m);
        row.svr = svm_called(v, g, m);
        row.tsv = svm(v, g, m);
        row.av = node_av(v, g, m);
        rep.node_table.push_back(row);
    }

    for (LayerIndex l = 1; l <= g.layer_count(); ++l) {
        LayerRow row;
        row.layer = l;
        const LayerDegrees d = layer_degrees(g, l);
        row.in_deg = d.in;
        row.out_deg = d.out;
        row.deg = d.total;
        row.intra = d.intra;
        const RoleCounts& c = v.per_layer[l - 1];
        row.bvc = make_ratio(c.bcc, d.out);
        row.bvr = make_ratio(c.bcr, d.in);
        row.tbv = bvl(v, g, l);
        row.svc = make_ratio(c.scc, d.out);
        row.svr = make_ratio(c.scr, d.in);
        row.tsv = svl(v, g, l);
        row.av = make_ratio(c.bcc + c.bcr + c.scc + c.scr, d.total);
        const LayerSeparation sep = logical_separation(v, g, l);
        row.ls = sep.ls;
        row.lsi = sep.lsi;
        rep.layer_table.push_back(row);
    }

    rep.system.bvs = bvs(v, g);
    rep.system.svs = svs(v, g);
    rep.system.bvs_conformance = 1.0 - rep.system.bvs.value;
    rep.system.svs_conformance = 1.0 - rep.system.svs.value;
    for (const PenaltyConfig& p : options.penalties) {
        AsvEntry entry;
        entry.alpha = p.alpha;
        entry.beta = p.beta;
        entry.value = asv(v, g, p);
        rep.system.asv.push_back(entry);
    }
    rep.system.components = cyclic_violation(v, g, scc);
    rep.system.cv_system = rep.system.components.empty() ? 0.0 : rep.system.components.front().cv.value;

    rep.baseline = baseline_indices(v, g);
    rep.style = classify_style(v, g, options.thresholds);
    return rep;
}

}  // namespace layercheck
