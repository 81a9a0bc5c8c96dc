#pragma once

// Brute-force recomputation of every report field from raw graph data,
// deliberately independent of the library's metric implementations: layer
// comparison per edge, BFS reachability for cycle membership, and direct
// counting for every index. Used to cross-check full reports.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "layercheck/graph.hpp"
#include "layercheck/metrics.hpp"

namespace test_oracle {

using layercheck::LayeredGraph;
using layercheck::NodeId;

struct Reach {
    int n = 0;
    std::vector<char> matrix;  // matrix[u * n + v]: v reachable from u via >= 1 arc

    bool at(int u, int v) const { return matrix[static_cast<size_t>(u) * n + v] != 0; }
};

inline Reach reachability(const LayeredGraph& g) {
    Reach r;
    r.n = g.node_count();
    r.matrix.assign(static_cast<size_t>(r.n) * r.n, 0);
    std::vector<std::vector<int>> adj(r.n);
    for (const auto& e : g.edges())
        adj[e.src].push_back(e.dst);
    std::vector<int> queue;
    for (int s = 0; s < r.n; ++s) {
        std::vector<char> seen(r.n, 0);
        queue.clear();
        for (int w : adj[s]) {
            if (!seen[w]) {
                seen[w] = 1;
                queue.push_back(w);
            }
        }
        for (size_t i = 0; i < queue.size(); ++i)
            for (int w : adj[queue[i]])
                if (!seen[w]) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
        for (int v = 0; v < r.n; ++v)
            r.matrix[static_cast<size_t>(s) * r.n + v] = seen[v];
    }
    return r;
}

enum class Cls { Normal, Back, Skip };

inline Cls classify(int ls, int ld) {
    if (ls > ld)
        return Cls::Back;
    if (ld - ls >= 2)
        return Cls::Skip;
    return Cls::Normal;
}

struct Expected {
    std::vector<Cls> classes;
    std::vector<layercheck::NodeRow> node_table;
    std::vector<layercheck::LayerRow> layer_table;
    layercheck::SystemReport system;
    layercheck::BaselineReport baseline;
    layercheck::LayeringStyle style = layercheck::LayeringStyle::ClosedConformant;
};

inline Expected compute(const LayeredGraph& g,
                        const std::vector<std::pair<double, double>>& penalties,
                        double tau_back) {
    using layercheck::make_ratio;
    const int m = g.node_count();
    const int n = g.layer_count();
    const int e_total = g.edge_count();
    const auto& layer_of = g.layers().layer_of;

    Expected out;
    const Reach reach = reachability(g);

    // raw per-edge facts
    std::vector<char> on_cycle(e_total, 0);
    for (const auto& e : g.edges()) {
        out.classes.push_back(classify(layer_of[e.src], layer_of[e.dst]));
        on_cycle[e.id] = reach.at(e.dst, e.src) ? 1 : 0;
    }

    // raw counters
    std::vector<int> in_deg(m, 0), out_deg(m, 0);
    std::vector<int> bcc_n(m, 0), bcr_n(m, 0), scc_n(m, 0), scr_n(m, 0);
    std::vector<int> lin(n, 0), lout(n, 0), lintra(n, 0), lsize(n, 0);
    std::vector<int> bcc_l(n, 0), bcr_l(n, 0), scc_l(n, 0), scr_l(n, 0);
    int bv = 0, sv = 0, cb = 0, cs = 0;
    for (int v = 0; v < m; ++v)
        ++lsize[layer_of[v] - 1];
    for (const auto& e : g.edges()) {
        ++out_deg[e.src];
        ++in_deg[e.dst];
        ++lout[layer_of[e.src] - 1];
        ++lin[layer_of[e.dst] - 1];
        if (layer_of[e.src] == layer_of[e.dst])
            ++lintra[layer_of[e.src] - 1];
        const Cls c = out.classes[e.id];
        if (c == Cls::Back) {
            ++bv;
            if (on_cycle[e.id])
                ++cb;
            ++bcc_n[e.src];
            ++bcr_n[e.dst];
            ++bcc_l[layer_of[e.src] - 1];
            ++bcr_l[layer_of[e.dst] - 1];
        } else if (c == Cls::Skip) {
            ++sv;
            if (on_cycle[e.id])
                ++cs;
            ++scc_n[e.src];
            ++scr_n[e.dst];
            ++scc_l[layer_of[e.src] - 1];
            ++scr_l[layer_of[e.dst] - 1];
        }
    }

    for (int v = 0; v < m; ++v) {
        layercheck::NodeRow row;
        row.id = v;
        row.layer = layer_of[v];
        row.in_deg = in_deg[v];
        row.out_deg = out_deg[v];
        row.deg = in_deg[v] + out_deg[v];
        row.bvc = make_ratio(bcc_n[v], out_deg[v]);
        row.bvr = make_ratio(bcr_n[v], in_deg[v]);
        row.tbv = make_ratio(bcc_n[v] + bcr_n[v], row.deg);
        row.svc = make_ratio(scc_n[v], out_deg[v]);
        row.svr = make_ratio(scr_n[v], in_deg[v]);
        row.tsv = make_ratio(scc_n[v] + scr_n[v], row.deg);
        row.av = make_ratio(bcc_n[v] + bcr_n[v] + scc_n[v] + scr_n[v], row.deg);
        out.node_table.push_back(row);
    }

    for (int l = 0; l < n; ++l) {
        layercheck::LayerRow row;
        row.layer = l + 1;
        row.in_deg = lin[l];
        row.out_deg = lout[l];
        row.deg = lin[l] + lout[l];
        row.intra = lintra[l];
        row.bvc = make_ratio(bcc_l[l], lout[l]);
        row.bvr = make_ratio(bcr_l[l], lin[l]);
        row.tbv = make_ratio(bcc_l[l] + bcr_l[l], row.deg);
        row.svc = make_ratio(scc_l[l], lout[l]);
        row.svr = make_ratio(scr_l[l], lin[l]);
        row.tsv = make_ratio(scc_l[l] + scr_l[l], row.deg);
        row.av = make_ratio(bcc_l[l] + bcr_l[l] + scc_l[l] + scr_l[l], row.deg);
        row.ls = make_ratio(bcc_l[l] + bcr_l[l], row.deg, 0.0);
        row.lsi = 1.0 - row.ls.value;
        out.layer_table.push_back(row);
    }

    out.system.bvs = make_ratio(bv, e_total);
    out.system.svs = make_ratio(sv, e_total);
    out.system.bvs_conformance = 1.0 - out.system.bvs.value;
    out.system.svs_conformance = 1.0 - out.system.svs.value;

    const int rb = bv - cb;
    const int rs = sv - cs;
    for (const auto& [alpha, beta] : penalties) {
        layercheck::AsvEntry entry;
        entry.alpha = alpha;
        entry.beta = beta;
        const double num = 2.0 * alpha * static_cast<double>(cb) + alpha * static_cast<double>(rb) +
                           2.0 * beta * static_cast<double>(cs) + beta * static_cast<double>(rs);
        const double den =
            static_cast<double>(e_total) + static_cast<double>(cb) + static_cast<double>(cs);
        entry.value = make_ratio(num, den);
        out.system.asv.push_back(entry);
    }

    // components: group nodes by mutual reachability
    std::vector<int> comp(m, -1);
    std::vector<std::vector<NodeId>> comps;
    for (int v = 0; v < m; ++v) {
        if (comp[v] != -1)
            continue;
        std::vector<NodeId> members;
        for (int w = 0; w < m; ++w)
            if (comp[w] == -1 && (w == v || (reach.at(v, w) && reach.at(w, v))))
                members.push_back(w);
        for (NodeId w : members)
            comp[w] = static_cast<int>(comps.size());
        comps.push_back(std::move(members));
    }
    // order as the library's decomposition does: by smallest contained id
    std::sort(comps.begin(), comps.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    std::vector<layercheck::ComponentViolation> rows;
    for (int c = 0; c < static_cast<int>(comps.size()); ++c) {
        if (comps[c].size() < 2)
            continue;
        layercheck::ComponentViolation row;
        row.component = c;
        row.nodes = comps[c];
        std::set<NodeId> inside(comps[c].begin(), comps[c].end());
        int total = 0, violating = 0, crossing = 0;
        for (const auto& e : g.edges()) {
            if (!inside.count(e.src) || !inside.count(e.dst))
                continue;
            ++total;
            if (out.classes[e.id] != Cls::Normal)
                ++violating;
            if (layer_of[e.src] != layer_of[e.dst])
                ++crossing;
        }
        row.edge_count = total;
        row.cv = make_ratio(violating, total);
        row.dcvi = make_ratio(crossing, total);
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        if (a.nodes.size() != b.nodes.size())
            return a.nodes.size() > b.nodes.size();
        return a.nodes.front() < b.nodes.front();
    });
    out.system.components = rows;
    out.system.cv_system = rows.empty() ? 0.0 : rows.front().cv.value;

    // baseline
    std::set<NodeId> back_set, skip_set;
    std::set<int> back_layers, skip_layers;
    for (const auto& e : g.edges()) {
        if (out.classes[e.id] == Cls::Back) {
            back_set.insert(e.src);
            back_layers.insert(layer_of[e.src]);
        } else if (out.classes[e.id] == Cls::Skip) {
            skip_set.insert(e.src);
            skip_layers.insert(layer_of[e.src]);
        }
    }
    out.baseline.back_nodes.assign(back_set.begin(), back_set.end());
    out.baseline.back_layers.assign(back_layers.begin(), back_layers.end());
    out.baseline.skip_nodes.assign(skip_set.begin(), skip_set.end());
    out.baseline.skip_layers.assign(skip_layers.begin(), skip_layers.end());
    for (int l = 1; l <= n; ++l) {
        int back_members = 0, skip_members = 0;
        for (NodeId v : back_set)
            if (layer_of[v] == l)
                ++back_members;
        for (NodeId v : skip_set)
            if (layer_of[v] == l)
                ++skip_members;
        out.baseline.bcvi.push_back(make_ratio(back_members, lsize[l - 1]));
        out.baseline.scvi.push_back(make_ratio(skip_members, lsize[l - 1]));
    }
    auto system_index = [](const std::vector<layercheck::Ratio>& per_layer) {
        double sum = 0.0;
        int count = 0;
        for (const auto& r : per_layer)
            if (r.value > 0.0) {
                sum += r.value;
                ++count;
            }
        const double mean = count > 0 ? sum / static_cast<double>(count) : 0.0;
        return 1.0 - mean;
    };
    out.baseline.bcvi_system = system_index(out.baseline.bcvi);
    out.baseline.scvi_system = system_index(out.baseline.scvi);

    if (out.system.bvs.value > tau_back)
        out.style = layercheck::LayeringStyle::NonLayered;
    else if (out.system.svs.value > 0.0)
        out.style = layercheck::LayeringStyle::Open;
    else
        out.style = layercheck::LayeringStyle::ClosedConformant;
    return out;
}

// Field-by-field comparison; returns an empty string on success, else a
// description of the first mismatch.
inline std::string compare(const layercheck::MetricsReport& got, const Expected& want) {
    using layercheck::Ratio;
    auto ratio_eq = [](const Ratio& a, const Ratio& b) { return a == b; };
    auto fail = [](const std::string& what) { return what; };

    if (got.edge_classes.size() != want.classes.size())
        return fail("edge class count");
    for (size_t i = 0; i < want.classes.size(); ++i) {
        const auto cls = got.edge_classes[i].cls;
        const auto expect = want.classes[i];
        const bool same = (cls == layercheck::EdgeClass::Normal && expect == Cls::Normal) ||
                          (cls == layercheck::EdgeClass::Back && expect == Cls::Back) ||
                          (cls == layercheck::EdgeClass::Skip && expect == Cls::Skip);
        if (!same)
            return fail("edge class " + std::to_string(i));
    }

    if (got.node_table.size() != want.node_table.size())
        return fail("node table size");
    for (size_t i = 0; i < want.node_table.size(); ++i) {
        const auto& a = got.node_table[i];
        const auto& b = want.node_table[i];
        if (a.id != b.id || a.layer != b.layer || a.in_deg != b.in_deg || a.out_deg != b.out_deg ||
            a.deg != b.deg)
            return fail("node degrees at " + std::to_string(i));
        if (!ratio_eq(a.bvc, b.bvc) || !ratio_eq(a.bvr, b.bvr) || !ratio_eq(a.tbv, b.tbv) ||
            !ratio_eq(a.svc, b.svc) || !ratio_eq(a.svr, b.svr) || !ratio_eq(a.tsv, b.tsv) ||
            !ratio_eq(a.av, b.av))
            return fail("node ratios at " + std::to_string(i));
    }

    if (got.layer_table.size() != want.layer_table.size())
        return fail("layer table size");
    for (size_t i = 0; i < want.layer_table.size(); ++i) {
        const auto& a = got.layer_table[i];
        const auto& b = want.layer_table[i];
        if (a.layer != b.layer || a.in_deg != b.in_deg || a.out_deg != b.out_deg ||
            a.deg != b.deg || a.intra != b.intra)
            return fail("layer degrees at " + std::to_string(i));
        if (!ratio_eq(a.bvc, b.bvc) || !ratio_eq(a.bvr, b.bvr) || !ratio_eq(a.tbv, b.tbv) ||
            !ratio_eq(a.svc, b.svc) || !ratio_eq(a.svr, b.svr) || !ratio_eq(a.tsv, b.tsv) ||
            !ratio_eq(a.av, b.av) || !ratio_eq(a.ls, b.ls) || a.lsi != b.lsi)
            return fail("layer ratios at " + std::to_string(i));
    }

    if (!ratio_eq(got.system.bvs, want.system.bvs) || !ratio_eq(got.system.svs, want.system.svs))
        return fail("system bvs/svs");
    if (got.system.bvs_conformance != want.system.bvs_conformance ||
        got.system.svs_conformance != want.system.svs_conformance)
        return fail("system conformance");
    if (got.system.asv.size() != want.system.asv.size())
        return fail("asv size");
    for (size_t i = 0; i < want.system.asv.size(); ++i) {
        if (got.system.asv[i].alpha != want.system.asv[i].alpha ||
            got.system.asv[i].beta != want.system.asv[i].beta ||
            !ratio_eq(got.system.asv[i].value, want.system.asv[i].value))
            return fail("asv entry " + std::to_string(i));
    }
    if (got.system.components.size() != want.system.components.size())
        return fail("component count");
    for (size_t i = 0; i < want.system.components.size(); ++i) {
        const auto& a = got.system.components[i];
        const auto& b = want.system.components[i];
        if (a.nodes != b.nodes || a.edge_count != b.edge_count || !ratio_eq(a.cv, b.cv) ||
            !ratio_eq(a.dcvi, b.dcvi))
            return fail("component " + std::to_string(i));
    }
    if (got.system.cv_system != want.system.cv_system)
        return fail("system cv");

    if (got.baseline.back_nodes != want.baseline.back_nodes ||
        got.baseline.back_layers != want.baseline.back_layers ||
        got.baseline.skip_nodes != want.baseline.skip_nodes ||
        got.baseline.skip_layers != want.baseline.skip_layers)
        return fail("baseline sets");
    if (got.baseline.bcvi.size() != want.baseline.bcvi.size() ||
        got.baseline.scvi.size() != want.baseline.scvi.size())
        return fail("baseline index sizes");
    for (size_t i = 0; i < want.baseline.bcvi.size(); ++i)
        if (!ratio_eq(got.baseline.bcvi[i], want.baseline.bcvi[i]) ||
            !ratio_eq(got.baseline.scvi[i], want.baseline.scvi[i]))
            return fail("baseline index " + std::to_string(i));
    if (got.baseline.bcvi_system != want.baseline.bcvi_system ||
        got.baseline.scvi_system != want.baseline.scvi_system)
        return fail("baseline system index");

    if (got.style != want.style)
        return fail("style verdict");
    return "";
}

}  // namespace test_oracle
