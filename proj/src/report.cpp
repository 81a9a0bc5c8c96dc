#include "layercheck/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace layercheck {

using nlohmann::json;

namespace {

std::string fmt_fixed(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", precision, v);
    return buf;
}

std::string fmt_count(double v) {
    if (v == std::floor(v) && std::abs(v) < 1e15) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.0f", v);
        return buf;
    }
    return fmt_fixed(v, 2);
}

std::string fmt_ratio(const Ratio& r, int precision) {
    if (r.degenerate)
        return fmt_fixed(r.value, precision) + "*";
    return fmt_count(r.num) + "/" + fmt_count(r.den) + "=" + fmt_fixed(r.value, precision);
}

// Whether a violation of the given kind can exist for an element or layer at
// this position of the stack; impossible cells print "-" in the tables.
bool back_caller_possible(LayerIndex l, int) { return l > 1; }
bool back_called_possible(LayerIndex l, int n) { return l < n; }
bool skip_caller_possible(LayerIndex l, int n) { return l <= n - 2; }
bool skip_called_possible(LayerIndex l, int) { return l >= 3; }

std::string render_table(const std::vector<std::vector<std::string>>& rows) {
    std::vector<size_t> widths;
    for (const auto& row : rows) {
        if (widths.size() < row.size())
            widths.resize(row.size(), 0);
        for (size_t i = 0; i < row.size(); ++i)
            widths[i] = std::max(widths[i], row[i].size());
    }
    std::ostringstream out;
    for (const auto& row : rows) {
        std::string line;
        for (size_t i = 0; i < row.size(); ++i) {
            line += row[i];
            if (i + 1 < row.size())
                line += std::string(widths[i] - row[i].size() + 2, ' ');
        }
        while (!line.empty() && line.back() == ' ')
            line.pop_back();
        out << line << "\n";
    }
    return out.str();
}

std::string join_names(const LayeredGraph& g, const std::vector<NodeId>& ids) {
    std::string out = "{";
    for (size_t i = 0; i < ids.size(); ++i) {
        if (i)
            out += ", ";
        out += g.element(ids[i]).name;
    }
    return out + "}";
}

std::string join_ints(const std::vector<int>& values) {
    std::string out = "{";
    for (size_t i = 0; i < values.size(); ++i) {
        if (i)
            out += ", ";
        out += std::to_string(values[i]);
    }
    return out + "}";
}

}  // namespace

std::string render_text_report(const LayeredGraph& g, const MetricsReport& report, int precision) {
    const int n = g.layer_count();
    std::ostringstream out;
    out << "graph: " << g.node_count() << " nodes, " << g.edge_count() << " arcs, " << n
        << (n == 1 ? " layer\n" : " layers\n");

    out << "\n== arc classification ==\n";
    {
        std::vector<std::vector<std::string>> rows;
        rows.push_back({"no", "arc", "s(e)", "d(e)", "l(s)", "l(d)", "class"});
        for (size_t i = 0; i < report.edge_classes.size(); ++i) {
            const EdgeClassEntry& entry = report.edge_classes[i];
            const DependencyEdge& e = g.edge(entry.id);
            rows.push_back({std::to_string(i + 1),
                            g.element(e.src).name + "->" + g.element(e.dst).name,
                            g.element(e.src).name, g.element(e.dst).name,
                            std::to_string(entry.src_layer), std::to_string(entry.dst_layer),
                            to_string(entry.cls)});
        }
        out << render_table(rows);
    }

    out << "\n== node analysis ==\n";
    {
        std::vector<std::vector<std::string>> rows;
        rows.push_back({"node", "layer", "in-deg", "out-deg", "degree", "bvc", "bvr", "tbv", "svc",
                        "svr", "tsv", "av"});
        for (const NodeRow& r : report.node_table) {
            auto cell = [&](const Ratio& ratio, bool possible) {
                return possible ? fmt_ratio(ratio, precision) : std::string("-");
            };
            const bool bc = back_caller_possible(r.layer, n);
            const bool br = back_called_possible(r.layer, n);
            const bool sc = skip_caller_possible(r.layer, n);
            const bool sr = skip_called_possible(r.layer, n);
            rows.push_back({g.element(r.id).name, std::to_string(r.layer), std::to_string(r.in_deg),
                            std::to_string(r.out_deg), std::to_string(r.deg), cell(r.bvc, bc),
                            cell(r.bvr, br), cell(r.tbv, bc || br), cell(r.svc, sc), cell(r.svr, sr),
                            cell(r.tsv, sc || sr), fmt_ratio(r.av, precision)});
        }
        out << render_table(rows);
    }

    out << "\n== layer analysis ==\n";
    {
        std::vector<std::vector<std::string>> rows;
        rows.push_back({"layer", "in-deg", "out-deg", "degree", "intra", "bvc", "bvr", "tbv", "svc",
                        "svr", "tsv", "av"});
        for (const LayerRow& r : report.layer_table) {
            auto cell = [&](const Ratio& ratio, bool possible) {
                return possible ? fmt_ratio(ratio, precision) : std::string("-");
            };
            const bool bc = back_caller_possible(r.layer, n);
            const bool br = back_called_possible(r.layer, n);
            const bool sc = skip_caller_possible(r.layer, n);
            const bool sr = skip_called_possible(r.layer, n);
            rows.push_back({std::to_string(r.layer), std::to_string(r.in_deg),
                            std::to_string(r.out_deg), std::to_string(r.deg),
                            std::to_string(r.intra), cell(r.bvc, bc), cell(r.bvr, br),
                            cell(r.tbv, bc || br), cell(r.svc, sc), cell(r.svr, sr),
                            cell(r.tsv, sc || sr), fmt_ratio(r.av, precision)});
        }
        out << render_table(rows);
    }

    out << "\n== system ==\n";
    out << "BVS = " << fmt_ratio(report.system.bvs, precision) << "  (conformance "
        << fmt_fixed(report.system.bvs_conformance, precision) << ")\n";
    out << "SVS = " << fmt_ratio(report.system.svs, precision) << "  (conformance "
        << fmt_fixed(report.system.svs_conformance, precision) << ")\n";
    out << "CV  = " << fmt_fixed(report.system.cv_system, precision) << "\n";
    if (report.system.components.empty()) {
        out << "no strongly connected component spans more than one node\n";
    } else {
        out << "components with cycles:\n";
        int index = 1;
        for (const ComponentViolation& c : report.system.components) {
            out << "  #" << index++ << ": " << c.nodes.size() << " nodes "
                << join_names(g, c.nodes) << ", " << c.edge_count
                << " arcs, CV=" << fmt_ratio(c.cv, precision)
                << ", DCVI=" << fmt_ratio(c.dcvi, precision) << "\n";
        }
    }

    out << "\n== average system violation ==\n";
    {
        std::vector<std::vector<std::string>> rows;
        rows.push_back({"alpha", "beta", "asv"});
        for (const AsvEntry& e : report.system.asv)
            rows.push_back({fmt_fixed(e.alpha, 2), fmt_fixed(e.beta, 2),
                            fmt_ratio(e.value, precision)});
        out << render_table(rows);
    }

    out << "\n== baseline (module) indices ==\n";
    out << "BACK   = " << join_names(g, report.baseline.back_nodes)
        << "  L_BACK = " << join_ints(report.baseline.back_layers) << "\n";
    for (size_t l = 0; l < report.baseline.bcvi.size(); ++l)
        out << "BCVI(" << l + 1 << ") = " << fmt_ratio(report.baseline.bcvi[l], precision) << "\n";
    out << "BCVI(S) = " << fmt_fixed(report.baseline.bcvi_system, precision) << "\n";
    out << "SKIP   = " << join_names(g, report.baseline.skip_nodes)
        << "  L_SKIP = " << join_ints(report.baseline.skip_layers) << "\n";
    for (size_t l = 0; l < report.baseline.scvi.size(); ++l)
        out << "SCVI(" << l + 1 << ") = " << fmt_ratio(report.baseline.scvi[l], precision) << "\n";
    out << "SCVI(S) = " << fmt_fixed(report.baseline.scvi_system, precision) << "\n";
    {
        int index = 1;
        for (const ComponentViolation& c : report.system.components)
            out << "DCVI #" << index++ << " = " << fmt_ratio(c.dcvi, precision) << "\n";
    }

    out << "\n== logical separation ==\n";
    {
        std::vector<std::vector<std::string>> rows;
        rows.push_back({"layer", "bcc", "bcr", "degree", "ls", "lsi"});
        for (const LayerRow& r : report.layer_table)
            rows.push_back({std::to_string(r.layer), fmt_count(r.bvc.num), fmt_count(r.bvr.num),
                            std::to_string(r.deg), fmt_ratio(r.ls, precision),
                            fmt_fixed(r.lsi, precision)});
        out << render_table(rows);
    }

    out << "\nstyle: " << to_string(report.style) << " (tau_back="
        << fmt_fixed(report.tau_back, 2) << ")\n";

    bool any_degenerate = false;
    for (const NodeRow& r : report.node_table)
        for (const Ratio* ratio : {&r.bvc, &r.bvr, &r.tbv, &r.svc, &r.svr, &r.tsv, &r.av})
            any_degenerate = any_degenerate || ratio->degenerate;
    for (const LayerRow& r : report.layer_table)
        for (const Ratio* ratio : {&r.bvc, &r.bvr, &r.tbv, &r.svc, &r.svr, &r.tsv, &r.av, &r.ls})
            any_degenerate = any_degenerate || ratio->degenerate;
    if (any_degenerate)
        out << "(* marks a ratio with no incident arcs; reported as its default)\n";
    return out.str();
}

namespace {

json ratio_to_json(const Ratio& r) {
    return json{{"num", r.num}, {"den", r.den}, {"value", r.value}, {"degenerate", r.degenerate}};
}

}  // namespace

json render_json_report(const LayeredGraph& g, const MetricsReport& report) {
    json out;
    out["schema_version"] = kReportSchemaVersion;
    out["graph"] = {{"nodes", g.node_count()}, {"edges", g.edge_count()}, {"layers", g.layer_count()}};

    out["edge_classes"] = json::array();
    for (const EdgeClassEntry& entry : report.edge_classes) {
        const DependencyEdge& e = g.edge(entry.id);
        out["edge_classes"].push_back({{"edge", entry.id},
                                       {"src", g.element(e.src).name},
                                       {"dst", g.element(e.dst).name},
                                       {"src_layer", entry.src_layer},
                                       {"dst_layer", entry.dst_layer},
                                       {"class", to_string(entry.cls)}});
    }

    out["nodes"] = json::array();
    for (const NodeRow& r : report.node_table) {
        out["nodes"].push_back({{"id", g.element(r.id).name},
                                {"layer", r.layer},
                                {"in_degree", r.in_deg},
                                {"out_degree", r.out_deg},
                                {"degree", r.deg},
                                {"bvc", ratio_to_json(r.bvc)},
                                {"bvr", ratio_to_json(r.bvr)},
                                {"tbv", ratio_to_json(r.tbv)},
                                {"svc", ratio_to_json(r.svc)},
                                {"svr", ratio_to_json(r.svr)},
                                {"tsv", ratio_to_json(r.tsv)},
                                {"av", ratio_to_json(r.av)}});
    }

    out["layers"] = json::array();
    for (const LayerRow& r : report.layer_table) {
        json jl = {{"layer", r.layer},
                   {"in_degree", r.in_deg},
                   {"out_degree", r.out_deg},
                   {"degree", r.deg},
                   {"intra", r.intra},
                   {"bvc", ratio_to_json(r.bvc)},
                   {"bvr", ratio_to_json(r.bvr)},
                   {"tbv", ratio_to_json(r.tbv)},
                   {"svc", ratio_to_json(r.svc)},
                   {"svr", ratio_to_json(r.svr)},
                   {"tsv", ratio_to_json(r.tsv)},
                   {"av", ratio_to_json(r.av)},
                   {"ls", ratio_to_json(r.ls)},
                   {"lsi", r.lsi}};
        const auto name = g.layers().layer_names.find(r.layer);
        if (name != g.layers().layer_names.end())
            jl["name"] = name->second;
        out["layers"].push_back(std::move(jl));
    }

    json components = json::array();
    for (const ComponentViolation& c : report.system.components) {
        std::vector<std::string> names;
        for (NodeId m : c.nodes)
            names.push_back(g.element(m).name);
        components.push_back({{"component", c.component},
                              {"nodes", names},
                              {"edges", c.edge_count},
                              {"cv", ratio_to_json(c.cv)},
                              {"dcvi", ratio_to_json(c.dcvi)}});
    }
    json asv_entries = json::array();
    for (const AsvEntry& e : report.system.asv)
        asv_entries.push_back({{"alpha", e.alpha}, {"beta", e.beta}, {"value", ratio_to_json(e.value)}});
    std::vector<double> lsi_values;
    for (const LayerRow& r : report.layer_table)
        lsi_values.push_back(r.lsi);
    out["system"] = {{"bvs", ratio_to_json(report.system.bvs)},
                     {"bvs_conformance", report.system.bvs_conformance},
                     {"svs", ratio_to_json(report.system.svs)},
                     {"svs_conformance", report.system.svs_conformance},
                     {"cv", report.system.cv_system},
                     {"components", std::move(components)},
                     {"asv", std::move(asv_entries)},
                     {"lsi", lsi_values}};

    auto names_of = [&](const std::vector<NodeId>& ids) {
        std::vector<std::string> names;
        for (NodeId m : ids)
            names.push_back(g.element(m).name);
        return names;
    };
    json bcvi = json::array();
    for (const Ratio& r : report.baseline.bcvi)
        bcvi.push_back(ratio_to_json(r));
    json scvi = json::array();
    for (const Ratio& r : report.baseline.scvi)
        scvi.push_back(ratio_to_json(r));
    out["baseline"] = {{"back", names_of(report.baseline.back_nodes)},
                       {"l_back", report.baseline.back_layers},
                       {"bcvi", std::move(bcvi)},
                       {"bcvi_system", report.baseline.bcvi_system},
                       {"skip", names_of(report.baseline.skip_nodes)},
                       {"l_skip", report.baseline.skip_layers},
                       {"scvi", std::move(scvi)},
                       {"scvi_system", report.baseline.scvi_system}};

    out["style"] = {{"verdict", to_string(report.style)}, {"tau_back", report.tau_back}};
    out["metadata"] = {{"baseline_system_formula", "one-minus-mean-over-violating-layers"}};
    return out;
}

}  // namespace layercheck
