#include "layercheck/commands.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "layercheck/errors.hpp"
#include "layercheck/ingest.hpp"
#include "layercheck/netgen.hpp"
#include "layercheck/recovery.hpp"
#include "layercheck/report.hpp"

namespace layercheck {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ParseError("cannot write " + path);
    out << content;
    if (!out)
        throw ParseError("failed writing " + path);
}

GraphFormat detect_format(GraphFormat requested, const std::string& path) {
    if (requested != GraphFormat::Auto)
        return requested;
    const auto dot = path.rfind('.');
    const std::string ext = dot == std::string::npos ? "" : path.substr(dot);
    if (ext == ".csv")
        return GraphFormat::Csv;
    if (ext == ".dot" || ext == ".gv")
        return GraphFormat::Dot;
    return GraphFormat::Json;
}

GraphDocument load_graph_document(const std::string& path, GraphFormat format) {
    const std::string text = read_file(path);
    switch (detect_format(format, path)) {
        case GraphFormat::Csv:
            return parse_csv_edges(text);
        case GraphFormat::Dot:
            return parse_dot_subset(text);
        default:
            return parse_json_graph(text);
    }
}

// Builds a layer assignment by recovery: cluster the namespace tree at the
// given granularity, then order the clusters into layer_count layers.
LayerDocument recover_layers(const GraphDocument& doc, int granularity, int layer_count,
                             std::ostream& err) {
    LayerDocument trivial;
    trivial.layers.resize(1);
    for (const DocNode& n : doc.nodes)
        trivial.layers[0].members.push_back(n.id);
    BindResult flat = bind_graph(doc, trivial);
    for (const std::string& w : flat.warnings)
        err << "warning: " << w << "\n";

    const ResponsibilityTree tree = build_responsibility_tree(flat.graph);
    const ClusterSet clusters = cluster_at_granularity(tree, granularity);
    const LayerAssignment assignment =
        order_clusters_into_layers(flat.graph, clusters, layer_count);

    LayerDocument out;
    out.layers.resize(assignment.layer_count);
    for (LayerIndex l = 1; l <= assignment.layer_count; ++l) {
        const auto name = assignment.layer_names.find(l);
        if (name != assignment.layer_names.end())
            out.layers[l - 1].name = name->second;
    }
    for (NodeId m = 0; m < flat.graph.node_count(); ++m)
        out.layers[assignment.layer_of[m] - 1].members.push_back(flat.graph.element(m).name);
    return out;
}

}  // namespace

int cmd_analyze(const AnalysisConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        const GraphDocument doc = load_graph_document(cfg.graph_path, cfg.format);
        for (const std::string& w : doc.warnings)
            err << "warning: " << w << "\n";

        if (cfg.layers_path && cfg.recover)
            throw ParseError("pass either --layers or --recover, not both");

        LayerDocument layers;
        if (cfg.layers_path) {
            layers = parse_layer_assignment(read_file(*cfg.layers_path));
        } else if (cfg.recover) {
            layers = recover_layers(doc, cfg.granularity, cfg.recover_layer_count, err);
        } else if (doc.layers) {
            layers = *doc.layers;
        } else {
            throw ParseError("no layer source: pass --layers FILE or --recover, or embed a "
                             "\"layers\" object in the graph file");
        }

        const BindResult bound = bind_graph(doc, layers, BindOptions{cfg.dedupe});
        for (const std::string& w : bound.warnings)
            err << "warning: " << w << "\n";

        ReportOptions options;
        if (!cfg.penalties.empty()) {
            options.penalties.clear();
            for (const auto& [alpha, beta] : cfg.penalties)
                options.penalties.emplace_back(alpha, beta);
        }
        options.thresholds = StyleThresholds(cfg.tau_back);
        const MetricsReport report = compute_report(bound.graph, options);

        if (cfg.out == OutputFormat::Json)
            out << render_json_report(bound.graph, report).dump(2) << "\n";
        else
            out << render_text_report(bound.graph, report, cfg.precision);

        switch (cfg.gate) {
            case GatePolicy::None:
                return kExitOk;
            case GatePolicy::Closed:
                return report.style == LayeringStyle::ClosedConformant ? kExitOk : kExitGateFailed;
            case GatePolicy::Layered:
                break;
        }
        return report.style == LayeringStyle::NonLayered ? kExitGateFailed : kExitOk;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

int cmd_extract(const std::string& source_root, const std::string& out_path, bool dedupe,
                std::ostream& out, std::ostream& err) {
    try {
        ExtractStats stats;
        const GraphDocument doc =
            extract_java_package_deps(source_root, ExtractOptions{dedupe}, &stats);
        for (const std::string& w : doc.warnings)
            err << "warning: " << w << "\n";
        write_file(out_path, emit_json_graph(doc));
        out << "packages: " << doc.nodes.size() << ", edges: " << doc.edges.size()
            << ", external imports dropped: " << stats.external_imports
            << ", files skipped: " << stats.files_skipped << "\n";
        return kExitOk;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

int cmd_recover(const std::string& graph_path, GraphFormat format, int granularity,
                int layer_count, const std::string& out_path, std::ostream& out,
                std::ostream& err) {
    try {
        const GraphDocument doc = load_graph_document(graph_path, format);
        for (const std::string& w : doc.warnings)
            err << "warning: " << w << "\n";
        const LayerDocument layers = recover_layers(doc, granularity, layer_count, err);
        write_file(out_path, emit_layer_assignment(layers));
        out << "recovered " << layers.layers.size() << " layers from " << doc.nodes.size()
            << " nodes\n";
        return kExitOk;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

int cmd_gen(const GenConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        GenSpec spec;
        spec.nodes_per_layer = cfg.nodes_per_layer;
        spec.p_down_adjacent = cfg.p_down;
        spec.p_intra = cfg.p_intra;
        spec.p_back = cfg.p_back;
        spec.p_skip = cfg.p_skip;
        spec.seed = cfg.seed;
        const LayeredGraph g = generate(spec);
        const GraphDocument doc = document_from_graph(g);
        write_file(cfg.out_path, emit_json_graph(doc));
        if (cfg.layers_out_path)
            write_file(*cfg.layers_out_path, emit_layer_assignment(*doc.layers));
        out << "generated " << g.node_count() << " nodes, " << g.edge_count() << " edges, "
            << g.layer_count() << " layers (seed " << cfg.seed << ")\n";
        return kExitOk;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

}  // namespace layercheck
