#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "layercheck/commands.hpp"
#include "layercheck/report.hpp"

namespace {

layercheck::GraphFormat parse_format(const std::string& name) {
    if (name == "json")
        return layercheck::GraphFormat::Json;
    if (name == "csv")
        return layercheck::GraphFormat::Csv;
    if (name == "dot")
        return layercheck::GraphFormat::Dot;
    return layercheck::GraphFormat::Auto;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace layercheck;

    CLI::App app{"layered-architecture conformance checker"};
    app.require_subcommand(1);

    // analyze
    AnalysisConfig analysis;
    std::string analyze_format = "auto";
    std::string analyze_out = "text";
    std::string analyze_gate = "layered";
    std::string layers_path;
    std::vector<double> alphas, betas;
    CLI::App* analyze = app.add_subcommand("analyze", "compute violation metrics for a graph");
    analyze->add_option("--graph", analysis.graph_path, "graph file")->required();
    analyze->add_option("--format", analyze_format, "graph format: auto|json|csv|dot")
        ->check(CLI::IsMember({"auto", "json", "csv", "dot"}));
    analyze->add_option("--layers", layers_path, "layer assignment file");
    analyze->add_flag("--recover", analysis.recover, "recover layers from package names");
    analyze->add_option("--granularity", analysis.granularity, "recovery cluster depth");
    analyze->add_option("--layer-count", analysis.recover_layer_count, "recovered layer count");
    analyze->add_option("--alpha", alphas, "back-call penalty (repeatable, pairs with --beta)");
    analyze->add_option("--beta", betas, "skip-call penalty (repeatable, pairs with --alpha)");
    analyze->add_option("--tau-back", analysis.tau_back, "style threshold on BVS");
    analyze->add_option("--out", analyze_out, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
    analyze->add_option("--precision", analysis.precision, "decimals in text output");
    analyze->add_flag("--dedupe", analysis.dedupe, "collapse parallel edges");
    analyze->add_option("--gate", analyze_gate, "exit-code gate: none|layered|closed")
        ->check(CLI::IsMember({"none", "layered", "closed"}));

    // extract
    std::string extract_root;
    std::string extract_out;
    bool extract_dedupe = false;
    CLI::App* extract = app.add_subcommand("extract", "extract package dependencies from Java sources");
    extract->add_option("source_root", extract_root, "root of the Java source tree")->required();
    extract->add_option("--out", extract_out, "output graph JSON path")->required();
    extract->add_flag("--dedupe", extract_dedupe, "collapse parallel edges");

    // recover
    std::string recover_graph;
    std::string recover_format = "auto";
    std::string recover_out;
    int recover_granularity = 1;
    int recover_layers = 1;
    CLI::App* recover = app.add_subcommand("recover", "recover a layer assignment from package names");
    recover->add_option("--graph", recover_graph, "graph file")->required();
    recover->add_option("--format", recover_format, "graph format: auto|json|csv|dot")
        ->check(CLI::IsMember({"auto", "json", "csv", "dot"}));
    recover->add_option("--granularity", recover_granularity, "cluster depth")->required();
    recover->add_option("--layer-count", recover_layers, "number of layers")->required();
    recover->add_option("--out", recover_out, "output layers JSON path")->required();

    // gen
    GenConfig gen_cfg;
    std::vector<int> gen_nodes;
    int gen_layer_count = 0;
    std::string gen_layers_out;
    CLI::App* gen = app.add_subcommand("gen", "generate a synthetic layered network");
    gen->add_option("--layer-count", gen_layer_count, "number of layers");
    gen->add_option("--nodes", gen_nodes,
                    "nodes per layer (one value for all layers, or one per layer)")
        ->required();
    gen->add_option("--p-down", gen_cfg.p_down, "adjacent downward arc probability");
    gen->add_option("--p-intra", gen_cfg.p_intra, "intra-layer arc probability");
    gen->add_option("--p-back", gen_cfg.p_back, "upward arc probability");
    gen->add_option("--p-skip", gen_cfg.p_skip, "skipping downward arc probability");
    gen->add_option("--seed", gen_cfg.seed, "random seed");
    gen->add_option("--out", gen_cfg.out_path, "output graph JSON path")->required();
    gen->add_option("--layers-out", gen_layers_out, "also write a standalone layers JSON");

    CLI::App* version = app.add_subcommand("version", "print version information");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInputError;
    }

    if (version->parsed()) {
        std::cout << "layercheck " << kVersion << " (report schema " << kReportSchemaVersion
                  << ")\n";
        return kExitOk;
    }
    if (analyze->parsed()) {
        analysis.format = parse_format(analyze_format);
        analysis.out = analyze_out == "json" ? OutputFormat::Json : OutputFormat::Text;
        analysis.gate = analyze_gate == "none"     ? GatePolicy::None
                        : analyze_gate == "closed" ? GatePolicy::Closed
                                                   : GatePolicy::Layered;
        if (!layers_path.empty())
            analysis.layers_path = layers_path;
        if (analysis.layers_path && analysis.recover) {
            std::cerr << "error: pass either --layers or --recover, not both\n";
            return kExitInputError;
        }
        if (analysis.recover && analysis.recover_layer_count < 1) {
            std::cerr << "error: --recover requires --layer-count\n";
            return kExitInputError;
        }
        if (alphas.size() != betas.size()) {
            std::cerr << "error: --alpha and --beta must be given the same number of times\n";
            return kExitInputError;
        }
        for (size_t i = 0; i < alphas.size(); ++i)
            analysis.penalties.emplace_back(alphas[i], betas[i]);
        return cmd_analyze(analysis, std::cout, std::cerr);
    }
    if (extract->parsed())
        return cmd_extract(extract_root, extract_out, extract_dedupe, std::cout, std::cerr);
    if (recover->parsed())
        return cmd_recover(recover_graph, parse_format(recover_format), recover_granularity,
                           recover_layers, recover_out, std::cout, std::cerr);
    if (gen->parsed()) {
        if (gen_nodes.size() == 1 && gen_layer_count > 1)
            gen_cfg.nodes_per_layer.assign(gen_layer_count, gen_nodes[0]);
        else
            gen_cfg.nodes_per_layer = gen_nodes;
        if (gen_layer_count > 0 &&
            static_cast<int>(gen_cfg.nodes_per_layer.size()) != gen_layer_count) {
            std::cerr << "error: --nodes must list one value or one value per layer\n";
            return kExitInputError;
        }
        if (!gen_layers_out.empty())
            gen_cfg.layers_out_path = gen_layers_out;
        return cmd_gen(gen_cfg, std::cout, std::cerr);
    }
    return kExitInputError;
}
