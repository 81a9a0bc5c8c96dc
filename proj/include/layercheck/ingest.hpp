#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "layercheck/graph.hpp"

namespace layercheck {

struct DocNode {
    std::string id;
    std::map<std::string, std::string> attrs;

    friend bool operator==(const DocNode&, const DocNode&) = default;
};

struct DocEdge {
    std::string src;
    std::string dst;

    friend bool operator==(const DocEdge&, const DocEdge&) = default;
};

// A parsed layer assignment, already normalized so layers[0] is the topmost
// layer regardless of the document's declared direction.
struct LayerDocument {
    struct Layer {
        std::string name;  // may be empty
        std::vector<std::string> members;

        friend bool operator==(const Layer&, const Layer&) = default;
    };
    std::vector<Layer> layers;
    std::vector<std::string> warnings;
};

// Interchange carrier for a dependency graph: node and edge lists in
// declaration order, optionally with an embedded layer assignment.
struct GraphDocument {
    std::vector<DocNode> nodes;
    std::vector<DocEdge> edges;
    std::optional<LayerDocument> layers;
    std::vector<std::string> warnings;
};

struct ParseOptions {
    // Declare nodes on first mention instead of requiring an entry in the
    // node list. Always on for CSV and DOT, which carry no declarations.
    bool auto_declare = false;
};

GraphDocument parse_json_graph(const std::string& text, const ParseOptions& options = {});
GraphDocument parse_csv_edges(const std::string& text);
GraphDocument parse_dot_subset(const std::string& text);
LayerDocument parse_layer_assignment(const std::string& text);

std::string emit_json_graph(const GraphDocument& doc);
std::string emit_dot(const GraphDocument& doc);  // attrs are not representable and are dropped
std::string emit_layer_assignment(const LayerDocument& layers);  // written top-first

// Collapse parallel edges, keeping the first occurrence of each (src, dst).
void deduplicate_edges(GraphDocument& doc);

struct BindOptions {
    bool dedupe = false;
};

struct BindResult {
    LayeredGraph graph;
    std::vector<std::string> warnings;  // includes one entry per dropped self-loop
};

// Resolve names to dense ids and build the validated graph. Self-loops are
// dropped with a warning; every graph node must appear in exactly one layer
// and every layer member must exist in the graph.
BindResult bind_graph(const GraphDocument& doc, const LayerDocument& layers,
                      const BindOptions& options = {});

// Inverse of bind_graph for serialization: node names, edges and the layer
// assignment of an existing graph as a document with embedded layers.
GraphDocument document_from_graph(const LayeredGraph& g);
LayerDocument layer_document_from_graph(const LayeredGraph& g);

// ---- Java package-level dependency extraction ----

struct ExtractOptions {
    bool dedupe = false;
};

struct ExtractStats {
    int files_scanned = 0;
    int files_skipped = 0;       // unreadable
    int files_without_package = 0;
    int external_imports = 0;    // imports that resolve to no package under the root
    int self_references = 0;     // dropped same-package references
};

// One node per package declared under source_root; one edge P->Q per import
// statement and per distinct fully-qualified reference from a file in P to a
// declared package Q. Imports of packages outside the root are dropped and
// counted. Deterministic: files are processed in sorted path order.
GraphDocument extract_java_package_deps(const std::filesystem::path& source_root,
                                        const ExtractOptions& options = {},
                                        ExtractStats* stats = nullptr);

}  // namespace layercheck
