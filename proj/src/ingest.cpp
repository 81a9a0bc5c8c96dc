#include "layercheck/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "layercheck/errors.hpp"

namespace layercheck {

using nlohmann::json;

namespace {

std::string require_string(const json& j, const std::string& key, const std::string& context) {
    if (!j.contains(key))
        throw ParseError(context + ": missing required field \"" + key + "\"");
    const json& v = j.at(key);
    if (!v.is_string())
        throw ParseError(context + ": field \"" + key + "\" must be a string");
    return v.get<std::string>();
}

LayerDocument parse_layer_object(const json& j) {
    if (!j.is_object())
        throw ParseError("layers: value must be an object");
    const std::string direction = require_string(j, "direction", "layers");
    bool bottom_first = false;
    if (direction == "top-first")
        bottom_first = false;
    else if (direction == "bottom-first")
        bottom_first = true;
    else
        throw ParseError("layers: unknown direction \"" + direction +
                         "\" (expected \"top-first\" or \"bottom-first\")");

    if (!j.contains("layers") || !j.at("layers").is_array())
        throw ParseError("layers: missing \"layers\" array");
    const json& arr = j.at("layers");
    if (arr.empty())
        throw ParseError("layers: at least one layer is required");

    LayerDocument doc;
    std::unordered_set<std::string> seen;
    for (size_t i = 0; i < arr.size(); ++i) {
        const json& jl = arr[i];
        if (!jl.is_object())
            throw ParseError("layers: entry " + std::to_string(i) + " must be an object");
        LayerDocument::Layer layer;
        if (jl.contains("name")) {
            if (!jl.at("name").is_string())
                throw ParseError("layers: entry " + std::to_string(i) + ": \"name\" must be a string");
            layer.name = jl.at("name").get<std::string>();
        }
        if (!jl.contains("members") || !jl.at("members").is_array())
            throw ParseError("layers: entry " + std::to_string(i) + ": missing \"members\" array");
        for (const json& jm : jl.at("members")) {
            if (!jm.is_string())
                throw ParseError("layers: entry " + std::to_string(i) + ": members must be strings");
            const std::string id = jm.get<std::string>();
            if (id.empty())
                throw ParseError("layers: entry " + std::to_string(i) + ": empty member id");
            if (!seen.insert(id).second)
                throw ParseError("layers: element \"" + id + "\" assigned to more than one layer");
            layer.members.push_back(id);
        }
        if (layer.members.empty())
            doc.warnings.push_back("layer " + std::to_string(i + 1) +
                                   (layer.name.empty() ? "" : " (" + layer.name + ")") + " is empty");
        doc.layers.push_back(std::move(layer));
    }
    if (bottom_first)
        std::reverse(doc.layers.begin(), doc.layers.end());
    return doc;
}

}  // namespace

GraphDocument parse_json_graph(const std::string& text, const ParseOptions& options) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("graph json: ") + e.what());
    }
    if (!j.is_object())
        throw ParseError("graph json: top-level value must be an object");

    GraphDocument doc;
    std::unordered_set<std::string> declared;

    if (j.contains("nodes")) {
        if (!j.at("nodes").is_array())
            throw ParseError("graph json: \"nodes\" must be an array");
        size_t i = 0;
        for (const json& jn : j.at("nodes")) {
            const std::string context = "graph json: node " + std::to_string(i++);
            if (!jn.is_object())
                throw ParseError(context + ": must be an object");
            DocNode node;
            node.id = require_string(jn, "id", context);
            if (node.id.empty())
                throw ParseError(context + ": empty id");
            if (!declared.insert(node.id).second)
                throw ParseError(context + ": duplicate node id \"" + node.id + "\"");
            if (jn.contains("attrs")) {
                if (!jn.at("attrs").is_object())
                    throw ParseError(context + ": \"attrs\" must be an object");
                for (const auto& [key, value] : jn.at("attrs").items()) {
                    if (!value.is_string())
                        throw ParseError(context + ": attr \"" + key + "\" must be a string");
                    node.attrs[key] = value.get<std::string>();
                }
            }
            doc.nodes.push_back(std::move(node));
        }
    }

    if (j.contains("edges")) {
        if (!j.at("edges").is_array())
            throw ParseError("graph json: \"edges\" must be an array");
        size_t i = 0;
        for (const json& je : j.at("edges")) {
            const std::string context = "graph json: edge " + std::to_string(i++);
            if (!je.is_object())
                throw ParseError(context + ": must be an object");
            DocEdge edge;
            edge.src = require_string(je, "src", context);
            edge.dst = require_string(je, "dst", context);
            if (edge.src.empty() || edge.dst.empty())
                throw ParseError(context + ": empty endpoint id");
            for (const std::string* endpoint : {&edge.src, &edge.dst}) {
                if (!declared.count(*endpoint)) {
                    if (!options.auto_declare)
                        throw ParseError(context + ": references undeclared node \"" + *endpoint + "\"");
                    declared.insert(*endpoint);
                    doc.nodes.push_back({*endpoint, {}});
                }
            }
            doc.edges.push_back(std::move(edge));
        }
    }

    if (j.contains("layers"))
        doc.layers = parse_layer_object(j.at("layers"));
    return doc;
}

GraphDocument parse_csv_edges(const std::string& text) {
    GraphDocument doc;
    std::unordered_set<std::string> declared;
    auto declare = [&](const std::string& id) {
        if (declared.insert(id).second)
            doc.nodes.push_back({id, {}});
    };

    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool first_data_line = true;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        std::string trimmed = line;
        trimmed.erase(0, trimmed.find_first_not_of(" \t"));
        if (trimmed.empty() || trimmed[0] == '#')
            continue;

        std::vector<std::string> fields;
        size_t start = 0;
        while (true) {
            const size_t comma = line.find(',', start);
            fields.push_back(line.substr(start, comma - start));
            if (comma == std::string::npos)
                break;
            start = comma + 1;
        }
        for (std::string& f : fields) {
            f.erase(0, f.find_first_not_of(" \t"));
            f.erase(f.find_last_not_of(" \t") + 1);
        }
        if (fields.size() != 2)
            throw ParseError("csv: line " + std::to_string(line_no) + ": expected 2 columns, got " +
                             std::to_string(fields.size()));
        if (first_data_line) {
            first_data_line = false;
            if (fields[0] == "src" && fields[1] == "dst")
                continue;  // header
        }
        if (fields[0].empty() || fields[1].empty())
            throw ParseError("csv: line " + std::to_string(line_no) + ": empty node id");
        declare(fields[0]);
        declare(fields[1]);
        doc.edges.push_back({fields[0], fields[1]});
    }
    return doc;
}

namespace {

// Restricted DOT dialect: `digraph NAME { a -> b; ... }` with quoted or bare
// identifiers, optional node statements, `//` `/* */` and `#` comments.
// Attribute lists and graph attributes are skipped with a warning;
// undirected graphs and subgraphs are unsupported constructs.
struct DotToken {
    enum Kind { Id, Symbol, Arrow, UndirectedEdge, End } kind = End;
    std::string text;
    int line = 0;
};

class DotLexer {
public:
    explicit DotLexer(const std::string& text) : text_(text) {}

    DotToken next() {
        skip_space_and_comments();
        DotToken tok;
        tok.line = line_;
        if (pos_ >= text_.size()) {
            tok.kind = DotToken::End;
            return tok;
        }
        const char c = text_[pos_];
        if (c == '"') {
            ++pos_;
            std::string value;
            while (pos_ < text_.size() && text_[pos_] != '"') {
                if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) {
                    ++pos_;
                    value.push_back(text_[pos_]);
                } else {
                    if (text_[pos_] == '\n')
                        ++line_;
                    value.push_back(text_[pos_]);
                }
                ++pos_;
            }
            if (pos_ >= text_.size())
                throw ParseError("dot: line " + std::to_string(tok.line) + ": unterminated string");
            ++pos_;
            tok.kind = DotToken::Id;
            tok.text = value;
            return tok;
        }
        if (c == '-' && pos_ + 1 < text_.size()) {
            if (text_[pos_ + 1] == '>') {
                pos_ += 2;
                tok.kind = DotToken::Arrow;
                tok.text = "->";
                return tok;
            }
            if (text_[pos_ + 1] == '-') {
                pos_ += 2;
                tok.kind = DotToken::UndirectedEdge;
                tok.text = "--";
                return tok;
            }
        }
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.') {
            std::string value;
            while (pos_ < text_.size()) {
                const char d = text_[pos_];
                if (std::isalnum(static_cast<unsigned char>(d)) || d == '_' || d == '.') {
                    value.push_back(d);
                    ++pos_;
                } else {
                    break;
                }
            }
            tok.kind = DotToken::Id;
            tok.text = value;
            return tok;
        }
        if (std::string("{};[]=,").find(c) != std::string::npos) {
            ++pos_;
            tok.kind = DotToken::Symbol;
            tok.text = std::string(1, c);
            return tok;
        }
        throw ParseError("dot: line " + std::to_string(line_) + ": unexpected character '" +
                         std::string(1, c) + "'");
    }

private:
    void skip_space_and_comments() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '\n') {
                ++line_;
                ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
                while (pos_ < text_.size() && text_[pos_] != '\n')
                    ++pos_;
            } else if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n')
                    ++pos_;
            } else if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '*') {
                const int start_line = line_;
                pos_ += 2;
                while (pos_ + 1 < text_.size() && !(text_[pos_] == '*' && text_[pos_ + 1] == '/')) {
                    if (text_[pos_] == '\n')
                        ++line_;
                    ++pos_;
                }
                if (pos_ + 1 >= text_.size())
                    throw ParseError("dot: line " + std::to_string(start_line) +
                                     ": unterminated block comment");
                pos_ += 2;
            } else {
                break;
            }
        }
    }

    const std::string& text_;
    size_t pos_ = 0;
    int line_ = 1;
};

class DotParser {
public:
    explicit DotParser(const std::string& text) : lexer_(text) { advance(); }

    GraphDocument parse() {
        if (tok_.kind == DotToken::Id && tok_.text == "strict")
            advance();
        if (tok_.kind != DotToken::Id)
            throw ParseError("dot: line " + std::to_string(tok_.line) + ": expected graph header");
        if (tok_.text == "graph")
            throw ParseError("dot: line " + std::to_string(tok_.line) +
                             ": unsupported construct: undirected graph (use digraph)");
        if (tok_.text != "digraph")
            throw ParseError("dot: line " + std::to_string(tok_.line) + ": expected \"digraph\", got \"" +
                             tok_.text + "\"");
        advance();
        if (tok_.kind == DotToken::Id)
            advance();  // optional graph name
        expect_symbol("{");
        while (!(tok_.kind == DotToken::Symbol && tok_.text == "}")) {
            if (tok_.kind == DotToken::End)
                throw ParseError("dot: unexpected end of input, missing '}'");
            statement();
        }
        return std::move(doc_);
    }

private:
    void advance() { tok_ = lexer_.next(); }

    void expect_symbol(const std::string& s) {
        if (tok_.kind != DotToken::Symbol || tok_.text != s)
            throw ParseError("dot: line " + std::to_string(tok_.line) + ": expected '" + s + "'");
        advance();
    }

    void declare(const std::string& id, int line) {
        if (id.empty())
            throw ParseError("dot: line " + std::to_string(line) + ": empty node id");
        if (declared_.insert(id).second)
            doc_.nodes.push_back({id, {}});
    }

    void skip_attr_list(int line) {
        int depth = 0;
        do {
            if (tok_.kind == DotToken::End)
                throw ParseError("dot: line " + std::to_string(line) + ": unterminated attribute list");
            if (tok_.kind == DotToken::Symbol && tok_.text == "[")
                ++depth;
            else if (tok_.kind == DotToken::Symbol && tok_.text == "]")
                --depth;
            advance();
        } while (depth > 0);
        doc_.warnings.push_back("dot: line " + std::to_string(line) + ": attributes ignored");
    }

    void statement() {
        if (tok_.kind == DotToken::Symbol && tok_.text == ";") {
            advance();
            return;
        }
        if (tok_.kind == DotToken::UndirectedEdge)
            throw ParseError("dot: line " + std::to_string(tok_.line) +
                             ": unsupported construct: undirected edge '--'");
        if (tok_.kind != DotToken::Id)
            throw ParseError("dot: line " + std::to_string(tok_.line) + ": expected a statement");
        if (tok_.text == "subgraph")
            throw ParseError("dot: line " + std::to_string(tok_.line) +
                             ": unsupported construct: subgraph");

        const DotToken first = tok_;
        advance();

        // graph-level attribute: id = id
        if (tok_.kind == DotToken::Symbol && tok_.text == "=") {
            advance();
            if (tok_.kind != DotToken::Id)
                throw ParseError("dot: line " + std::to_string(first.line) +
                                 ": expected a value after '='");
            advance();
            doc_.warnings.push_back("dot: line " + std::to_string(first.line) + ": attributes ignored");
            return;
        }

        // attr defaults: graph/node/edge [ ... ]
        if ((first.text == "graph" || first.text == "node" || first.text == "edge") &&
            tok_.kind == DotToken::Symbol && tok_.text == "[") {
            skip_attr_list(first.line);
            return;
        }

        std::string prev = first.text;
        declare(prev, first.line);
        while (tok_.kind == DotToken::Arrow) {
            advance();
            if (tok_.kind == DotToken::UndirectedEdge)
                throw ParseError("dot: line " + std::to_string(tok_.line) +
                                 ": unsupported construct: undirected edge '--'");
            if (tok_.kind != DotToken::Id)
                throw ParseError("dot: line " + std::to_string(tok_.line) +
                                 ": expected a node id after '->'");
            declare(tok_.text, tok_.line);
            doc_.edges.push_back({prev, tok_.text});
            prev = tok_.text;
            advance();
        }
        if (tok_.kind == DotToken::UndirectedEdge)
            throw ParseError("dot: line " + std::to_string(tok_.line) +
                             ": unsupported construct: undirected edge '--'");
        if (tok_.kind == DotToken::Symbol && tok_.text == "[")
            skip_attr_list(first.line);
        if (tok_.kind == DotToken::Symbol && tok_.text == ";")
            advance();
    }

    DotLexer lexer_;
    DotToken tok_;
    GraphDocument doc_;
    std::unordered_set<std::string> declared_;
};

}  // namespace

GraphDocument parse_dot_subset(const std::string& text) {
    return DotParser(text).parse();
}

LayerDocument parse_layer_assignment(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("layers json: ") + e.what());
    }
    return parse_layer_object(j);
}

namespace {

json layer_object_to_json(const LayerDocument& layers) {
    json out;
    out["direction"] = "top-first";
    out["layers"] = json::array();
    for (const LayerDocument::Layer& l : layers.layers) {
        json jl;
        if (!l.name.empty())
            jl["name"] = l.name;
        jl["members"] = l.members;
        out["layers"].push_back(std::move(jl));
    }
    return out;
}

}  // namespace

std::string emit_json_graph(const GraphDocument& doc) {
    json out;
    out["nodes"] = json::array();
    for (const DocNode& n : doc.nodes) {
        json jn;
        jn["id"] = n.id;
        if (!n.attrs.empty())
            jn["attrs"] = n.attrs;
        out["nodes"].push_back(std::move(jn));
    }
    out["edges"] = json::array();
    for (const DocEdge& e : doc.edges)
        out["edges"].push_back({{"src", e.src}, {"dst", e.dst}});
    if (doc.layers)
        out["layers"] = layer_object_to_json(*doc.layers);
    return out.dump(2) + "\n";
}

std::string emit_dot(const GraphDocument& doc) {
    std::ostringstream out;
    auto quote = [](const std::string& s) {
        std::string q = "\"";
        for (char c : s) {
            if (c == '"' || c == '\\')
                q.push_back('\\');
            q.push_back(c);
        }
        q.push_back('"');
        return q;
    };
    out << "digraph g {\n";
    for (const DocNode& n : doc.nodes)
        out << "  " << quote(n.id) << ";\n";
    for (const DocEdge& e : doc.edges)
        out << "  " << quote(e.src) << " -> " << quote(e.dst) << ";\n";
    out << "}\n";
    return out.str();
}

std::string emit_layer_assignment(const LayerDocument& layers) {
    return layer_object_to_json(layers).dump(2) + "\n";
}

void deduplicate_edges(GraphDocument& doc) {
    std::set<std::pair<std::string, std::string>> seen;
    std::vector<DocEdge> kept;
    for (DocEdge& e : doc.edges)
        if (seen.emplace(e.src, e.dst).second)
            kept.push_back(std::move(e));
    doc.edges = std::move(kept);
}

BindResult bind_graph(const GraphDocument& doc, const LayerDocument& layers,
                      const BindOptions& options) {
    GraphDocument working = doc;
    working.warnings.clear();
    if (options.dedupe)
        deduplicate_edges(working);

    // only binding-time warnings; parse warnings stay on the documents
    std::vector<std::string> warnings;

    std::vector<ProgramElement> elements;
    std::unordered_map<std::string, NodeId> ids;
    for (const DocNode& n : working.nodes) {
        if (ids.count(n.id))
            throw GraphError("duplicate node id \"" + n.id + "\"");
        const NodeId id = static_cast<NodeId>(elements.size());
        ids[n.id] = id;
        elements.push_back({id, n.id, n.attrs});
    }
    if (elements.empty())
        throw GraphError("graph has no nodes");

    std::vector<DependencyEdge> edges;
    for (const DocEdge& e : working.edges) {
        const auto src = ids.find(e.src);
        const auto dst = ids.find(e.dst);
        if (src == ids.end())
            throw GraphError("edge references unknown node \"" + e.src + "\"");
        if (dst == ids.end())
            throw GraphError("edge references unknown node \"" + e.dst + "\"");
        if (src->second == dst->second) {
            warnings.push_back("dropped self-loop on \"" + e.src + "\"");
            continue;
        }
        edges.push_back({static_cast<EdgeId>(edges.size()), src->second, dst->second});
    }

    LayerAssignment assignment;
    assignment.layer_count = static_cast<int>(layers.layers.size());
    if (assignment.layer_count < 1)
        throw GraphError("layer assignment has no layers");
    assignment.layer_of.assign(elements.size(), 0);
    for (int l = 0; l < assignment.layer_count; ++l) {
        const LayerDocument::Layer& layer = layers.layers[l];
        if (!layer.name.empty())
            assignment.layer_names[l + 1] = layer.name;
        for (const std::string& member : layer.members) {
            const auto it = ids.find(member);
            if (it == ids.end())
                throw GraphError("layer member \"" + member + "\" is not a node of the graph");
            if (assignment.layer_of[it->second] != 0)
                throw GraphError("element \"" + member + "\" assigned to more than one layer");
            assignment.layer_of[it->second] = l + 1;
        }
    }
    for (const ProgramElement& el : elements)
        if (assignment.layer_of[el.id] == 0)
            throw GraphError("element \"" + el.name + "\" has no layer assignment");

    for (const std::string& w : layers.warnings)
        warnings.push_back(w);

    return BindResult{LayeredGraph(std::move(elements), std::move(edges), std::move(assignment)),
                      std::move(warnings)};
}

GraphDocument document_from_graph(const LayeredGraph& g) {
    GraphDocument doc;
    for (const ProgramElement& el : g.elements())
        doc.nodes.push_back({el.name, el.metadata});
    for (const DependencyEdge& e : g.edges())
        doc.edges.push_back({g.element(e.src).name, g.element(e.dst).name});
    doc.layers = layer_document_from_graph(g);
    return doc;
}

LayerDocument layer_document_from_graph(const LayeredGraph& g) {
    LayerDocument layers;
    layers.layers.resize(g.layer_count());
    for (LayerIndex l = 1; l <= g.layer_count(); ++l) {
        const auto it = g.layers().layer_names.find(l);
        if (it != g.layers().layer_names.end())
            layers.layers[l - 1].name = it->second;
    }
    for (const ProgramElement& el : g.elements())
        layers.layers[g.layers().layer_of[el.id] - 1].members.push_back(el.name);
    return layers;
}

}  // namespace layercheck
