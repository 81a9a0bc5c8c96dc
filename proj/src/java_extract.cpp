#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "layercheck/ingest.hpp"

namespace layercheck {

namespace {

bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

// Replaces comments, string literals (including text blocks) and char
// literals with spaces so the lexical scans below never match inside them.
// Length is preserved.
std::string strip_comments_and_literals(const std::string& src) {
    std::string out = src;
    enum class State { Code, Line, Block, Str, TextBlock, Chr } state = State::Code;
    for (size_t i = 0; i < src.size(); ++i) {
        const char c = src[i];
        const char next = i + 1 < src.size() ? src[i + 1] : '\0';
        switch (state) {
            case State::Code:
                if (c == '/' && next == '/') {
                    state = State::Line;
                    out[i] = ' ';
                } else if (c == '/' && next == '*') {
                    state = State::Block;
                    out[i] = ' ';
                } else if (c == '"' && next == '"' && i + 2 < src.size() && src[i + 2] == '"') {
                    state = State::TextBlock;
                    out[i] = out[i + 1] = out[i + 2] = ' ';
                    i += 2;
                } else if (c == '"') {
                    state = State::Str;
                    out[i] = ' ';
                } else if (c == '\'') {
                    state = State::Chr;
                    out[i] = ' ';
                }
                break;
            case State::Line:
                if (c == '\n')
                    state = State::Code;
                else
                    out[i] = ' ';
                break;
            case State::Block:
                if (c == '*' && next == '/') {
                    out[i] = ' ';
                    out[i + 1] = ' ';
                    ++i;
                    state = State::Code;
                } else if (c != '\n') {
                    out[i] = ' ';
                }
                break;
            case State::Str:
                if (c == '\\' && next != '\0') {
                    out[i] = ' ';
                    out[i + 1] = ' ';
                    ++i;
                } else {
                    if (c == '"' || c == '\n')  // unterminated literals stop at the line end
                        state = State::Code;
                    out[i] = c == '\n' ? '\n' : ' ';
                }
                break;
            case State::TextBlock:
                if (c == '"' && next == '"' && i + 2 < src.size() && src[i + 2] == '"') {
                    out[i] = out[i + 1] = out[i + 2] = ' ';
                    i += 2;
                    state = State::Code;
                } else if (c != '\n') {
                    out[i] = ' ';
                }
                break;
            case State::Chr:
                if (c == '\\' && next != '\0') {
                    out[i] = ' ';
                    out[i + 1] = ' ';
                    ++i;
                } else {
                    if (c == '\'')
                        state = State::Code;
                    out[i] = ' ';
                }
                break;
        }
    }
    return out;
}

// Reads a dotted name starting at `pos`; advances past it. Whitespace is
// allowed around the dots, as javac allows.
std::string read_qualified_name(const std::string& code, size_t& pos) {
    std::string name;
    while (pos < code.size()) {
        while (pos < code.size() && std::isspace(static_cast<unsigned char>(code[pos])))
            ++pos;
        if (pos >= code.size() || !is_ident_start(code[pos])) {
            // the loop only re-enters after consuming a dot, so '*' here
            // closes a wildcard import
            if (pos < code.size() && code[pos] == '*' && !name.empty()) {
                name += ".*";
                ++pos;
            }
            break;
        }
        std::string segment;
        while (pos < code.size() && is_ident_char(code[pos]))
            segment.push_back(code[pos++]);
        if (!name.empty())
            name += ".";
        name += segment;
        size_t look = pos;
        while (look < code.size() && std::isspace(static_cast<unsigned char>(code[look])))
            ++look;
        if (look < code.size() && code[look] == '.')
            pos = look + 1;
        else
            break;
    }
    return name;
}

bool is_keyword_at(const std::string& code, size_t pos, const std::string& word) {
    if (pos >= code.size() || code.compare(pos, word.size(), word) != 0)
        return false;
    if (pos > 0 && is_ident_char(code[pos - 1]))
        return false;
    const size_t end = pos + word.size();
    return end >= code.size() || !is_ident_char(code[end]);
}

struct FileFacts {
    std::string package;
    std::vector<std::string> imports;        // dotted names, "*" suffix preserved
    std::set<std::string> qualified_refs;    // distinct dotted names in code
};

FileFacts scan_java_file(const std::string& raw) {
    FileFacts facts;
    std::string code = strip_comments_and_literals(raw);

    // package and import statements; blank them so the reference scan below
    // does not see them again
    for (size_t i = 0; i < code.size(); ++i) {
        if (!is_ident_start(code[i]))
            continue;
        if (i > 0 && is_ident_char(code[i - 1]))
            continue;
        if (is_keyword_at(code, i, "package")) {
            const size_t start = i;
            size_t pos = i + 7;
            const std::string name = read_qualified_name(code, pos);
            if (!name.empty() && facts.package.empty())
                facts.package = name;
            std::fill(code.begin() + start, code.begin() + pos, ' ');
            i = pos;
        } else if (is_keyword_at(code, i, "import")) {
            const size_t start = i;
            size_t pos = i + 6;
            size_t peek = pos;
            while (peek < code.size() && std::isspace(static_cast<unsigned char>(code[peek])))
                ++peek;
            if (is_keyword_at(code, peek, "static"))
                pos = peek + 6;
            const std::string name = read_qualified_name(code, pos);
            if (!name.empty())
                facts.imports.push_back(name);
            std::fill(code.begin() + start, code.begin() + pos, ' ');
            i = pos;
        } else {
            while (i < code.size() && is_ident_char(code[i]))
                ++i;
        }
    }

    // fully-qualified references: identifier chains with at least two segments
    for (size_t i = 0; i < code.size(); ++i) {
        if (!is_ident_start(code[i]))
            continue;
        if (i > 0 && (is_ident_char(code[i - 1]) || code[i - 1] == '.'))
            continue;
        size_t pos = i;
        std::string name;
        int segments = 0;
        while (pos < code.size() && is_ident_start(code[pos])) {
            std::string segment;
            while (pos < code.size() && is_ident_char(code[pos]))
                segment.push_back(code[pos++]);
            if (!name.empty())
                name += ".";
            name += segment;
            ++segments;
            if (pos < code.size() && code[pos] == '.' && pos + 1 < code.size() &&
                is_ident_start(code[pos + 1]))
                ++pos;
            else
                break;
        }
        if (segments >= 2)
            facts.qualified_refs.insert(name);
        i = pos;
    }
    return facts;
}

// Longest declared package that prefixes `name` on a segment boundary.
// For non-import references the whole name never matches (it ends in a
// class or member segment); imports may match in full via wildcards.
std::string longest_declared_prefix(const std::string& name, const std::set<std::string>& declared,
                                    bool allow_full) {
    std::string candidate = name;
    if (!allow_full) {
        const size_t dot = candidate.rfind('.');
        if (dot == std::string::npos)
            return "";
        candidate = candidate.substr(0, dot);
    }
    while (!candidate.empty()) {
        if (declared.count(candidate))
            return candidate;
        const size_t dot = candidate.rfind('.');
        if (dot == std::string::npos)
            return "";
        candidate = candidate.substr(0, dot);
    }
    return "";
}

}  // namespace

GraphDocument extract_java_package_deps(const std::filesystem::path& source_root,
                                        const ExtractOptions& options, ExtractStats* stats_out) {
    namespace fs = std::filesystem;
    ExtractStats stats;
    GraphDocument doc;

    std::vector<fs::path> files;
    if (fs::exists(source_root)) {
        for (const auto& entry : fs::recursive_directory_iterator(
                 source_root, fs::directory_options::skip_permission_denied)) {
            if (entry.path().extension() != ".java")
                continue;
            // dangling symlinks are kept so they surface as skipped files
            if (entry.is_regular_file() || entry.is_symlink())
                files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());

    struct ScannedFile {
        fs::path path;
        FileFacts facts;
    };
    std::vector<ScannedFile> scanned;
    std::set<std::string> declared;
    for (const fs::path& path : files) {
        std::ifstream in(path, std::ios::binary);
        if (!in) {
            ++stats.files_skipped;
            doc.warnings.push_back("skipped unreadable file: " + path.string());
            continue;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        ++stats.files_scanned;
        FileFacts facts = scan_java_file(buf.str());
        if (facts.package.empty()) {
            ++stats.files_without_package;
            doc.warnings.push_back("no package declaration: " + path.string());
            continue;
        }
        declared.insert(facts.package);
        scanned.push_back({path, std::move(facts)});
    }

    for (const std::string& pkg : declared)
        doc.nodes.push_back({pkg, {}});
    if (declared.empty())
        doc.warnings.push_back("no packages found under " + source_root.string());

    for (const ScannedFile& file : scanned) {
        const std::string& from = file.facts.package;
        auto add_edge = [&](const std::string& target) {
            if (target == from) {
                ++stats.self_references;
                return;
            }
            doc.edges.push_back({from, target});
        };
        for (const std::string& imp : file.facts.imports) {
            const bool wildcard = imp.size() >= 2 && imp.compare(imp.size() - 2, 2, ".*") == 0;
            const std::string name = wildcard ? imp.substr(0, imp.size() - 2) : imp;
            const std::string target = longest_declared_prefix(name, declared, wildcard);
            if (target.empty())
                ++stats.external_imports;
            else
                add_edge(target);
        }
        for (const std::string& ref : file.facts.qualified_refs) {
            const std::string target = longest_declared_prefix(ref, declared, false);
            if (!target.empty())
                add_edge(target);
        }
    }

    if (options.dedupe)
        deduplicate_edges(doc);
    if (stats_out)
        *stats_out = stats;
    return doc;
}

}  // namespace layercheck
