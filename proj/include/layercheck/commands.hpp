#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace layercheck {

inline constexpr const char* kVersion = "1.0.0";

// Exit codes shared by every command: 0 success (and gate passed),
// 1 gate failed, 2 input or usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitGateFailed = 1;
inline constexpr int kExitInputError = 2;

enum class GraphFormat { Auto, Json, Csv, Dot };
enum class OutputFormat { Text, Json };

// Which verdicts pass the exit-code gate:
//   None    always passes
//   Layered passes unless the verdict is non-layered (default)
//   Closed  passes only a closed-conformant verdict
enum class GatePolicy { None, Layered, Closed };

struct AnalysisConfig {
    std::string graph_path;
    GraphFormat format = GraphFormat::Auto;
    std::optional<std::string> layers_path;
    bool recover = false;
    int granularity = 1;
    int recover_layer_count = 0;
    std::vector<std::pair<double, double>> penalties;  // empty -> default sweep
    double tau_back = 0.0;
    OutputFormat out = OutputFormat::Text;
    int precision = 2;
    bool dedupe = false;
    GatePolicy gate = GatePolicy::Layered;
};

int cmd_analyze(const AnalysisConfig& cfg, std::ostream& out, std::ostream& err);

int cmd_extract(const std::string& source_root, const std::string& out_path, bool dedupe,
                std::ostream& out, std::ostream& err);

int cmd_recover(const std::string& graph_path, GraphFormat format, int granularity,
                int layer_count, const std::string& out_path, std::ostream& out,
                std::ostream& err);

struct GenConfig {
    std::vector<int> nodes_per_layer;
    double p_down = 0.0;
    double p_intra = 0.0;
    double p_back = 0.0;
    double p_skip = 0.0;
    std::uint64_t seed = 0;
    std::string out_path;                        // graph JSON with embedded layers
    std::optional<std::string> layers_out_path;  // optional standalone layers JSON
};

int cmd_gen(const GenConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace layercheck
