#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "layercheck/metrics.hpp"

namespace layercheck {

inline constexpr int kReportSchemaVersion = 1;

// Plain-text tables; ratios are rendered as "num/den=value" rounded to
// `precision` decimals. Cells that cannot hold a violation for the row's
// layer position print "-"; degenerate ratios carry a trailing '*'.
std::string render_text_report(const LayeredGraph& g, const MetricsReport& report,
                               int precision = 2);

// Full-precision JSON document (schema_version 1). The text rendering of the
// same report differs only by display rounding.
nlohmann::json render_json_report(const LayeredGraph& g, const MetricsReport& report);

}  // namespace layercheck
