#pragma once

#include <stdexcept>
#include <string>

namespace layercheck {

// Malformed input document (JSON/CSV/DOT/layers). The message carries
// file, line or position context when the parser knows it.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Broken graph invariant: bad construction input, unknown id, layer out
// of range, or an impossible binding (node without a layer, layer member
// missing from the graph).
struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace layercheck
