// JSON input and output: diagram files, synthetic decorated-configuration
// files, and the canonical homology report rendering.
#pragma once

#include <string>

#include "tkh/khovanov.h"
#include "tkh/poset.h"

namespace tkh {

// Parse a diagram from JSON text. Structural problems (bad JSON, missing
// fields, rationals not in lowest terms, unknown ids) throw PARSE_ERROR.
Diagram parse_diagram(const std::string& text);

// Read and parse a diagram file. Throws IO_ERROR when unreadable.
Diagram load_diagram(const std::string& path);

// Parse a synthetic decorated configuration: named circles with cyclic slot
// sequences "arc.end", optional per-circle class / per-segment gains,
// optional per-arc class and disk side, and labelings y (by circle name) and
// x (by canonical surgered-circle name "s0", "s1", ... or as an array in
// that order). Throws PARSE_ERROR on structure, MALFORMED on inconsistent
// declarations (e.g. a disk-side arc with a nonzero class).
Decorated parse_decorated(const std::string& text);

Decorated load_decorated(const std::string& path);

// Canonical report rendering: one grading entry per (quantum grading,
// homotopical class), ascending, each with its homology groups by
// homological degree. Keys sorted; no whitespace; trailing newline.
std::string report_json(const HomologyResult& r);

// Serialize a diagram back to the file format (pretty-printed, keys
// sorted). Round-trips through parse_diagram.
std::string diagram_json(const Diagram& d);

}  // namespace tkh
