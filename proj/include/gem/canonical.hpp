#pragma once

#include <string>

#include "gem/colored_graph.hpp"

namespace gem {

// ColorFixed: identity up to vertex relabeling only.
// ColorFree: additionally up to permutation of the colors.
enum class CodeMode { ColorFixed, ColorFree };

// Byte string uniquely identifying a connected graph in the chosen mode:
// equal codes <=> isomorphic graphs. Codes decode back to a graph and
// compare lexicographically (shorter graphs of the same d sort first).
using CanonicalCode = std::string;

// In a properly edge-colored regular graph a root choice determines the
// whole breadth-first relabeling (neighbors explored in ascending color
// order), so canonicalization is the lexicographic minimum of the relabeled
// matching tables over all roots, and over all color permutations in
// ColorFree mode. Requires a connected graph.
CanonicalCode canonical_code(const ColoredGraph& g, CodeMode mode);

ColoredGraph graph_from_code(const CanonicalCode& code);

std::string code_to_hex(const CanonicalCode& code);
CanonicalCode code_from_hex(const std::string& hex);

const char* code_mode_name(CodeMode mode);
CodeMode code_mode_from_name(const std::string& name);

} // namespace gem
