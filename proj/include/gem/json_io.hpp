#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "gem/colored_graph.hpp"
#include "gem/enumerate.hpp"
#include "gem/moves.hpp"
#include "gem/pseudocomplex.hpp"
#include "gem/tensor.hpp"
#include "gem/topology.hpp"

namespace gem {

// Graph wire format: {"d": <int>, "order": <int>, "matchings": [[...], ...]}
// with matchings[c] a 0-indexed involution array of length order. Files hold
// one object or a JSON-lines stream.
nlohmann::ordered_json graph_to_json(const ColoredGraph& g);
ColoredGraph graph_from_json(const nlohmann::json& j);

// A whole document or a JSON-lines stream of graph objects.
std::vector<ColoredGraph> read_graphs(std::istream& in);
std::vector<ColoredGraph> read_graphs_file(const std::string& path);

// Invariant report for one connected graph: order, d, bipartiteness, the
// genus per cyclic class, the G-degree, the Euler characteristic and (for
// d = 3) the singularity profile.
nlohmann::ordered_json invariant_report(const ColoredGraph& g);

nlohmann::ordered_json profile_to_json(const SingularityProfile& profile);

nlohmann::ordered_json move_record_to_json(const MoveRecord& move);

nlohmann::ordered_json catalog_entry_to_json(const CatalogEntry& entry,
                                             const CatalogParams& params);
void write_catalog(std::ostream& out, const Catalog& catalog);
Catalog read_catalog(std::istream& in);
Catalog read_catalog_file(const std::string& path);

void write_classification_csv(std::ostream& out, const ClassificationTable& table);
nlohmann::ordered_json classification_to_json(const ClassificationTable& table);

nlohmann::ordered_json histogram_to_json(const ExpansionHistogram& histogram);
nlohmann::ordered_json counts_to_json(const FreeEnergyCounts& counts);

// Trace invariant wire format: the graph format restricted to colors 1..d
// ("colors_offset": 1, matchings hold colors 1..d) plus the ordered "white"
// list; "black" defaults to the complement in ascending order.
TraceInvariant invariant_from_json(const nlohmann::json& j);
TraceInvariant read_invariant_file(const std::string& path);

// Complex wire format: {"d": <int>, "simplices": [[...], ...]} with an
// optional "identifications" list of {"a": [s, v...], "b": [t, v...]}
// positional facet gluings.
Pseudocomplex complex_from_json(const nlohmann::json& j);
Pseudocomplex read_complex_file(const std::string& path);

} // namespace gem
