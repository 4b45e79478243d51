#include "gem/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace gem {

namespace {

nlohmann::json parse_or_throw(const std::string& text, const char* what) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw GemError(ErrorKind::InvalidInput, std::string(what) + ": " + e.what());
    }
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw GemError(ErrorKind::InvalidInput, "cannot read " + path);
    return in;
}

} // namespace

nlohmann::ordered_json graph_to_json(const ColoredGraph& g) {
    nlohmann::ordered_json j;
    j["d"] = g.dim();
    j["order"] = g.order();
    j["matchings"] = g.matchings();
    return j;
}

ColoredGraph graph_from_json(const nlohmann::json& j) {
    try {
        const int d = j.at("d").get<int>();
        const int order = j.at("order").get<int>();
        auto matchings = j.at("matchings").get<std::vector<std::vector<Vertex>>>();
        for (const auto& row : matchings)
            if (static_cast<int>(row.size()) != order)
                throw GemError(ErrorKind::InvalidInput,
                               "matching length does not match the declared order");
        return ColoredGraph::validated(d, std::move(matchings));
    } catch (const nlohmann::json::exception& e) {
        throw GemError(ErrorKind::InvalidInput, std::string("bad graph object: ") + e.what());
    }
}

std::vector<ColoredGraph> read_graphs(std::istream& in) {
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();

    // A whole-document parse covers single objects (pretty-printed or not)
    // and arrays; anything else is treated as JSON lines.
    std::vector<ColoredGraph> out;
    try {
        const auto doc = nlohmann::json::parse(text);
        if (doc.is_array())
            for (const auto& item : doc) out.push_back(graph_from_json(item));
        else
            out.push_back(graph_from_json(doc));
        return out;
    } catch (const nlohmann::json::exception&) {
    }

    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        out.push_back(graph_from_json(parse_or_throw(line, "bad graph line")));
    }
    if (out.empty()) throw GemError(ErrorKind::InvalidInput, "no graphs in input");
    return out;
}

std::vector<ColoredGraph> read_graphs_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_graphs(in);
}

nlohmann::ordered_json profile_to_json(const SingularityProfile& profile) {
    nlohmann::ordered_json j;
    j["h"] = profile.singular_count;
    j["m"] = profile.singular_colors;
    auto& boundary = j["boundary"] = nlohmann::ordered_json::array();
    for (const auto& surface : profile.boundary) boundary.push_back(surface.code());
    j["sum_gd"] = profile.boundary_genus_sum.str();
    auto& by_color = j["by_color"] = nlohmann::ordered_json::array();
    for (const auto& list : profile.residues_by_color) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (const auto& surface : list) row.push_back(surface.code());
        by_color.push_back(std::move(row));
    }
    return j;
}

nlohmann::ordered_json invariant_report(const ColoredGraph& g) {
    nlohmann::ordered_json j;
    j["order"] = g.order();
    j["d"] = g.dim();
    j["bipartite"] = g.is_bipartite();
    auto& genera = j["genera"] = nlohmann::ordered_json::object();
    for (const auto& [eps, rho] : all_regular_genera(g)) genera[eps.str()] = rho.str();
    j["gdegree"] = gurau_degree(g).str();
    j["euler"] = euler_characteristic(g);
    if (g.dim() == 3) j["profile"] = profile_to_json(singularity_profile(g));
    return j;
}

nlohmann::ordered_json move_record_to_json(const MoveRecord& move) {
    nlohmann::ordered_json j;
    j["op"] = "eliminate";
    j["u"] = move.u;
    j["v"] = move.v;
    j["colors"] = move.colors;
    j["r"] = move.r;
    j["dG_delta"] = move.gdegree_delta.str();
    return j;
}

nlohmann::ordered_json catalog_entry_to_json(const CatalogEntry& entry,
                                             const CatalogParams& params) {
    nlohmann::ordered_json j;
    j["code"] = code_to_hex(entry.code);
    j["order"] = entry.order;
    j["d"] = entry.d;
    j["bipartite"] = entry.bipartite;
    j["gdegree"] = entry.gdegree.str();
    j["rho"] = entry.rho.str();
    if (entry.profile) j["profile"] = profile_to_json(*entry.profile);
    j["certificate"] = certificate_name(entry.certificate);
    j["provenance"] = {{"d", params.d},
                       {"max_order", params.max_order},
                       {"filter", params.filter.describe()},
                       {"mode", code_mode_name(params.mode)}};
    return j;
}

void write_catalog(std::ostream& out, const Catalog& catalog) {
    for (const auto& entry : catalog.entries)
        out << catalog_entry_to_json(entry, catalog.params).dump() << '\n';
}

namespace {

EnumerationFilter filter_from_description(const std::string& description) {
    EnumerationFilter filter;
    if (description == "none") return filter;
    std::istringstream parts(description);
    std::string part;
    while (std::getline(parts, part, ',')) {
        if (part == "bipartite")
            filter.bipartite_only = true;
        else if (part == "non-bipartite")
            filter.non_bipartite_only = true;
        else if (part == "contracted")
            filter.contracted_only = true;
        else if (part == "no-2-dipoles")
            filter.no_2_dipoles = true;
        else if (part == "singular")
            filter.require_singular = true;
        else if (part == "in-gs")
            filter.membership_gs_only = true;
        else if (part.rfind("max-gdegree=", 0) == 0) {
            const std::string value = part.substr(12);
            const auto slash = value.find('/');
            filter.max_gdegree =
                slash == std::string::npos
                    ? HalfInteger::whole(std::stoll(value))
                    : HalfInteger::from_twice(std::stoll(value.substr(0, slash)));
        } else {
            throw GemError(ErrorKind::InvalidInput, "unknown filter tag: " + part);
        }
    }
    return filter;
}

} // namespace

Catalog read_catalog(std::istream& in) {
    Catalog catalog;
    bool have_params = false;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto j = parse_or_throw(line, "bad catalog line");
        CatalogEntry entry;
        entry.code = code_from_hex(j.at("code").get<std::string>());
        entry.order = j.at("order").get<int>();
        entry.d = j.at("d").get<int>();
        entry.bipartite = j.at("bipartite").get<bool>();

        const ColoredGraph g = graph_from_code(entry.code);
        entry.gdegree = gurau_degree(g);
        entry.rho = regular_genus_min(g);
        if (entry.d == 3) entry.profile = singularity_profile(g);
        entry.certificate = j.at("certificate").get<std::string>() == "sphere"
                                ? ReduceCertificate::Sphere
                                : ReduceCertificate::IrreducibleLocal;

        const auto& prov = j.at("provenance");
        CatalogParams params;
        params.d = prov.at("d").get<int>();
        params.max_order = prov.at("max_order").get<int>();
        params.filter = filter_from_description(prov.at("filter").get<std::string>());
        params.mode = code_mode_from_name(prov.at("mode").get<std::string>());
        if (!have_params) {
            catalog.params = params;
            have_params = true;
        } else if (params.d != catalog.params.d ||
                   params.max_order != catalog.params.max_order ||
                   params.mode != catalog.params.mode) {
            throw GemError(ErrorKind::InvalidInput, "catalog mixes provenance parameters");
        }
        catalog.entries.push_back(std::move(entry));
    }
    if (!have_params) throw GemError(ErrorKind::InvalidInput, "empty catalog");
    std::sort(catalog.entries.begin(), catalog.entries.end(),
              [](const CatalogEntry& a, const CatalogEntry& b) { return a.code < b.code; });
    return catalog;
}

Catalog read_catalog_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_catalog(in);
}

namespace {

std::string boundary_label(const std::vector<SurfaceType>& boundary) {
    if (boundary.empty()) return "closed";
    std::string out;
    for (std::size_t i = 0; i < boundary.size(); ++i) {
        if (i) out.push_back('+');
        out += boundary[i].code();
    }
    return out;
}

} // namespace

void write_classification_csv(std::ostream& out, const ClassificationTable& table) {
    out << "gdegree,bipartite,boundary,count\n";
    for (const auto& row : table.rows)
        out << row.gdegree.str() << ',' << (row.bipartite ? "true" : "false") << ','
            << boundary_label(row.boundary) << ',' << row.count << '\n';
}

nlohmann::ordered_json classification_to_json(const ClassificationTable& table) {
    nlohmann::ordered_json j;
    auto& rows = j["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json r;
        r["gdegree"] = row.gdegree.str();
        r["bipartite"] = row.bipartite;
        r["boundary"] = boundary_label(row.boundary);
        r["count"] = row.count;
        auto& codes = r["codes"] = nlohmann::ordered_json::array();
        for (const auto& code : row.codes) codes.push_back(code_to_hex(code));
        rows.push_back(std::move(r));
    }
    j["total"] = table.total();
    auto& violations = j["identity_violations"] = nlohmann::ordered_json::array();
    for (const auto& code : table.identity_violations) violations.push_back(code_to_hex(code));
    return j;
}

nlohmann::ordered_json histogram_to_json(const ExpansionHistogram& histogram) {
    nlohmann::ordered_json j;
    j["p"] = histogram.p;
    j["d"] = histogram.d;
    auto& buckets = j["buckets"] = nlohmann::ordered_json::object();
    for (const auto& [gdegree, count] : histogram.buckets) buckets[gdegree.str()] = count;
    j["disconnected"] = histogram.disconnected;
    auto& exponents = j["exponents"] = nlohmann::ordered_json::object();
    for (const auto& [gdegree, count] : histogram.buckets)
        exponents[gdegree.str()] = histogram.exponent(gdegree).str();
    return j;
}

nlohmann::ordered_json counts_to_json(const FreeEnergyCounts& counts) {
    nlohmann::ordered_json j;
    j["d"] = counts.d;
    j["p"] = counts.p;
    j["counting"] = counts.counting == CountingMode::Canonical ? "canonical" : "labeled";
    if (counts.counting == CountingMode::Canonical)
        j["mode"] = code_mode_name(counts.mode);
    j["bipartite_only"] = counts.bipartite_only;
    auto& buckets = j["buckets"] = nlohmann::ordered_json::object();
    for (const auto& [gdegree, count] : counts.buckets) buckets[gdegree.str()] = count;
    if (counts.counting == CountingMode::Labeled) j["disconnected"] = counts.disconnected;
    return j;
}

TraceInvariant invariant_from_json(const nlohmann::json& j) {
    try {
        const int d = j.at("d").get<int>();
        if (j.value("colors_offset", 1) != 1)
            throw GemError(ErrorKind::InvalidInput, "invariant matchings must start at color 1");
        const int order = j.at("order").get<int>();
        auto body = j.at("matchings").get<std::vector<std::vector<Vertex>>>();
        if (static_cast<int>(body.size()) != d)
            throw GemError(ErrorKind::InvalidInput,
                           "expected matchings for colors 1.." + std::to_string(d));
        for (const auto& row : body)
            if (static_cast<int>(row.size()) != order)
                throw GemError(ErrorKind::InvalidInput,
                               "matching length does not match the declared order");

        auto white = j.at("white").get<std::vector<Vertex>>();
        std::vector<Vertex> black;
        if (j.contains("black")) {
            black = j.at("black").get<std::vector<Vertex>>();
        } else {
            std::vector<bool> is_white(order, false);
            for (Vertex w : white)
                if (w >= 0 && w < order) is_white[w] = true;
            for (Vertex v = 0; v < order; ++v)
                if (!is_white[v]) black.push_back(v);
        }

        std::vector<std::vector<Vertex>> matchings(d + 1);
        for (int c = 1; c <= d; ++c) matchings[c] = std::move(body[c - 1]);
        return TraceInvariant::validated(d, std::move(white), std::move(black),
                                         std::move(matchings));
    } catch (const nlohmann::json::exception& e) {
        throw GemError(ErrorKind::InvalidInput, std::string("bad invariant object: ") + e.what());
    }
}

TraceInvariant read_invariant_file(const std::string& path) {
    auto in = open_or_throw(path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return invariant_from_json(parse_or_throw(buffer.str(), "bad invariant file"));
}

Pseudocomplex complex_from_json(const nlohmann::json& j) {
    try {
        const int d = j.at("d").get<int>();
        auto simplices = j.at("simplices").get<std::vector<std::vector<int>>>();
        std::vector<Pseudocomplex::Gluing> identifications;
        if (j.contains("identifications")) {
            for (const auto& id : j.at("identifications")) {
                Pseudocomplex::Gluing gluing;
                auto a = id.at("a").get<std::vector<int>>();
                auto b = id.at("b").get<std::vector<int>>();
                if (a.empty() || b.empty())
                    throw GemError(ErrorKind::InvalidInput, "empty gluing record");
                gluing.simplex_a = a.front();
                gluing.facet_a.assign(a.begin() + 1, a.end());
                gluing.simplex_b = b.front();
                gluing.facet_b.assign(b.begin() + 1, b.end());
                identifications.push_back(std::move(gluing));
            }
        }
        return Pseudocomplex::make(d, std::move(simplices), std::move(identifications));
    } catch (const nlohmann::json::exception& e) {
        throw GemError(ErrorKind::InvalidInput, std::string("bad complex object: ") + e.what());
    }
}

Pseudocomplex read_complex_file(const std::string& path) {
    auto in = open_or_throw(path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return complex_from_json(parse_or_throw(buffer.str(), "bad complex file"));
}

} // namespace gem
