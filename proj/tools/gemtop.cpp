// gemtop: batch analysis and catalog production for edge-colored graphs.
//
// Machine-readable output goes to stdout, progress to stderr. Exit codes:
// 0 success, 1 usage, 2 invalid input, 3 incomplete (checkpointed),
// 4 internal invariant violation.

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>

#include "CLI11.hpp"

#include "gem/enumerate.hpp"
#include "gem/json_io.hpp"
#include "gem/moves.hpp"
#include "gem/pseudocomplex.hpp"
#include "gem/tensor.hpp"
#include "gem/topology.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitIncomplete = 3;
constexpr int kExitInvariant = 4;

int exit_code_for(const gem::GemError& e) {
    switch (e.kind()) {
        case gem::ErrorKind::IntegralityViolation: return kExitInvariant;
        case gem::ErrorKind::BudgetExceeded: return kExitIncomplete;
        default: return kExitBadInput;
    }
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw gem::GemError(gem::ErrorKind::InvalidInput, "cannot write " + path);
    return out;
}

int cmd_inspect(const std::string& path) {
    for (const auto& g : gem::read_graphs_file(path))
        std::cout << gem::invariant_report(g).dump() << '\n';
    return kExitOk;
}

int cmd_degree(const std::string& path) {
    for (const auto& g : gem::read_graphs_file(path)) {
        const gem::HalfInteger direct = gem::gurau_degree(g);
        const gem::HalfInteger recursive = gem::gurau_degree_recursive(g);
        if (direct != recursive) {
            std::cerr << "G-degree mismatch: direct " << direct.str() << " vs recursive "
                      << recursive.str() << '\n';
            return kExitInvariant;
        }
        nlohmann::ordered_json j;
        j["gdegree"] = direct.str();
        j["recursive"] = recursive.str();
        std::cout << j.dump() << '\n';
    }
    return kExitOk;
}

int cmd_dipoles(const std::string& path, std::optional<int> rank) {
    for (const auto& g : gem::read_graphs_file(path)) {
        for (const auto& dip : gem::find_dipoles(g)) {
            if (rank && dip.r() != *rank) continue;
            nlohmann::ordered_json j;
            j["u"] = dip.u;
            j["v"] = dip.v;
            j["colors"] = dip.colors.to_vector();
            j["r"] = dip.r();
            j["properness"] = gem::properness_name(dip.properness);
            std::cout << j.dump() << '\n';
        }
    }
    return kExitOk;
}

int cmd_reduce(const std::string& path, const std::string& log_path, bool exhaustive) {
    std::ofstream log;
    if (!log_path.empty()) log = open_output(log_path);
    for (const auto& g : gem::read_graphs_file(path)) {
        gem::ReduceResult result = gem::reduce(g);
        if (exhaustive && result.certificate != gem::ReduceCertificate::Sphere &&
            g.order() <= 8) {
            if (auto path_to_sphere = gem::reduce_exhaustive(g)) {
                result.log = std::move(*path_to_sphere);
                result.certificate = gem::ReduceCertificate::Sphere;
                result.graph = gem::order_two_graph(g.dim());
            }
        }
        if (log)
            for (const auto& move : result.log)
                log << gem::move_record_to_json(move).dump() << '\n';
        nlohmann::ordered_json j;
        j["certificate"] = gem::certificate_name(result.certificate);
        j["moves"] = result.log.size();
        j["result"] = gem::graph_to_json(result.graph);
        std::cout << j.dump() << '\n';
    }
    return kExitOk;
}

int cmd_wick(const std::string& spec, int d) {
    const gem::TraceInvariant invariant =
        spec == "q1" ? gem::quartic_invariant(d) : gem::read_invariant_file(spec);
    std::cout << gem::histogram_to_json(gem::expansion_histogram(invariant)).dump() << '\n';
    return kExitOk;
}

int cmd_from_triangulation(const std::string& path, bool cap) {
    gem::Pseudocomplex k = gem::read_complex_file(path);
    if (cap) k = gem::cap_boundary(k);
    for (const auto& g : gem::from_triangulation(k))
        std::cout << gem::graph_to_json(g).dump() << '\n';
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"computational topology of edge-colored graphs"};
    app.require_subcommand(1);

    std::string in_path, out_path, log_path, mode_name = "color-free";
    std::string catalog_path, checkpoint_path, resume_path, invariant_spec, format = "csv";
    int d = 3, max_order = 2, threads = 0;
    std::optional<int> dipole_rank;
    std::optional<double> budget_seconds;
    bool cap = false, exhaustive = false, no_prune = false;
    gem::EnumerationFilter filter;

    auto* inspect = app.add_subcommand("inspect", "full invariant report per graph");
    inspect->add_option("file", in_path)->required();

    auto* degree = app.add_subcommand("degree", "G-degree by both methods, checked equal");
    degree->add_option("file", in_path)->required();

    auto* dipoles = app.add_subcommand("dipoles", "list dipoles with properness");
    dipoles->add_option("file", in_path)->required();
    dipoles->add_option("--r", dipole_rank, "only dipoles of this rank");

    auto* reduce = app.add_subcommand("reduce", "greedy dipole reduction with certificate");
    reduce->add_option("file", in_path)->required();
    reduce->add_option("--log", log_path, "write the move log as JSON lines");
    reduce->add_flag("--exhaustive", exhaustive,
                     "search all move sequences on small graphs when greedy stalls");

    auto* enumerate = app.add_subcommand("enumerate", "catalog of isomorphism classes");
    enumerate->add_option("--d", d)->required();
    enumerate->add_option("--max-order", max_order)->required();
    enumerate->add_flag("--bipartite", filter.bipartite_only);
    enumerate->add_flag("--non-bipartite", filter.non_bipartite_only);
    enumerate->add_flag("--contracted", filter.contracted_only);
    enumerate->add_flag("--no-2-dipoles", filter.no_2_dipoles);
    enumerate->add_flag("--singular", filter.require_singular);
    enumerate->add_flag("--in-gs", filter.membership_gs_only);
    enumerate->add_option("--mode", mode_name)->check(CLI::IsMember({"color-free", "color-fixed"}));
    enumerate->add_option("--out", out_path, "catalog JSONL path (default stdout)");
    enumerate->add_option("--threads", threads);
    enumerate->add_option("--budget-seconds", budget_seconds);
    enumerate->add_option("--checkpoint", checkpoint_path);
    enumerate->add_option("--resume", resume_path);
    enumerate->add_flag("--no-prune", no_prune, "disable canonicity pruning (debug)");

    auto* classify = app.add_subcommand("classify", "bucket a catalog by invariants");
    classify->add_option("--catalog", catalog_path)->required();
    classify->add_option("--out", out_path, "table path (default stdout)");
    classify->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    auto* wick = app.add_subcommand("wick", "pairing expansion histogram");
    wick->add_option("--invariant", invariant_spec, "invariant file or the builtin 'q1'")
        ->required();
    wick->add_option("--d", d)->required();

    auto* probe = app.add_subcommand("probe", "finiteness and degree-conjecture reports");
    probe->add_option("--catalog", catalog_path)->required();

    auto* from_tri = app.add_subcommand("from-triangulation", "build the dual colored graph");
    from_tri->add_option("file", in_path)->required();
    from_tri->add_flag("--cap", cap, "cone off boundary components first");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (inspect->parsed()) return cmd_inspect(in_path);
        if (degree->parsed()) return cmd_degree(in_path);
        if (dipoles->parsed()) return cmd_dipoles(in_path, dipole_rank);
        if (reduce->parsed()) return cmd_reduce(in_path, log_path, exhaustive);
        if (wick->parsed()) return cmd_wick(invariant_spec, d);
        if (from_tri->parsed()) return cmd_from_triangulation(in_path, cap);

        if (enumerate->parsed()) {
            gem::EnumerationOptions options;
            options.mode = gem::code_mode_from_name(mode_name);
            options.threads = threads;
            options.prune = !no_prune;
            options.budget_seconds = budget_seconds;
            options.checkpoint_path = checkpoint_path;
            options.resume_path = resume_path;
            options.progress = [](const std::string& msg) { std::cerr << msg << '\n'; };
            const gem::Catalog catalog = gem::enumerate_graphs(d, max_order, filter, options);
            if (!out_path.empty()) {
                auto out = open_output(out_path);
                gem::write_catalog(out, catalog);
            } else {
                gem::write_catalog(std::cout, catalog);
            }
            return catalog.complete ? kExitOk : kExitIncomplete;
        }

        if (classify->parsed()) {
            const gem::Catalog catalog = gem::read_catalog_file(catalog_path);
            const gem::ClassificationTable table = gem::classify(catalog);
            std::ostream* out = &std::cout;
            std::ofstream file;
            if (!out_path.empty()) {
                file = open_output(out_path);
                out = &file;
            }
            if (format == "csv")
                gem::write_classification_csv(*out, table);
            else
                *out << gem::classification_to_json(table).dump() << '\n';
            return kExitOk;
        }

        if (probe->parsed()) {
            const gem::Catalog catalog = gem::read_catalog_file(catalog_path);
            nlohmann::ordered_json j;
            auto& finiteness = j["finiteness"] = nlohmann::ordered_json::array();
            // One cell per observed (G-degree, residue-sum) pair.
            std::set<std::pair<gem::HalfInteger, int>> cells;
            for (const auto& entry : catalog.entries) {
                const gem::ColoredGraph g = gem::graph_from_code(entry.code);
                int residue_sum = 0;
                for (gem::Color c = 0; c <= entry.d; ++c)
                    residue_sum +=
                        g.residue_count(gem::ColorSet::of({c}).complement(entry.d + 1));
                cells.insert({entry.gdegree, residue_sum});
            }
            for (const auto& [S, R] : cells) {
                try {
                    const auto report = gem::finiteness_check(catalog, S, R);
                    finiteness.push_back({{"gdegree", S.str()},
                                          {"residue_sum", R},
                                          {"bound_p", report.bound_p},
                                          {"matches", report.matches},
                                          {"violations", report.violations.size()}});
                } catch (const gem::GemError& e) {
                    if (e.kind() != gem::ErrorKind::IncompleteCatalog) throw;
                    // The bound reaches past the catalog; nothing to certify.
                    finiteness.push_back({{"gdegree", S.str()},
                                          {"residue_sum", R},
                                          {"certified", false}});
                }
            }
            if (catalog.params.d == 3) {
                auto& groups = j["conjecture"] = nlohmann::ordered_json::array();
                for (const auto& group : gem::conjecture_probe(catalog).groups) {
                    nlohmann::ordered_json row;
                    row["boundary"] = nlohmann::ordered_json::array();
                    for (const auto& s : group.boundary) row["boundary"].push_back(s.code());
                    row["h"] = group.h;
                    row["count"] = group.count;
                    row["min_order"] = group.min_order;
                    row["min_gdegree"] = group.min_gdegree.str();
                    row["predicted"] = group.predicted.str();
                    row["flagged"] = group.flagged;
                    groups.push_back(std::move(row));
                }
            }
            std::cout << j.dump() << '\n';
            return kExitOk;
        }
    } catch (const gem::GemError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    }
    return kExitUsage;
}
