#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gem/canonical.hpp"
#include "gem/colored_graph.hpp"
#include "gem/half_integer.hpp"
#include "gem/moves.hpp"
#include "gem/topology.hpp"

namespace gem {

// Predicates applied to every connected candidate graph.
struct EnumerationFilter {
    bool bipartite_only = false;
    bool non_bipartite_only = false;
    bool contracted_only = false;
    bool no_2_dipoles = false;
    bool require_singular = false; // at least one non-sphere residue; d = 3 only
    bool membership_gs_only = false;
    std::optional<HalfInteger> max_gdegree;

    void check_consistency(int d) const;
    bool passes(const ColoredGraph& g) const;
    std::string describe() const; // comma list for provenance, "none" when empty
};

struct CatalogEntry {
    CanonicalCode code;
    int order = 0;
    int d = 0;
    bool bipartite = false;
    HalfInteger gdegree;
    HalfInteger rho;
    std::optional<SingularityProfile> profile; // present for d = 3
    ReduceCertificate certificate = ReduceCertificate::IrreducibleLocal;
};

struct CatalogParams {
    int d = 0;
    int max_order = 0;
    EnumerationFilter filter;
    CodeMode mode = CodeMode::ColorFree;
};

struct Catalog {
    CatalogParams params;
    std::vector<CatalogEntry> entries; // sorted by code, unique
    bool complete = true;
};

struct EnumerationOptions {
    CodeMode mode = CodeMode::ColorFree;
    int threads = 0;   // 0 = hardware concurrency
    bool prune = true; // canonicity pruning; final dedup runs either way
    std::optional<double> budget_seconds;
    std::string checkpoint_path; // written when the run stops early
    std::string resume_path;     // checkpoint from a previous run
    std::optional<int> unit_limit; // stop after this many work units (tests)
    std::function<void(const std::string&)> progress;
};

// One entry per isomorphism class (in the requested mode) of connected
// (d+1)-colored graphs of order <= max_order passing the filter. Color 0 is
// pinned to the identity pairing; the remaining colors are extended matching
// by matching under connectivity-feasibility, bipartite-parity and
// canonicity pruning, with survivors deduplicated by canonical code. Output
// is sorted by code, so it is deterministic regardless of thread count.
Catalog enumerate_graphs(int d, int max_order, const EnumerationFilter& filter,
                         const EnumerationOptions& options = {});

struct ClassificationRow {
    HalfInteger gdegree;
    bool bipartite = false;
    std::vector<SurfaceType> boundary;
    long long count = 0;
    std::vector<CanonicalCode> codes;
};

struct ClassificationTable {
    std::vector<ClassificationRow> rows;
    // d = 3 sanity sweep: contracted entries whose one-color-removed residues
    // are all connected must satisfy gdegree = (p - 1) + boundary genus sum.
    std::vector<CanonicalCode> identity_violations;

    long long total() const;
};

ClassificationTable classify(const Catalog& catalog);

struct FinitenessReport {
    HalfInteger gdegree; // fixed G-degree S
    int residue_sum = 0; // fixed total one-color-removed residue count R
    std::int64_t bound_p = 0;
    long long matches = 0;
    std::vector<CanonicalCode> violations; // entries with p above the bound
};

// Verifies p <= 2*S/(d-1)! + (R - d) over every entry with the given
// invariants; requires the catalog to reach past the bound.
FinitenessReport finiteness_check(const Catalog& catalog, HalfInteger S, int R);

struct ConjectureGroup {
    std::vector<SurfaceType> boundary;
    CanonicalCode reduction_fingerprint;
    int h = 0;
    long long count = 0;
    int min_order = 0;
    HalfInteger min_gdegree;
    HalfInteger predicted; // (min p - 1) + boundary genus sum
    bool flagged = false;  // min_gdegree below the prediction, h >= 2
};

struct ConjectureReport {
    std::vector<ConjectureGroup> groups;
};

// Groups singular d = 3 entries by boundary multiset and reduction
// fingerprint and compares the minimal G-degree in each group against
// (min p - 1) + boundary genus sum, flagging h >= 2 groups that fall short.
ConjectureReport conjecture_probe(const Catalog& catalog);

enum class CountingMode { Canonical, Labeled };

struct FreeEnergyCounts {
    int d = 0;
    int p = 0;
    CountingMode counting = CountingMode::Canonical;
    CodeMode mode = CodeMode::ColorFree;
    bool bipartite_only = true;
    std::map<HalfInteger, long long> buckets; // G-degree -> count at order 2p
    long long disconnected = 0;               // labeled counting only
};

// Connected graphs of order exactly 2p per G-degree. Canonical counting
// counts isomorphism classes; labeled counting counts tuples of per-color
// white-to-black bijections on fixed white/black labels (bipartite only).
FreeEnergyCounts free_energy_counts(int d, int p, bool bipartite_only = true,
                                    CountingMode counting = CountingMode::Canonical,
                                    CodeMode mode = CodeMode::ColorFree);

// Light dipole probe without properness evaluation.
bool has_dipole_of_rank(const ColoredGraph& g, int r);

} // namespace gem
