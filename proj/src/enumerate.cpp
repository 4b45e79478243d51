#include "gem/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include "json.hpp"

namespace gem {

namespace {

using Matching = std::vector<Vertex>;

std::vector<Vertex> identity_pairing(int n) {
    std::vector<Vertex> m(n);
    for (int i = 0; i < n; i += 2) {
        m[i] = i + 1;
        m[i + 1] = i;
    }
    return m;
}

void gen_matchings(std::vector<Vertex>& cur, int matched, std::vector<Matching>& out) {
    const int n = static_cast<int>(cur.size());
    if (matched == n) {
        out.push_back(cur);
        return;
    }
    int u = 0;
    while (cur[u] >= 0) ++u;
    for (int v = u + 1; v < n; ++v) {
        if (cur[v] >= 0) continue;
        cur[u] = v;
        cur[v] = u;
        gen_matchings(cur, matched + 2, out);
        cur[u] = -1;
        cur[v] = -1;
    }
}

// All perfect matchings of {0..n-1} as involution arrays, lexicographic.
std::vector<Matching> all_perfect_matchings(int n) {
    std::vector<Matching> out;
    std::vector<Vertex> cur(n, -1);
    gen_matchings(cur, 0, out);
    return out;
}

// Vertex permutations preserving the identity pairing: block permutations
// combined with swaps inside each pair (the hyperoctahedral group).
std::vector<std::vector<Vertex>> pair_stabilizer(int p) {
    std::vector<int> blocks(p);
    std::iota(blocks.begin(), blocks.end(), 0);
    std::vector<std::vector<Vertex>> out;
    do {
        for (std::uint32_t flips = 0; flips < (1u << p); ++flips) {
            std::vector<Vertex> perm(2 * p);
            for (int i = 0; i < p; ++i) {
                const int bit = (flips >> i) & 1;
                perm[2 * i] = 2 * blocks[i] + bit;
                perm[2 * i + 1] = 2 * blocks[i] + 1 - bit;
            }
            out.push_back(std::move(perm));
        }
    } while (std::next_permutation(blocks.begin(), blocks.end()));
    return out;
}

// Involutive generators: one swap inside each pair, one transposition of
// each pair of blocks. Used for the cheap per-level canonicity test.
std::vector<std::vector<Vertex>> stabilizer_generators(int p) {
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> id(2 * p);
    std::iota(id.begin(), id.end(), 0);
    for (int i = 0; i < p; ++i) {
        auto perm = id;
        std::swap(perm[2 * i], perm[2 * i + 1]);
        out.push_back(std::move(perm));
    }
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j) {
            auto perm = id;
            std::swap(perm[2 * i], perm[2 * j]);
            std::swap(perm[2 * i + 1], perm[2 * j + 1]);
            out.push_back(std::move(perm));
        }
    return out;
}

struct OrderData {
    int n = 0;
    std::vector<Matching> matchings;
    std::vector<int> reps; // indices of first-level candidates
    std::vector<std::vector<Vertex>> generators;
    Matching identity;
};

// First-level candidates: the lexicographic minimum of each orbit of the
// full stabilizer, so isomorphic completions under relabelings that keep
// color 0 in place are built exactly once.
std::vector<int> level1_reps(const std::vector<Matching>& matchings, int p) {
    const auto stab = pair_stabilizer(p);
    std::set<Matching> visited;
    std::vector<int> reps;
    for (std::size_t idx = 0; idx < matchings.size(); ++idx) {
        const Matching& m = matchings[idx];
        if (visited.count(m)) continue;
        reps.push_back(static_cast<int>(idx));
        Matching image(m.size());
        for (const auto& perm : stab) {
            for (std::size_t x = 0; x < m.size(); ++x) image[perm[x]] = perm[m[x]];
            visited.insert(image);
        }
    }
    return reps;
}

struct Unit {
    int order = 0;
    int rep = 0;
};

// Depth-first extension of one first-level candidate.
class UnitSearch {
public:
    UnitSearch(int d, const OrderData& od, const EnumerationFilter& filter, CodeMode mode,
               bool prune)
        : d_(d), od_(od), filter_(filter), mode_(mode), prune_(prune),
          rows_(static_cast<std::size_t>(d) + 1) {}

    void run(int rep_index, std::vector<CanonicalCode>& out) {
        out_ = &out;
        rows_[0] = &od_.identity;
        rows_[1] = &od_.matchings[od_.reps[rep_index]];
        if (filter_.bipartite_only && !prefix_bipartite(1)) return;
        extend(2);
    }

private:
    void extend(int level) {
        if (level > d_) {
            emit_leaf();
            return;
        }
        for (const Matching& m : od_.matchings) {
            rows_[level] = &m;
            if (prune_ && dominated(level)) continue;
            if (filter_.bipartite_only && !prefix_bipartite(level)) continue;
            extend(level + 1);
        }
    }

    // True when some stabilizer generator maps the partial table to a
    // lexicographically smaller one; that smaller table is built in another
    // branch, so this branch only produces duplicates.
    bool dominated(int upto) const {
        const int n = od_.n;
        for (const auto& perm : od_.generators) {
            int verdict = 0;
            for (int c = 1; c <= upto && verdict == 0; ++c) {
                const Matching& row = *rows_[c];
                for (Vertex v = 0; v < n; ++v) {
                    const Vertex a = perm[row[perm[v]]]; // generators are involutions
                    const Vertex b = row[v];
                    if (a != b) {
                        verdict = a < b ? -1 : 1;
                        break;
                    }
                }
            }
            if (verdict < 0) return true;
        }
        return false;
    }

    bool prefix_bipartite(int upto) const {
        const int n = od_.n;
        side_.assign(n, -1);
        stack_.clear();
        for (Vertex start = 0; start < n; ++start) {
            if (side_[start] >= 0) continue;
            side_[start] = 0;
            stack_.push_back(start);
            while (!stack_.empty()) {
                const Vertex u = stack_.back();
                stack_.pop_back();
                for (int c = 0; c <= upto; ++c) {
                    const Vertex w = (*rows_[c])[u];
                    if (side_[w] < 0) {
                        side_[w] = static_cast<std::int8_t>(1 - side_[u]);
                        stack_.push_back(w);
                    } else if (side_[w] == side_[u]) {
                        return false;
                    }
                }
            }
        }
        return true;
    }

    void emit_leaf() {
        std::vector<std::vector<Vertex>> table;
        table.reserve(d_ + 1);
        for (int c = 0; c <= d_; ++c) table.push_back(*rows_[c]);
        const ColoredGraph g = ColoredGraph::trusted(std::move(table));
        if (!g.is_connected()) return;
        if (!filter_.passes(g)) return;
        out_->push_back(canonical_code(g, mode_));
    }

    int d_;
    const OrderData& od_;
    const EnumerationFilter& filter_;
    CodeMode mode_;
    bool prune_;
    std::vector<const Matching*> rows_;
    std::vector<CanonicalCode>* out_ = nullptr;
    mutable std::vector<std::int8_t> side_;
    mutable std::vector<Vertex> stack_;
};

nlohmann::ordered_json params_json(const CatalogParams& params, bool prune) {
    return {{"d", params.d},
            {"max_order", params.max_order},
            {"filter", params.filter.describe()},
            {"mode", code_mode_name(params.mode)},
            {"prune", prune}};
}

} // namespace

bool has_dipole_of_rank(const ColoredGraph& g, int r) {
    const int d = g.dim();
    if (r < 1 || r > d) return false;
    for (Vertex u = 0; u < g.order(); ++u) {
        for (Color c = 0; c < g.num_colors(); ++c) {
            const Vertex v = g.partner(c, u);
            if (v <= u) continue;
            ColorSet R;
            for (Color c2 = 0; c2 < g.num_colors(); ++c2)
                if (g.partner(c2, u) == v) R.add(c2);
            if (R.least() != c || R.count() != r) continue;
            const auto ids = g.component_ids(R.complement(d + 1));
            if (ids[u] != ids[v]) return true;
        }
    }
    return false;
}

void EnumerationFilter::check_consistency(int d) const {
    if (bipartite_only && non_bipartite_only)
        throw GemError(ErrorKind::InvalidInput, "bipartite and non-bipartite filters conflict");
    if (require_singular && d != 3)
        throw GemError(ErrorKind::InvalidInput,
                       "the singularity filter classifies residue surfaces and needs d = 3");
}

bool EnumerationFilter::passes(const ColoredGraph& g) const {
    if (bipartite_only || non_bipartite_only) {
        const bool bip = g.is_bipartite();
        if (bipartite_only && !bip) return false;
        if (non_bipartite_only && bip) return false;
    }
    if (no_2_dipoles && has_dipole_of_rank(g, 2)) return false;
    if (contracted_only && is_contracted(g) != TriBool::Yes) return false;
    if (require_singular && singularity_profile(g).singular_count < 1) return false;
    if (membership_gs_only && membership_in_gs(g) != TriBool::Yes) return false;
    if (max_gdegree && gurau_degree(g) > *max_gdegree) return false;
    return true;
}

std::string EnumerationFilter::describe() const {
    std::vector<std::string> parts;
    if (bipartite_only) parts.push_back("bipartite");
    if (non_bipartite_only) parts.push_back("non-bipartite");
    if (contracted_only) parts.push_back("contracted");
    if (no_2_dipoles) parts.push_back("no-2-dipoles");
    if (require_singular) parts.push_back("singular");
    if (membership_gs_only) parts.push_back("in-gs");
    if (max_gdegree) parts.push_back("max-gdegree=" + max_gdegree->str());
    if (parts.empty()) return "none";
    std::string out = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) out += "," + parts[i];
    return out;
}

Catalog enumerate_graphs(int d, int max_order, const EnumerationFilter& filter,
                         const EnumerationOptions& options) {
    if (d < 1 || d > 5)
        throw GemError(ErrorKind::InvalidInput, "enumeration supports 1 <= d <= 5");
    if (max_order < 2 || max_order % 2 != 0)
        throw GemError(ErrorKind::InvalidInput, "max order must be even and >= 2");
    if (max_order > 14)
        throw GemError(ErrorKind::InvalidInput, "enumeration is desk-scale: max order 14");
    filter.check_consistency(d);

    Catalog catalog;
    catalog.params = CatalogParams{d, max_order, filter, options.mode};

    auto note = [&](const std::string& msg) {
        if (options.progress) options.progress(msg);
    };
    if ((d == 3 && max_order > 10) || (d == 4 && max_order > 6) || d >= 5)
        note("warning: parameters beyond the comfortable range; consider --budget-seconds "
             "with --checkpoint");

    // Per-order search data and the flat unit list.
    std::map<int, OrderData> orders;
    std::vector<Unit> units;
    for (int n = 2; n <= max_order; n += 2) {
        OrderData od;
        od.n = n;
        od.matchings = all_perfect_matchings(n);
        od.identity = identity_pairing(n);
        od.generators = stabilizer_generators(n / 2);
        if (options.prune)
            od.reps = level1_reps(od.matchings, n / 2);
        else {
            od.reps.resize(od.matchings.size());
            std::iota(od.reps.begin(), od.reps.end(), 0);
        }
        for (std::size_t r = 0; r < od.reps.size(); ++r)
            units.push_back(Unit{n, static_cast<int>(r)});
        orders.emplace(n, std::move(od));
    }

    std::vector<char> done(units.size(), 0);
    std::set<CanonicalCode> codes;

    // Resume: skip completed units and reload their codes.
    if (!options.resume_path.empty()) {
        std::ifstream in(options.resume_path);
        if (!in) throw GemError(ErrorKind::InvalidInput, "cannot read " + options.resume_path);
        nlohmann::json ck = nlohmann::json::parse(in);
        if (ck.value("kind", "") != "gemtop-checkpoint")
            throw GemError(ErrorKind::InvalidInput, "not a checkpoint file");
        if (ck.at("params") != nlohmann::json(params_json(catalog.params, options.prune)))
            throw GemError(ErrorKind::InvalidInput,
                           "checkpoint parameters do not match this invocation");
        for (const auto& u : ck.at("done")) {
            const Unit unit{u.at(0).get<int>(), u.at(1).get<int>()};
            for (std::size_t i = 0; i < units.size(); ++i)
                if (units[i].order == unit.order && units[i].rep == unit.rep) done[i] = 1;
        }
        for (const auto& hex : ck.at("codes")) codes.insert(code_from_hex(hex.get<std::string>()));
        note("resumed " + std::to_string(ck.at("done").size()) + " completed units");
    }

    const auto started = std::chrono::steady_clock::now();
    auto out_of_budget = [&]() {
        if (!options.budget_seconds) return false;
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started;
        return elapsed.count() >= *options.budget_seconds;
    };

    std::atomic<std::size_t> next_unit{0};
    std::atomic<int> claimed{0};
    std::mutex merge_mutex;

    auto worker = [&]() {
        for (;;) {
            if (out_of_budget() ||
                (options.unit_limit && claimed.load() >= *options.unit_limit))
                return;
            const std::size_t i = next_unit.fetch_add(1);
            if (i >= units.size()) return;
            if (done[i]) continue;
            claimed.fetch_add(1);

            const OrderData& od = orders.at(units[i].order);
            std::vector<CanonicalCode> local;
            UnitSearch search(d, od, filter, options.mode, options.prune);
            search.run(units[i].rep, local);

            std::lock_guard<std::mutex> lock(merge_mutex);
            codes.insert(local.begin(), local.end());
            done[i] = 1;
            note("order " + std::to_string(units[i].order) + " unit " +
                 std::to_string(units[i].rep) + ": " + std::to_string(codes.size()) +
                 " classes so far");
        }
    };

    int thread_count = options.threads > 0
                           ? options.threads
                           : static_cast<int>(std::thread::hardware_concurrency());
    if (thread_count < 1) thread_count = 1;
    thread_count = std::min<int>(thread_count, static_cast<int>(units.size()) + 1);
    if (thread_count <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < thread_count; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    catalog.complete = std::all_of(done.begin(), done.end(), [](char c) { return c != 0; });

    if (!catalog.complete && options.checkpoint_path.empty() && !options.unit_limit)
        throw GemError(ErrorKind::BudgetExceeded,
                       "budget exhausted and no checkpoint path given");
    if (!options.checkpoint_path.empty()) {
        nlohmann::ordered_json ck;
        ck["kind"] = "gemtop-checkpoint";
        ck["version"] = 1;
        ck["params"] = params_json(catalog.params, options.prune);
        auto& done_json = ck["done"] = nlohmann::json::array();
        for (std::size_t i = 0; i < units.size(); ++i)
            if (done[i]) done_json.push_back({units[i].order, units[i].rep});
        auto& code_json = ck["codes"] = nlohmann::json::array();
        for (const auto& code : codes) code_json.push_back(code_to_hex(code));
        std::ofstream out(options.checkpoint_path);
        if (!out)
            throw GemError(ErrorKind::InvalidInput, "cannot write " + options.checkpoint_path);
        out << ck.dump() << '\n';
    }

    // Entries in code order; every invariant recomputed from the code.
    for (const auto& code : codes) {
        const ColoredGraph g = graph_from_code(code);
        CatalogEntry entry;
        entry.code = code;
        entry.order = g.order();
        entry.d = g.dim();
        entry.bipartite = g.is_bipartite();
        entry.gdegree = gurau_degree(g);
        entry.rho = regular_genus_min(g);
        if (d == 3) entry.profile = singularity_profile(g);
        entry.certificate = reduce(g).certificate;
        catalog.entries.push_back(std::move(entry));
    }
    return catalog;
}

long long ClassificationTable::total() const {
    long long t = 0;
    for (const auto& row : rows) t += row.count;
    return t;
}

ClassificationTable classify(const Catalog& catalog) {
    std::map<std::tuple<HalfInteger, bool, std::vector<SurfaceType>>, ClassificationRow> rows;
    for (const auto& entry : catalog.entries) {
        std::vector<SurfaceType> boundary;
        if (entry.profile) boundary = entry.profile->boundary;
        auto& row = rows[{entry.gdegree, entry.bipartite, boundary}];
        if (row.count == 0) {
            row.gdegree = entry.gdegree;
            row.bipartite = entry.bipartite;
            row.boundary = boundary;
        }
        ++row.count;
        row.codes.push_back(entry.code);
    }

    ClassificationTable table;
    for (auto& [key, row] : rows) table.rows.push_back(std::move(row));

    if (catalog.params.d == 3) {
        for (const auto& entry : catalog.entries) {
            const ColoredGraph g = graph_from_code(entry.code);
            if (is_contracted(g) != TriBool::Yes) continue;
            bool residues_connected = true;
            for (Color c = 0; c <= 3 && residues_connected; ++c)
                residues_connected = g.residue_count(ColorSet::of({c}).complement(4)) == 1;
            if (!residues_connected) continue;
            const HalfInteger expected =
                HalfInteger::whole(g.pairs() - 1) + entry.profile->boundary_genus_sum;
            if (entry.gdegree != expected) table.identity_violations.push_back(entry.code);
        }
    }
    return table;
}

FinitenessReport finiteness_check(const Catalog& catalog, HalfInteger S, int R) {
    const int d = catalog.params.d;
    if (!catalog.complete)
        throw GemError(ErrorKind::IncompleteCatalog, "finiteness check needs a complete catalog");

    const std::int64_t fact = factorial(d - 1);
    // p <= 2S/(d-1)! + (R - d), evaluated exactly on twice-values.
    const std::int64_t numerator = S.twice() + (R - d) * fact;
    std::int64_t bound = numerator / fact;
    if (numerator < 0 && numerator % fact != 0) --bound; // floor for negatives

    FinitenessReport report;
    report.gdegree = S;
    report.residue_sum = R;
    report.bound_p = bound;
    if (catalog.params.max_order < 2 * bound)
        throw GemError(ErrorKind::IncompleteCatalog,
                       "catalog stops at order " + std::to_string(catalog.params.max_order) +
                           " but the bound needs order " + std::to_string(2 * bound));

    for (const auto& entry : catalog.entries) {
        if (entry.gdegree != S) continue;
        const ColoredGraph g = graph_from_code(entry.code);
        int residue_sum = 0;
        for (Color c = 0; c <= d; ++c)
            residue_sum += g.residue_count(ColorSet::of({c}).complement(d + 1));
        if (residue_sum != R) continue;
        ++report.matches;
        if (g.pairs() > bound) report.violations.push_back(entry.code);
    }
    return report;
}

ConjectureReport conjecture_probe(const Catalog& catalog) {
    if (catalog.params.d != 3)
        throw GemError(ErrorKind::WrongDimension, "the degree conjecture probe needs d = 3");

    struct Accum {
        long long count = 0;
        int min_order = 0;
        HalfInteger min_gdegree;
        HalfInteger boundary_sum;
    };
    std::map<std::pair<std::vector<SurfaceType>, CanonicalCode>, Accum> groups;

    for (const auto& entry : catalog.entries) {
        if (!entry.profile || entry.profile->boundary.empty()) continue;
        const ColoredGraph g = graph_from_code(entry.code);
        const CanonicalCode fingerprint = canonical_code(reduce(g).graph, CodeMode::ColorFree);
        auto& acc = groups[{entry.profile->boundary, fingerprint}];
        if (acc.count == 0) {
            acc.min_order = entry.order;
            acc.min_gdegree = entry.gdegree;
            acc.boundary_sum = entry.profile->boundary_genus_sum;
        } else {
            acc.min_order = std::min(acc.min_order, entry.order);
            acc.min_gdegree = std::min(acc.min_gdegree, entry.gdegree);
        }
        ++acc.count;
    }

    ConjectureReport report;
    for (const auto& [key, acc] : groups) {
        ConjectureGroup group;
        group.boundary = key.first;
        group.reduction_fingerprint = key.second;
        group.h = static_cast<int>(key.first.size());
        group.count = acc.count;
        group.min_order = acc.min_order;
        group.min_gdegree = acc.min_gdegree;
        group.predicted = HalfInteger::whole(acc.min_order / 2 - 1) + acc.boundary_sum;
        group.flagged = group.h >= 2 && group.min_gdegree < group.predicted;
        report.groups.push_back(std::move(group));
    }
    return report;
}

FreeEnergyCounts free_energy_counts(int d, int p, bool bipartite_only, CountingMode counting,
                                    CodeMode mode) {
    if (p < 1) throw GemError(ErrorKind::InvalidInput, "p must be >= 1");
    FreeEnergyCounts out;
    out.d = d;
    out.p = p;
    out.counting = counting;
    out.mode = mode;
    out.bipartite_only = bipartite_only;

    if (counting == CountingMode::Canonical) {
        EnumerationFilter filter;
        filter.bipartite_only = bipartite_only;
        EnumerationOptions options;
        options.mode = mode;
        const Catalog catalog = enumerate_graphs(d, 2 * p, filter, options);
        for (const auto& entry : catalog.entries)
            if (entry.order == 2 * p) ++out.buckets[entry.gdegree];
        return out;
    }

    // Labeled counting: whites 0..p-1, blacks p..2p-1, one white-to-black
    // bijection per color; every tuple counts once.
    if (!bipartite_only)
        throw GemError(ErrorKind::InvalidInput,
                       "labeled counting is defined on the white/black-labeled model");
    double tuples = 1;
    for (int c = 0; c <= d; ++c) tuples *= static_cast<double>(factorial(p));
    if (tuples > 2e7)
        throw GemError(ErrorKind::BudgetExceeded, "labeled counting guarded at 2e7 tuples");

    std::vector<std::vector<int>> perms;
    {
        std::vector<int> perm(p);
        std::iota(perm.begin(), perm.end(), 0);
        do perms.push_back(perm);
        while (std::next_permutation(perm.begin(), perm.end()));
    }

    std::vector<std::size_t> pick(d + 1, 0);
    std::vector<std::vector<Vertex>> table(d + 1, std::vector<Vertex>(2 * p));
    for (;;) {
        for (int c = 0; c <= d; ++c) {
            const auto& perm = perms[pick[c]];
            for (int r = 0; r < p; ++r) {
                table[c][r] = static_cast<Vertex>(p + perm[r]);
                table[c][p + perm[r]] = static_cast<Vertex>(r);
            }
        }
        const ColoredGraph g = ColoredGraph::trusted(table);
        if (g.is_connected())
            ++out.buckets[gurau_degree(g)];
        else
            ++out.disconnected;

        int c = d;
        while (c >= 0 && ++pick[c] == perms.size()) pick[c--] = 0;
        if (c < 0) break;
    }
    return out;
}

} // namespace gem
