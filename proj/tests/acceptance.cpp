// Acceptance suite: one pass/fail line per criterion, exact tolerances.
// Returns the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gem/enumerate.hpp"
#include "gem/json_io.hpp"
#include "gem/moves.hpp"
#include "gem/tensor.hpp"
#include "gem/topology.hpp"
#include "oracles.hpp"

using namespace gem;

namespace {

int failures = 0;

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

void criterion(int number, const std::string& label, bool ok, double seconds,
               const std::string& detail = "") {
    std::printf("%s %2d  %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", number, label.c_str(), seconds,
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

bool all_3_residues_bipartite(const ColoredGraph& g) {
    for (Color c = 0; c <= 3; ++c)
        for (const auto& comp : g.residues(ColorSet::of({c}).complement(4)).components)
            if (!comp.graph().is_bipartite()) return false;
    return true;
}

bool reduces_to_order_two(const ColoredGraph& g) {
    if (reduce(g).certificate == ReduceCertificate::Sphere) return true;
    return g.order() <= 8 && reduce_exhaustive(g).has_value();
}

// (u, v, colors) triples satisfying the dipole conditions; no properness.
std::vector<std::pair<std::pair<Vertex, Vertex>, ColorSet>> raw_dipoles(const ColoredGraph& g) {
    std::vector<std::pair<std::pair<Vertex, Vertex>, ColorSet>> out;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v) {
            ColorSet R;
            for (Color c = 0; c < g.num_colors(); ++c)
                if (g.partner(c, u) == v) R.add(c);
            if (R.empty() || R.count() > g.dim()) continue;
            if (g.component_ids(R.complement(g.num_colors()))[u] !=
                g.component_ids(R.complement(g.num_colors()))[v])
                out.push_back({{u, v}, R});
        }
    return out;
}

} // namespace

int main() {
    std::setvbuf(stdout, nullptr, _IONBF, 0);

    // Shared catalogs. The full d=3 order-8 run is the timed performance
    // criterion; the d=4 order-6 run backs the higher-dimensional checks.
    EnumerationOptions four_threads;
    four_threads.threads = 4;
    const Timer catalog3_timer;
    const Catalog cat3 = enumerate_graphs(3, 8, EnumerationFilter{}, four_threads);
    const double catalog3_seconds = catalog3_timer.seconds();
    std::fprintf(stderr, "d=3 order<=8 catalog: %zu classes in %.2fs\n", cat3.entries.size(),
                 catalog3_seconds);

    const Timer catalog4_timer;
    const Catalog cat4 = enumerate_graphs(4, 6, EnumerationFilter{}, four_threads);
    std::fprintf(stderr, "d=4 order<=6 catalog: %zu classes in %.2fs\n", cat4.entries.size(),
                 catalog4_timer.seconds());

    // 1. Fixture invariants, exactly.
    {
        const Timer t;
        bool ok = true;
        const ColoredGraph two = order_two_graph(3);
        for (const auto& [eps, rho] : all_regular_genera(two))
            ok = ok && rho == HalfInteger::whole(0);
        ok = ok && gurau_degree(two) == HalfInteger::whole(0);
        ok = ok && euler_characteristic(two) == 0;
        ok = ok && is_contracted(two) == TriBool::Yes;
        ok = ok && reduce(two).certificate == ReduceCertificate::Sphere;

        const ColoredGraph torus = torus_gem();
        ok = ok && surface_type(torus) == SurfaceType{true, 1};
        ok = ok && euler_characteristic(torus) == 0;
        ok = ok && gurau_degree(torus) == HalfInteger::whole(1);
        criterion(1, "order-2 and torus fixture invariants are exact", ok, t.seconds());
    }

    // 2. Degree drop under dipole elimination, randomized, zero tolerance.
    {
        const Timer t;
        std::mt19937 rng(424242);
        int eliminations = 0;
        bool ok = true;
        std::string detail;
        while (eliminations < 500 && ok) {
            const int d = (rng() % 2 == 0) ? 3 : 4;
            const int order = d == 3 ? 6 + 2 * static_cast<int>(rng() % 3) : 6;
            const ColoredGraph g = test::random_connected_graph(d, order, rng);
            const auto dipoles = raw_dipoles(g);
            if (dipoles.empty()) continue;
            const auto& [pair, colors] = dipoles[rng() % dipoles.size()];
            const int r = colors.count();
            const ColoredGraph after = eliminate(g, Dipole{pair.first, pair.second, colors});
            if (!after.is_connected()) continue;
            const HalfInteger expected =
                HalfInteger::from_twice(factorial(d - 1) * (r - 1) * (d - r));
            if (gurau_degree(g) - gurau_degree(after) != expected) {
                ok = false;
                detail = "delta mismatch at d=" + std::to_string(d) + " r=" + std::to_string(r);
            }
            ++eliminations;
        }
        criterion(2, "500 randomized eliminations obey the exact degree drop", ok && eliminations >= 500,
                  t.seconds(), detail);
    }

    // 3. Direct and recursive G-degree agree on every enumerated graph.
    {
        const Timer t;
        bool ok = true;
        for (const Catalog* catalog : {&cat3, &cat4})
            for (const auto& entry : catalog->entries) {
                const ColoredGraph g = graph_from_code(entry.code);
                if (gurau_degree(g) != gurau_degree_recursive(g)) ok = false;
            }
        criterion(3, "direct and recursive G-degree agree on all enumerated graphs", ok,
                  t.seconds());
    }

    // 4. Integrality of the G-degree and of certified genera.
    {
        const Timer t;
        bool ok = true;
        const auto classes = CyclicPermutation::all_classes(3);
        for (const auto& entry : cat3.entries) {
            if (!entry.gdegree.is_integer()) ok = false;
            if (entry.bipartite) continue;
            const ColoredGraph g = graph_from_code(entry.code);
            for (const auto& eps : classes) {
                try {
                    if (integrality_conditions(g, eps) && !regular_genus(g, eps).is_integer())
                        ok = false;
                } catch (const GemError&) {
                    ok = false;
                }
            }
        }
        criterion(4, "G-degrees are integers; certified genera are integers", ok, t.seconds());
    }

    // 5. The filtered singular catalog slice through order 8.
    {
        const Timer t;
        EnumerationFilter filter;
        filter.bipartite_only = true;
        filter.contracted_only = true;
        filter.no_2_dipoles = true;
        filter.require_singular = true;
        const Catalog early = enumerate_graphs(3, 4, filter, four_threads);
        bool ok = early.entries.empty();
        std::string detail = ok ? "" : "unexpected entries at order <= 4";

        const Catalog slice = enumerate_graphs(3, 8, filter, four_threads);
        const std::vector<SurfaceType> torus_boundary{{true, 1}};
        const std::vector<SurfaceType> double_torus{{true, 1}, {true, 1}};
        for (const auto& entry : slice.entries) {
            if (entry.gdegree > HalfInteger::whole(5)) continue;
            const auto& boundary = entry.profile->boundary;
            if (entry.gdegree < HalfInteger::whole(3)) {
                ok = false;
                detail = "degree below 3 in the slice";
            }
            if (boundary != torus_boundary && boundary != double_torus) {
                ok = false;
                detail = "non-torus boundary at degree <= 5";
            }
            if (entry.gdegree == HalfInteger::whole(3) && boundary != torus_boundary) {
                ok = false;
                detail = "degree-3 entry without a single torus boundary";
            }
        }
        criterion(5, "singular bipartite slice: empty through order 4, tori only at degree <= 5",
                  ok, t.seconds(), detail);
    }

    // 6. Low-degree graphs with bipartite 3-residues reduce to the order-2 graph.
    {
        const Timer t;
        bool ok = true;
        int checked = 0;
        for (const auto& entry : cat3.entries) {
            if (entry.gdegree >= HalfInteger::whole(3)) continue;
            const ColoredGraph g = graph_from_code(entry.code);
            if (!all_3_residues_bipartite(g)) continue;
            ++checked;
            if (!reduces_to_order_two(g)) ok = false;
        }
        criterion(6, "degree < 3 with bipartite 3-residues always reduces to the sphere graph",
                  ok && checked > 0, t.seconds(), "checked " + std::to_string(checked));
    }

    // 7. The degree-2 non-bipartite witness with two projective-plane residues.
    {
        const Timer t;
        int witnesses = 0;
        bool consistent = true;
        const std::vector<SurfaceType> two_planes{{false, 1}, {false, 1}};
        for (const auto& entry : cat3.entries) {
            if (entry.order > 6 || entry.bipartite) continue;
            if (entry.gdegree != HalfInteger::whole(2)) continue;
            if (entry.profile->boundary != two_planes) continue;
            ++witnesses;
            const ColoredGraph g = graph_from_code(entry.code);
            if (all_3_residues_bipartite(g)) consistent = false;
        }
        criterion(7, "a degree-2 graph bounded by two projective planes exists through order 6",
                  witnesses > 0 && consistent, t.seconds(),
                  "witnesses " + std::to_string(witnesses));
    }

    // 8. Non-bipartite manifold graphs at d = 4 have degree >= 12.
    {
        const Timer t;
        bool ok = true;
        int checked = 0;
        for (const auto& entry : cat4.entries) {
            if (entry.bipartite) continue;
            const ColoredGraph g = graph_from_code(entry.code);
            if (membership_in_gs(g) != TriBool::Yes) continue;
            ++checked;
            if (entry.gdegree < HalfInteger::whole(12)) ok = false;
        }
        criterion(8, "non-bipartite d=4 manifold graphs have G-degree >= 12", ok, t.seconds(),
                  "checked " + std::to_string(checked));
    }

    // 9. The quartic pairing histogram.
    {
        const Timer t;
        const ExpansionHistogram h = expansion_histogram(quartic_invariant(3));
        const bool ok = h.buckets.size() == 2 && h.buckets.count(HalfInteger::whole(0)) &&
                        h.buckets.at(HalfInteger::whole(0)) == 1 &&
                        h.buckets.count(HalfInteger::whole(1)) &&
                        h.buckets.at(HalfInteger::whole(1)) == 1 && h.disconnected == 0 &&
                        h.exponent(HalfInteger::whole(0)).str() == "0" &&
                        h.exponent(HalfInteger::whole(1)).str() == "-1";
        criterion(9, "quartic pairing histogram is {0:1, 1:1} with exponents {0, -1}", ok,
                  t.seconds());
    }

    // 10. Canonical codes decide isomorphism exactly at small orders.
    {
        const Timer t;
        bool ok = true;
        for (const CodeMode mode : {CodeMode::ColorFixed, CodeMode::ColorFree}) {
            const bool color_free = mode == CodeMode::ColorFree;
            for (int order = 2; order <= 6; order += 2) {
                std::map<std::string, CanonicalCode> brute_to_code;
                std::map<CanonicalCode, std::string> code_to_brute;
                for (const ColoredGraph& g : test::brute_labeled_graphs(3, order, true)) {
                    const auto code = canonical_code(g, mode);
                    const auto brute = test::brute_canonical(g, color_free);
                    const auto [it1, fresh1] = brute_to_code.emplace(brute, code);
                    const auto [it2, fresh2] = code_to_brute.emplace(code, brute);
                    if (it1->second != code || it2->second != brute || fresh1 != fresh2)
                        ok = false;
                }
            }
        }
        criterion(10, "canonical code equality coincides with brute-force isomorphism", ok,
                  t.seconds());
    }

    // 11. The finiteness bound holds for every enumerated entry.
    {
        const Timer t;
        bool ok = true;
        for (const Catalog* catalog : {&cat3, &cat4}) {
            const int d = catalog->params.d;
            const std::int64_t fact = factorial(d - 1);
            for (const auto& entry : catalog->entries) {
                const ColoredGraph g = graph_from_code(entry.code);
                int residue_sum = 0;
                for (Color c = 0; c <= d; ++c)
                    residue_sum += g.residue_count(ColorSet::of({c}).complement(d + 1));
                // p <= 2S/(d-1)! + (R - d), compared exactly.
                if (g.pairs() * fact > entry.gdegree.twice() + (residue_sum - d) * fact)
                    ok = false;
            }
        }
        criterion(11, "every enumerated entry satisfies the order bound from its invariants", ok,
                  t.seconds());
    }

    // 12. Performance: the full order-8 catalog on four threads.
    criterion(12, "complete d=3 order-8 color-free enumeration under 60 s",
              catalog3_seconds < 60.0, catalog3_seconds,
              std::to_string(cat3.entries.size()) + " classes");

    if (failures == 0)
        std::printf("all criteria passed\n");
    else
        std::printf("%d criteria failed\n", failures);
    return failures;
}
