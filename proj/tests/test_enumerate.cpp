#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <set>
#include <sstream>

#include "gem/enumerate.hpp"
#include "gem/json_io.hpp"
#include "oracles.hpp"

using namespace gem;

namespace {

// Brute-force baseline: every matching tuple over the pinned color-0
// pairing, deduplicated by canonical code.
std::set<CanonicalCode> brute_class_codes(int d, int max_order, const EnumerationFilter& filter,
                                          CodeMode mode) {
    std::set<CanonicalCode> codes;
    for (int order = 2; order <= max_order; order += 2)
        for (const ColoredGraph& g : test::brute_labeled_graphs(d, order, true))
            if (filter.passes(g)) codes.insert(canonical_code(g, mode));
    return codes;
}

std::set<CanonicalCode> entry_codes(const Catalog& catalog) {
    std::set<CanonicalCode> codes;
    for (const auto& entry : catalog.entries) codes.insert(entry.code);
    return codes;
}

} // namespace

TEST_CASE("the order-2 slice holds exactly one class") {
    const Catalog catalog = enumerate_graphs(3, 2, EnumerationFilter{});
    REQUIRE(catalog.entries.size() == 1);
    CHECK(catalog.entries[0].order == 2);
    CHECK(catalog.entries[0].bipartite);
    CHECK(catalog.entries[0].gdegree == HalfInteger::whole(0));
    CHECK(catalog.entries[0].certificate == ReduceCertificate::Sphere);
    CHECK(catalog.complete);
}

TEST_CASE("enumeration matches brute force generation at small orders") {
    for (const CodeMode mode : {CodeMode::ColorFree, CodeMode::ColorFixed}) {
        for (int d : {2, 3}) {
            EnumerationOptions options;
            options.mode = mode;
            const Catalog catalog = enumerate_graphs(d, 6, EnumerationFilter{}, options);
            CHECK(entry_codes(catalog) == brute_class_codes(d, 6, EnumerationFilter{}, mode));
        }
    }
}

TEST_CASE("pruning does not change the catalog") {
    EnumerationOptions pruned;
    EnumerationOptions unpruned;
    unpruned.prune = false;
    const Catalog a = enumerate_graphs(3, 6, EnumerationFilter{}, pruned);
    const Catalog b = enumerate_graphs(3, 6, EnumerationFilter{}, unpruned);
    CHECK(entry_codes(a) == entry_codes(b));
}

TEST_CASE("codes are strictly increasing and re-pass their filter") {
    EnumerationFilter filter;
    filter.bipartite_only = true;
    const Catalog catalog = enumerate_graphs(3, 6, filter);
    for (std::size_t i = 1; i < catalog.entries.size(); ++i)
        CHECK(catalog.entries[i - 1].code < catalog.entries[i].code);
    for (const auto& entry : catalog.entries) {
        const ColoredGraph g = graph_from_code(entry.code);
        CHECK(filter.passes(g));
        CHECK(g.is_connected());
        CHECK(gurau_degree(g) == entry.gdegree);
    }
}

TEST_CASE("the filtered singular slice is empty through order 4") {
    EnumerationFilter filter;
    filter.bipartite_only = true;
    filter.contracted_only = true;
    filter.no_2_dipoles = true;
    filter.require_singular = true;
    const Catalog catalog = enumerate_graphs(3, 4, filter);
    CHECK(catalog.entries.empty());
    CHECK(catalog.complete);

    // An empty catalog also probes to an empty report.
    CHECK(conjecture_probe(catalog).groups.empty());
}

TEST_CASE("bipartite surfaces through order 6: spheres and tori only") {
    EnumerationFilter filter;
    filter.bipartite_only = true;
    const Catalog catalog = enumerate_graphs(2, 6, filter);
    bool saw_torus = false;
    for (const auto& entry : catalog.entries) {
        const ColoredGraph g = graph_from_code(entry.code);
        const long chi = euler_characteristic(g);
        CHECK((chi == 2 || chi == 0));
        const SurfaceType s = surface_type(g);
        CHECK(entry.gdegree == s.gd_contribution());
        if (s == SurfaceType{true, 1}) saw_torus = true;
    }
    CHECK(saw_torus);
}

TEST_CASE("non-bipartite d=2 classes appear at order 4 with half-integer degree") {
    EnumerationFilter filter;
    filter.non_bipartite_only = true;
    const Catalog catalog = enumerate_graphs(2, 4, filter);
    REQUIRE_FALSE(catalog.entries.empty());
    for (const auto& entry : catalog.entries) {
        CHECK_FALSE(entry.bipartite);
        CHECK_FALSE(entry.gdegree.is_integer());
    }
}

TEST_CASE("free energy counts") {
    const auto p1 = free_energy_counts(3, 1);
    REQUIRE(p1.buckets.size() == 1);
    CHECK(p1.buckets.at(HalfInteger::whole(0)) == 1);

    const auto fixed =
        free_energy_counts(3, 2, true, CountingMode::Canonical, CodeMode::ColorFixed);
    CHECK(fixed.buckets.at(HalfInteger::whole(0)) == 4);
    CHECK(fixed.buckets.at(HalfInteger::whole(1)) == 3);

    const auto free_mode =
        free_energy_counts(3, 2, true, CountingMode::Canonical, CodeMode::ColorFree);
    CHECK(free_mode.buckets.at(HalfInteger::whole(0)) == 1);
    CHECK(free_mode.buckets.at(HalfInteger::whole(1)) == 1);

    const auto labeled = free_energy_counts(3, 2, true, CountingMode::Labeled);
    CHECK(labeled.buckets.at(HalfInteger::whole(0)) == 8);
    CHECK(labeled.buckets.at(HalfInteger::whole(1)) == 6);
    CHECK(labeled.disconnected == 2);

    CHECK_THROWS_AS(free_energy_counts(3, 2, false, CountingMode::Labeled), GemError);
}

TEST_CASE("d=2 free energy counts match the surface census") {
    const auto counts = free_energy_counts(2, 3, true, CountingMode::Canonical);
    EnumerationFilter filter;
    filter.bipartite_only = true;
    const Catalog catalog = enumerate_graphs(2, 6, filter);
    std::map<HalfInteger, long long> expected;
    for (const auto& entry : catalog.entries)
        if (entry.order == 6)
            ++expected[surface_type(graph_from_code(entry.code)).gd_contribution()];
    CHECK(counts.buckets == expected);
}

TEST_CASE("classification buckets cover the catalog") {
    const Catalog catalog = enumerate_graphs(3, 6, EnumerationFilter{});
    const ClassificationTable table = classify(catalog);
    CHECK(table.total() == static_cast<long long>(catalog.entries.size()));
    CHECK(table.identity_violations.empty());

    long long sphere_zero = 0;
    for (const auto& entry : catalog.entries) {
        if (entry.profile->singular_count == 0 && entry.gdegree == HalfInteger::whole(0)) {
            CHECK(entry.certificate == ReduceCertificate::Sphere);
            ++sphere_zero;
        }
    }
    CHECK(sphere_zero > 0);
}

TEST_CASE("finiteness bound on the degree-zero cell") {
    const Catalog catalog = enumerate_graphs(3, 4, EnumerationFilter{});
    const auto report = finiteness_check(catalog, HalfInteger::whole(0), 4);
    CHECK(report.bound_p == 1);
    CHECK(report.matches == 1); // only the order-2 graph
    CHECK(report.violations.empty());

    CHECK_THROWS_AS(finiteness_check(catalog, HalfInteger::whole(3), 4), GemError);

    Catalog partial = catalog;
    partial.complete = false;
    CHECK_THROWS_AS(finiteness_check(partial, HalfInteger::whole(0), 4), GemError);
}

TEST_CASE("degree conjecture probe at small orders") {
    const Catalog catalog = enumerate_graphs(3, 6, EnumerationFilter{});
    const ConjectureReport report = conjecture_probe(catalog);
    REQUIRE_FALSE(report.groups.empty());
    bool saw_multi = false;
    for (const auto& group : report.groups) {
        CHECK(group.h == static_cast<int>(group.boundary.size()));
        CHECK_FALSE(group.flagged);
        if (group.h == 1) CHECK(group.min_gdegree == group.predicted);
        if (group.h >= 2) saw_multi = true;
    }
    CHECK(saw_multi);

    const Catalog flat = enumerate_graphs(2, 4, EnumerationFilter{});
    CHECK_THROWS_AS(conjecture_probe(flat), GemError);
}

TEST_CASE("checkpoint and resume reproduce the one-shot catalog") {
    const std::string path = "enumerate_checkpoint_test.json";
    EnumerationOptions first;
    first.threads = 1;
    first.unit_limit = 2;
    first.checkpoint_path = path;
    const Catalog partial = enumerate_graphs(3, 6, EnumerationFilter{}, first);
    CHECK_FALSE(partial.complete);

    EnumerationOptions second;
    second.threads = 1;
    second.resume_path = path;
    const Catalog resumed = enumerate_graphs(3, 6, EnumerationFilter{}, second);
    CHECK(resumed.complete);

    const Catalog direct = enumerate_graphs(3, 6, EnumerationFilter{});
    CHECK(entry_codes(resumed) == entry_codes(direct));
    CHECK(resumed.entries.size() == direct.entries.size());
    std::remove(path.c_str());
}

TEST_CASE("a mismatched checkpoint is rejected") {
    const std::string path = "enumerate_checkpoint_mismatch.json";
    EnumerationOptions first;
    first.unit_limit = 1;
    first.checkpoint_path = path;
    enumerate_graphs(3, 6, EnumerationFilter{}, first);

    EnumerationOptions second;
    second.resume_path = path;
    CHECK_THROWS_AS(enumerate_graphs(3, 4, EnumerationFilter{}, second), GemError);
    std::remove(path.c_str());
}

TEST_CASE("thread count does not change the result") {
    EnumerationOptions single;
    single.threads = 1;
    EnumerationOptions quad;
    quad.threads = 4;
    const Catalog a = enumerate_graphs(3, 6, EnumerationFilter{}, single);
    const Catalog b = enumerate_graphs(3, 6, EnumerationFilter{}, quad);
    REQUIRE(a.entries.size() == b.entries.size());
    for (std::size_t i = 0; i < a.entries.size(); ++i)
        CHECK(a.entries[i].code == b.entries[i].code);
}

TEST_CASE("filter consistency is enforced") {
    EnumerationFilter conflicted;
    conflicted.bipartite_only = true;
    conflicted.non_bipartite_only = true;
    CHECK_THROWS_AS(enumerate_graphs(3, 4, conflicted), GemError);

    EnumerationFilter wrong_dim;
    wrong_dim.require_singular = true;
    CHECK_THROWS_AS(enumerate_graphs(2, 4, wrong_dim), GemError);
}

TEST_CASE("catalog json lines round trip") {
    EnumerationFilter filter;
    filter.bipartite_only = true;
    const Catalog catalog = enumerate_graphs(3, 4, filter);
    std::stringstream buffer;
    write_catalog(buffer, catalog);
    const Catalog parsed = read_catalog(buffer);
    CHECK(parsed.params.d == 3);
    CHECK(parsed.params.max_order == 4);
    CHECK(parsed.params.filter.bipartite_only);
    CHECK(parsed.params.mode == CodeMode::ColorFree);
    REQUIRE(parsed.entries.size() == catalog.entries.size());
    for (std::size_t i = 0; i < parsed.entries.size(); ++i) {
        CHECK(parsed.entries[i].code == catalog.entries[i].code);
        CHECK(parsed.entries[i].gdegree == catalog.entries[i].gdegree);
    }
}
