#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gem/moves.hpp"
#include "gem/pseudocomplex.hpp"
#include "gem/topology.hpp"
#include "oracles.hpp"

using namespace gem;

TEST_CASE("tetrahedron boundary becomes a 24-vertex sphere graph") {
    const auto graphs = from_triangulation(simplex_boundary(2));
    REQUIRE(graphs.size() == 1);
    const ColoredGraph& g = graphs.front();
    CHECK(g.dim() == 2);
    CHECK(g.order() == 24);
    CHECK(g.is_connected());
    CHECK(surface_type(g).is_sphere());
    CHECK(euler_characteristic(g) == 2);
}

TEST_CASE("4-simplex boundary becomes a 120-vertex graph reducing to a sphere") {
    const auto graphs = from_triangulation(simplex_boundary(3));
    REQUIRE(graphs.size() == 1);
    const ColoredGraph& g = graphs.front();
    CHECK(g.dim() == 3);
    CHECK(g.order() == 120);
    CHECK(euler_characteristic(g) == 0);
    CHECK(gurau_degree(g) == gurau_degree_recursive(g));
    CHECK(singularity_profile(g).singular_count == 0);

    const auto result = reduce(g);
    CHECK(result.certificate == ReduceCertificate::Sphere);
    CHECK(result.graph.order() == 2);
}

TEST_CASE("disjoint complexes produce one graph per component") {
    // Two tetrahedron boundaries on disjoint vertex sets.
    std::vector<std::vector<int>> simplices;
    for (const auto& s : simplex_boundary(2).simplices) {
        simplices.push_back(s);
        std::vector<int> shifted = s;
        for (int& v : shifted) v += 10;
        simplices.push_back(std::move(shifted));
    }
    const auto graphs = from_triangulation(Pseudocomplex::make(2, simplices));
    REQUIRE(graphs.size() == 2);
    for (const auto& g : graphs) {
        CHECK(g.order() == 24);
        CHECK(surface_type(g).is_sphere());
    }
}

TEST_CASE("boundary and branching are rejected") {
    CHECK_THROWS_AS(from_triangulation(Pseudocomplex::make(2, {{0, 1, 2}})), GemError);
    CHECK_THROWS_AS(
        from_triangulation(Pseudocomplex::make(2, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}})), GemError);
}

TEST_CASE("validation rejects ragged and degenerate simplices") {
    CHECK_THROWS_AS(Pseudocomplex::make(2, {{0, 1, 2}, {0, 1}}), GemError);
    CHECK_THROWS_AS(Pseudocomplex::make(2, {{0, 1, 1}}), GemError);
    CHECK_THROWS_AS(Pseudocomplex::make(0, {{0}}), GemError);
}

TEST_CASE("capping a disk closes it into a sphere") {
    const Pseudocomplex disk = Pseudocomplex::make(2, {{0, 1, 2}});
    const Pseudocomplex capped = cap_boundary(disk);
    CHECK(capped.simplices.size() == 4); // one cone triangle per boundary edge
    const auto graphs = from_triangulation(capped);
    REQUIRE(graphs.size() == 1);
    CHECK(surface_type(graphs.front()).is_sphere());
}

TEST_CASE("capping is the identity on closed complexes") {
    const Pseudocomplex closed = simplex_boundary(3);
    CHECK(cap_boundary(closed).simplices.size() == closed.simplices.size());
}

TEST_CASE("capping a solid tetrahedron's boundary sphere") {
    // A single 3-simplex has an S2 boundary; the cap adds four cone
    // simplices over one apex.
    const Pseudocomplex solid = Pseudocomplex::make(3, {{0, 1, 2, 3}});
    const Pseudocomplex capped = cap_boundary(solid);
    CHECK(capped.simplices.size() == 5);
    int apex = 0;
    for (const auto& s : capped.simplices)
        for (int v : s) apex = std::max(apex, v);
    CHECK(apex == 4); // one boundary component, one new vertex
    const auto graphs = from_triangulation(capped);
    REQUIRE(graphs.size() == 1);
    CHECK(graphs.front().order() == 120);
}

TEST_CASE("explicit pairwise gluings: the pillow is a sphere") {
    // Two triangles glued along all three sides.
    Pseudocomplex::Gluing ab{0, {0, 1}, 1, {3, 4}};
    Pseudocomplex::Gluing bc{0, {1, 2}, 1, {4, 5}};
    Pseudocomplex::Gluing ca{0, {0, 2}, 1, {3, 5}};
    const Pseudocomplex pillow =
        Pseudocomplex::make(2, {{0, 1, 2}, {3, 4, 5}}, {ab, bc, ca});
    const auto graphs = from_triangulation(pillow);
    REQUIRE(graphs.size() == 1);
    CHECK(graphs.front().order() == 12);
    CHECK(surface_type(graphs.front()).is_sphere());
}

TEST_CASE("a face glued to itself is rejected") {
    Pseudocomplex::Gluing self{0, {0, 1}, 0, {0, 1}};
    CHECK_THROWS_AS(from_triangulation(Pseudocomplex::make(2, {{0, 1, 2}}, {self})), GemError);
}
