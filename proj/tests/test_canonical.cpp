#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>

#include "gem/canonical.hpp"
#include "oracles.hpp"

using namespace gem;

TEST_CASE("codes are invariant under vertex relabeling") {
    std::mt19937 rng(99);
    for (const ColoredGraph& g :
         {torus_gem(), test::quartic_swap_closure(), test::projective_pair_graph()}) {
        const auto fixed = canonical_code(g, CodeMode::ColorFixed);
        const auto free_code = canonical_code(g, CodeMode::ColorFree);
        std::vector<Vertex> perm(g.order());
        std::iota(perm.begin(), perm.end(), 0);
        for (int trial = 0; trial < 10; ++trial) {
            std::shuffle(perm.begin(), perm.end(), rng);
            const ColoredGraph h = test::apply_vertex_permutation(g, perm);
            CHECK(canonical_code(h, CodeMode::ColorFixed) == fixed);
            CHECK(canonical_code(h, CodeMode::ColorFree) == free_code);
        }
    }
}

TEST_CASE("color permutations collapse only in color-free mode") {
    const ColoredGraph g = test::quartic_swap_closure();
    const ColoredGraph h = test::apply_color_permutation(g, {2, 0, 1, 3});
    CHECK(canonical_code(g, CodeMode::ColorFree) == canonical_code(h, CodeMode::ColorFree));
    CHECK(test::brute_isomorphic(g, h, true));
}

TEST_CASE("the order-2 graph gets the same code in both modes") {
    const ColoredGraph g = order_two_graph(3);
    CHECK(canonical_code(g, CodeMode::ColorFixed) == canonical_code(g, CodeMode::ColorFree));
}

TEST_CASE("codes decode back to a graph with the same code") {
    for (const ColoredGraph& g : {order_two_graph(2), torus_gem(), test::quartic_identity_closure(),
                                  test::double_torus_residue_graph()}) {
        const auto code = canonical_code(g, CodeMode::ColorFree);
        const ColoredGraph back = graph_from_code(code);
        CHECK(back.order() == g.order());
        CHECK(back.dim() == g.dim());
        CHECK(canonical_code(back, CodeMode::ColorFree) == code);
        CHECK(code_from_hex(code_to_hex(code)) == code);
    }
}

TEST_CASE("disconnected graphs have no code") {
    const ColoredGraph split = test::graph_of({{1, 0, 3, 2}, {1, 0, 3, 2}, {1, 0, 3, 2}});
    CHECK_THROWS_AS(canonical_code(split, CodeMode::ColorFixed), GemError);
}

// Code equality must induce exactly the brute-force isomorphism partition.
static void check_complete_invariant(int d, int order, CodeMode mode) {
    const bool color_free = mode == CodeMode::ColorFree;
    std::map<std::string, CanonicalCode> brute_to_code;
    std::map<CanonicalCode, std::string> code_to_brute;
    for (const ColoredGraph& g : test::brute_labeled_graphs(d, order, true)) {
        const auto code = canonical_code(g, mode);
        const auto brute = test::brute_canonical(g, color_free);
        const auto [it1, fresh1] = brute_to_code.emplace(brute, code);
        CHECK(it1->second == code);
        const auto [it2, fresh2] = code_to_brute.emplace(code, brute);
        CHECK(it2->second == brute);
        CHECK(fresh1 == fresh2);
    }
}

TEST_CASE("complete invariant for small graphs, both modes, d <= 3") {
    for (const CodeMode mode : {CodeMode::ColorFixed, CodeMode::ColorFree}) {
        check_complete_invariant(1, 4, mode);
        check_complete_invariant(1, 6, mode);
        check_complete_invariant(2, 4, mode);
        check_complete_invariant(2, 6, mode);
        check_complete_invariant(3, 4, mode);
    }
}
