#pragma once

#include <vector>

#include "gem/colored_graph.hpp"

namespace gem {

// A pure d-dimensional complex given as vertex tuples; (d-1)-faces are
// identified when their vertex sets match, plus explicit pairings for
// pseudo-identifications between faces with different vertex sets.
struct Pseudocomplex {
    int dim = 0;
    std::vector<std::vector<int>> simplices; // each of size dim+1, distinct entries

    // Positional gluing: facet_a[i] of simplex_a is identified with
    // facet_b[i] of simplex_b (vertex id lists of length dim).
    struct Gluing {
        int simplex_a = 0;
        std::vector<int> facet_a;
        int simplex_b = 0;
        std::vector<int> facet_b;
    };
    std::vector<Gluing> identifications;

    static Pseudocomplex make(int dim, std::vector<std::vector<int>> simplices,
                              std::vector<Gluing> identifications = {});
};

// Fixtures: the boundary complex of a (d+1)-simplex, i.e. the minimal
// triangulation of the d-sphere with d+2 top simplices.
Pseudocomplex simplex_boundary(int d);

// Dual graph of the first barycentric subdivision: one vertex per flag
// (top simplex plus an ordering of its vertices), colored by the dimension
// at which two flags differ. Emits one graph per connected component, each
// of order (d+1)! times its share of top simplices. Requires a closed
// complex; boundary or branching faces raise NotClosed.
std::vector<ColoredGraph> from_triangulation(const Pseudocomplex& k);

// Cones off every boundary component (one new apex per component) so the
// result is closed; identity on already-closed complexes.
Pseudocomplex cap_boundary(const Pseudocomplex& k);

} // namespace gem
