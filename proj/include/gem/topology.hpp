#pragma once

#include <string>
#include <vector>

#include "gem/colored_graph.hpp"
#include "gem/half_integer.hpp"

namespace gem {

enum class TriBool { Yes, No, Unknown };

const char* tri_bool_name(TriBool v);

// Cyclic ordering of the colors 0..d, up to rotation and reversal. The
// canonical representative starts at 0 and has seq[1] < seq.back(), so for
// fixed d there are exactly d!/2 classes (one for d = 1).
struct CyclicPermutation {
    std::vector<Color> seq;

    static CyclicPermutation canonical(std::vector<Color> raw);
    static std::vector<CyclicPermutation> all_classes(int d);

    std::string str() const; // "0,1,3,2"

    auto operator<=>(const CyclicPermutation&) const = default;
};

// Orientability and genus of a closed surface; genus counts handles when
// orientable and crosscaps otherwise.
struct SurfaceType {
    bool orientable = true;
    int genus = 0;

    bool is_sphere() const { return orientable && genus == 0; }
    // Genus if orientable, half the genus if not: the surface's share in a
    // G-degree.
    HalfInteger gd_contribution() const {
        return orientable ? HalfInteger::whole(genus) : HalfInteger::from_twice(genus);
    }
    std::string code() const; // "o<genus>" / "n<crosscaps>", e.g. sphere "o0", torus "o1"

    auto operator<=>(const SurfaceType&) const = default;
};

// Surfaces of all one-color-removed residues of a 4-colored graph: the
// boundary structure of the compact 3-manifold the graph represents.
struct SingularityProfile {
    std::vector<std::vector<SurfaceType>> residues_by_color; // [color][component]
    int singular_count = 0;                                  // h: non-sphere residues
    int singular_colors = 0;                                 // m: colors owning one
    std::vector<SurfaceType> boundary;                       // sorted non-sphere multiset
    HalfInteger boundary_genus_sum;                          // sum of their gd contributions
};

// Genus of the closed surface the graph embeds into regularly for the given
// cyclic color ordering: 2 - 2*rho = sum of consecutive-pair residue counts
// + (1-d)p. Integer for bipartite graphs, a half-integer otherwise.
HalfInteger regular_genus(const ColoredGraph& g, const CyclicPermutation& eps);

std::vector<std::pair<CyclicPermutation, HalfInteger>> all_regular_genera(const ColoredGraph& g);
HalfInteger regular_genus_min(const ColoredGraph& g);

// Sum of the regular genera over all d!/2 cyclic orderings. For d >= 3 the
// result is a non-negative integer; a half-integral value indicates an
// internal bug and raises IntegralityViolation.
HalfInteger gurau_degree(const ColoredGraph& g);

// Same quantity through the residue recursion
//   (d-1)!/2 * (p + d - sum_i g_i^) + sum over one-color-removed components,
// bottoming out at surfaces. Cross-checks gurau_degree.
HalfInteger gurau_degree_recursive(const ColoredGraph& g);

// Euler characteristic of the represented pseudocomplex, via the bijection
// between h-residues and (d-h)-simplices.
long euler_characteristic(const ColoredGraph& g);

// Classification of the closed surface represented by a connected 3-colored
// graph (orientable iff bipartite; genus from the Euler characteristic).
SurfaceType surface_type(const ColoredGraph& g);

SingularityProfile singularity_profile(const ColoredGraph& g);

// Pseudomanifold orientability tracks bipartiteness.
bool orientable(const ColoredGraph& g);

// True when some index i certifies an integer regular genus for a
// non-bipartite graph: all {eps[i-1],eps[i],eps[i+1]}-residues bipartite and
// every residue missing eps[i] either bipartite or of integer genus for the
// induced ordering. Bipartite inputs are trivially integral. When the
// certificate holds, the genus is checked to actually be an integer.
bool integrality_conditions(const ColoredGraph& g, const CyclicPermutation& eps);

// Membership in the class of graphs representing singular manifolds:
// always Yes for d <= 3; exact for d = 4 (all 3-residues of every 4-colored
// residue must be spheres); for d >= 5 Yes only when every residue is
// certified a sphere by reduction, Unknown otherwise. Defined with the move
// machinery because of that certification path.
TriBool membership_in_gs(const ColoredGraph& g);

std::int64_t factorial(int n);

} // namespace gem
