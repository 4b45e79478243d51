#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gem/colored_graph.hpp"
#include "gem/half_integer.hpp"
#include "gem/topology.hpp"

namespace gem {

enum class Properness { Proper, Improper, Unknown };

const char* properness_name(Properness v);

// Two vertices joined by exactly the edges colored by `colors`, lying in
// different components of the subgraph on the complementary colors.
struct Dipole {
    Vertex u = 0;
    Vertex v = 0;
    ColorSet colors;
    Properness properness = Properness::Unknown;

    int r() const { return colors.count(); }
};

// All dipoles of g, ordered by (u, v), with properness evaluated.
std::vector<Dipole> find_dipoles(const ColoredGraph& g);

// Whether some separating component containing a dipole endpoint represents
// a sphere. Exact for component dimension <= 2; certified by reduction for
// dimension 3 and above (Unknown when certification fails). Improper is
// only ever reported when both components are exactly classified
// non-spheres. For graphs representing singular manifolds every dipole with
// r > 1 is proper, which is applied as a fast path.
Properness is_proper(const ColoredGraph& g, const Dipole& dip);

// Deletes u, v and welds the hanging edges color by color. Requires u and v
// to be joined by exactly the given colors; the separation condition is not
// required, but without it the result may be disconnected.
ColoredGraph eliminate(const ColoredGraph& g, const Dipole& dip);

struct DipoleAddition {
    ColoredGraph graph;
    Dipole dipole; // the inserted pair in the new graph
    bool genuine;  // separation condition holds, so it really is a dipole
};

// Inserts two vertices joined by the colors in R; for every other color c
// the edge attachments[c] = (x, y) is split into x-u and v-y. Eliminating
// the inserted pair recovers the input.
DipoleAddition add_dipole(const ColoredGraph& g, ColorSet R,
                          const std::map<Color, std::pair<Vertex, Vertex>>& attachments);

// For each color, the complementary residue is connected or has no sphere
// component. Exact for d <= 3; reduction-certified above.
TriBool is_contracted(const ColoredGraph& g);

// Eliminates proper 1-dipoles until contracted; exact regime is d = 3.
// Preserves the represented manifold and the G-degree.
ColoredGraph contract(const ColoredGraph& g);

struct MoveRecord {
    Vertex u = 0;
    Vertex v = 0;
    std::vector<Color> colors;
    int r = 0;
    HalfInteger gdegree_delta;
};

enum class ReduceCertificate { Sphere, IrreducibleLocal };

const char* certificate_name(ReduceCertificate c);

struct ReduceResult {
    ColoredGraph graph;
    ReduceCertificate certificate = ReduceCertificate::IrreducibleLocal;
    std::vector<MoveRecord> log;
};

// Greedily eliminates proper dipoles, preferring the largest G-degree drop
// (ties broken by the deterministic dipole order) until none remain.
// Certificate Sphere means the order-2 graph was reached.
ReduceResult reduce(const ColoredGraph& g);

// Exhaustive search over proper-elimination sequences for a path to the
// order-2 graph; intended for small graphs where greedy reduction stalls.
// Returns the move sequence, or nullopt if no sequence reaches order 2.
std::optional<std::vector<MoveRecord>> reduce_exhaustive(const ColoredGraph& g,
                                                         int max_order = 8);

// Sphere certification used by contractedness and membership checks: exact
// for represented dimension <= 2, reduction-based above.
TriBool certified_sphere(const ColoredGraph& g);

} // namespace gem
