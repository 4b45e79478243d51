#include "gem/moves.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <string>

#include "gem/canonical.hpp"

namespace gem {

const char* properness_name(Properness v) {
    switch (v) {
        case Properness::Proper: return "proper";
        case Properness::Improper: return "improper";
        default: return "unknown";
    }
}

const char* certificate_name(ReduceCertificate c) {
    return c == ReduceCertificate::Sphere ? "sphere" : "irreducible-local";
}

TriBool certified_sphere(const ColoredGraph& g) {
    if (!g.is_connected()) return TriBool::No;
    const int d = g.dim();
    if (d <= 1) return TriBool::Yes; // a single colored edge, or a cycle
    if (d == 2) return surface_type(g).is_sphere() ? TriBool::Yes : TriBool::No;
    if (g.order() == 2) return TriBool::Yes;
    return reduce(g).certificate == ReduceCertificate::Sphere ? TriBool::Yes : TriBool::Unknown;
}

namespace {

// The colors joining u and v, provided they are joined by at least one edge.
ColorSet joining_colors(const ColoredGraph& g, Vertex u, Vertex v) {
    ColorSet R;
    for (Color c = 0; c < g.num_colors(); ++c)
        if (g.partner(c, u) == v) R.add(c);
    return R;
}

Properness properness_impl(const ColoredGraph& g, Vertex u, Vertex v, ColorSet R,
                           TriBool membership) {
    const int d = g.dim();
    const int r = R.count();
    const int comp_dim = d - r; // dimension represented by the separating components
    if (comp_dim <= 1) return Properness::Proper; // components are forced 0- or 1-spheres
    if (r > 1 && membership == TriBool::Yes) return Properness::Proper;

    const auto dec = g.residues(R.complement(d + 1));
    const auto ids = g.component_ids(R.complement(d + 1));
    const ColoredGraph side_u = dec.components[ids[u]].graph();
    const ColoredGraph side_v = dec.components[ids[v]].graph();

    const TriBool su = certified_sphere(side_u);
    if (su == TriBool::Yes) return Properness::Proper;
    const TriBool sv = certified_sphere(side_v);
    if (sv == TriBool::Yes) return Properness::Proper;
    if (su == TriBool::No && sv == TriBool::No) return Properness::Improper;
    return Properness::Unknown;
}

} // namespace

Properness is_proper(const ColoredGraph& g, const Dipole& dip) {
    if (joining_colors(g, dip.u, dip.v) != dip.colors || dip.colors.empty() ||
        dip.r() > g.dim())
        throw GemError(ErrorKind::InvalidDipole,
                       "vertex pair is not joined by exactly the given colors");
    const auto ids = g.component_ids(dip.colors.complement(g.num_colors()));
    if (ids[dip.u] == ids[dip.v])
        throw GemError(ErrorKind::InvalidDipole,
                       "vertices are not separated in the complementary subgraph");
    const TriBool membership = dip.r() > 1 ? membership_in_gs(g) : TriBool::Unknown;
    return properness_impl(g, dip.u, dip.v, dip.colors, membership);
}

std::vector<Dipole> find_dipoles(const ColoredGraph& g) {
    const int n = g.order();
    const int d = g.dim();
    std::vector<Dipole> out;
    std::optional<TriBool> membership; // computed at most once

    for (Vertex u = 0; u < n; ++u) {
        for (Color c = 0; c < g.num_colors(); ++c) {
            const Vertex v = g.partner(c, u);
            if (v <= u) continue;
            const ColorSet R = joining_colors(g, u, v);
            if (R.least() != c) continue; // each pair handled once, at its least color
            const int r = R.count();
            if (r > d) continue; // joined by every color: no dipole
            const auto ids = g.component_ids(R.complement(d + 1));
            if (ids[u] == ids[v]) continue;
            Dipole dip{u, v, R, Properness::Unknown};
            if (r > 1 && d - r >= 2 && !membership) membership = membership_in_gs(g);
            dip.properness =
                properness_impl(g, u, v, R, membership.value_or(TriBool::Unknown));
            out.push_back(dip);
        }
    }
    return out;
}

ColoredGraph eliminate(const ColoredGraph& g, const Dipole& dip) {
    const Vertex u = std::min(dip.u, dip.v);
    const Vertex v = std::max(dip.u, dip.v);
    if (u < 0 || v >= g.order() || u == v)
        throw GemError(ErrorKind::InvalidDipole, "dipole vertices out of range");
    if (joining_colors(g, u, v) != dip.colors || dip.colors.empty() || dip.r() > g.dim())
        throw GemError(ErrorKind::InvalidDipole,
                       "vertex pair is not joined by exactly the given colors");

    const int n = g.order();
    auto shift = [&](Vertex x) { return x - (x > u) - (x > v); };

    std::vector<std::vector<Vertex>> matchings(g.num_colors(), std::vector<Vertex>(n - 2));
    for (Color c = 0; c < g.num_colors(); ++c) {
        std::vector<Vertex> row = g.matching(c);
        if (!dip.colors.contains(c)) {
            const Vertex x = row[u];
            const Vertex y = row[v];
            row[x] = y; // weld the hanging edges
            row[y] = x;
        }
        for (Vertex w = 0; w < n; ++w) {
            if (w == u || w == v) continue;
            matchings[c][shift(w)] = shift(row[w]);
        }
    }
    return ColoredGraph::trusted(std::move(matchings));
}

DipoleAddition add_dipole(const ColoredGraph& g, ColorSet R,
                          const std::map<Color, std::pair<Vertex, Vertex>>& attachments) {
    const int d = g.dim();
    const int n = g.order();
    if (R.empty() || R.count() > d)
        throw GemError(ErrorKind::BadAttachment, "dipole must use between 1 and d colors");
    for (Color c = 0; c <= d; ++c) {
        if (R.contains(c)) {
            if (attachments.count(c))
                throw GemError(ErrorKind::BadAttachment,
                               "attachment given for dipole color " + std::to_string(c));
        } else if (!attachments.count(c)) {
            throw GemError(ErrorKind::BadAttachment,
                           "missing attachment for color " + std::to_string(c));
        }
    }

    const Vertex u = n;
    const Vertex v = n + 1;
    std::vector<std::vector<Vertex>> matchings(g.num_colors());
    for (Color c = 0; c <= d; ++c) {
        std::vector<Vertex> row = g.matching(c);
        row.resize(n + 2);
        if (R.contains(c)) {
            row[u] = v;
            row[v] = u;
        } else {
            const auto [x, y] = attachments.at(c);
            if (x < 0 || x >= n || y < 0 || y >= n || g.partner(c, x) != y)
                throw GemError(ErrorKind::BadAttachment,
                               "attachment for color " + std::to_string(c) +
                                   " is not an edge of that color");
            row[x] = u;
            row[u] = x;
            row[v] = y;
            row[y] = v;
        }
        matchings[c] = std::move(row);
    }

    DipoleAddition out{ColoredGraph::trusted(std::move(matchings)), Dipole{u, v, R}, false};
    const auto ids = out.graph.component_ids(R.complement(d + 1));
    out.genuine = ids[u] != ids[v];
    out.dipole.properness = out.genuine ? is_proper(out.graph, out.dipole) : Properness::Unknown;
    return out;
}

TriBool is_contracted(const ColoredGraph& g) {
    if (!g.is_connected())
        throw GemError(ErrorKind::Disconnected, "contractedness requires a connected graph");
    const int d = g.dim();
    bool unknown = false;
    for (Color c = 0; c <= d; ++c) {
        const auto dec = g.residues(ColorSet::of({c}).complement(d + 1));
        if (dec.count() == 1) continue;
        for (const auto& comp : dec.components) {
            switch (certified_sphere(comp.graph())) {
                case TriBool::Yes: return TriBool::No; // sphere component, residue disconnected
                case TriBool::Unknown: unknown = true; break;
                case TriBool::No: break;
            }
        }
    }
    return unknown ? TriBool::Unknown : TriBool::Yes;
}

ColoredGraph contract(const ColoredGraph& g) {
    if (g.dim() != 3)
        throw GemError(ErrorKind::WrongDimension, "contraction is exact only for d = 3");
    ColoredGraph cur = g;
    for (;;) {
        const auto dipoles = find_dipoles(cur);
        const auto it = std::find_if(dipoles.begin(), dipoles.end(), [](const Dipole& dip) {
            return dip.r() == 1 && dip.properness == Properness::Proper;
        });
        if (it == dipoles.end()) break;
        cur = eliminate(cur, *it);
    }
    assert(is_contracted(cur) == TriBool::Yes);
    return cur;
}

namespace {

HalfInteger dipole_gdegree_drop(int d, int r) {
    return HalfInteger::from_twice(factorial(d - 1) * (r - 1) * (d - r));
}

MoveRecord make_record(int d, const Dipole& dip) {
    return MoveRecord{dip.u, dip.v, dip.colors.to_vector(), dip.r(),
                      dipole_gdegree_drop(d, dip.r())};
}

// Largest G-degree drop first; list order breaks ties.
const Dipole* pick_greedy(const std::vector<Dipole>& dipoles, int d) {
    const Dipole* best = nullptr;
    std::int64_t best_drop = -1;
    for (const auto& dip : dipoles) {
        if (dip.properness != Properness::Proper) continue;
        const std::int64_t drop = dipole_gdegree_drop(d, dip.r()).twice();
        if (drop > best_drop) {
            best = &dip;
            best_drop = drop;
        }
    }
    return best;
}

} // namespace

ReduceResult reduce(const ColoredGraph& g) {
    if (!g.is_connected())
        throw GemError(ErrorKind::Disconnected, "reduction requires a connected graph");
    ReduceResult out;
    out.graph = g;
    for (;;) {
        const auto dipoles = find_dipoles(out.graph);
        const Dipole* next = pick_greedy(dipoles, out.graph.dim());
        if (!next) break;
        out.log.push_back(make_record(out.graph.dim(), *next));
        out.graph = eliminate(out.graph, *next);
    }
    out.certificate = out.graph.order() == 2 ? ReduceCertificate::Sphere
                                             : ReduceCertificate::IrreducibleLocal;
    return out;
}

namespace {

bool exhaustive_dfs(const ColoredGraph& g, std::set<CanonicalCode>& seen,
                    std::vector<MoveRecord>& path) {
    if (g.order() == 2) return true;
    for (const auto& dip : find_dipoles(g)) {
        if (dip.properness != Properness::Proper) continue;
        const ColoredGraph next = eliminate(g, dip);
        if (!seen.insert(canonical_code(next, CodeMode::ColorFree)).second) continue;
        path.push_back(make_record(g.dim(), dip));
        if (exhaustive_dfs(next, seen, path)) return true;
        path.pop_back();
    }
    return false;
}

} // namespace

std::optional<std::vector<MoveRecord>> reduce_exhaustive(const ColoredGraph& g, int max_order) {
    if (!g.is_connected())
        throw GemError(ErrorKind::Disconnected, "reduction requires a connected graph");
    if (g.order() > max_order)
        throw GemError(ErrorKind::BudgetExceeded,
                       "exhaustive reduction capped at order " + std::to_string(max_order));
    std::set<CanonicalCode> seen;
    std::vector<MoveRecord> path;
    if (exhaustive_dfs(g, seen, path)) return path;
    return std::nullopt;
}

TriBool membership_in_gs(const ColoredGraph& g) {
    if (!g.is_connected())
        throw GemError(ErrorKind::Disconnected, "membership requires a connected graph");
    const int d = g.dim();
    if (d <= 3) return TriBool::Yes;

    for (Color c = 0; c <= d; ++c) {
        const auto dec = g.residues(ColorSet::of({c}).complement(d + 1));
        for (const auto& comp : dec.components) {
            const ColoredGraph sub = comp.graph();
            if (d == 4) {
                // Links are closed 3-manifolds exactly when every 3-colored
                // residue of the link graph is a 2-sphere.
                for (Color c2 = 0; c2 < sub.num_colors(); ++c2) {
                    const auto inner = sub.residues(ColorSet::of({c2}).complement(4));
                    for (const auto& face : inner.components)
                        if (!surface_type(face.graph()).is_sphere()) return TriBool::No;
                }
            } else {
                if (certified_sphere(sub) != TriBool::Yes) return TriBool::Unknown;
            }
        }
    }
    return TriBool::Yes;
}

} // namespace gem
