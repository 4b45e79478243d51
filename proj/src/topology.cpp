#include "gem/topology.hpp"

#include <algorithm>
#include <cassert>

namespace gem {

const char* tri_bool_name(TriBool v) {
    switch (v) {
        case TriBool::Yes: return "yes";
        case TriBool::No: return "no";
        default: return "unknown";
    }
}

std::int64_t factorial(int n) {
    std::int64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

CyclicPermutation CyclicPermutation::canonical(std::vector<Color> raw) {
    const auto it = std::find(raw.begin(), raw.end(), 0);
    if (it == raw.end())
        throw GemError(ErrorKind::InvalidInput, "cyclic permutation must contain color 0");
    std::rotate(raw.begin(), it, raw.end());
    if (raw.size() > 2 && raw[1] > raw.back()) std::reverse(raw.begin() + 1, raw.end());
    return CyclicPermutation{std::move(raw)};
}

std::vector<CyclicPermutation> CyclicPermutation::all_classes(int d) {
    if (d < 1) throw GemError(ErrorKind::WrongDimension, "need d >= 1");
    std::vector<Color> tail(d);
    for (int i = 0; i < d; ++i) tail[i] = i + 1;
    std::vector<CyclicPermutation> out;
    do {
        if (d >= 2 && tail.front() > tail.back()) continue;
        std::vector<Color> seq;
        seq.reserve(d + 1);
        seq.push_back(0);
        seq.insert(seq.end(), tail.begin(), tail.end());
        out.push_back(CyclicPermutation{std::move(seq)});
    } while (std::next_permutation(tail.begin(), tail.end()));
    std::sort(out.begin(), out.end());
    return out;
}

std::string CyclicPermutation::str() const {
    std::string s;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i) s.push_back(',');
        s += std::to_string(seq[i]);
    }
    return s;
}

namespace {

void require_connected(const ColoredGraph& g, const char* what) {
    if (!g.is_connected())
        throw GemError(ErrorKind::Disconnected, std::string(what) + " requires a connected graph");
}

void require_permutation(const ColoredGraph& g, const CyclicPermutation& eps) {
    const int nc = g.num_colors();
    if (static_cast<int>(eps.seq.size()) != nc)
        throw GemError(ErrorKind::InvalidInput, "permutation length does not match color count");
    ColorSet seen;
    for (Color c : eps.seq) {
        if (c < 0 || c >= nc || seen.contains(c))
            throw GemError(ErrorKind::InvalidInput, "not a permutation of the colors");
        seen.add(c);
    }
}

} // namespace

HalfInteger regular_genus(const ColoredGraph& g, const CyclicPermutation& eps) {
    require_connected(g, "regular genus");
    require_permutation(g, eps);
    const int d = g.dim();
    const int p = g.pairs();
    std::int64_t residue_sum = 0;
    for (int j = 0; j <= d; ++j)
        residue_sum += g.residue_count_pair(eps.seq[j], eps.seq[(j + 1) % (d + 1)]);
    return HalfInteger::from_twice(2 - static_cast<std::int64_t>(1 - d) * p - residue_sum);
}

std::vector<std::pair<CyclicPermutation, HalfInteger>> all_regular_genera(const ColoredGraph& g) {
    std::vector<std::pair<CyclicPermutation, HalfInteger>> out;
    for (auto& eps : CyclicPermutation::all_classes(g.dim()))
        out.emplace_back(eps, regular_genus(g, eps));
    return out;
}

HalfInteger regular_genus_min(const ColoredGraph& g) {
    auto genera = all_regular_genera(g);
    HalfInteger best = genera.front().second;
    for (const auto& [eps, rho] : genera) best = std::min(best, rho);
    return best;
}

HalfInteger gurau_degree(const ColoredGraph& g) {
    HalfInteger total;
    for (const auto& [eps, rho] : all_regular_genera(g)) total += rho;
    if (g.dim() >= 3 && !total.is_integer())
        throw GemError(ErrorKind::IntegralityViolation,
                       "G-degree " + total.str() + " is not an integer at d = " +
                           std::to_string(g.dim()));
    assert(total.twice() >= 0);
    return total;
}

HalfInteger gurau_degree_recursive(const ColoredGraph& g) {
    const int d = g.dim();
    if (d < 2) throw GemError(ErrorKind::WrongDimension, "recursive G-degree needs d >= 2");
    require_connected(g, "recursive G-degree");
    if (d == 2) return surface_type(g).gd_contribution();

    std::int64_t residue_sum = 0;
    HalfInteger nested;
    for (Color c = 0; c <= d; ++c) {
        ColorSet hat = ColorSet::of({c}).complement(d + 1);
        const auto dec = g.residues(hat);
        residue_sum += dec.count();
        for (const auto& comp : dec.components) nested += gurau_degree_recursive(comp.graph());
    }
    const std::int64_t scale = factorial(d - 1); // twice of (d-1)!/2
    return HalfInteger::from_twice(scale * (g.pairs() + d - residue_sum)) + nested;
}

long euler_characteristic(const ColoredGraph& g) {
    const int nc = g.num_colors();
    long chi = 0;
    // B-residues with |B| = h correspond to the (d-h)-simplices, so the
    // alternating sum runs over the proper color subsets only.
    for (std::uint32_t bits = 0; bits + 1 < (1u << nc); ++bits) {
        const ColorSet B(bits);
        const int sign = ((g.dim() - B.count()) % 2 == 0) ? 1 : -1;
        chi += sign * g.residue_count(B);
    }
    return chi;
}

SurfaceType surface_type(const ColoredGraph& g) {
    if (g.dim() != 2)
        throw GemError(ErrorKind::WrongDimension, "surface classification needs a 3-colored graph");
    require_connected(g, "surface classification");
    const long chi = g.residue_count_pair(0, 1) + g.residue_count_pair(0, 2) +
                     g.residue_count_pair(1, 2) - g.pairs();
    SurfaceType s;
    s.orientable = g.is_bipartite();
    if (s.orientable) {
        assert((2 - chi) % 2 == 0);
        s.genus = static_cast<int>((2 - chi) / 2);
    } else {
        s.genus = static_cast<int>(2 - chi);
    }
    assert(s.genus >= 0);
    return s;
}

std::string SurfaceType::code() const {
    return (orientable ? "o" : "n") + std::to_string(genus);
}

SingularityProfile singularity_profile(const ColoredGraph& g) {
    if (g.dim() != 3)
        throw GemError(ErrorKind::WrongDimension, "singularity profile needs a 4-colored graph");
    require_connected(g, "singularity profile");

    SingularityProfile out;
    out.residues_by_color.resize(4);
    for (Color c = 0; c <= 3; ++c) {
        const auto dec = g.residues(ColorSet::of({c}).complement(4));
        bool color_singular = false;
        for (const auto& comp : dec.components) {
            const SurfaceType s = surface_type(comp.graph());
            out.residues_by_color[c].push_back(s);
            if (!s.is_sphere()) {
                ++out.singular_count;
                color_singular = true;
                out.boundary.push_back(s);
                out.boundary_genus_sum += s.gd_contribution();
            }
        }
        if (color_singular) ++out.singular_colors;
    }
    std::sort(out.boundary.begin(), out.boundary.end());
    return out;
}

bool orientable(const ColoredGraph& g) { return g.is_bipartite(); }

namespace {

bool subgraph_bipartite(const ColoredGraph& g, ColorSet B) {
    const int n = g.order();
    std::vector<std::int8_t> side(n, -1);
    std::vector<Vertex> stack;
    for (Vertex start = 0; start < n; ++start) {
        if (side[start] >= 0) continue;
        side[start] = 0;
        stack.push_back(start);
        while (!stack.empty()) {
            const Vertex u = stack.back();
            stack.pop_back();
            for (Color c = 0; c < g.num_colors(); ++c) {
                if (!B.contains(c)) continue;
                const Vertex w = g.partner(c, u);
                if (side[w] < 0) {
                    side[w] = static_cast<std::int8_t>(1 - side[u]);
                    stack.push_back(w);
                } else if (side[w] == side[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

// Cyclic ordering induced on a residue's dense colors by dropping one color.
CyclicPermutation induced_permutation(const CyclicPermutation& eps, Color dropped,
                                      const std::vector<Color>& residue_colors) {
    std::vector<Color> seq;
    seq.reserve(residue_colors.size());
    for (Color c : eps.seq) {
        if (c == dropped) continue;
        const auto it = std::lower_bound(residue_colors.begin(), residue_colors.end(), c);
        seq.push_back(static_cast<Color>(it - residue_colors.begin()));
    }
    return CyclicPermutation::canonical(std::move(seq));
}

} // namespace

bool integrality_conditions(const ColoredGraph& g, const CyclicPermutation& eps) {
    require_connected(g, "integrality conditions");
    require_permutation(g, eps);
    if (g.is_bipartite()) return true; // integer genus regardless

    const int d = g.dim();
    for (int i = 0; i <= d; ++i) {
        const Color prev = eps.seq[(i + d) % (d + 1)];
        const Color cur = eps.seq[i];
        const Color next = eps.seq[(i + 1) % (d + 1)];
        if (!subgraph_bipartite(g, ColorSet::of({prev, cur, next}))) continue;

        bool ok = true;
        const auto dec = g.residues(ColorSet::of({cur}).complement(d + 1));
        for (const auto& comp : dec.components) {
            const ColoredGraph sub = comp.graph();
            if (sub.is_bipartite()) continue;
            const auto induced = induced_permutation(eps, cur, comp.colors);
            if (!regular_genus(sub, induced).is_integer()) {
                ok = false;
                break;
            }
        }
        if (ok) {
            if (!regular_genus(g, eps).is_integer())
                throw GemError(ErrorKind::IntegralityViolation,
                               "certified permutation produced a non-integer genus");
            return true;
        }
    }
    return false;
}

} // namespace gem
