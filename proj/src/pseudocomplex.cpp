#include "gem/pseudocomplex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace gem {

namespace {

using FacetKey = std::vector<int>; // sorted vertex ids

FacetKey facet_key(const std::vector<int>& simplex, int opposite) {
    FacetKey key;
    key.reserve(simplex.size() - 1);
    for (std::size_t q = 0; q < simplex.size(); ++q)
        if (static_cast<int>(q) != opposite) key.push_back(simplex[q]);
    std::sort(key.begin(), key.end());
    return key;
}

struct FacetPairing {
    int simplex = -1;                    // partner simplex, -1 for boundary
    int opposite = -1;                   // opposite position in the partner
    std::vector<int> position_map;       // position in here -> position in partner
};

// pairing[s][j]: gluing of the facet of simplex s opposite position j.
using PairingTable = std::vector<std::vector<FacetPairing>>;

int position_of(const std::vector<int>& simplex, int vertex_id, const char* what) {
    const auto it = std::find(simplex.begin(), simplex.end(), vertex_id);
    if (it == simplex.end())
        throw GemError(ErrorKind::InvalidInput,
                       std::string(what) + ": vertex " + std::to_string(vertex_id) +
                           " is not in the named simplex");
    return static_cast<int>(it - simplex.begin());
}

// The position whose removal leaves exactly the given facet vertices.
int opposite_position(const std::vector<int>& simplex, const std::vector<int>& facet) {
    if (facet.size() + 1 != simplex.size())
        throw GemError(ErrorKind::InvalidInput, "gluing facet has the wrong size");
    const std::set<int> fs(facet.begin(), facet.end());
    int opposite = -1;
    for (std::size_t q = 0; q < simplex.size(); ++q) {
        if (!fs.count(simplex[q])) {
            if (opposite >= 0)
                throw GemError(ErrorKind::InvalidInput, "gluing facet does not match the simplex");
            opposite = static_cast<int>(q);
        }
    }
    if (opposite < 0)
        throw GemError(ErrorKind::InvalidInput, "gluing facet does not match the simplex");
    return opposite;
}

void glue(PairingTable& table, const Pseudocomplex& k, int sa, int ja, int sb, int jb,
          const std::vector<int>& facet_a, const std::vector<int>& facet_b) {
    if (sa == sb && ja == jb)
        throw GemError(ErrorKind::NotClosed, "face identified with itself");
    if (table[sa][ja].simplex >= 0 || table[sb][jb].simplex >= 0)
        throw GemError(ErrorKind::NotClosed, "face identified more than twice");

    const int n = k.dim + 1;
    FacetPairing fa, fb;
    fa.simplex = sb;
    fa.opposite = jb;
    fa.position_map.assign(n, -1);
    fb.simplex = sa;
    fb.opposite = ja;
    fb.position_map.assign(n, -1);
    for (int q = 0; q < n; ++q) {
        if (q == ja) continue;
        const int va = k.simplices[sa][q];
        const auto it = std::find(facet_a.begin(), facet_a.end(), va);
        const int vb = facet_b[it - facet_a.begin()];
        const int qb = position_of(k.simplices[sb], vb, "gluing");
        fa.position_map[q] = qb;
        fb.position_map[qb] = q;
    }
    table[sa][ja] = std::move(fa);
    table[sb][jb] = std::move(fb);
}

// Builds the complete facet pairing. Boundary facets stay unpaired when
// allow_boundary is set and raise NotClosed otherwise.
PairingTable build_pairing(const Pseudocomplex& k, bool allow_boundary) {
    const int n = k.dim + 1;
    PairingTable table(k.simplices.size(), std::vector<FacetPairing>(n));

    for (const auto& id : k.identifications) {
        if (id.simplex_a < 0 || id.simplex_a >= static_cast<int>(k.simplices.size()) ||
            id.simplex_b < 0 || id.simplex_b >= static_cast<int>(k.simplices.size()))
            throw GemError(ErrorKind::InvalidInput, "gluing names a missing simplex");
        const int ja = opposite_position(k.simplices[id.simplex_a], id.facet_a);
        const int jb = opposite_position(k.simplices[id.simplex_b], id.facet_b);
        glue(table, k, id.simplex_a, ja, id.simplex_b, jb, id.facet_a, id.facet_b);
    }

    std::map<FacetKey, std::vector<std::pair<int, int>>> by_key;
    for (std::size_t s = 0; s < k.simplices.size(); ++s)
        for (int j = 0; j < n; ++j)
            if (table[s][j].simplex < 0)
                by_key[facet_key(k.simplices[s], j)].emplace_back(static_cast<int>(s), j);

    for (const auto& [key, instances] : by_key) {
        if (instances.size() == 1) {
            if (!allow_boundary)
                throw GemError(ErrorKind::NotClosed, "complex has a boundary face");
            continue;
        }
        if (instances.size() > 2)
            throw GemError(ErrorKind::NotClosed, "face shared by more than two simplices");
        const auto [sa, ja] = instances[0];
        const auto [sb, jb] = instances[1];
        std::vector<int> facet = facet_key(k.simplices[sa], ja);
        glue(table, k, sa, ja, sb, jb, facet, facet);
    }
    return table;
}

} // namespace

Pseudocomplex Pseudocomplex::make(int dim, std::vector<std::vector<int>> simplices,
                                  std::vector<Gluing> identifications) {
    if (dim < 1) throw GemError(ErrorKind::InvalidInput, "complex dimension must be >= 1");
    if (simplices.empty()) throw GemError(ErrorKind::InvalidInput, "complex has no simplices");
    for (const auto& s : simplices) {
        if (s.size() != static_cast<std::size_t>(dim) + 1)
            throw GemError(ErrorKind::NotPure,
                           "every simplex needs exactly " + std::to_string(dim + 1) + " vertices");
        std::set<int> distinct(s.begin(), s.end());
        if (distinct.size() != s.size())
            throw GemError(ErrorKind::InvalidInput, "simplex with a repeated vertex");
    }
    return Pseudocomplex{dim, std::move(simplices), std::move(identifications)};
}

Pseudocomplex simplex_boundary(int d) {
    std::vector<std::vector<int>> simplices;
    for (int skip = 0; skip <= d + 1; ++skip) {
        std::vector<int> s;
        for (int v = 0; v <= d + 1; ++v)
            if (v != skip) s.push_back(v);
        simplices.push_back(std::move(s));
    }
    return Pseudocomplex::make(d, std::move(simplices));
}

std::vector<ColoredGraph> from_triangulation(const Pseudocomplex& k) {
    const auto pairing = build_pairing(k, /*allow_boundary=*/false);
    const int d = k.dim;
    const int n = d + 1;

    // Flags: (top simplex, ordering of its positions). The chain's i-face is
    // spanned by the first i+1 listed positions.
    std::vector<std::vector<int>> perms;
    {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do perms.push_back(perm);
        while (std::next_permutation(perm.begin(), perm.end()));
    }
    std::map<std::vector<int>, int> perm_rank;
    for (std::size_t i = 0; i < perms.size(); ++i) perm_rank[perms[i]] = static_cast<int>(i);

    const int per_simplex = static_cast<int>(perms.size());
    const int total = per_simplex * static_cast<int>(k.simplices.size());
    std::vector<std::vector<Vertex>> matchings(n, std::vector<Vertex>(total));

    for (std::size_t s = 0; s < k.simplices.size(); ++s) {
        for (int r = 0; r < per_simplex; ++r) {
            const Vertex flag = static_cast<Vertex>(s) * per_simplex + r;
            const auto& perm = perms[r];
            // Swapping adjacent listed positions changes exactly the c-face.
            for (Color c = 0; c < d; ++c) {
                std::vector<int> other = perm;
                std::swap(other[c], other[c + 1]);
                matchings[c][flag] = static_cast<Vertex>(s) * per_simplex + perm_rank[other];
            }
            // Color d crosses to the simplex glued along the facet opposite
            // the last listed position.
            const FacetPairing& fp = pairing[s][perm[d]];
            std::vector<int> other(n);
            for (int i = 0; i < d; ++i) other[i] = fp.position_map[perm[i]];
            other[d] = fp.opposite;
            matchings[d][flag] =
                static_cast<Vertex>(fp.simplex) * per_simplex + perm_rank[other];
        }
    }

    const ColoredGraph whole = ColoredGraph::trusted(std::move(matchings));
    std::vector<ColoredGraph> out;
    for (const auto& comp : whole.residues(ColorSet::full(n)).components)
        out.push_back(comp.graph());
    return out;
}

Pseudocomplex cap_boundary(const Pseudocomplex& k) {
    const auto pairing = build_pairing(k, /*allow_boundary=*/true);
    const int n = k.dim + 1;

    std::vector<std::pair<int, int>> boundary;
    for (std::size_t s = 0; s < k.simplices.size(); ++s)
        for (int j = 0; j < n; ++j)
            if (pairing[s][j].simplex < 0) boundary.emplace_back(static_cast<int>(s), j);
    if (boundary.empty()) return k;

    std::vector<FacetKey> keys;
    keys.reserve(boundary.size());
    for (const auto& [s, j] : boundary) keys.push_back(facet_key(k.simplices[s], j));

    // Boundary components: facets sharing a (d-2)-face. Isolated boundary
    // points (d = 1) each form their own component.
    std::vector<int> comp(boundary.size(), -1);
    int comp_count = 0;
    for (std::size_t i = 0; i < boundary.size(); ++i) {
        if (comp[i] >= 0) continue;
        comp[i] = comp_count;
        std::vector<std::size_t> stack{i};
        while (!stack.empty() && k.dim >= 2) {
            const std::size_t a = stack.back();
            stack.pop_back();
            for (std::size_t b = 0; b < boundary.size(); ++b) {
                if (comp[b] >= 0) continue;
                FacetKey common;
                std::set_intersection(keys[a].begin(), keys[a].end(), keys[b].begin(),
                                      keys[b].end(), std::back_inserter(common));
                if (static_cast<int>(common.size()) == k.dim - 1) {
                    comp[b] = comp_count;
                    stack.push_back(b);
                }
            }
        }
        ++comp_count;
    }

    int max_id = 0;
    for (const auto& s : k.simplices)
        for (int v : s) max_id = std::max(max_id, v);

    Pseudocomplex capped = k;
    for (std::size_t i = 0; i < boundary.size(); ++i) {
        std::vector<int> cone = keys[i];
        cone.push_back(max_id + 1 + comp[i]);
        capped.simplices.push_back(std::move(cone));
    }
    return capped;
}

} // namespace gem
