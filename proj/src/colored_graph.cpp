#include "gem/colored_graph.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <string>

namespace gem {

namespace {

// Plain union-find over dense vertex ids.
struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[b] = a;
    }
};

} // namespace

ColoredGraph ResidueComponent::graph() const { return ColoredGraph::trusted(matchings); }

void ColoredGraph::validate(const std::vector<std::vector<Vertex>>& matchings) {
    if (matchings.empty())
        throw GemError(ErrorKind::BadColorCount, "graph needs at least one color");
    const std::size_t n = matchings[0].size();
    for (const auto& row : matchings)
        if (row.size() != n)
            throw GemError(ErrorKind::BadColorCount, "matching arrays differ in length");
    if (n == 0 || n % 2 != 0)
        throw GemError(ErrorKind::OddOrder,
                       "order must be even and positive, got " + std::to_string(n));
    for (std::size_t c = 0; c < matchings.size(); ++c) {
        for (std::size_t v = 0; v < n; ++v) {
            const Vertex w = matchings[c][v];
            if (w < 0 || static_cast<std::size_t>(w) >= n)
                throw GemError(ErrorKind::InvalidInput,
                               "matching entry out of range at color " + std::to_string(c));
            if (w == static_cast<Vertex>(v))
                throw GemError(ErrorKind::LoopEdge, "loop at vertex " + std::to_string(v) +
                                                        ", color " + std::to_string(c));
            if (matchings[c][w] != static_cast<Vertex>(v))
                throw GemError(ErrorKind::NotInvolution,
                               "matching for color " + std::to_string(c) +
                                   " is not an involution at vertex " + std::to_string(v));
        }
    }
}

ColoredGraph ColoredGraph::validated(int d, std::vector<std::vector<Vertex>> matchings) {
    if (d < 1)
        throw GemError(ErrorKind::BadColorCount, "dimension must be >= 1");
    if (matchings.size() != static_cast<std::size_t>(d) + 1)
        throw GemError(ErrorKind::BadColorCount,
                       "expected " + std::to_string(d + 1) + " matchings, got " +
                           std::to_string(matchings.size()));
    validate(matchings);
    return ColoredGraph(std::move(matchings));
}

ColoredGraph ColoredGraph::trusted(std::vector<std::vector<Vertex>> matchings) {
#ifndef NDEBUG
    validate(matchings);
#endif
    return ColoredGraph(std::move(matchings));
}

bool ColoredGraph::is_connected() const {
    return residue_count(ColorSet::full(num_colors())) == 1;
}

std::vector<int> ColoredGraph::component_ids(ColorSet B) const {
    const int n = order();
    UnionFind uf(n);
    for (Color c = 0; c < num_colors(); ++c) {
        if (!B.contains(c)) continue;
        for (Vertex v = 0; v < n; ++v) uf.unite(v, matchings_[c][v]);
    }
    std::vector<int> ids(n, -1);
    int next = 0;
    for (Vertex v = 0; v < n; ++v) {
        const int root = uf.find(v);
        if (ids[root] < 0) ids[root] = next++;
        ids[v] = ids[root];
    }
    return ids;
}

int ColoredGraph::residue_count(ColorSet B) const {
    const auto ids = component_ids(B);
    return ids.empty() ? 0 : 1 + *std::max_element(ids.begin(), ids.end());
}

int ColoredGraph::residue_count_pair(Color a, Color b) const {
    ColorSet s;
    s.add(a);
    s.add(b);
    return residue_count(s);
}

ResidueDecomposition ColoredGraph::residues(ColorSet B) const {
    const int n = order();
    const auto ids = component_ids(B);
    const int k = ids.empty() ? 0 : 1 + *std::max_element(ids.begin(), ids.end());
    const auto colors = B.to_vector();

    ResidueDecomposition out;
    out.colors = B;
    out.components.resize(k);
    for (auto& comp : out.components) comp.colors = colors;
    for (Vertex v = 0; v < n; ++v) out.components[ids[v]].vertices.push_back(v);

    std::vector<Vertex> local(n, -1);
    for (auto& comp : out.components) {
        for (std::size_t i = 0; i < comp.vertices.size(); ++i)
            local[comp.vertices[i]] = static_cast<Vertex>(i);
        comp.matchings.assign(colors.size(), std::vector<Vertex>(comp.vertices.size()));
        for (std::size_t ci = 0; ci < colors.size(); ++ci)
            for (std::size_t i = 0; i < comp.vertices.size(); ++i)
                comp.matchings[ci][i] = local[matchings_[colors[ci]][comp.vertices[i]]];
    }
    return out;
}

std::optional<std::vector<std::uint8_t>> ColoredGraph::bipartition() const {
    const int n = order();
    std::vector<std::int8_t> side(n, -1);
    std::vector<Vertex> stack;
    for (Vertex start = 0; start < n; ++start) {
        if (side[start] >= 0) continue;
        side[start] = 0;
        stack.push_back(start);
        while (!stack.empty()) {
            const Vertex u = stack.back();
            stack.pop_back();
            for (Color c = 0; c < num_colors(); ++c) {
                const Vertex w = matchings_[c][u];
                if (side[w] < 0) {
                    side[w] = static_cast<std::int8_t>(1 - side[u]);
                    stack.push_back(w);
                } else if (side[w] == side[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    return std::vector<std::uint8_t>(side.begin(), side.end());
}

ColoredGraph order_two_graph(int d) {
    if (d < 1) throw GemError(ErrorKind::BadColorCount, "dimension must be >= 1");
    return ColoredGraph::trusted(
        std::vector<std::vector<Vertex>>(static_cast<std::size_t>(d) + 1, {1, 0}));
}

ColoredGraph torus_gem() {
    // Colors: 0 = (01)(23)(45), 1 = (12)(34)(50), 2 = (03)(14)(25).
    return ColoredGraph::trusted({{1, 0, 3, 2, 5, 4}, {5, 2, 1, 4, 3, 0}, {3, 4, 5, 0, 1, 2}});
}

} // namespace gem
