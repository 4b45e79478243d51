#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gem/error.hpp"

namespace gem {

using Vertex = std::int32_t;
using Color = std::int32_t;

// Subset of the color set {0, ..., d}, stored as a bit mask.
class ColorSet {
public:
    constexpr ColorSet() = default;
    explicit constexpr ColorSet(std::uint32_t bits) : bits_(bits) {}

    static ColorSet of(std::initializer_list<Color> colors) {
        ColorSet s;
        for (Color c : colors) s.add(c);
        return s;
    }
    static constexpr ColorSet full(int num_colors) {
        return ColorSet((std::uint32_t{1} << num_colors) - 1);
    }

    void add(Color c) { bits_ |= std::uint32_t{1} << c; }
    void remove(Color c) { bits_ &= ~(std::uint32_t{1} << c); }
    constexpr bool contains(Color c) const { return (bits_ >> c) & 1u; }
    constexpr int count() const { return __builtin_popcount(bits_); }
    constexpr Color least() const { return bits_ ? __builtin_ctz(bits_) : -1; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr std::uint32_t bits() const { return bits_; }

    // Complement within {0, ..., num_colors-1}; the hat notation.
    constexpr ColorSet complement(int num_colors) const {
        return ColorSet(~bits_ & full(num_colors).bits());
    }

    std::vector<Color> to_vector() const {
        std::vector<Color> out;
        for (Color c = 0; c < 32; ++c)
            if (contains(c)) out.push_back(c);
        return out;
    }

    constexpr auto operator<=>(const ColorSet&) const = default;

private:
    std::uint32_t bits_ = 0;
};

class ColoredGraph;

// One connected component of a residue: the parent vertices it spans, the
// parent colors it uses, and the extracted graph over dense labels.
// extracted.matching(i) corresponds to parent color colors[i]; extracted
// vertex v corresponds to parent vertex vertices[v].
struct ResidueComponent {
    std::vector<Vertex> vertices; // sorted parent ids
    std::vector<Color> colors;    // sorted parent colors
    std::vector<std::vector<Vertex>> matchings;

    ColoredGraph graph() const;
};

struct ResidueDecomposition {
    ColorSet colors;
    std::vector<ResidueComponent> components;

    int count() const { return static_cast<int>(components.size()); }
};

// A (d+1)-colored graph on vertices 0..2p-1: one fixed-point-free involution
// per color. Immutable after construction; all operations are pure. Multiple
// edges between a vertex pair with different colors are allowed.
class ColoredGraph {
public:
    ColoredGraph() = default;

    // Validating constructor: rejects BadColorCount, OddOrder, NotInvolution,
    // LoopEdge. d must be >= 1 and matchings.size() == d+1.
    static ColoredGraph validated(int d, std::vector<std::vector<Vertex>> matchings);

    // Internal constructor for values produced by trusted code paths
    // (residue extraction, moves, enumeration). Validates in debug builds.
    static ColoredGraph trusted(std::vector<std::vector<Vertex>> matchings);

    int num_colors() const { return static_cast<int>(matchings_.size()); }
    int dim() const { return num_colors() - 1; }
    int order() const { return matchings_.empty() ? 0 : static_cast<int>(matchings_[0].size()); }
    int pairs() const { return order() / 2; } // p

    Vertex partner(Color c, Vertex v) const { return matchings_[c][v]; }
    const std::vector<Vertex>& matching(Color c) const { return matchings_[c]; }
    const std::vector<std::vector<Vertex>>& matchings() const { return matchings_; }

    bool is_connected() const;

    // Component id per vertex for the subgraph spanned by colors in B;
    // ids are dense and ordered by smallest contained vertex.
    std::vector<int> component_ids(ColorSet B) const;
    int residue_count(ColorSet B) const; // g_B; g_empty = 2p
    int residue_count_pair(Color a, Color b) const;
    ResidueDecomposition residues(ColorSet B) const;

    // Vertex side (0/1) per vertex when the graph is 2-colorable; the
    // smallest vertex of every component sits on side 0.
    std::optional<std::vector<std::uint8_t>> bipartition() const;
    bool is_bipartite() const { return bipartition().has_value(); }

    bool operator==(const ColoredGraph&) const = default;

private:
    explicit ColoredGraph(std::vector<std::vector<Vertex>> matchings)
        : matchings_(std::move(matchings)) {}

    static void validate(const std::vector<std::vector<Vertex>>& matchings);

    std::vector<std::vector<Vertex>> matchings_;
};

// Fixtures: the order-2 graph (two vertices joined by every color) and the
// standard 6-vertex 3-colored torus graph.
ColoredGraph order_two_graph(int d);
ColoredGraph torus_gem();

} // namespace gem
