#include "gem/canonical.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace gem {

namespace {

// Code layout: [d] [order hi] [order lo] then the relabeled matching table
// row by row (color 0 first). Entries are one byte when order <= 255, two
// big-endian bytes otherwise, so comparisons stay lexicographic per order.
void serialize_header(int d, int n, CanonicalCode& out) {
    out.push_back(static_cast<char>(d));
    out.push_back(static_cast<char>((n >> 8) & 0xff));
    out.push_back(static_cast<char>(n & 0xff));
}

// BFS relabeling determined by root: relabel[old] = new, inverse[new] = old.
// Rows are visited through color_of[c] so ColorFree candidates reuse this.
void bfs_relabel(const ColoredGraph& g, const std::vector<Color>& color_of, Vertex root,
                 std::vector<Vertex>& relabel, std::vector<Vertex>& inverse) {
    const int n = g.order();
    std::fill(relabel.begin(), relabel.end(), -1);
    relabel[root] = 0;
    inverse[0] = root;
    int next = 1;
    for (int q = 0; q < n; ++q) {
        const Vertex u = inverse[q];
        for (int c = 0; c < g.num_colors(); ++c) {
            const Vertex w = g.partner(color_of[c], u);
            if (relabel[w] < 0) {
                relabel[w] = next;
                inverse[next] = w;
                ++next;
            }
        }
    }
    assert(next == n);
}

void serialize_candidate(const ColoredGraph& g, const std::vector<Color>& color_of,
                         const std::vector<Vertex>& relabel, const std::vector<Vertex>& inverse,
                         bool wide, CanonicalCode& out) {
    const int n = g.order();
    serialize_header(g.dim(), n, out);
    for (int c = 0; c < g.num_colors(); ++c) {
        const auto& row = g.matching(color_of[c]);
        for (Vertex v = 0; v < n; ++v) {
            const Vertex w = relabel[row[inverse[v]]];
            if (wide) out.push_back(static_cast<char>((w >> 8) & 0xff));
            out.push_back(static_cast<char>(w & 0xff));
        }
    }
}

} // namespace

CanonicalCode canonical_code(const ColoredGraph& g, CodeMode mode) {
    if (!g.is_connected())
        throw GemError(ErrorKind::Disconnected, "canonical code requires a connected graph");
    const int n = g.order();
    const int nc = g.num_colors();
    const bool wide = n > 255;

    std::vector<Vertex> relabel(n), inverse(n);
    std::vector<Color> color_of(nc);
    std::iota(color_of.begin(), color_of.end(), 0);

    CanonicalCode best, candidate;
    do {
        for (Vertex root = 0; root < n; ++root) {
            bfs_relabel(g, color_of, root, relabel, inverse);
            candidate.clear();
            serialize_candidate(g, color_of, relabel, inverse, wide, candidate);
            if (best.empty() || candidate < best) best.swap(candidate);
        }
    } while (mode == CodeMode::ColorFree &&
             std::next_permutation(color_of.begin(), color_of.end()));
    return best;
}

ColoredGraph graph_from_code(const CanonicalCode& code) {
    if (code.size() < 3) throw GemError(ErrorKind::InvalidInput, "canonical code too short");
    const int d = static_cast<unsigned char>(code[0]);
    const int n = (static_cast<unsigned char>(code[1]) << 8) | static_cast<unsigned char>(code[2]);
    const bool wide = n > 255;
    const std::size_t entry = wide ? 2 : 1;
    if (code.size() != 3 + static_cast<std::size_t>(d + 1) * n * entry)
        throw GemError(ErrorKind::InvalidInput, "canonical code has the wrong length");

    std::vector<std::vector<Vertex>> matchings(d + 1, std::vector<Vertex>(n));
    std::size_t pos = 3;
    for (int c = 0; c <= d; ++c)
        for (int v = 0; v < n; ++v) {
            Vertex w = static_cast<unsigned char>(code[pos++]);
            if (wide) w = (w << 8) | static_cast<unsigned char>(code[pos++]);
            matchings[c][v] = w;
        }
    return ColoredGraph::validated(d, std::move(matchings));
}

std::string code_to_hex(const CanonicalCode& code) {
    static const char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(code.size() * 2);
    for (unsigned char b : code) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xf]);
    }
    return out;
}

CanonicalCode code_from_hex(const std::string& hex) {
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        return -1;
    };
    if (hex.size() % 2 != 0) throw GemError(ErrorKind::InvalidInput, "odd hex string length");
    CanonicalCode out;
    out.reserve(hex.size() / 2);
    for (std::size_t i = 0; i < hex.size(); i += 2) {
        const int hi = nibble(hex[i]), lo = nibble(hex[i + 1]);
        if (hi < 0 || lo < 0) throw GemError(ErrorKind::InvalidInput, "bad hex digit");
        out.push_back(static_cast<char>((hi << 4) | lo));
    }
    return out;
}

const char* code_mode_name(CodeMode mode) {
    return mode == CodeMode::ColorFixed ? "color-fixed" : "color-free";
}

CodeMode code_mode_from_name(const std::string& name) {
    if (name == "color-fixed") return CodeMode::ColorFixed;
    if (name == "color-free") return CodeMode::ColorFree;
    throw GemError(ErrorKind::InvalidInput, "unknown code mode: " + name);
}

} // namespace gem
