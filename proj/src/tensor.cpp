#include "gem/tensor.hpp"

#include <algorithm>
#include <numeric>

#include "gem/topology.hpp"

namespace gem {

Rational Rational::make(std::int64_t num, std::int64_t den) {
    if (den == 0) throw GemError(ErrorKind::InvalidInput, "zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Rational{num, den};
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

TraceInvariant TraceInvariant::validated(int d, std::vector<Vertex> white,
                                         std::vector<Vertex> black,
                                         std::vector<std::vector<Vertex>> matchings) {
    if (d < 1) throw GemError(ErrorKind::BadColorCount, "invariant rank must be >= 1");
    if (matchings.size() != static_cast<std::size_t>(d) + 1 || !matchings[0].empty())
        throw GemError(ErrorKind::BadColorCount,
                       "expected empty color 0 plus matchings for colors 1.." + std::to_string(d));
    if (white.empty() || white.size() != black.size())
        throw GemError(ErrorKind::InvalidInput, "white and black lists must have equal size p >= 1");

    const int n = static_cast<int>(white.size() + black.size());
    std::vector<std::int8_t> side(n, -1);
    for (Vertex w : white) {
        if (w < 0 || w >= n || side[w] >= 0)
            throw GemError(ErrorKind::InvalidInput, "bad white vertex list");
        side[w] = 0;
    }
    for (Vertex b : black) {
        if (b < 0 || b >= n || side[b] >= 0)
            throw GemError(ErrorKind::InvalidInput, "bad black vertex list");
        side[b] = 1;
    }

    // Validate colors 1..d as involutions crossing the bipartition, by
    // building the graph once with a throwaway color-0 matching.
    std::vector<std::vector<Vertex>> probe = matchings;
    probe[0].resize(n);
    for (std::size_t r = 0; r < white.size(); ++r) {
        probe[0][white[r]] = black[r];
        probe[0][black[r]] = white[r];
    }
    const ColoredGraph g = ColoredGraph::validated(d, std::move(probe));
    for (Color c = 1; c <= d; ++c)
        for (Vertex v = 0; v < n; ++v)
            if (side[v] == side[g.partner(c, v)])
                throw GemError(ErrorKind::InvalidInput,
                               "color " + std::to_string(c) + " does not cross the bipartition");

    TraceInvariant out{d, std::move(white), std::move(black), std::move(matchings)};
    // The contraction pattern itself (colors 1..d) must be connected.
    std::vector<std::vector<Vertex>> body(out.matchings.begin() + 1, out.matchings.end());
    if (!ColoredGraph::trusted(std::move(body)).is_connected())
        throw GemError(ErrorKind::Disconnected, "trace invariant must be connected");
    return out;
}

TraceInvariant quartic_invariant(int d) {
    if (d < 2) throw GemError(ErrorKind::BadColorCount, "quartic invariant needs d >= 2");
    // Whites 0, 1 and blacks 2, 3; color 1 crosses (2-1, 3-0), all higher
    // colors are parallel (2-0, 3-1).
    std::vector<std::vector<Vertex>> matchings(d + 1);
    matchings[1] = {3, 2, 1, 0};
    for (Color c = 2; c <= d; ++c) matchings[c] = {2, 3, 0, 1};
    return TraceInvariant::validated(d, {0, 1}, {2, 3}, std::move(matchings));
}

TraceInvariant single_pair_invariant(int d) {
    if (d < 1) throw GemError(ErrorKind::BadColorCount, "invariant rank must be >= 1");
    std::vector<std::vector<Vertex>> matchings(d + 1);
    for (Color c = 1; c <= d; ++c) matchings[c] = {1, 0};
    return TraceInvariant::validated(d, {0}, {1}, std::move(matchings));
}

ColoredGraph feynman_graph(const TraceInvariant& invariant, const std::vector<int>& sigma) {
    const int p = invariant.p();
    if (static_cast<int>(sigma.size()) != p)
        throw GemError(ErrorKind::InvalidInput, "pairing permutation has the wrong size");
    std::vector<bool> hit(p, false);
    for (int image : sigma) {
        if (image < 0 || image >= p || hit[image])
            throw GemError(ErrorKind::InvalidInput, "pairing is not a permutation");
        hit[image] = true;
    }

    std::vector<std::vector<Vertex>> matchings = invariant.matchings;
    matchings[0].resize(invariant.order());
    for (int r = 0; r < p; ++r) {
        const Vertex w = invariant.white[r];
        const Vertex b = invariant.black[sigma[r]];
        matchings[0][w] = b;
        matchings[0][b] = w;
    }
    return ColoredGraph::validated(invariant.d, std::move(matchings));
}

Rational ExpansionHistogram::exponent(HalfInteger gdegree) const {
    // -2*omega/(d-1)!; twice() already carries the factor of 2.
    return Rational::make(-gdegree.twice(), factorial(d - 1));
}

ExpansionHistogram expansion_histogram(const TraceInvariant& invariant) {
    const int p = invariant.p();
    if (p > 10)
        throw GemError(ErrorKind::BudgetExceeded,
                       "pairing enumeration guarded at p <= 10, got p = " + std::to_string(p));

    ExpansionHistogram out;
    out.d = invariant.d;
    out.p = p;
    std::vector<int> sigma(p);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        const ColoredGraph g = feynman_graph(invariant, sigma);
        if (g.is_connected())
            ++out.buckets[gurau_degree(g)];
        else
            ++out.disconnected;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

} // namespace gem
