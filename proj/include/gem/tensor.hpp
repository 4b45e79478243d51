#pragma once

#include <map>
#include <numeric>
#include <vector>

#include "gem/colored_graph.hpp"
#include "gem/half_integer.hpp"

namespace gem {

// Reduced fraction, used for the exact 1/N exponents -2*omega/(d-1)!.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rational make(std::int64_t num, std::int64_t den);
    std::string str() const; // "0", "-1", "-3/2"

    auto operator<=>(const Rational&) const = default;
};

// A tensor contraction pattern: a connected bipartite graph over colors
// 1..d (color 0 stays reserved for propagators), with ordered white and
// black vertex lists of equal size p. matchings[0] is unused and empty.
struct TraceInvariant {
    int d = 0;
    std::vector<Vertex> white; // w_1 ... w_p
    std::vector<Vertex> black; // b_1 ... b_p
    std::vector<std::vector<Vertex>> matchings; // index by color, [0] empty

    int p() const { return static_cast<int>(white.size()); }
    int order() const { return 2 * p(); }

    static TraceInvariant validated(int d, std::vector<Vertex> white, std::vector<Vertex> black,
                                    std::vector<std::vector<Vertex>> matchings);
};

// The standard quartic invariant: two whites and two blacks, color 1
// crossing them and every other color joining them in parallel.
TraceInvariant quartic_invariant(int d);

// p = 1: one white and one black vertex joined by all of colors 1..d.
TraceInvariant single_pair_invariant(int d);

// Closes the invariant with color-0 edges w_r -- b_{sigma(r)}; sigma is a
// 0-based permutation of {0,...,p-1}. The result may be disconnected.
ColoredGraph feynman_graph(const TraceInvariant& invariant, const std::vector<int>& sigma);

struct ExpansionHistogram {
    int d = 0;
    int p = 0;
    std::map<HalfInteger, long long> buckets; // G-degree -> connected pairing count
    long long disconnected = 0;

    // Exponent of 1/N attached to a bucket.
    Rational exponent(HalfInteger gdegree) const;
    long long total() const {
        return std::accumulate(buckets.begin(), buckets.end(), disconnected,
                               [](long long acc, const auto& kv) { return acc + kv.second; });
    }
};

// Iterates every pairing permutation, bucketing connected closures by
// G-degree. Guarded at p <= 10.
ExpansionHistogram expansion_histogram(const TraceInvariant& invariant);

} // namespace gem
