#pragma once

#include <cstdint>
#include <string>

#include "extremal/graph.hpp"

namespace extremal {

// One-line corpus descriptor "family:n:k:density:seed". The same spec
// always regenerates the same edge set (SplitMix64 underneath).
struct GenSpec {
    std::string family;  // interval | permutation | kpolygon | chordal-leafage
                         // | spider | caterpillar | gnp-prime
    int n = 0;
    int k = 0;
    double density = 0.0;
    std::uint64_t seed = 0;

    std::string to_string() const;
    static GenSpec parse(const std::string& text);
};

Graph generate(const GenSpec& spec);

// Intersection graph of explicit intervals (closed, by coordinate).
Graph interval_intersection_graph(const std::vector<std::pair<double, double>>& intervals);

// Intersection graph of n random intervals with jittered evenly-spread
// starts; `density` steers the expected average degree. Chordal and
// AT-free by construction, connected for density >= 8.
Graph gen_interval(int n, double density, std::uint64_t seed);

// Inversion graph of a uniformly random permutation.
Graph gen_permutation(int n, std::uint64_t seed);

// Intersection graph of chords of a convex k-gon, each chord's endpoints
// on two distinct sides. k = 2 degenerates to permutation-like graphs.
Graph gen_kpolygon(int n, int k, std::uint64_t seed);

// Intersection graph of random subtrees of a spider host tree with exactly
// k leaves; chordal with asteroidal number at most k.
Graph gen_chordal_leafage(int n, int k, std::uint64_t seed);

// Deterministic spider: center 0, `legs` paths of `leglen` vertices;
// leg j occupies vertices 1 + j*leglen .. (j+1)*leglen.
Graph gen_spider(int legs, int leglen);

// Path 0..n-1 with a pendant triangle on every interior vertex; chordal,
// radius grows with n.
Graph gen_caterpillar(int n);

// G(n,p) resampled until connected and prime; throws after the retry budget.
Graph gen_gnp_prime(int n, double p, std::uint64_t seed, int retries = 64);

// The largest connected component, renumbered.
Graph largest_component(const Graph& g);

} // namespace extremal
