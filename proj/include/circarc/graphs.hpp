// Circular complete graphs, neighborhood complexes, and the chromatic-number
// gap classification against the topological lower bound.
#pragma once

#include "circarc/complex.hpp"
#include "circarc/homotopy.hpp"

namespace circarc {

struct Graph {
    int n = 0;
    std::vector<uint64_t> adj;  // bitmask rows, loopless

    bool adjacent(int i, int j) const { return (adj[i] >> j) & 1; }
    void add_edge(int i, int j);
};

// Vertices 0..n-1, i ~ j iff d <= |i - j| <= n - d.
Graph circular_complete(int n, int d);

// Maximal simplices are the inclusion-maximal vertex neighborhoods.
SimplicialComplex neighborhood_complex(const Graph& g);

// ceil(n/d), the chromatic number of the circular complete graph.
int chi_circular(int n, int d);

// Exact chromatic number by branch and bound; small graphs only.
int exact_chromatic_number(const Graph& g);

struct LovaszReport {
    int n = 0, d = 0;
    int chi = 0;
    int bound = 0;          // connectivity of the neighborhood complex + 3
    int gap = 0;            // chi - bound, always 0 or 1
    Rational fractional;    // (n / 2d) mod 1
};

LovaszReport lovasz_report(int n, int d);

}  // namespace circarc
