// Finite abstract simplicial complexes stored by their maximal simplices,
// and the nerve / clique constructors for circular-arc collections.
#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "circarc/circle.hpp"

namespace circarc {

// Strictly increasing vertex list.
using Simplex = std::vector<int>;

bool is_subset(const Simplex& a, const Simplex& b);

struct SimplicialComplex {
    int vertex_count = 0;
    std::vector<Simplex> maximal;  // antichain, sorted lexicographically

    bool is_simplex(const Simplex& sorted_vertices) const;
    // -1 for the void complex (no simplices).
    int dim() const;
    std::vector<int> used_vertices() const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.vertex_count == b.vertex_count && a.maximal == b.maximal;
    }
};

// Dedup + antichain-filter the generating family. Generators must be sorted
// vertex lists with entries in [0, vertex_count).
SimplicialComplex make_complex(int vertex_count, std::vector<Simplex> generators);

SimplicialComplex full_simplex(int vertex_count);

// Nerve of the collection: a subset is a simplex iff the arcs meet in a point.
// Built from the witness sets S_i = { j : arc j contains start of arc i }.
SimplicialComplex nerve(const ArcCollection& collection);

// Cl(K^(1)) via maximal-clique enumeration of the 1-skeleton (capped at 64 vertices).
SimplicialComplex clique_complex(const SimplicialComplex& k);

// N(n,k): maximal simplices are the n rotations of the discrete arc [0,k]_n;
// the full simplex when k >= n-1.
SimplicialComplex nerve_nk(int n, int k);

// Clique complex of the k-th distance power of the n-cycle; full simplex when
// k >= floor(n/2).
SimplicialComplex clique_nk(int n, int k);

SimplicialComplex cech(std::span<const Angle> points, const Rational& radius);
SimplicialComplex vr(std::span<const Angle> points, const Rational& radius);

SimplicialComplex link(const SimplicialComplex& k, int v);
// Induced subcomplex; vertex labels are preserved.
SimplicialComplex induced(const SimplicialComplex& k, std::span<const int> vertices);

// All d-faces, sorted lexicographically.
std::vector<Simplex> faces(const SimplicialComplex& k, int d);

// Smallest v' != v whose addition preserves every simplex containing v, if any.
std::optional<int> dominated_vertex(const SimplicialComplex& k, int v);

// Detects whether the maximal simplices are exactly the n windows of k+1
// cyclically consecutive vertices under some relabeling; test helper.
std::optional<std::pair<int, int>> isomorphic_to_nk(const SimplicialComplex& k);

// Does sigma fit inside some discrete arc of k+1 consecutive vertices mod n?
bool fits_in_discrete_arc(const Simplex& sigma, int n, int k);

}  // namespace circarc
