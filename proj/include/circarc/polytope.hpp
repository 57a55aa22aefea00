// Even-dimensional cyclic-polytope facet combinatorics, the embedded spheres
// inside the window complexes, and the explicit generator chains/cochains.
#pragma once

#include <vector>

#include "circarc/homology.hpp"

namespace circarc {

struct FacetSet {
    int dimension = 0;  // 2m
    int n = 0;
    std::vector<Simplex> facets;  // sorted 2m-element vertex sets
};

// Facets of the boundary of the cyclic polytope C_{2m}(n): all placements of
// m pairwise-disjoint adjacent pairs on the n-cycle.
FacetSet gale_facets(int two_m, int n);

// Literal evenness condition on size-2m subsets; brute-force cross-check.
std::vector<Simplex> gale_facets_by_evenness(int two_m, int n);

// Point of the trigonometric moment curve; floating point, sanity checks only.
std::vector<double> moment_curve(int two_m, const Rational& t);

// With l = floor(k / (n-k)) in the strict regime, every facet of the
// 2l+2 dimensional cyclic polytope boundary is a simplex of the window complex.
bool check_lemma_5_8(int n, int k);

// In the divisible regime, the facets of the polytope boundary absent from the
// window complex; asserted to be the n-k rotations of the base simplex Delta.
std::vector<Simplex> missing_facets(int n, int k);

// The base (2l+1)-simplex [0, 1, n-k, n-k+1, ..., l(n-k), l(n-k)+1].
Simplex delta_simplex(int n, int k);

// Fundamental 2l-cycle of the boundary of Delta; lives in the window complex
// while Delta itself is a minimal non-face.
Chain delta_boundary(int n, int k);

// The rotated cycle g^i(boundary Delta); chain-level period n-k.
Chain alpha_cycle(int n, int k, int i);

// Sum of the duals of the interleaved simplices B; a cocycle pairing -1
// against the boundary of Delta.
Cochain beta_cochain_even(int n, int k);

// Admissible vertex sets of the strict regime and the dual-sum cocycle.
std::vector<Simplex> admissible_sets(int n, int k);
Cochain beta_cochain_odd(int n, int k);

// The unique top simplex shared by the odd cocycle support and the polytope
// boundary facets.
Simplex odd_common_simplex(int n, int k);

// Matrix <gamma_i, alpha_j> for i, j = 0..n-k-2; asserted to be the identity.
IntMat evaluation_matrix(int n, int k);

}  // namespace circarc
