// Simplicial vertex maps: the dihedral symmetry action on the window
// complexes and the index-reduction surjection between clique and nerve.
#pragma once

#include <optional>
#include <span>
#include <vector>

#include "circarc/homology.hpp"

namespace circarc {

// Image of every maximal simplex (as a set) must be a simplex of the target.
bool is_simplicial(const SimplicialComplex& src, const SimplicialComplex& dst,
                   std::span<const int> table);

// Element of the dihedral group of the n-cycle: v -> rot + v, or v -> rot - v
// when reflected.
struct DihedralElement {
    int rot = 0;
    bool reflected = false;

    static DihedralElement rotation(int r) { return {r, false}; }
    static DihedralElement reflection() { return {0, true}; }
    int apply(int v, int n) const;
    DihedralElement compose(const DihedralElement& then_rhs, int n) const;  // this after rhs

    friend bool operator==(const DihedralElement&, const DihedralElement&) = default;
};

DihedralElement canonical_dihedral(int rot, bool reflected, int n);

std::vector<int> dihedral_table(int n, const DihedralElement& e);

// Number of vertex bijections preserving the maximal-simplex family; brute
// force over all permutations (vertex count <= 8).
long automorphism_count(const SimplicialComplex& k);

// Chain identity: reflecting Delta equals (-1)^{l+1} times rotating it by -1.
bool epsilon_delta_identity(int n, int k);

struct DihedralActionReport {
    bool even_case = false;
    int l = 0;
    long betti = 0;
    bool rotation_formula_holds = false;
    bool reflection_formula_holds = false;
};

// Even case: rotation shifts the alpha classes, reflection sends alpha_i to
// (-1)^{l+1} alpha_{-i-1}. Odd case: rotation acts as +1 and reflection as
// (-1)^{l+1} on the infinite cyclic group.
DihedralActionReport dihedral_action_on_homology(int n, int k,
                                                 const OracleCaps& caps = OracleCaps{});

// Vertex table of f(i) = i mod n from the clique complex on n+k vertices.
std::vector<int> mod_n_table(int n, int k);

// Apex of the preimage subcomplex of tau (a cone by the structure theorem);
// nullopt would be a counterexample.
std::optional<int> preimage_cone_apex(const SimplicialComplex& src,
                                      const SimplicialComplex& dst,
                                      std::span<const int> table, const Simplex& tau);

}  // namespace circarc
