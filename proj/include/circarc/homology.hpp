// Exact integer simplicial homology via Smith normal form: the independent
// ground truth every closed-form classifier is checked against. Reduced
// convention throughout, arbitrary-precision arithmetic, no modular shortcuts.
#pragma once

#include <map>
#include <optional>
#include <vector>

#include "circarc/complex.hpp"
#include "circarc/rational.hpp"

namespace circarc {

struct IntMat {
    int rows = 0, cols = 0;
    std::vector<BigInt> a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    BigInt& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const BigInt& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    static IntMat identity(int n);
    IntMat mul(const IntMat& rhs) const;
    std::vector<BigInt> mul(const std::vector<BigInt>& x) const;
    bool is_identity() const;

    friend bool operator==(const IntMat&, const IntMat&) = default;
};

// U * M * V = D with U, V unimodular and the diagonal divisibility chain.
struct SnfResult {
    IntMat d;
    IntMat u, v, u_inv;  // populated only when transforms were requested
    bool has_transforms = false;
    int rank = 0;
    std::vector<BigInt> invariant_factors;  // the nonzero diagonal, d1 | d2 | ...
    BigInt det_u = 1, det_v = 1;            // tracked through the row/col ops
};

SnfResult smith_normal_form(IntMat m, bool with_transforms = true);

// Integer solution x of M x = rhs, when one exists.
std::optional<std::vector<BigInt>> solve_integer(const IntMat& m, const std::vector<BigInt>& rhs);

// Integer-coefficient formal sum of oriented simplices; the sorted vertex
// order of each key is the positive orientation. Cochains share the storage.
struct Chain {
    int dim = 0;
    std::map<Simplex, BigInt> coef;

    // Adds c * [vertices] where the list may be unsorted; the sign of the
    // sorting permutation is applied, repeated vertices contribute nothing.
    void add_oriented(std::vector<int> vertices, const BigInt& c);
    bool zero() const { return coef.empty(); }

    friend bool operator==(const Chain&, const Chain&) = default;
};

using Cochain = Chain;

Chain boundary_of_simplex(const Simplex& s);
Chain apply_vertex_map(const Chain& z, std::span<const int> table);
Chain rotate_chain(const Chain& z, int shift, int n);
Chain scale_chain(Chain z, const BigInt& c);
Chain add_chains(const Chain& a, const Chain& b);

struct OracleCaps {
    int max_vertices = 12;
    int max_dim = 8;
};

// Columns indexed by d-faces, rows by (d-1)-faces; for d = 0 the single
// augmentation row of ones.
IntMat boundary_matrix(const SimplicialComplex& k, int d);

struct HomologyGroups {
    struct Group {
        long betti = 0;
        std::vector<BigInt> torsion;
    };
    std::vector<Group> groups;  // index = dimension

    bool torsion_free() const;
    // The single dimension carrying nonzero reduced homology, if the groups
    // are concentrated there; nullopt for trivial or spread-out homology.
    std::optional<std::pair<int, long>> concentrated() const;
    bool trivial() const;
};

HomologyGroups reduced_homology(const SimplicialComplex& k, int up_to_dim,
                                const OracleCaps& caps = OracleCaps{});

BigInt pair(const Cochain& c, const Chain& z);
bool is_cocycle(const SimplicialComplex& k, const Cochain& c);
bool is_boundary(const SimplicialComplex& k, const Chain& z);

// Free homology basis in one dimension, with integer coordinates for cycles.
class HomologyBasis {
public:
    HomologyBasis(const SimplicialComplex& k, int d);

    long betti() const { return betti_; }
    const std::vector<Chain>& basis_cycles() const { return cycles_; }
    // Coordinates of the class of z in the basis; z must be a cycle of K.
    std::vector<BigInt> coords(const Chain& z) const;

private:
    int dim_;
    long betti_ = 0;
    std::vector<Simplex> faces_;
    SnfResult kernel_snf_;  // of the kernel-basis matrix, for coordinate solves
    IntMat kernel_;         // faces x kappa
    SnfResult quot_snf_;    // of the image expressed in kernel coordinates
    std::vector<Chain> cycles_;
};

// Matrix of the map induced on free homology in dimension d, expressed on the
// HomologyBasis bases of source and target. The vertex map must be simplicial.
IntMat induced_map_on_homology(const SimplicialComplex& src, const SimplicialComplex& dst,
                               std::span<const int> table, int d);

// A generating cycle of the top homology when it is infinite cyclic.
Chain generator_of_top_homology(const SimplicialComplex& k, int d);

}  // namespace circarc
