#include "circarc/maps.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "circarc/polytope.hpp"

namespace circarc {

bool is_simplicial(const SimplicialComplex& src, const SimplicialComplex& dst,
                   std::span<const int> table) {
    if (static_cast<int>(table.size()) != src.vertex_count)
        throw std::invalid_argument("is_simplicial: table size mismatch");
    for (const Simplex& m : src.maximal) {
        Simplex image;
        for (int v : m) image.push_back(table[v]);
        std::sort(image.begin(), image.end());
        image.erase(std::unique(image.begin(), image.end()), image.end());
        if (!dst.is_simplex(image)) return false;
    }
    return true;
}

int DihedralElement::apply(int v, int n) const {
    int x = reflected ? rot - v : rot + v;
    return ((x % n) + n) % n;
}

DihedralElement DihedralElement::compose(const DihedralElement& rhs, int n) const {
    // (this o rhs)(v) = this(rhs(v))
    DihedralElement out;
    if (rhs.reflected) {
        out.rot = reflected ? rot - rhs.rot : rot + rhs.rot;
        out.reflected = !reflected;
    } else {
        out.rot = reflected ? rot - rhs.rot : rot + rhs.rot;
        out.reflected = reflected;
    }
    out.rot = ((out.rot % n) + n) % n;
    return out;
}

DihedralElement canonical_dihedral(int rot, bool reflected, int n) {
    return DihedralElement{((rot % n) + n) % n, reflected};
}

std::vector<int> dihedral_table(int n, const DihedralElement& e) {
    std::vector<int> t(n);
    for (int v = 0; v < n; ++v) t[v] = e.apply(v, n);
    return t;
}

long automorphism_count(const SimplicialComplex& k) {
    const int n = k.vertex_count;
    if (n > 8) throw std::invalid_argument("automorphism_count: brute-force cap is 8 vertices");
    std::set<Simplex> family(k.maximal.begin(), k.maximal.end());
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    long count = 0;
    do {
        bool ok = true;
        for (const Simplex& m : k.maximal) {
            Simplex image;
            for (int v : m) image.push_back(perm[v]);
            std::sort(image.begin(), image.end());
            if (!family.count(image)) {
                ok = false;
                break;
            }
        }
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

bool epsilon_delta_identity(int n, int k) {
    const int m = n - k;
    if (k % m != 0) throw std::invalid_argument("epsilon_delta_identity: divisible case only");
    const int l = k / m;
    Simplex delta = delta_simplex(n, k);

    Chain delta_chain;
    delta_chain.dim = static_cast<int>(delta.size()) - 1;
    delta_chain.coef[delta] = 1;

    Chain lhs = apply_vertex_map(delta_chain, dihedral_table(n, DihedralElement::reflection()));
    Chain rhs = rotate_chain(delta_chain, -1, n);
    BigInt sign = (l + 1) % 2 == 0 ? 1 : -1;
    return lhs == scale_chain(std::move(rhs), sign);
}

DihedralActionReport dihedral_action_on_homology(int n, int k, const OracleCaps& caps) {
    if (n < 2 || k < 0 || k > n - 2)
        throw std::invalid_argument("dihedral_action_on_homology: need 0 <= k <= n-2");
    DihedralActionReport rep;
    const int m = n - k;
    rep.even_case = k % m == 0;
    rep.l = k / m;
    SimplicialComplex nk = nerve_nk(n, k);
    if (nk.vertex_count > caps.max_vertices)
        throw std::invalid_argument("dihedral_action_on_homology: vertex cap exceeded");

    std::vector<int> g_table = dihedral_table(n, DihedralElement::rotation(1));
    std::vector<int> e_table = dihedral_table(n, DihedralElement::reflection());
    const BigInt sign = (rep.l + 1) % 2 == 0 ? 1 : -1;

    if (rep.even_case) {
        const int d = 2 * rep.l;
        HomologyBasis basis(nk, d);
        rep.betti = basis.betti();
        CIRCARC_CHECK(rep.betti == m - 1, "even-case homology rank is not n-k-1");
        std::vector<std::vector<BigInt>> alpha_coords;
        for (int i = 0; i < m; ++i) alpha_coords.push_back(basis.coords(alpha_cycle(n, k, i)));

        IntMat g_mat = induced_map_on_homology(nk, nk, g_table, d);
        IntMat e_mat = induced_map_on_homology(nk, nk, e_table, d);
        rep.rotation_formula_holds = true;
        rep.reflection_formula_holds = true;
        for (int i = 0; i < m; ++i) {
            if (g_mat.mul(alpha_coords[i]) != alpha_coords[(i + 1) % m])
                rep.rotation_formula_holds = false;
            std::vector<BigInt> expect = alpha_coords[((-i - 1) % m + m) % m];
            for (BigInt& x : expect) x *= sign;
            if (e_mat.mul(alpha_coords[i]) != expect) rep.reflection_formula_holds = false;
        }
    } else {
        const int d = 2 * rep.l + 1;
        IntMat g = induced_map_on_homology(nk, nk, g_table, d);
        IntMat e = induced_map_on_homology(nk, nk, e_table, d);
        rep.betti = g.rows;
        CIRCARC_CHECK(g.rows == 1 && g.cols == 1 && e.rows == 1 && e.cols == 1,
                      "odd-case homology rank is not 1");
        rep.rotation_formula_holds = g.at(0, 0) == 1;
        rep.reflection_formula_holds = e.at(0, 0) == sign;
    }
    return rep;
}

std::vector<int> mod_n_table(int n, int k) {
    if (n < 1 || k < 0) throw std::invalid_argument("mod_n_table: need n >= 1, k >= 0");
    std::vector<int> t(n + k);
    for (int v = 0; v < n + k; ++v) t[v] = v % n;
    return t;
}

std::optional<int> preimage_cone_apex(const SimplicialComplex& src,
                                      const SimplicialComplex& dst,
                                      std::span<const int> table, const Simplex& tau) {
    if (!dst.is_simplex(tau)) throw std::invalid_argument("preimage_cone_apex: not a simplex");
    std::vector<char> in_tau(dst.vertex_count, 0);
    for (int v : tau) in_tau[v] = 1;
    std::vector<int> preimage_vertices;
    for (int v = 0; v < src.vertex_count; ++v)
        if (in_tau[table[v]]) preimage_vertices.push_back(v);
    SimplicialComplex pre = induced(src, preimage_vertices);

    for (int w : preimage_vertices) {
        bool apex = true;
        for (const Simplex& m : pre.maximal) {
            Simplex ext = m;
            if (!std::binary_search(ext.begin(), ext.end(), w))
                ext.insert(std::upper_bound(ext.begin(), ext.end(), w), w);
            if (!pre.is_simplex(ext)) {
                apex = false;
                break;
            }
        }
        if (apex) return w;
    }
    return std::nullopt;
}

}  // namespace circarc
