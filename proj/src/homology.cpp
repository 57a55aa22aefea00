#include "circarc/homology.hpp"

#include <algorithm>
#include <stdexcept>

namespace circarc {

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::mul(const IntMat& rhs) const {
    CIRCARC_CHECK(cols == rhs.rows, "matrix product shape mismatch");
    IntMat out(rows, rhs.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            const BigInt& x = at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < rhs.cols; ++j)
                if (rhs.at(k, j) != 0) out.at(i, j) += x * rhs.at(k, j);
        }
    return out;
}

std::vector<BigInt> IntMat::mul(const std::vector<BigInt>& x) const {
    CIRCARC_CHECK(static_cast<int>(x.size()) == cols, "matrix-vector shape mismatch");
    std::vector<BigInt> out(rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (at(i, j) != 0 && x[j] != 0) out[i] += at(i, j) * x[j];
    return out;
}

bool IntMat::is_identity() const {
    if (rows != cols) return false;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

namespace {

// Elimination worker; row operations are mirrored into u / u_inv, column
// operations into v, so u * m_original * v = m stays true throughout.
struct SnfWorker {
    IntMat m;
    bool with_t;
    IntMat u, v, u_inv;
    BigInt det_u = 1, det_v = 1;

    explicit SnfWorker(IntMat mat, bool transforms) : m(std::move(mat)), with_t(transforms) {
        if (with_t) {
            u = IntMat::identity(m.rows);
            u_inv = IntMat::identity(m.rows);
            v = IntMat::identity(m.cols);
        }
    }

    void swap_rows(int a, int b) {
        if (a == b) return;
        for (int j = 0; j < m.cols; ++j) std::swap(m.at(a, j), m.at(b, j));
        if (with_t) {
            for (int j = 0; j < u.cols; ++j) std::swap(u.at(a, j), u.at(b, j));
            for (int i = 0; i < u_inv.rows; ++i) std::swap(u_inv.at(i, a), u_inv.at(i, b));
        }
        det_u = -det_u;
    }

    void swap_cols(int a, int b) {
        if (a == b) return;
        for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, a), m.at(i, b));
        if (with_t)
            for (int i = 0; i < v.rows; ++i) std::swap(v.at(i, a), v.at(i, b));
        det_v = -det_v;
    }

    // row[dst] += c * row[src]
    void add_row(int dst, int src, const BigInt& c) {
        for (int j = 0; j < m.cols; ++j)
            if (m.at(src, j) != 0) m.at(dst, j) += c * m.at(src, j);
        if (with_t) {
            for (int j = 0; j < u.cols; ++j)
                if (u.at(src, j) != 0) u.at(dst, j) += c * u.at(src, j);
            for (int i = 0; i < u_inv.rows; ++i)
                if (u_inv.at(i, dst) != 0) u_inv.at(i, src) -= c * u_inv.at(i, dst);
        }
    }

    // col[dst] += c * col[src]
    void add_col(int dst, int src, const BigInt& c) {
        for (int i = 0; i < m.rows; ++i)
            if (m.at(i, src) != 0) m.at(i, dst) += c * m.at(i, src);
        if (with_t)
            for (int i = 0; i < v.rows; ++i)
                if (v.at(i, src) != 0) v.at(i, dst) += c * v.at(i, src);
    }

    void negate_row(int r) {
        for (int j = 0; j < m.cols; ++j) m.at(r, j) = -m.at(r, j);
        if (with_t) {
            for (int j = 0; j < u.cols; ++j) u.at(r, j) = -u.at(r, j);
            for (int i = 0; i < u_inv.rows; ++i) u_inv.at(i, r) = -u_inv.at(i, r);
        }
        det_u = -det_u;
    }

    bool find_pivot(int t, int& pi, int& pj) const {
        bool found = false;
        BigInt best;
        for (int i = t; i < m.rows; ++i)
            for (int j = t; j < m.cols; ++j) {
                const BigInt& x = m.at(i, j);
                if (x == 0) continue;
                BigInt mag = abs(x);
                if (!found || mag < best) {
                    found = true;
                    best = mag;
                    pi = i;
                    pj = j;
                }
            }
        return found;
    }

    void run() {
        const int bound = std::min(m.rows, m.cols);
        for (int t = 0; t < bound; ++t) {
            int pi, pj;
            if (!find_pivot(t, pi, pj)) break;
            swap_rows(t, pi);
            swap_cols(t, pj);
            for (;;) {
                bool clean = true;
                for (int i = t + 1; i < m.rows; ++i) {
                    if (m.at(i, t) == 0) continue;
                    BigInt q = m.at(i, t) / m.at(t, t);
                    if (q != 0) add_row(i, t, -q);
                    if (m.at(i, t) != 0) clean = false;
                }
                for (int j = t + 1; j < m.cols; ++j) {
                    if (m.at(t, j) == 0) continue;
                    BigInt q = m.at(t, j) / m.at(t, t);
                    if (q != 0) add_col(j, t, -q);
                    if (m.at(t, j) != 0) clean = false;
                }
                if (!clean) {
                    // Remainders are strictly smaller in magnitude; reselect.
                    if (!find_pivot(t, pi, pj)) break;
                    swap_rows(t, pi);
                    swap_cols(t, pj);
                    continue;
                }
                // Pivot must divide every remaining entry for the chain d1|d2|...
                int bi = -1, bj = -1;
                for (int i = t + 1; i < m.rows && bi < 0; ++i)
                    for (int j = t + 1; j < m.cols; ++j)
                        if (m.at(i, j) % m.at(t, t) != 0) {
                            bi = i;
                            bj = j;
                            break;
                        }
                if (bi < 0) break;
                add_row(t, bi, 1);
            }
            if (m.at(t, t) < 0) negate_row(t);
        }
    }
};

}  // namespace

SnfResult smith_normal_form(IntMat m, bool with_transforms) {
    SnfWorker w(std::move(m), with_transforms);
    w.run();
    SnfResult out;
    out.has_transforms = with_transforms;
    out.rank = 0;
    const int bound = std::min(w.m.rows, w.m.cols);
    for (int t = 0; t < bound; ++t) {
        if (w.m.at(t, t) == 0) break;
        out.invariant_factors.push_back(w.m.at(t, t));
        ++out.rank;
    }
    out.d = std::move(w.m);
    if (with_transforms) {
        out.u = std::move(w.u);
        out.v = std::move(w.v);
        out.u_inv = std::move(w.u_inv);
    }
    out.det_u = w.det_u;
    out.det_v = w.det_v;
    return out;
}

namespace {

std::optional<std::vector<BigInt>> solve_with(const SnfResult& s,
                                              const std::vector<BigInt>& rhs) {
    CIRCARC_CHECK(s.has_transforms, "solve needs SNF transforms");
    std::vector<BigInt> y = s.u.mul(rhs);
    std::vector<BigInt> w(s.d.cols);
    for (int i = 0; i < s.d.rows; ++i) {
        if (i < s.rank) {
            if (y[i] % s.invariant_factors[i] != 0) return std::nullopt;
            w[i] = y[i] / s.invariant_factors[i];
        } else if (y[i] != 0) {
            return std::nullopt;
        }
    }
    return s.v.mul(w);
}

}  // namespace

std::optional<std::vector<BigInt>> solve_integer(const IntMat& m, const std::vector<BigInt>& rhs) {
    return solve_with(smith_normal_form(m, true), rhs);
}

void Chain::add_oriented(std::vector<int> vertices, const BigInt& c) {
    if (c == 0) return;
    // Insertion sort, counting swaps for the permutation sign.
    int swaps = 0;
    for (size_t i = 1; i < vertices.size(); ++i)
        for (size_t j = i; j > 0 && vertices[j - 1] > vertices[j]; --j) {
            std::swap(vertices[j - 1], vertices[j]);
            ++swaps;
        }
    for (size_t i = 1; i < vertices.size(); ++i)
        if (vertices[i] == vertices[i - 1]) return;  // degenerate image
    BigInt signed_c = (swaps % 2 == 0) ? c : -c;
    auto it = coef.find(vertices);
    if (it == coef.end()) {
        coef.emplace(std::move(vertices), std::move(signed_c));
    } else {
        it->second += signed_c;
        if (it->second == 0) coef.erase(it);
    }
}

Chain boundary_of_simplex(const Simplex& s) {
    Chain out;
    out.dim = static_cast<int>(s.size()) - 2;
    for (size_t j = 0; j < s.size(); ++j) {
        Simplex face;
        face.reserve(s.size() - 1);
        for (size_t i = 0; i < s.size(); ++i)
            if (i != j) face.push_back(s[i]);
        out.add_oriented(std::move(face), (j % 2 == 0) ? 1 : -1);
    }
    return out;
}

Chain apply_vertex_map(const Chain& z, std::span<const int> table) {
    Chain out;
    out.dim = z.dim;
    for (const auto& [s, c] : z.coef) {
        std::vector<int> image;
        image.reserve(s.size());
        for (int v : s) image.push_back(table[v]);
        out.add_oriented(std::move(image), c);
    }
    return out;
}

Chain rotate_chain(const Chain& z, int shift, int n) {
    std::vector<int> table(n);
    for (int v = 0; v < n; ++v) table[v] = ((v + shift) % n + n) % n;
    return apply_vertex_map(z, table);
}

Chain scale_chain(Chain z, const BigInt& c) {
    if (c == 0) return Chain{z.dim, {}};
    for (auto& [s, x] : z.coef) x *= c;
    return z;
}

Chain add_chains(const Chain& a, const Chain& b) {
    CIRCARC_CHECK(a.dim == b.dim, "chain dimension mismatch");
    Chain out = a;
    for (const auto& [s, c] : b.coef) {
        auto it = out.coef.find(s);
        if (it == out.coef.end()) {
            out.coef.emplace(s, c);
        } else {
            it->second += c;
            if (it->second == 0) out.coef.erase(it);
        }
    }
    return out;
}

namespace {

int face_index(const std::vector<Simplex>& basis, const Simplex& s) {
    auto it = std::lower_bound(basis.begin(), basis.end(), s);
    CIRCARC_CHECK(it != basis.end() && *it == s, "simplex not a face of the complex");
    return static_cast<int>(it - basis.begin());
}

std::vector<BigInt> chain_to_vector(const Chain& z, const std::vector<Simplex>& basis) {
    std::vector<BigInt> out(basis.size());
    for (const auto& [s, c] : z.coef) out[face_index(basis, s)] = c;
    return out;
}

Chain vector_to_chain(const std::vector<BigInt>& x, const std::vector<Simplex>& basis, int dim) {
    Chain out;
    out.dim = dim;
    for (size_t i = 0; i < basis.size(); ++i)
        if (x[i] != 0) out.coef.emplace(basis[i], x[i]);
    return out;
}

}  // namespace

IntMat boundary_matrix(const SimplicialComplex& k, int d) {
    const int top = k.dim();
    if (d < 0 || d > top + 1) throw std::invalid_argument("boundary_matrix: bad dimension");
    if (d == top + 1) {
        int nrows = d == 0 ? 1 : static_cast<int>(faces(k, d - 1).size());
        return IntMat(nrows, 0);
    }
    std::vector<Simplex> cols = faces(k, d);
    if (d == 0) {
        IntMat m(1, static_cast<int>(cols.size()));
        for (int j = 0; j < m.cols; ++j) m.at(0, j) = 1;
        return m;
    }
    std::vector<Simplex> rows = faces(k, d - 1);
    IntMat m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols; ++j) {
        const Simplex& s = cols[j];
        int sign = 1;
        Simplex face;
        face.reserve(s.size() - 1);
        for (size_t drop = 0; drop < s.size(); ++drop) {
            face.clear();
            for (size_t i = 0; i < s.size(); ++i)
                if (i != drop) face.push_back(s[i]);
            m.at(face_index(rows, face), j) += sign;
            sign = -sign;
        }
    }
    return m;
}

bool HomologyGroups::torsion_free() const {
    for (const Group& g : groups)
        if (!g.torsion.empty()) return false;
    return true;
}

std::optional<std::pair<int, long>> HomologyGroups::concentrated() const {
    std::optional<std::pair<int, long>> hit;
    for (size_t d = 0; d < groups.size(); ++d) {
        if (groups[d].betti == 0 && groups[d].torsion.empty()) continue;
        if (hit) return std::nullopt;
        hit = std::make_pair(static_cast<int>(d), groups[d].betti);
    }
    return hit;
}

bool HomologyGroups::trivial() const {
    for (const Group& g : groups)
        if (g.betti != 0 || !g.torsion.empty()) return false;
    return true;
}

HomologyGroups reduced_homology(const SimplicialComplex& k, int up_to_dim,
                                const OracleCaps& caps) {
    if (k.vertex_count > caps.max_vertices)
        throw std::invalid_argument("reduced_homology: vertex cap exceeded");
    if (up_to_dim > caps.max_dim)
        throw std::invalid_argument("reduced_homology: dimension cap exceeded");
    const int top = k.dim();
    HomologyGroups out;
    out.groups.resize(up_to_dim + 1);
    SnfResult below = smith_normal_form(boundary_matrix(k, 0), false);
    for (int d = 0; d <= up_to_dim; ++d) {
        if (d > top) break;  // groups stay zero
        long nfaces = static_cast<long>(faces(k, d).size());
        SnfResult above = smith_normal_form(boundary_matrix(k, d + 1), false);
        HomologyGroups::Group g;
        g.betti = nfaces - below.rank - above.rank;
        CIRCARC_CHECK(g.betti >= 0, "negative betti number");
        for (const BigInt& f : above.invariant_factors)
            if (f > 1) g.torsion.push_back(f);
        out.groups[d] = std::move(g);
        below = std::move(above);
    }
    return out;
}

BigInt pair(const Cochain& c, const Chain& z) {
    if (c.dim != z.dim) throw std::invalid_argument("pair: dimension mismatch");
    BigInt out = 0;
    for (const auto& [s, x] : c.coef) {
        auto it = z.coef.find(s);
        if (it != z.coef.end()) out += x * it->second;
    }
    return out;
}

bool is_cocycle(const SimplicialComplex& k, const Cochain& c) {
    for (const auto& [s, x] : c.coef)
        CIRCARC_CHECK(k.is_simplex(s), "cochain support outside the complex");
    if (c.dim + 1 > k.dim()) return true;
    for (const Simplex& tau : faces(k, c.dim + 1)) {
        BigInt eval = pair(c, boundary_of_simplex(tau));
        if (eval != 0) return false;
    }
    return true;
}

bool is_boundary(const SimplicialComplex& k, const Chain& z) {
    for (const auto& [s, x] : z.coef)
        CIRCARC_CHECK(k.is_simplex(s), "chain support outside the complex");
    if (z.dim > k.dim()) return z.zero();
    std::vector<Simplex> basis = faces(k, z.dim);
    IntMat b = boundary_matrix(k, z.dim + 1);
    return solve_integer(b, chain_to_vector(z, basis)).has_value();
}

HomologyBasis::HomologyBasis(const SimplicialComplex& k, int d) : dim_(d) {
    faces_ = faces(k, d);
    const int nfaces = static_cast<int>(faces_.size());

    SnfResult bd = smith_normal_form(boundary_matrix(k, d), true);
    const int kappa = nfaces - bd.rank;
    kernel_ = IntMat(nfaces, kappa);
    for (int j = 0; j < kappa; ++j)
        for (int i = 0; i < nfaces; ++i) kernel_.at(i, j) = bd.v.at(i, bd.rank + j);
    kernel_snf_ = smith_normal_form(kernel_, true);

    IntMat b1 = boundary_matrix(k, d + 1);
    IntMat g(kappa, b1.cols);
    for (int j = 0; j < b1.cols; ++j) {
        std::vector<BigInt> col(b1.rows);
        for (int i = 0; i < b1.rows; ++i) col[i] = b1.at(i, j);
        auto y = solve_with(kernel_snf_, col);
        CIRCARC_CHECK(y.has_value(), "boundary is not a cycle");
        for (int i = 0; i < kappa; ++i) g.at(i, j) = (*y)[i];
    }
    quot_snf_ = smith_normal_form(std::move(g), true);
    for (const BigInt& f : quot_snf_.invariant_factors)
        if (f != 1) throw std::invalid_argument("homology has torsion; free basis unavailable");
    betti_ = kappa - quot_snf_.rank;

    cycles_.reserve(betti_);
    for (int i = quot_snf_.rank; i < kappa; ++i) {
        std::vector<BigInt> y(kappa);
        for (int r = 0; r < kappa; ++r) y[r] = quot_snf_.u_inv.at(r, i);
        cycles_.push_back(vector_to_chain(kernel_.mul(y), faces_, d));
    }
}

std::vector<BigInt> HomologyBasis::coords(const Chain& z) const {
    CIRCARC_CHECK(z.dim == dim_, "coords: dimension mismatch");
    auto y = solve_with(kernel_snf_, chain_to_vector(z, faces_));
    CIRCARC_CHECK(y.has_value(), "coords: not a cycle of the complex");
    std::vector<BigInt> u = quot_snf_.u.mul(*y);
    return {u.begin() + quot_snf_.rank, u.end()};
}

IntMat induced_map_on_homology(const SimplicialComplex& src, const SimplicialComplex& dst,
                               std::span<const int> table, int d) {
    for (const Simplex& m : src.maximal) {
        Simplex image;
        for (int v : m) image.push_back(table[v]);
        std::sort(image.begin(), image.end());
        image.erase(std::unique(image.begin(), image.end()), image.end());
        if (!dst.is_simplex(image))
            throw std::invalid_argument("vertex map is not simplicial");
    }
    HomologyBasis hs(src, d);
    HomologyBasis hd(dst, d);
    IntMat out(static_cast<int>(hd.betti()), static_cast<int>(hs.betti()));
    for (size_t j = 0; j < hs.basis_cycles().size(); ++j) {
        Chain image = apply_vertex_map(hs.basis_cycles()[j], table);
        std::vector<BigInt> col = hd.coords(image);
        for (int i = 0; i < out.rows; ++i) out.at(i, static_cast<int>(j)) = col[i];
    }
    return out;
}

Chain generator_of_top_homology(const SimplicialComplex& k, int d) {
    HomologyBasis hb(k, d);
    if (hb.betti() != 1)
        throw std::invalid_argument("generator_of_top_homology: rank is not 1");
    return hb.basis_cycles()[0];
}

}  // namespace circarc
