#include "circarc/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

namespace circarc {

namespace {

// Even-case parameters: k/n = l/(l+1), i.e. (n-k) | k and n = (l+1)(n-k).
int even_case_l(int n, int k) {
    if (n < 1 || k < 0 || k > n - 2)
        throw std::invalid_argument("even case needs 0 <= k <= n-2");
    int m = n - k;
    if (k % m != 0) throw std::invalid_argument("not an even (divisible) case");
    return k / m;
}

// Strict-case parameters: l/(l+1) < k/n < (l+1)/(l+2).
int odd_case_l(int n, int k) {
    if (n < 1 || k < 1 || k > n - 2) throw std::invalid_argument("odd case needs 1 <= k <= n-2");
    int m = n - k;
    if (k % m == 0) throw std::invalid_argument("not a strict (odd) case");
    int l = k / m;
    CIRCARC_CHECK(static_cast<long>(l) * n < static_cast<long>(k) * (l + 1), "odd case bound");
    CIRCARC_CHECK(static_cast<long>(k) * (l + 2) < static_cast<long>(n) * (l + 1), "odd case bound");
    return l;
}

// Ascending block positions p1 < ... < pm, block p covering {p, p+1 mod n},
// pairwise disjoint including the wrap between the last and first block.
void place_blocks(int n, int m, int next, std::vector<int>& picked,
                  std::vector<Simplex>& out) {
    if (static_cast<int>(picked.size()) == m) {
        if (picked[0] + n - picked.back() >= 2) {
            Simplex f;
            for (int p : picked) {
                f.push_back(p);
                f.push_back((p + 1) % n);
            }
            std::sort(f.begin(), f.end());
            out.push_back(std::move(f));
        }
        return;
    }
    for (int p = next; p < n; ++p) {
        if (!picked.empty() && p - picked.back() < 2) continue;
        picked.push_back(p);
        place_blocks(n, m, p + 1, picked, out);
        picked.pop_back();
    }
}

// Allows the degenerate n == 2m boundary (one facet: the whole vertex set),
// which the missing-facet computation needs when n - k = 2.
std::vector<Simplex> cyclic_boundary_facets(int two_m, int n) {
    const int m = two_m / 2;
    std::vector<Simplex> out;
    std::vector<int> picked;
    place_blocks(n, m, 0, picked, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

FacetSet gale_facets(int two_m, int n) {
    if (two_m < 2 || two_m % 2 != 0 || n <= two_m)
        throw std::invalid_argument("gale_facets: need n > 2m >= 2");
    return FacetSet{two_m, n, cyclic_boundary_facets(two_m, n)};
}

std::vector<Simplex> gale_facets_by_evenness(int two_m, int n) {
    if (two_m < 2 || n <= two_m) throw std::invalid_argument("gale evenness: need n > 2m");
    std::vector<Simplex> out;
    std::vector<int> subset;
    auto evenness = [&](const Simplex& sigma) {
        std::vector<char> in(n, 0);
        for (int v : sigma) in[v] = 1;
        for (int x = 0; x < n; ++x) {
            if (in[x]) continue;
            for (int y = x + 1; y < n; ++y) {
                if (in[y]) continue;
                int between = 0;
                for (int z = x + 1; z < y; ++z) between += in[z];
                if (between % 2 != 0) return false;
            }
        }
        return true;
    };
    std::vector<int> idx(two_m);
    // Enumerate all subsets of size 2m.
    auto rec = [&](auto&& self, int pos, int from) -> void {
        if (pos == two_m) {
            Simplex s(idx.begin(), idx.end());
            if (evenness(s)) out.push_back(s);
            return;
        }
        for (int v = from; v < n; ++v) {
            idx[pos] = v;
            self(self, pos + 1, v + 1);
        }
    };
    rec(rec, 0, 0);
    return out;
}

std::vector<double> moment_curve(int two_m, const Rational& t) {
    if (two_m < 2 || two_m % 2 != 0) throw std::invalid_argument("moment_curve: even dim >= 2");
    const double tt = t.convert_to<double>();
    std::vector<double> p;
    p.reserve(two_m);
    for (int j = 1; j <= two_m / 2; ++j) {
        p.push_back(std::cos(2 * std::numbers::pi * j * tt));
        p.push_back(std::sin(2 * std::numbers::pi * j * tt));
    }
    return p;
}

bool check_lemma_5_8(int n, int k) {
    int l = odd_case_l(n, k);
    if (n < 2 * l + 3) throw std::invalid_argument("check_lemma_5_8: need n >= 2l+3");
    for (const Simplex& f : gale_facets(2 * l + 2, n).facets)
        if (!fits_in_discrete_arc(f, n, k)) return false;
    return true;
}

Simplex delta_simplex(int n, int k) {
    int l = even_case_l(n, k);
    int m = n - k;
    CIRCARC_CHECK(m >= 2, "delta needs n-k >= 2");
    Simplex d;
    for (int i = 0; i <= l; ++i) {
        d.push_back(i * m);
        d.push_back(i * m + 1);
    }
    return d;  // already strictly increasing since n-k >= 2
}

std::vector<Simplex> missing_facets(int n, int k) {
    int l = even_case_l(n, k);
    const int m = n - k;
    SimplicialComplex nk = nerve_nk(n, k);
    std::vector<Simplex> missing;
    for (const Simplex& f : gale_facets(2 * l + 2, n).facets)
        if (!fits_in_discrete_arc(f, n, k)) missing.push_back(f);
    std::sort(missing.begin(), missing.end());

    std::vector<Simplex> expected;
    Simplex base = delta_simplex(n, k);
    for (int i = 0; i < m; ++i) {
        Simplex rot;
        for (int v : base) rot.push_back((v + i) % n);
        std::sort(rot.begin(), rot.end());
        expected.push_back(std::move(rot));
    }
    std::sort(expected.begin(), expected.end());
    expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
    CIRCARC_CHECK(missing == expected, "missing facets are not the rotations of delta");
    return missing;
}

Chain delta_boundary(int n, int k) {
    even_case_l(n, k);
    Simplex d = delta_simplex(n, k);
    Chain bd = boundary_of_simplex(d);
    SimplicialComplex nk = nerve_nk(n, k);
    CIRCARC_CHECK(!fits_in_discrete_arc(d, n, k), "delta must be a non-face");
    for (const auto& [s, c] : bd.coef)
        CIRCARC_CHECK(nk.is_simplex(s), "face of delta boundary missing from the complex");
    return bd;
}

Chain alpha_cycle(int n, int k, int i) {
    Chain base = delta_boundary(n, k);
    int shift = ((i % n) + n) % n;
    return rotate_chain(base, shift, n);
}

Cochain beta_cochain_even(int n, int k) {
    int l = even_case_l(n, k);
    const int m = n - k;
    Cochain beta;
    beta.dim = 2 * l;
    SimplicialComplex nk = nerve_nk(n, k);
    // B = [0, v0, m, v1, 2m, ..., (l-1)m, v_{l-1}, lm] with vi in the open gaps.
    std::vector<int> gaps(l, 0);
    auto emit = [&](const std::vector<int>& choice) {
        Simplex b;
        for (int i = 0; i < l; ++i) {
            b.push_back(i * m);
            b.push_back(choice[i]);
        }
        b.push_back(l * m);
        CIRCARC_CHECK(std::is_sorted(b.begin(), b.end()), "B simplex out of order");
        CIRCARC_CHECK(nk.is_simplex(b), "B simplex missing from the complex");
        beta.coef[b] = 1;
    };
    if (l == 0) {
        beta.coef[Simplex{0}] = 1;
        return beta;
    }
    std::vector<int> choice(l);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == l) {
            emit(choice);
            return;
        }
        for (int v = i * m + 1; v < (i + 1) * m; ++v) {
            choice[i] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return beta;
}

std::vector<Simplex> admissible_sets(int n, int k) {
    int l = odd_case_l(n, k);
    const int m = n - k;
    std::vector<Simplex> out;
    const int size = 2 * (l + 1);
    std::vector<int> a(size + 1, 0);  // a[0] = 0 by convention
    auto ok_pairwise = [&](int idx) {
        return a[idx] - a[idx - 1] < m;  // consecutive gap condition
    };
    auto rec = [&](auto&& self, int idx) -> void {
        if (idx == size + 1) {
            for (int i = 0; i <= l; ++i)
                if (a[2 * (i + 1)] - a[2 * i] < m) return;
            if (a[size] - a[1] > k) return;
            out.emplace_back(a.begin() + 1, a.end());
            return;
        }
        for (int v = a[idx - 1] + 1; v < n; ++v) {
            a[idx] = v;
            if (!ok_pairwise(idx)) continue;
            self(self, idx + 1);
        }
    };
    rec(rec, 1);
    return out;
}

Cochain beta_cochain_odd(int n, int k) {
    int l = odd_case_l(n, k);
    Cochain beta;
    beta.dim = 2 * l + 1;
    SimplicialComplex nk = nerve_nk(n, k);
    for (Simplex& q : admissible_sets(n, k)) {
        CIRCARC_CHECK(nk.is_simplex(q), "admissible set missing from the complex");
        beta.coef[std::move(q)] = 1;
    }
    return beta;
}

Simplex odd_common_simplex(int n, int k) {
    int l = odd_case_l(n, k);
    const int m = n - k;
    Simplex s;
    for (int i = 1; i <= l + 1; ++i) {
        s.push_back(i * m - 1);
        s.push_back(i * m);
    }
    std::sort(s.begin(), s.end());
    return s;
}

IntMat evaluation_matrix(int n, int k) {
    even_case_l(n, k);
    const int m = n - k;
    const int rank = m - 1;  // n - k - 1
    Cochain beta0 = beta_cochain_even(n, k);

    std::vector<Chain> alphas;
    for (int i = 0; i < m; ++i) alphas.push_back(alpha_cycle(n, k, i));

    // Pattern <beta_0, alpha_i>: -1 at i = 0, +1 at i = n-k-1, else 0.
    for (int i = 0; i < m; ++i) {
        BigInt val = pair(beta0, alphas[i]);
        BigInt expect = i == 0 ? -1 : (i == m - 1 ? 1 : 0);
        CIRCARC_CHECK(val == expect, "beta_0 evaluation pattern mismatch");
    }

    std::vector<Cochain> betas;
    for (int i = 0; i < rank; ++i) betas.push_back(rotate_chain(beta0, i, n));
    IntMat eval(rank, rank);
    Cochain gamma;
    gamma.dim = beta0.dim;
    for (int i = 0; i < rank; ++i) {
        gamma = add_chains(gamma, betas[i]);
        for (int j = 0; j < rank; ++j) eval.at(i, j) = -pair(gamma, alphas[j]);
    }
    CIRCARC_CHECK(eval.is_identity(), "evaluation matrix is not the identity");
    return eval;
}

}  // namespace circarc
