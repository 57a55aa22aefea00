#include "circarc/complex.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>

namespace circarc {

bool is_subset(const Simplex& a, const Simplex& b) {
    size_t i = 0;
    for (int v : b) {
        if (i == a.size()) return true;
        if (a[i] == v) ++i;
    }
    return i == a.size();
}

bool SimplicialComplex::is_simplex(const Simplex& sorted_vertices) const {
    for (const Simplex& m : maximal)
        if (is_subset(sorted_vertices, m)) return true;
    return false;
}

int SimplicialComplex::dim() const {
    int d = -1;
    for (const Simplex& m : maximal) d = std::max(d, static_cast<int>(m.size()) - 1);
    return d;
}

std::vector<int> SimplicialComplex::used_vertices() const {
    std::set<int> used;
    for (const Simplex& m : maximal) used.insert(m.begin(), m.end());
    return {used.begin(), used.end()};
}

SimplicialComplex make_complex(int vertex_count, std::vector<Simplex> generators) {
    for (const Simplex& g : generators) {
        if (g.empty()) throw std::invalid_argument("make_complex: empty generator");
        for (size_t i = 0; i < g.size(); ++i) {
            if (g[i] < 0 || g[i] >= vertex_count)
                throw std::invalid_argument("make_complex: vertex out of range");
            if (i > 0 && g[i] <= g[i - 1])
                throw std::invalid_argument("make_complex: generator not strictly increasing");
        }
    }
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    std::vector<Simplex> kept;
    for (size_t i = 0; i < generators.size(); ++i) {
        bool contained = false;
        for (size_t j = 0; j < generators.size() && !contained; ++j)
            contained = i != j && is_subset(generators[i], generators[j]) &&
                        generators[i] != generators[j];
        if (!contained) kept.push_back(generators[i]);
    }
    return SimplicialComplex{vertex_count, std::move(kept)};
}

SimplicialComplex full_simplex(int vertex_count) {
    Simplex all(vertex_count);
    std::iota(all.begin(), all.end(), 0);
    return SimplicialComplex{vertex_count, {all}};
}

SimplicialComplex nerve(const ArcCollection& collection) {
    if (collection.empty()) throw std::invalid_argument("nerve: empty collection");
    const int n = collection.size();
    std::vector<Simplex> witness_sets;
    witness_sets.reserve(n);
    for (int i = 0; i < n; ++i) {
        Simplex s;
        for (int j = 0; j < n; ++j)
            if (collection.arcs[j].contains(collection.arcs[i].start)) s.push_back(j);
        witness_sets.push_back(std::move(s));
    }
    return make_complex(n, std::move(witness_sets));
}

namespace {

// Bron-Kerbosch with pivoting on adjacency bitmasks.
void bron_kerbosch(uint64_t r, uint64_t p, uint64_t x, const std::vector<uint64_t>& adj,
                   std::vector<uint64_t>& cliques) {
    if (p == 0 && x == 0) {
        cliques.push_back(r);
        return;
    }
    uint64_t px = p | x;
    int pivot = -1, best = -1;
    for (uint64_t m = px; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        int deg = std::popcount(p & adj[v]);
        if (deg > best) {
            best = deg;
            pivot = v;
        }
    }
    uint64_t candidates = p & ~adj[pivot];
    for (uint64_t m = candidates; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        uint64_t bit = uint64_t(1) << v;
        bron_kerbosch(r | bit, p & adj[v], x & adj[v], adj, cliques);
        p &= ~bit;
        x |= bit;
    }
}

Simplex mask_to_simplex(uint64_t m) {
    Simplex s;
    while (m) {
        s.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return s;
}

SimplicialComplex cliques_of_graph(int vertex_count, const std::vector<uint64_t>& adj,
                                   uint64_t present) {
    std::vector<uint64_t> cliques;
    if (present) bron_kerbosch(0, present, 0, adj, cliques);
    std::vector<Simplex> gens;
    gens.reserve(cliques.size());
    for (uint64_t c : cliques) gens.push_back(mask_to_simplex(c));
    return make_complex(vertex_count, std::move(gens));
}

}  // namespace

SimplicialComplex clique_complex(const SimplicialComplex& k) {
    if (k.vertex_count > 64)
        throw std::invalid_argument("clique_complex: more than 64 vertices");
    std::vector<uint64_t> adj(k.vertex_count, 0);
    uint64_t present = 0;
    for (const Simplex& m : k.maximal) {
        for (int v : m) present |= uint64_t(1) << v;
        for (size_t i = 0; i < m.size(); ++i)
            for (size_t j = i + 1; j < m.size(); ++j) {
                adj[m[i]] |= uint64_t(1) << m[j];
                adj[m[j]] |= uint64_t(1) << m[i];
            }
    }
    return cliques_of_graph(k.vertex_count, adj, present);
}

SimplicialComplex nerve_nk(int n, int k) {
    if (n < 1 || k < 0) throw std::invalid_argument("nerve_nk: need n >= 1, k >= 0");
    if (k >= n - 1) return full_simplex(n);
    std::vector<Simplex> gens;
    gens.reserve(n);
    for (int i = 0; i < n; ++i) {
        Simplex s;
        for (int j = 0; j <= k; ++j) s.push_back((i + j) % n);
        std::sort(s.begin(), s.end());
        gens.push_back(std::move(s));
    }
    return make_complex(n, std::move(gens));
}

SimplicialComplex clique_nk(int n, int k) {
    if (n < 1 || k < 0) throw std::invalid_argument("clique_nk: need n >= 1, k >= 0");
    if (k >= n / 2) return full_simplex(n);
    if (n > 64) throw std::invalid_argument("clique_nk: more than 64 vertices");
    std::vector<uint64_t> adj(n, 0);
    uint64_t present = (n == 64) ? ~uint64_t(0) : ((uint64_t(1) << n) - 1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int d = std::min(j - i, n - (j - i));
            if (d >= 1 && d <= k) {
                adj[i] |= uint64_t(1) << j;
                adj[j] |= uint64_t(1) << i;
            }
        }
    return cliques_of_graph(n, adj, present);
}

SimplicialComplex cech(std::span<const Angle> points, const Rational& radius) {
    return nerve(balls(points, radius));
}

SimplicialComplex vr(std::span<const Angle> points, const Rational& radius) {
    return clique_complex(nerve(balls(points, radius / 2)));
}

SimplicialComplex link(const SimplicialComplex& k, int v) {
    if (v < 0 || v >= k.vertex_count) throw std::invalid_argument("link: bad vertex");
    std::vector<Simplex> gens;
    for (const Simplex& m : k.maximal) {
        if (!std::binary_search(m.begin(), m.end(), v)) continue;
        Simplex s;
        for (int u : m)
            if (u != v) s.push_back(u);
        if (!s.empty()) gens.push_back(std::move(s));
    }
    return make_complex(k.vertex_count, std::move(gens));
}

SimplicialComplex induced(const SimplicialComplex& k, std::span<const int> vertices) {
    std::vector<char> keep(k.vertex_count, 0);
    for (int v : vertices) {
        if (v < 0 || v >= k.vertex_count) throw std::invalid_argument("induced: bad vertex");
        keep[v] = 1;
    }
    std::vector<Simplex> gens;
    for (const Simplex& m : k.maximal) {
        Simplex s;
        for (int u : m)
            if (keep[u]) s.push_back(u);
        if (!s.empty()) gens.push_back(std::move(s));
    }
    return make_complex(k.vertex_count, std::move(gens));
}

namespace {

void combinations(const Simplex& pool, int need, size_t from, Simplex& cur,
                  std::set<Simplex>& out) {
    if (need == 0) {
        out.insert(cur);
        return;
    }
    for (size_t i = from; i + need <= pool.size(); ++i) {
        cur.push_back(pool[i]);
        combinations(pool, need - 1, i + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Simplex> faces(const SimplicialComplex& k, int d) {
    if (d < 0 || d > k.dim()) throw std::invalid_argument("faces: dimension out of range");
    std::set<Simplex> out;
    Simplex cur;
    for (const Simplex& m : k.maximal)
        if (static_cast<int>(m.size()) >= d + 1) combinations(m, d + 1, 0, cur, out);
    return {out.begin(), out.end()};
}

std::optional<int> dominated_vertex(const SimplicialComplex& k, int v) {
    if (v < 0 || v >= k.vertex_count) throw std::invalid_argument("dominated_vertex: bad vertex");
    std::vector<const Simplex*> containing;
    for (const Simplex& m : k.maximal)
        if (std::binary_search(m.begin(), m.end(), v)) containing.push_back(&m);
    if (containing.empty()) return std::nullopt;
    for (int cand = 0; cand < k.vertex_count; ++cand) {
        if (cand == v) continue;
        bool apex = true;
        for (const Simplex* m : containing) {
            if (std::binary_search(m->begin(), m->end(), cand)) continue;
            Simplex ext = *m;
            ext.insert(std::upper_bound(ext.begin(), ext.end(), cand), cand);
            if (!k.is_simplex(ext)) {
                apex = false;
                break;
            }
        }
        if (apex) return cand;
    }
    return std::nullopt;
}

bool fits_in_discrete_arc(const Simplex& sigma, int n, int k) {
    if (k >= n - 1) return true;
    // sigma fits in some [i, i+k]_n iff some cyclic gap between consecutive
    // members is at least n - k.
    for (size_t j = 0; j < sigma.size(); ++j) {
        int cur = sigma[j];
        int nxt = sigma[(j + 1) % sigma.size()];
        int gap = (nxt - cur + n) % n;
        if (sigma.size() == 1) gap = n;
        if (gap >= n - k) return true;
    }
    return false;
}

std::optional<std::pair<int, int>> isomorphic_to_nk(const SimplicialComplex& k) {
    const int n = k.vertex_count;
    if (n < 1) return std::nullopt;
    if (static_cast<int>(k.used_vertices().size()) != n) return std::nullopt;

    const auto& mf = k.maximal;
    if (mf.size() == 1 && static_cast<int>(mf[0].size()) == n)
        return std::make_pair(n, n - 1);
    bool all_singletons = std::all_of(mf.begin(), mf.end(),
                                      [](const Simplex& s) { return s.size() == 1; });
    if (all_singletons && static_cast<int>(mf.size()) == n) return std::make_pair(n, 0);

    if (static_cast<int>(mf.size()) != n) return std::nullopt;
    const size_t sz = mf[0].size();
    for (const Simplex& m : mf)
        if (m.size() != sz) return std::nullopt;
    const int kk = static_cast<int>(sz) - 1;
    if (kk < 1 || kk > n - 2) return std::nullopt;
    if (kk == n - 2) {
        // All (n-1)-subsets present <=> boundary of the (n-1)-simplex.
        return static_cast<int>(mf.size()) == n ? std::optional(std::make_pair(n, n - 2))
                                                : std::nullopt;
    }
    std::set<Simplex> family(mf.begin(), mf.end());
    std::vector<int> slot(n, -1);
    std::vector<char> used(n, 0);
    // Anchor: some window realizes mf[0]; rotating labels, pin its vertices
    // to slots 0..kk so the search only branches inside that window.
    std::vector<char> anchor(n, 0);
    for (int v : mf[0]) anchor[v] = 1;
    struct Dfs {
        const SimplicialComplex& complex;
        int kk;
        const std::set<Simplex>& family;
        const std::vector<char>& anchor;
        std::vector<int>& slot;
        std::vector<char>& used;

        bool run(int idx) {
            const int n = complex.vertex_count;
            if (idx == n) {
                for (int i = n - kk; i < n; ++i) {
                    Simplex w;
                    for (int j = 0; j <= kk; ++j) w.push_back(slot[(i + j) % n]);
                    std::sort(w.begin(), w.end());
                    if (!family.count(w)) return false;
                }
                return true;
            }
            for (int v = 0; v < n; ++v) {
                if (used[v]) continue;
                if (idx <= kk && !anchor[v]) continue;
                slot[idx] = v;
                used[v] = 1;
                bool ok = true;
                if (idx >= kk) {
                    Simplex w(slot.begin() + (idx - kk), slot.begin() + idx + 1);
                    std::sort(w.begin(), w.end());
                    ok = family.count(w) != 0;
                }
                if (ok && run(idx + 1)) return true;
                used[v] = 0;
            }
            slot[idx] = -1;
            return false;
        }
    } dfs{k, kk, family, anchor, slot, used};
    if (dfs.run(0)) return std::make_pair(n, kk);
    return std::nullopt;
}

}  // namespace circarc
