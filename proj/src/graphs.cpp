#include "circarc/graphs.hpp"

#include <algorithm>
#include <stdexcept>

namespace circarc {

void Graph::add_edge(int i, int j) {
    if (i == j) throw std::invalid_argument("add_edge: loop");
    adj[i] |= uint64_t(1) << j;
    adj[j] |= uint64_t(1) << i;
}

Graph circular_complete(int n, int d) {
    if (d < 1 || n < 2 * d) throw std::invalid_argument("circular_complete: need n >= 2d >= 2");
    if (n > 64) throw std::invalid_argument("circular_complete: more than 64 vertices");
    Graph g{n, std::vector<uint64_t>(n, 0)};
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (j - i >= d && j - i <= n - d) g.add_edge(i, j);
    return g;
}

SimplicialComplex neighborhood_complex(const Graph& g) {
    std::vector<Simplex> gens;
    for (int v = 0; v < g.n; ++v) {
        Simplex nb;
        for (int u = 0; u < g.n; ++u)
            if (g.adjacent(v, u)) nb.push_back(u);
        if (!nb.empty()) gens.push_back(std::move(nb));
    }
    return make_complex(g.n, std::move(gens));
}

int chi_circular(int n, int d) {
    if (d < 1 || n < 2 * d) throw std::invalid_argument("chi_circular: need n >= 2d >= 2");
    return (n + d - 1) / d;
}

namespace {

bool colorable(const Graph& g, int colors) {
    std::vector<int> color(g.n, -1);
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == g.n) return true;
        int used_cap = 0;
        for (int u = 0; u < v; ++u) used_cap = std::max(used_cap, color[u] + 1);
        // Trying colors beyond the first unused one only permutes classes.
        int limit = std::min(colors, used_cap + 1);
        for (int c = 0; c < limit; ++c) {
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (color[u] == c && g.adjacent(u, v)) ok = false;
            if (!ok) continue;
            color[v] = c;
            if (self(self, v + 1)) return true;
            color[v] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

}  // namespace

int exact_chromatic_number(const Graph& g) {
    if (g.n > 12) throw std::invalid_argument("exact_chromatic_number: graph too large");
    for (int c = 1; c <= g.n; ++c)
        if (colorable(g, c)) return c;
    return g.n;
}

LovaszReport lovasz_report(int n, int d) {
    if (d < 1 || n < 2 * d) throw std::invalid_argument("lovasz_report: need n >= 2d >= 2");
    LovaszReport rep;
    rep.n = n;
    rep.d = d;
    rep.chi = chi_circular(n, d);
    HomotopyType h = nerve_homotopy(n, n - 2 * d);
    auto conn = connectivity(h);
    CIRCARC_CHECK(conn.has_value(), "neighborhood complex must not be contractible");
    rep.bound = *conn + 3;
    rep.gap = rep.chi - rep.bound;
    rep.fractional = mod_one(Rational(n, 2 * d));
    int r = n % (2 * d);
    bool expect_gap = r > d;  // d < (n mod 2d) < 2d
    CIRCARC_CHECK(rep.gap == (expect_gap ? 1 : 0), "gap does not match the fractional rule");
    return rep;
}

}  // namespace circarc
