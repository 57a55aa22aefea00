#include "circarc/verify.hpp"

#include <chrono>
#include <fstream>
#include <set>
#include <sstream>

#include "circarc/bench.hpp"
#include "circarc/graphs.hpp"
#include "circarc/io.hpp"
#include "circarc/maps.hpp"
#include "circarc/polytope.hpp"

namespace circarc {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Checker {
    CheckResult result;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    long count = 0;

    explicit Checker(std::string name) { result.name = std::move(name); }

    void fail(const std::string& detail) {
        if (result.pass || result.detail.empty()) {
            result.pass = false;
            result.detail = detail;
        }
        failed = true;
    }
    void tick() { ++count; }

    CheckResult done(const std::string& unit) {
        result.seconds = seconds_since(t0);
        if (!failed) {
            result.pass = true;
            result.detail = std::to_string(count) + " " + unit;
        }
        return result;
    }

private:
    bool failed = false;
};

std::string pair_str(int n, int k) {
    return "(n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")";
}

// Does the oracle output look exactly like the claimed homotopy type: free,
// torsion-free, concentrated in one dimension with the right rank?
bool homology_matches(const HomologyGroups& groups, const HomotopyType& h) {
    if (!groups.torsion_free()) return false;
    if (h.is_contractible) return groups.trivial();
    auto conc = groups.concentrated();
    return conc && conc->first == h.dim && conc->second == h.count;
}

std::string homology_str(const HomologyGroups& groups) {
    std::string out;
    for (size_t d = 0; d < groups.groups.size(); ++d) {
        if (groups.groups[d].betti == 0 && groups.groups[d].torsion.empty()) continue;
        if (!out.empty()) out += ", ";
        out += "H" + std::to_string(d) + "=Z^" + std::to_string(groups.groups[d].betti);
        if (!groups.groups[d].torsion.empty()) out += "+torsion";
    }
    return out.empty() ? "trivial" : out;
}

}  // namespace

CheckResult check_table_golden(const std::string& path) {
    Checker c("homotopy-type table matches the golden file");
    std::ifstream in(path);
    if (!in) {
        c.fail("cannot open golden file " + path);
        return c.done("");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    std::string expected = ss.str();
    std::string actual = homotopy_table(18, 12, ComplexVariant::nerve);
    if (actual != expected) {
        // Locate the first differing line for the report.
        std::istringstream ea(expected), aa(actual);
        std::string el, al;
        int line = 1;
        while (std::getline(ea, el) && std::getline(aa, al) && el == al) ++line;
        c.fail("table differs from golden file at line " + std::to_string(line));
    } else {
        for (size_t i = 0; i < 17 * 13; ++i) c.tick();
    }
    return c.done("cells");
}

CheckResult check_oracle_nerve(const VerifyOptions& opt) {
    Checker c("nerve formula equals integer homology oracle");
    for (int n = 2; n <= opt.oracle_n_max; ++n)
        for (int k = 0; k <= n - 1; ++k) {
            HomotopyType h = nerve_homotopy(n, k);
            if (opt.inject_fault && !h.is_contractible && h.dim % 2 == 0)
                h = HomotopyType::wedge(h.dim, h.count + 1);
            SimplicialComplex nk = nerve_nk(n, k);
            HomologyGroups groups = reduced_homology(nk, nk.dim(), opt.caps);
            if (!homology_matches(groups, h)) {
                c.fail(pair_str(n, k) + ": formula " + h.str() + " vs oracle " +
                       homology_str(groups));
                return c.done("");
            }
            c.tick();
        }
    return c.done("cells");
}

CheckResult check_oracle_clique(const VerifyOptions& opt) {
    Checker c("clique formula equals integer homology oracle");
    for (int n = 2; n <= opt.oracle_n_max; ++n)
        for (int k = 0; 2 * k < n; ++k) {
            HomotopyType h = clique_homotopy(n, k);
            SimplicialComplex nk = clique_nk(n, k);
            HomologyGroups groups = reduced_homology(nk, nk.dim(), opt.caps);
            if (!homology_matches(groups, h)) {
                c.fail(pair_str(n, k) + ": formula " + h.str() + " vs oracle " +
                       homology_str(groups));
                return c.done("");
            }
            c.tick();
        }
    return c.done("cells");
}

CheckResult check_recursion() {
    Checker c("suspension recursion agrees with the closed form");
    for (int n = 1; n <= 50; ++n)
        for (int k = 0; k < n; ++k) {
            if (nerve_homotopy(n, k) != nerve_homotopy_by_recursion(n, k)) {
                c.fail(pair_str(n, k) + ": " + nerve_homotopy(n, k).str() + " vs " +
                       nerve_homotopy_by_recursion(n, k).str());
                return c.done("");
            }
            c.tick();
        }
    return c.done("cells");
}

CheckResult check_random_collections(const VerifyOptions& opt) {
    Checker c("random collections: reduction classifies both complexes");
    Rng rng(opt.seed);
    for (int trial = 0; trial < opt.random_count; ++trial) {
        ArcCollection u = random_collection(rng, 8, true);
        std::string tag = "trial " + std::to_string(trial) + " (n=" + std::to_string(u.size()) +
                          ")";
        ReductionResult red = reduce_to_minimal(u);
        if (!verify_reduction(u, red)) {
            c.fail(tag + ": removal log fails replay");
            return c.done("");
        }

        SimplicialComplex nv = nerve(u);
        HomotopyType hn = nerve_homotopy(red.n_prime, red.k_prime);
        HomologyGroups gn = reduced_homology(nv, nv.dim(), opt.caps);
        if (!homology_matches(gn, hn)) {
            c.fail(tag + ": nerve oracle " + homology_str(gn) + " vs formula " + hn.str());
            return c.done("");
        }

        SimplicialComplex cv = clique_complex(nv);
        HomotopyType hc = clique_homotopy(red.n_prime, red.k_prime);
        HomologyGroups gc = reduced_homology(cv, cv.dim(), opt.caps);
        if (!homology_matches(gc, hc)) {
            c.fail(tag + ": clique oracle " + homology_str(gc) + " vs formula " + hc.str());
            return c.done("");
        }

        // Survivors form a minimal complex whenever the window is proper.
        if (red.k_prime <= red.n_prime - 2) {
            ArcCollection sub;
            for (int i : red.kept) sub.arcs.push_back(u.arcs[i]);
            SimplicialComplex sn = nerve(sub);
            for (int v = 0; v < sn.vertex_count; ++v)
                if (dominated_vertex(sn, v)) {
                    c.fail(tag + ": survivor nerve still has a dominated vertex");
                    return c.done("");
                }
        }
        c.tick();
    }
    return c.done("collections");
}

CheckResult check_reduction_scaling(uint64_t seed) {
    Checker c("reduction scaling: linear post-sort work, sort-dominated time");
    BenchReport big = bench_reduction(1000000, seed, 1);
    std::ostringstream detail;
    detail.setf(std::ios::fixed);
    detail.precision(3);
    detail << "1e6 arcs: sort " << big.sort_sec << "s, scan " << big.scan_sec << "s, "
           << big.mutations << " mutations";
    if (big.mutations > 8 * 1000000LL) {
        c.fail(detail.str() + ": mutation budget exceeded");
        return c.done("");
    }
    if (big.scan_sec >= big.sort_sec) {
        c.fail(detail.str() + ": post-sort phase is not sort-dominated");
        return c.done("");
    }
    std::vector<BenchReport> ladder = bench_ladder(15, 20, seed + 1, 3);
    for (size_t i = 1; i < ladder.size(); ++i) {
        double ratio = ladder[i].scan_sec / std::max(1e-9, ladder[i - 1].scan_sec);
        detail << "; 2^" << (15 + i) << " ratio " << ratio;
        if (ratio > 2.5) {
            c.fail(detail.str() + ": post-sort growth above 2.5x per doubling");
            return c.done("");
        }
        c.tick();
    }
    c.tick();
    c.result.detail = detail.str();
    CheckResult out = c.done("steps");
    out.detail = detail.str();
    return out;
}

CheckResult check_generator_suite(const VerifyOptions& opt) {
    Checker c("even-sphere generator suite");
    const std::pair<int, int> cases[] = {{4, 2}, {6, 3}, {6, 4}, {8, 6}, {9, 6}, {10, 8}};
    for (auto [n, k] : cases) {
        std::string tag = pair_str(n, k);
        SimplicialComplex nk = nerve_nk(n, k);
        const int l = k / (n - k);
        Cochain beta = beta_cochain_even(n, k);
        Chain bd = delta_boundary(n, k);
        if (!is_cocycle(nk, beta)) {
            c.fail(tag + ": beta is not a cocycle");
            return c.done("");
        }
        if (pair(beta, bd) != -1) {
            c.fail(tag + ": <beta, boundary delta> != -1");
            return c.done("");
        }
        if (is_boundary(nk, bd)) {
            c.fail(tag + ": boundary of delta must not bound");
            return c.done("");
        }
        try {
            evaluation_matrix(n, k);  // asserts the identity internally
        } catch (const std::exception& e) {
            c.fail(tag + ": " + e.what());
            return c.done("");
        }
        Chain sum;
        sum.dim = bd.dim;
        for (int i = 0; i < n - k; ++i) sum = add_chains(sum, alpha_cycle(n, k, i));
        if (!is_boundary(nk, sum)) {
            c.fail(tag + ": sum of the alpha cycles is not a boundary");
            return c.done("");
        }
        HomologyGroups groups = reduced_homology(nk, nk.dim(), opt.caps);
        if (!homology_matches(groups, HomotopyType::wedge(2 * l, n - k - 1))) {
            c.fail(tag + ": oracle rank mismatch, " + homology_str(groups));
            return c.done("");
        }
        c.tick();
    }
    return c.done("cases");
}

CheckResult check_polytope_suite(const VerifyOptions& opt) {
    Checker c("cyclic polytope suite");
    for (int n = 3; n <= 10; ++n)
        for (int two_m = 2; two_m < n; two_m += 2) {
            std::vector<Simplex> fast = gale_facets(two_m, n).facets;
            std::vector<Simplex> brute = gale_facets_by_evenness(two_m, n);
            std::sort(brute.begin(), brute.end());
            if (fast != brute) {
                c.fail("gale facets differ from evenness enumeration at 2m=" +
                       std::to_string(two_m) + ", n=" + std::to_string(n));
                return c.done("");
            }
            c.tick();
        }

    for (auto [n, k] : {std::pair{7, 4}, {8, 5}, {9, 5}, {11, 8}}) {
        if (!check_lemma_5_8(n, k)) {
            c.fail(pair_str(n, k) + ": polytope boundary not included in the complex");
            return c.done("");
        }
        c.tick();
    }

    for (auto [n, k] : {std::pair{7, 4}, {8, 5}}) {
        std::string tag = pair_str(n, k);
        const int l = k / (n - k);
        SimplicialComplex nk = nerve_nk(n, k);
        Cochain beta = beta_cochain_odd(n, k);
        if (!is_cocycle(nk, beta)) {
            c.fail(tag + ": odd beta is not a cocycle");
            return c.done("");
        }
        FacetSet fs = gale_facets(2 * l + 2, n);
        std::set<Simplex> facet_set(fs.facets.begin(), fs.facets.end());
        std::vector<Simplex> common;
        for (const auto& [s, coeff] : beta.coef)
            if (facet_set.count(s)) common.push_back(s);
        if (common.size() != 1 || common[0] != odd_common_simplex(n, k)) {
            c.fail(tag + ": support/facet overlap is not the unique expected simplex");
            return c.done("");
        }
        SimplicialComplex boundary = make_complex(n, fs.facets);
        Chain fundamental = generator_of_top_homology(boundary, 2 * l + 1);
        for (const Simplex& f : fs.facets) {
            auto it = fundamental.coef.find(f);
            if (it == fundamental.coef.end() || (it->second != 1 && it->second != -1)) {
                c.fail(tag + ": fundamental cycle is not a +-1 pseudomanifold orientation");
                return c.done("");
            }
        }
        BigInt pairing = pair(beta, fundamental);
        if (pairing != 1 && pairing != -1) {
            c.fail(tag + ": <odd beta, fundamental> is not +-1");
            return c.done("");
        }
        std::vector<int> identity(n);
        for (int v = 0; v < n; ++v) identity[v] = v;
        IntMat induced = induced_map_on_homology(boundary, nk, identity, 2 * l + 1);
        if (induced.rows != 1 || induced.cols != 1 ||
            (induced.at(0, 0) != 1 && induced.at(0, 0) != -1)) {
            c.fail(tag + ": inclusion is not a degree +-1 homology isomorphism");
            return c.done("");
        }
        c.tick();
    }

    for (auto [n, k] : {std::pair{4, 2}, {6, 3}, {9, 6}}) {
        std::string tag = pair_str(n, k);
        const int l = k / (n - k);
        std::vector<Simplex> missing;
        try {
            missing = missing_facets(n, k);  // asserts the rotation structure
        } catch (const std::exception& e) {
            c.fail(tag + ": " + e.what());
            return c.done("");
        }
        if (static_cast<int>(missing.size()) != n - k) {
            c.fail(tag + ": expected n-k missing facets");
            return c.done("");
        }
        // Intersection with the polytope boundary is a wedge of n-k-1 spheres.
        FacetSet fs = gale_facets(2 * l + 2, n);
        std::set<Simplex> missing_set(missing.begin(), missing.end());
        std::vector<Simplex> present;
        for (const Simplex& f : fs.facets)
            if (!missing_set.count(f)) present.push_back(f);
        SimplicialComplex inter = make_complex(n, present);
        HomologyGroups groups = reduced_homology(inter, inter.dim(), opt.caps);
        if (!homology_matches(groups, HomotopyType::wedge(2 * l, n - k - 1))) {
            c.fail(tag + ": intersection complex oracle " + homology_str(groups));
            return c.done("");
        }
        c.tick();
    }
    return c.done("checks");
}

CheckResult check_dihedral_suite(const VerifyOptions& opt) {
    Checker c("dihedral symmetry suite");
    for (int n = 4; n <= 8; ++n)
        for (int k = 1; k <= n - 3; ++k) {
            long autcount = automorphism_count(nerve_nk(n, k));
            if (autcount != 2L * n) {
                c.fail(pair_str(n, k) + ": automorphism count " + std::to_string(autcount) +
                       " != " + std::to_string(2 * n));
                return c.done("");
            }
            c.tick();
        }

    for (auto [n, k] : {std::pair{4, 2}, {6, 3}, {6, 4}, {8, 6}, {9, 6}, {10, 8}}) {
        if (!epsilon_delta_identity(n, k)) {
            c.fail(pair_str(n, k) + ": reflected delta chain identity fails");
            return c.done("");
        }
        c.tick();
    }

    for (int n = 2; n <= 9; ++n)
        for (int k = 0; k <= n - 2; ++k) {
            DihedralActionReport rep = dihedral_action_on_homology(n, k, opt.caps);
            if (!rep.rotation_formula_holds || !rep.reflection_formula_holds) {
                c.fail(pair_str(n, k) + ": induced dihedral action formula fails (" +
                       (rep.even_case ? "even" : "odd") + " case)");
                return c.done("");
            }
            c.tick();
        }
    return c.done("checks");
}

CheckResult check_surjection_suite(const VerifyOptions& opt) {
    Checker c("clique-to-nerve surjection suite");
    for (int n = 1; n <= 11; ++n)
        for (int k = 0; n + k <= 11; ++k) {
            std::string tag = pair_str(n, k);
            SimplicialComplex src = clique_nk(n + k, k);
            SimplicialComplex dst = nerve_nk(n, k);
            std::vector<int> table = mod_n_table(n, k);
            if (!is_simplicial(src, dst, table)) {
                c.fail(tag + ": map is not simplicial");
                return c.done("");
            }
            // Every maximal target simplex is the image of a source window.
            std::set<Simplex> images;
            for (int i = 0; i < n + k; ++i) {
                Simplex window;
                for (int j = 0; j <= k; ++j) window.push_back((i + j) % (n + k));
                std::sort(window.begin(), window.end());
                if (!src.is_simplex(window)) continue;
                Simplex image;
                for (int v : window) image.push_back(table[v]);
                std::sort(image.begin(), image.end());
                image.erase(std::unique(image.begin(), image.end()), image.end());
                images.insert(std::move(image));
            }
            for (const Simplex& m : dst.maximal)
                if (!images.count(m) && !(dst.maximal.size() == 1 && k >= n - 1)) {
                    c.fail(tag + ": maximal simplex not hit by a window image");
                    return c.done("");
                }
            for (int d = 0; d <= dst.dim(); ++d)
                for (const Simplex& tau : faces(dst, d))
                    if (!preimage_cone_apex(src, dst, table, tau)) {
                        c.fail(tag + ": a preimage is not a cone");
                        return c.done("");
                    }
            if (k <= n - 2) {
                HomotopyType h = nerve_homotopy(n, k);
                IntMat induced = induced_map_on_homology(src, dst, table, h.dim);
                SnfResult snf = smith_normal_form(induced, false);
                bool iso = induced.rows == h.count && induced.cols == h.count &&
                           snf.rank == induced.rows;
                for (const BigInt& f : snf.invariant_factors)
                    if (f != 1) iso = false;
                if (!iso) {
                    c.fail(tag + ": induced homology map is not an isomorphism");
                    return c.done("");
                }
            }
            c.tick();
        }
    return c.done("pairs");
}

CheckResult check_lovasz_suite() {
    Checker c("chromatic bound suite");
    for (int n = 2; n <= 20; ++n)
        for (int d = 1; 2 * d <= n; ++d) {
            std::string tag = "(n=" + std::to_string(n) + ", d=" + std::to_string(d) + ")";
            LovaszReport rep;
            try {
                rep = lovasz_report(n, d);  // asserts the fractional gap rule
            } catch (const std::exception& e) {
                c.fail(tag + ": " + e.what());
                return c.done("");
            }
            if (rep.gap != 0 && rep.gap != 1) {
                c.fail(tag + ": gap " + std::to_string(rep.gap));
                return c.done("");
            }
            if (n <= 10) {
                SimplicialComplex nb = neighborhood_complex(circular_complete(n, d));
                SimplicialComplex nk = nerve_nk(n, n - 2 * d);
                if (nb.maximal != nk.maximal) {
                    c.fail(tag + ": neighborhood complex differs from the window complex");
                    return c.done("");
                }
            }
            if (n <= 8) {
                int exact = exact_chromatic_number(circular_complete(n, d));
                if (exact != rep.chi) {
                    c.fail(tag + ": exact coloring " + std::to_string(exact) +
                           " != ceil(n/d) " + std::to_string(rep.chi));
                    return c.done("");
                }
            }
            c.tick();
        }
    return c.done("pairs");
}

std::vector<CheckResult> run_verification(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    if (!opt.golden_table_path.empty()) out.push_back(check_table_golden(opt.golden_table_path));
    out.push_back(check_oracle_nerve(opt));
    out.push_back(check_oracle_clique(opt));
    out.push_back(check_recursion());
    out.push_back(check_random_collections(opt));
    if (opt.include_bench) out.push_back(check_reduction_scaling(opt.seed));
    out.push_back(check_generator_suite(opt));
    out.push_back(check_polytope_suite(opt));
    out.push_back(check_dihedral_suite(opt));
    out.push_back(check_surjection_suite(opt));
    out.push_back(check_lovasz_suite());
    return out;
}

}  // namespace circarc
