#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "circarc/polytope.hpp"

#include <cmath>

#include "doctest.h"

using namespace circarc;

TEST_CASE("facet enumeration") {
    FacetSet square = gale_facets(2, 5);
    CHECK(square.facets.size() == 5);  // the 5-gon's edges
    for (const Simplex& f : square.facets) CHECK(f.size() == 2);

    // n = 2m+1 is the boundary of a simplex.
    CHECK(gale_facets(4, 5).facets.size() == 5);
    CHECK(gale_facets(6, 7).facets.size() == 7);

    // Frozen from the evenness oracle below.
    CHECK(gale_facets(4, 7).facets.size() == 14);
    std::vector<Simplex> brute = gale_facets_by_evenness(4, 7);
    std::sort(brute.begin(), brute.end());
    CHECK(gale_facets(4, 7).facets == brute);

    for (int n = 4; n <= 10; ++n)
        for (int two_m = 2; two_m < n; two_m += 2) {
            std::vector<Simplex> b = gale_facets_by_evenness(two_m, n);
            std::sort(b.begin(), b.end());
            CHECK(gale_facets(two_m, n).facets == b);
        }
    CHECK_THROWS_AS(gale_facets(4, 4), std::invalid_argument);
}

TEST_CASE("trigonometric moment curve sanity") {
    std::vector<double> p0 = moment_curve(4, Rational(0));
    REQUIRE(p0.size() == 4);
    CHECK(p0[0] == doctest::Approx(1.0));
    CHECK(p0[1] == doctest::Approx(0.0));
    CHECK(p0[2] == doctest::Approx(1.0));

    // Points live on a product of unit circles.
    std::vector<double> p = moment_curve(6, Rational(2, 7));
    for (size_t i = 0; i + 1 < p.size(); i += 2)
        CHECK(p[i] * p[i] + p[i + 1] * p[i + 1] == doctest::Approx(1.0));

    // Blockwise rotation by 1/n advances the sample index.
    const int n = 7, two_m = 4;
    for (int i = 0; i < n; ++i) {
        std::vector<double> cur = moment_curve(two_m, Rational(i, n));
        std::vector<double> nxt = moment_curve(two_m, Rational(i + 1, n));
        for (int block = 0; block < two_m / 2; ++block) {
            double angle = 2 * M_PI * (block + 1) / n;
            double c = std::cos(angle), s = std::sin(angle);
            double x = cur[2 * block], y = cur[2 * block + 1];
            CHECK(c * x - s * y == doctest::Approx(nxt[2 * block]).epsilon(1e-9));
            CHECK(s * x + c * y == doctest::Approx(nxt[2 * block + 1]).epsilon(1e-9));
        }
    }
}

TEST_CASE("polytope boundary sits inside the window complex") {
    CHECK(check_lemma_5_8(7, 4));
    CHECK(check_lemma_5_8(8, 5));
    CHECK(check_lemma_5_8(11, 8));
    CHECK_THROWS_AS(check_lemma_5_8(6, 3), std::invalid_argument);  // divisible case
}

TEST_CASE("missing facets are the rotations of delta") {
    std::vector<Simplex> m63 = missing_facets(6, 3);
    REQUIRE(m63.size() == 3);
    CHECK(m63[0] == Simplex{0, 1, 3, 4});

    CHECK(missing_facets(4, 2).size() == 2);

    std::vector<Simplex> m96 = missing_facets(9, 6);
    REQUIRE(m96.size() == 3);
    CHECK(m96[0] == Simplex{0, 1, 3, 4, 6, 7});
}

TEST_CASE("delta boundary cycle") {
    Chain b42 = delta_boundary(4, 2);
    CHECK(b42.dim == 2);
    CHECK(b42.coef.size() == 4);  // boundary of the tetrahedron
    for (const auto& [s, c] : b42.coef) CHECK((c == 1 || c == -1));

    Chain b63 = delta_boundary(6, 3);
    CHECK(b63.dim == 2);
    SimplicialComplex n63 = nerve_nk(6, 3);
    for (const auto& [s, c] : b63.coef) CHECK(n63.is_simplex(s));
    CHECK_FALSE(n63.is_simplex(delta_simplex(6, 3)));
    CHECK_FALSE(is_boundary(n63, b63));

    CHECK_THROWS_AS(delta_boundary(7, 4), std::invalid_argument);
}

TEST_CASE("alpha cycles") {
    Chain a0 = alpha_cycle(6, 3, 0);
    CHECK(a0 == delta_boundary(6, 3));
    CHECK(alpha_cycle(6, 3, 3) == a0);   // period n-k at chain level
    CHECK(alpha_cycle(6, 3, -3) == a0);
    Chain a1 = alpha_cycle(6, 3, 1);
    Chain a2 = alpha_cycle(6, 3, 2);
    CHECK(a0.coef != a1.coef);
    CHECK(a1.coef != a2.coef);
    CHECK(a0.coef != a2.coef);

    SimplicialComplex n63 = nerve_nk(6, 3);
    Chain sum = add_chains(add_chains(a0, a1), a2);
    CHECK(is_boundary(n63, sum));
}

TEST_CASE("even-case dual cocycle") {
    Cochain b63 = beta_cochain_even(6, 3);
    REQUIRE(b63.coef.size() == 2);
    CHECK(b63.coef.count({0, 1, 3}));
    CHECK(b63.coef.count({0, 2, 3}));
    CHECK(is_cocycle(nerve_nk(6, 3), b63));
    CHECK(pair(b63, delta_boundary(6, 3)) == -1);

    // l = 0: the single vertex dual.
    Cochain b30 = beta_cochain_even(3, 0);
    CHECK(b30.coef.size() == 1);
    CHECK(pair(b30, delta_boundary(3, 0)) == -1);
}

TEST_CASE("odd-case admissible cocycle") {
    std::vector<Simplex> adm = admissible_sets(7, 4);
    CHECK(!adm.empty());
    for (const Simplex& q : adm) {
        CHECK(q.size() == 4);
        CHECK(q.front() >= 1);
    }
    Cochain beta = beta_cochain_odd(7, 4);
    CHECK(is_cocycle(nerve_nk(7, 4), beta));
    CHECK(odd_common_simplex(7, 4) == Simplex{2, 3, 5, 6});

    FacetSet fs = gale_facets(4, 7);
    int overlap = 0;
    for (const Simplex& f : fs.facets) overlap += beta.coef.count(f);
    CHECK(overlap == 1);
    CHECK(beta.coef.count(odd_common_simplex(7, 4)) == 1);

    SimplicialComplex boundary = make_complex(7, fs.facets);
    Chain fundamental = generator_of_top_homology(boundary, 3);
    BigInt pairing = pair(beta, fundamental);
    CHECK((pairing == 1 || pairing == -1));
}

TEST_CASE("evaluation matrices") {
    IntMat e63 = evaluation_matrix(6, 3);
    CHECK(e63.rows == 2);
    CHECK(e63.is_identity());

    IntMat e42 = evaluation_matrix(4, 2);
    CHECK(e42.rows == 1);
    CHECK(e42.is_identity());

    IntMat e96 = evaluation_matrix(9, 6);
    CHECK(e96.rows == 3);
    CHECK(e96.is_identity());
}
