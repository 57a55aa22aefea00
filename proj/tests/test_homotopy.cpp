#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "circarc/homotopy.hpp"

#include "circarc/bench.hpp"
#include "circarc/homology.hpp"
#include "doctest.h"

using namespace circarc;

namespace {

bool oracle_matches(const SimplicialComplex& k, const HomotopyType& h) {
    HomologyGroups g = reduced_homology(k, k.dim());
    if (!g.torsion_free()) return false;
    if (h.is_contractible) return g.trivial();
    auto conc = g.concentrated();
    return conc && conc->first == h.dim && conc->second == h.count;
}

}  // namespace

TEST_CASE("nerve classifier closed form") {
    CHECK(nerve_homotopy(6, 3) == HomotopyType::wedge(2, 2));
    CHECK(nerve_homotopy(12, 8) == HomotopyType::wedge(4, 3));
    CHECK(nerve_homotopy(12, 9) == HomotopyType::wedge(6, 2));
    CHECK(nerve_homotopy(7, 4) == HomotopyType::wedge(3, 1));
    CHECK(nerve_homotopy(9, 0) == HomotopyType::wedge(0, 8));
    CHECK(nerve_homotopy(9, 8).is_contractible);
    CHECK(nerve_homotopy(9, 20).is_contractible);
    CHECK(nerve_homotopy(1, 0).is_contractible);
    CHECK_THROWS_AS(nerve_homotopy(0, 0), std::invalid_argument);

    // Odd-dimensional wedges always have a single summand.
    for (int n = 1; n <= 40; ++n)
        for (int k = 0; k < n; ++k) {
            HomotopyType h = nerve_homotopy(n, k);
            if (!h.is_contractible && h.dim % 2 == 1) CHECK(h.count == 1);
        }
}

TEST_CASE("clique classifier closed form") {
    CHECK(clique_homotopy(9, 3) == HomotopyType::wedge(2, 2));
    CHECK(clique_homotopy(7, 2) == HomotopyType::wedge(1, 1));
    CHECK(oracle_matches(clique_nk(7, 2), clique_homotopy(7, 2)));
    for (int n = 2; n <= 9; ++n) CHECK(clique_homotopy(n, n / 2).is_contractible);
    // Complete-graph boundary case normalizes to a point.
    CHECK(clique_homotopy(7, 3).is_contractible);
    for (int n = 1; n <= 40; ++n)
        for (int k = 0; 2 * k < n; ++k) {
            HomotopyType h = clique_homotopy(n, k);
            if (!h.is_contractible && h.dim % 2 == 1) CHECK(h.count == 1);
        }
}

TEST_CASE("suspension recursion") {
    CHECK(nerve_homotopy_by_recursion(6, 3) == HomotopyType::wedge(2, 2));
    CHECK(nerve_homotopy_by_recursion(5, 3) == HomotopyType::wedge(3, 1));
    for (int n = 1; n <= 50; ++n)
        for (int k = 0; k < n; ++k)
            CHECK(nerve_homotopy_by_recursion(n, k) == nerve_homotopy(n, k));
}

TEST_CASE("connectivity") {
    CHECK(connectivity(HomotopyType::wedge(1, 1)) == 0);
    CHECK(connectivity(HomotopyType::wedge(2, 2)) == 1);
    CHECK(connectivity(HomotopyType::wedge(0, 3)) == -1);
    CHECK_FALSE(connectivity(HomotopyType::contractible()).has_value());
}

TEST_CASE("formatting") {
    CHECK(HomotopyType::contractible().str() == "*");
    CHECK(HomotopyType::wedge(3, 1).str() == "S^3");
    CHECK(HomotopyType::wedge(2, 2).str() == "vee^2 S^2");
    CHECK(HomotopyType::wedge(5, 0).is_contractible);
}

TEST_CASE("collection classification") {
    auto [h63, red63] = collection_homotopy(evenly_spaced(6, 3), ComplexVariant::nerve);
    CHECK(h63 == HomotopyType::wedge(2, 2));
    CHECK(red63.n_prime == 6);
    CHECK(red63.k_prime == 3);

    std::vector<Angle> pts;
    for (int i = 0; i < 9; ++i) pts.emplace_back(Rational(i, 9));
    ArcCollection big = balls(pts, Rational(1, 2));
    auto [hw, redw] = collection_homotopy(big, ComplexVariant::nerve);
    CHECK(hw.is_contractible);
    CHECK(redw.n_prime == 1);

    Rng rng(42);
    for (int t = 0; t < 30; ++t) {
        ArcCollection u = random_collection(rng, 6, true);
        auto [hn, red] = collection_homotopy(u, ComplexVariant::nerve);
        CHECK(oracle_matches(nerve(u), hn));
        auto [hc, redc] = collection_homotopy(u, ComplexVariant::clique);
        CHECK(oracle_matches(clique_complex(nerve(u)), hc));
    }
}
