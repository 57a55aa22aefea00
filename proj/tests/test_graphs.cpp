#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "circarc/graphs.hpp"

#include "doctest.h"

using namespace circarc;

namespace {

int degree(const Graph& g, int v) {
    int d = 0;
    for (int u = 0; u < g.n; ++u) d += g.adjacent(v, u);
    return d;
}

}  // namespace

TEST_CASE("circular complete graphs") {
    Graph k5 = circular_complete(5, 1);
    for (int v = 0; v < 5; ++v) CHECK(degree(k5, v) == 4);

    Graph c5 = circular_complete(5, 2);
    for (int v = 0; v < 5; ++v) CHECK(degree(c5, v) == 2);
    CHECK(c5.adjacent(0, 2));
    CHECK_FALSE(c5.adjacent(0, 1));

    Graph g62 = circular_complete(6, 2);
    for (int v = 0; v < 6; ++v) CHECK(degree(g62, v) == 3);

    CHECK_THROWS_AS(circular_complete(3, 2), std::invalid_argument);
}

TEST_CASE("neighborhood complexes are window complexes") {
    // Complete graph: neighborhoods are the coordinate-omitting sets.
    CHECK(neighborhood_complex(circular_complete(5, 1)).maximal == nerve_nk(5, 3).maximal);
    // The 5-cycle gives the 5-cycle complex.
    CHECK(neighborhood_complex(circular_complete(5, 2)).maximal == nerve_nk(5, 1).maximal);

    for (int n = 2; n <= 10; ++n)
        for (int d = 1; 2 * d <= n; ++d)
            CHECK(neighborhood_complex(circular_complete(n, d)).maximal ==
                  nerve_nk(n, n - 2 * d).maximal);
}

TEST_CASE("chromatic numbers") {
    CHECK(chi_circular(5, 2) == 3);
    CHECK(chi_circular(6, 3) == 2);
    CHECK(chi_circular(7, 2) == 4);

    for (int n = 2; n <= 8; ++n)
        for (int d = 1; 2 * d <= n; ++d)
            CHECK(exact_chromatic_number(circular_complete(n, d)) == chi_circular(n, d));
}

TEST_CASE("bound gap classification") {
    // n = 2dq: sharp.
    LovaszReport r82 = lovasz_report(8, 2);
    CHECK(r82.gap == 0);
    CHECK(r82.chi == 4);

    // 0 < r <= d: sharp.
    LovaszReport r52 = lovasz_report(5, 2);
    CHECK(r52.chi == 3);
    CHECK(r52.bound == 3);
    CHECK(r52.gap == 0);

    // d < r < 2d: off by one.
    LovaszReport r72 = lovasz_report(7, 2);
    CHECK(r72.chi == 4);
    CHECK(r72.bound == 3);
    CHECK(r72.gap == 1);

    for (int n = 2; n <= 20; ++n)
        for (int d = 1; 2 * d <= n; ++d) {
            LovaszReport rep = lovasz_report(n, d);
            CHECK((rep.gap == 0 || rep.gap == 1));
            bool fractional_high = rep.fractional > Rational(1, 2);
            CHECK(rep.gap == (fractional_high ? 1 : 0));
        }
}
