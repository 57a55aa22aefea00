#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "circarc/reduce.hpp"

#include "circarc/bench.hpp"
#include "circarc/complex.hpp"
#include "circarc/homology.hpp"
#include "circarc/homotopy.hpp"
#include "doctest.h"

using namespace circarc;

namespace {

Arc arc(const char* start, const char* length) {
    return Arc::from_start_length(Angle(parse_rational(start)), parse_rational(length));
}

// Six arcs mirroring the worked reduction example: arc 0 sits inside arc 1,
// arc 3 is absorbed by its successor 4, and the four survivors form one ring.
ArcCollection ring_of_six() {
    ArcCollection u;
    u.arcs = {
        arc("1/20", "1/4"),    // 0: contained in 1
        arc("0", "7/20"),      // 1
        arc("3/10", "3/10"),   // 2
        arc("11/20", "1/4"),   // 3: dominated by 4, case (b)
        arc("29/50", "37/100"),// 4
        arc("9/10", "1/5"),    // 5
    };
    return u;
}

}  // namespace

TEST_CASE("domination witnesses") {
    ArcCollection eq;
    eq.arcs = {arc("1/4", "1/4"), arc("1/4", "1/4")};
    CHECK(lemma_domination_case(eq, 0, 1) == LemmaCase::a);
    CHECK(lemma_domination_case(eq, 1, 0) == LemmaCase::a);

    ArcCollection six = ring_of_six();
    CHECK(lemma_domination_case(six, 0, 1) == LemmaCase::a);
    CHECK(lemma_domination_case(six, 3, 4) == LemmaCase::b);

    // Mirrored configuration exercises case (c): arc 1 covers 0's tail.
    ArcCollection tail;
    tail.arcs = {arc("0", "3/10"), arc("1/10", "3/10"), arc("6/10", "1/10")};
    CHECK(lemma_domination_case(tail, 1, 0) == LemmaCase::c);

    // No window vertex is dominated.
    for (int n = 3; n <= 8; ++n)
        for (int k = 1; k <= n - 2; ++k) {
            ArcCollection u = evenly_spaced(n, k);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (i != j) CHECK_FALSE(lemma_domination_case(u, i, j).has_value());
        }

    CHECK_THROWS_AS(lemma_domination_case(ring_of_six(), 0, 0), std::invalid_argument);
}

TEST_CASE("containment elimination") {
    ArcCollection with_whole;
    with_whole.arcs = {arc("1/4", "1/4"), arc("0", "1"), arc("1/2", "2")};
    CHECK(remove_contained(with_whole) == std::vector<int>{1});

    for (int n = 2; n <= 8; ++n)
        for (int k = 0; k < n; ++k) {
            ArcCollection u = evenly_spaced(n, k);
            std::vector<int> all(n);
            for (int i = 0; i < n; ++i) all[i] = i;
            CHECK(remove_contained(u) == all);
        }

    ArcCollection nested;
    nested.arcs = {arc("0", "1/2"), arc("1/8", "1/4"), arc("1/4", "1/16")};
    CHECK(remove_contained(nested) == std::vector<int>{0});

    ArcCollection dupes;
    dupes.arcs = {arc("1/3", "1/6"), arc("1/3", "1/6"), arc("1/3", "1/6")};
    CHECK(remove_contained(dupes) == std::vector<int>{0});
}

TEST_CASE("reduction of the six-arc ring") {
    ArcCollection six = ring_of_six();
    ReductionResult red = reduce_to_minimal(six);
    CHECK(red.n_prime == 4);
    CHECK(red.k_prime == 1);
    CHECK(red.kept == std::vector<int>{1, 2, 4, 5});
    REQUIRE(red.log.size() == 2);
    CHECK(red.log[0].removed == 0);
    CHECK(red.log[0].dominator == 1);
    CHECK(red.log[0].how == LemmaCase::a);
    CHECK(red.log[1].removed == 3);
    CHECK(red.log[1].dominator == 4);
    CHECK(red.log[1].how == LemmaCase::b);
    CHECK(verify_reduction(six, red));

    ArcCollection survivors;
    for (int i : red.kept) survivors.arcs.push_back(six.arcs[i]);
    CHECK(isomorphic_to_nk(nerve(survivors)) == std::make_pair(4, 1));
}

TEST_CASE("reduction fixed points and degenerate families") {
    for (int n = 2; n <= 8; ++n)
        for (int k = 0; k <= n - 2; ++k) {
            ReductionResult red = reduce_to_minimal(evenly_spaced(n, k));
            CHECK(red.n_prime == n);
            CHECK(red.k_prime == k);
            CHECK(red.log.empty());
        }

    // Full-length windows stay a simplex: offset reads n-1.
    ReductionResult full = reduce_to_minimal(evenly_spaced(5, 4));
    CHECK(full.n_prime == 5);
    CHECK(full.k_prime == 4);
    CHECK(nerve_homotopy(full.n_prime, full.k_prime).is_contractible);

    ArcCollection disjoint;
    for (int i = 0; i < 4; ++i) disjoint.arcs.push_back(Arc::from_start_length(
        Angle(Rational(i, 4)), Rational(1, 16)));
    ReductionResult d = reduce_to_minimal(disjoint);
    CHECK(d.n_prime == 4);
    CHECK(d.k_prime == 0);

    ArcCollection single;
    single.arcs = {arc("1/3", "0")};
    ReductionResult s = reduce_to_minimal(single);
    CHECK(s.n_prime == 1);
    CHECK(s.k_prime == 0);

    ArcCollection empty;
    CHECK_THROWS_AS(reduce_to_minimal(empty), std::invalid_argument);

    // Two arcs overlapping on both sides cover the circle; the event list
    // already alternates, so the full 1-simplex survives. The classifier
    // still reads it as contractible, matching the nerve.
    ArcCollection covering;
    covering.arcs = {arc("0", "3/5"), arc("1/2", "3/5")};
    ReductionResult c = reduce_to_minimal(covering);
    CHECK(c.n_prime == 2);
    CHECK(c.k_prime == 1);
    CHECK(nerve_homotopy(2, 1).is_contractible);
    CHECK(reduced_homology(nerve(covering), 1).trivial());
}

TEST_CASE("verify_reduction rejects fabricated logs") {
    ArcCollection six = ring_of_six();
    ReductionResult red = reduce_to_minimal(six);

    ReductionResult bogus = red;
    bogus.log.insert(bogus.log.begin(), Removal{2, 5, LemmaCase::a});
    CHECK_FALSE(verify_reduction(six, bogus));

    ReductionResult wrong_case = red;
    wrong_case.log[1].how = LemmaCase::c;
    CHECK_FALSE(verify_reduction(six, wrong_case));

    ReductionResult wrong_k = red;
    wrong_k.k_prime = 2;
    CHECK_FALSE(verify_reduction(six, wrong_k));
}

TEST_CASE("randomized replay and oracle agreement") {
    Rng rng(2024);
    for (int t = 0; t < 200; ++t) {
        ArcCollection u = random_collection(rng, 64, true);
        ReductionResult red = reduce_to_minimal(u);
        CHECK(verify_reduction(u, red));
    }

    Rng rng2(77);
    for (int t = 0; t < 20; ++t) {
        ArcCollection u = random_collection(rng2, 8, true);
        ReductionResult red = reduce_to_minimal(u);
        SimplicialComplex left = nerve(u);
        SimplicialComplex right = nerve_nk(red.n_prime, red.k_prime);
        HomologyGroups gl = reduced_homology(left, left.dim());
        HomologyGroups gr = reduced_homology(right, right.dim());
        for (size_t d = 0; d < std::max(gl.groups.size(), gr.groups.size()); ++d) {
            long bl = d < gl.groups.size() ? gl.groups[d].betti : 0;
            long br = d < gr.groups.size() ? gr.groups[d].betti : 0;
            CHECK(bl == br);
        }
        SimplicialComplex cl = clique_complex(left);
        SimplicialComplex cr = clique_nk(red.n_prime, red.k_prime);
        HomologyGroups gcl = reduced_homology(cl, cl.dim());
        HomologyGroups gcr = reduced_homology(cr, cr.dim());
        for (size_t d = 0; d < std::max(gcl.groups.size(), gcr.groups.size()); ++d) {
            long bl = d < gcl.groups.size() ? gcl.groups[d].betti : 0;
            long br = d < gcr.groups.size() ? gcr.groups[d].betti : 0;
            CHECK(bl == br);
        }
    }
}

TEST_CASE("mutation budget stays linear") {
    ReduceStats stats;
    Rng rng(5);
    ArcCollection u = random_arcs_bulk(rng, 20000);
    reduce_to_minimal(u, &stats);
    CHECK(stats.mutations <= 8 * 20000);
    CHECK(stats.mutations > 0);
}
