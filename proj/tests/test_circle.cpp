#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "circarc/bench.hpp"
#include "circarc/circle.hpp"
#include "circarc/complex.hpp"
#include "doctest.h"

using namespace circarc;

namespace {

Rational rat(const char* s) { return parse_rational(s); }
Angle ang(const char* s) { return Angle(rat(s)); }

// Test-side oracle: membership decided by dense sampling at all endpoint
// positions plus a fine uniform grid.
bool intersect_by_sampling(const Arc& a, const Arc& b) {
    std::vector<Rational> probes;
    probes.push_back(a.start.value());
    probes.push_back(a.end().value());
    probes.push_back(b.start.value());
    probes.push_back(b.end().value());
    for (int i = 0; i < 240; ++i) probes.emplace_back(i, 240);
    for (const Rational& p : probes)
        if (a.contains(Angle(p)) && b.contains(Angle(p))) return true;
    return false;
}

// The nerve implied by the perturbed event order: arc j spans the cyclic key
// interval between its opening and closing keys.
SimplicialComplex perturbed_nerve(const ArcCollection& u) {
    const int n = u.size();
    std::vector<Simplex> witness;
    for (int i = 0; i < n; ++i) {
        EventKey open_i = event_key(u, i, EventKind::opening);
        Simplex s;
        for (int j = 0; j < n; ++j) {
            if (u.arcs[j].whole_circle()) {
                s.push_back(j);
                continue;
            }
            EventKey lo = event_key(u, j, EventKind::opening);
            EventKey hi = event_key(u, j, EventKind::closing);
            if (key_in_closed(open_i, lo, hi)) s.push_back(j);
        }
        witness.push_back(std::move(s));
    }
    return make_complex(n, std::move(witness));
}

}  // namespace

TEST_CASE("rational parsing is exact") {
    CHECK(rat("1/2") == Rational(1, 2));
    CHECK(rat("0.25") == Rational(1, 4));
    CHECK(rat("-0.5") == Rational(-1, 2));
    CHECK(rat("3") == Rational(3));
    CHECK(rat("2.125") == Rational(17, 8));
    CHECK(rational_to_string(rat("4/8")) == "1/2");
    CHECK(rational_to_string(rat("2")) == "2");
    CHECK_THROWS_AS(rat("1/0"), ParseError);
    CHECK_THROWS_AS(rat("abc"), ParseError);
    CHECK_THROWS_AS(rat(""), ParseError);
    CHECK_THROWS_AS(rat("1//2"), ParseError);
    CHECK(mod_one(rat("-1/4")) == Rational(3, 4));
    CHECK(mod_one(rat("7/3")) == Rational(1, 3));
}

TEST_CASE("arc containment with closed endpoints and wraparound") {
    Arc half = Arc::from_start_length(ang("0"), rat("1/2"));
    CHECK(half.contains(ang("1/2")));
    CHECK(half.contains(ang("0")));
    CHECK_FALSE(half.contains(ang("3/4")));

    Arc wrap = Arc::from_start_length(ang("3/4"), rat("1/2"));
    CHECK(wrap.contains(ang("1/8")));
    CHECK(wrap.contains(ang("1/4")));
    CHECK_FALSE(wrap.contains(ang("1/2")));

    Arc point = Arc::from_start_length(ang("0"), rat("0"));
    CHECK_FALSE(point.contains(ang("1/3")));
    CHECK(point.contains(ang("0")));

    Arc whole = Arc::from_start_length(ang("1/3"), rat("5/4"));
    CHECK(whole.whole_circle());
    CHECK(whole.start == ang("0"));
    CHECK(whole.contains(ang("9/10")));
}

TEST_CASE("cyclic order predicate") {
    std::vector<Angle> inc = {ang("0"), ang("1/3"), ang("2/3")};
    CHECK(cyclic_ordered(inc));
    CHECK(cyclic_ordered(inc, true));

    std::vector<Angle> dec = {ang("0"), ang("2/3"), ang("1/3")};
    CHECK_FALSE(cyclic_ordered(dec));

    std::vector<Angle> eq = {ang("1/2"), ang("1/2"), ang("3/4")};
    CHECK(cyclic_ordered(eq));
    CHECK_FALSE(cyclic_ordered(eq, true));

    std::vector<Angle> one = {ang("0")};
    CHECK_THROWS_AS(cyclic_ordered(one), std::invalid_argument);

    // Rotations keep the order, reversal breaks it (3+ distinct points).
    std::vector<Angle> rot = {ang("1/3"), ang("2/3"), ang("0")};
    CHECK(cyclic_ordered(rot, true));
}

TEST_CASE("common_point witness rule") {
    ArcCollection u63 = evenly_spaced(6, 3);
    std::vector<int> pair06 = {0, 3};
    auto w = common_point(u63, pair06);
    REQUIRE(w.has_value());
    CHECK(u63.arcs[0].contains(*w));
    CHECK(u63.arcs[3].contains(*w));

    // Brute-force oracle over all member start points: no witness exists.
    std::vector<int> five = {0, 1, 2, 3, 4};
    bool any = false;
    for (int i = 0; i < 6; ++i) {
        bool all = true;
        for (int j : five)
            if (!u63.arcs[j].contains(u63.arcs[i].start)) all = false;
        any = any || all;
    }
    CHECK_FALSE(any);
    CHECK_FALSE(common_point(u63, five).has_value());

    std::vector<int> solo = {4};
    CHECK(common_point(u63, solo) == u63.arcs[4].start);

    std::vector<int> empty;
    CHECK_THROWS_AS(common_point(u63, empty), std::invalid_argument);
    std::vector<int> bad = {9};
    CHECK_THROWS_AS(common_point(u63, bad), std::out_of_range);
}

TEST_CASE("evenly spaced arc family") {
    ArcCollection u = evenly_spaced(6, 3);
    REQUIRE(u.size() == 6);
    for (int i = 0; i < 6; ++i) {
        CHECK(u.arcs[i].start == Angle(Rational(i, 6)));
        CHECK(u.arcs[i].length == Rational(1, 2));
    }
    ArcCollection pts = evenly_spaced(5, 0);
    for (const Arc& a : pts.arcs) CHECK(a.point());

    ArcCollection quarters = evenly_spaced(4, 1);
    CHECK(quarters.arcs[3].end() == ang("0"));
    CHECK_THROWS_AS(evenly_spaced(4, 4), std::invalid_argument);
}

TEST_CASE("metric balls") {
    std::vector<Angle> two = {ang("0"), ang("1/4")};
    ArcCollection u = balls(two, rat("1/8"));
    CHECK(u.arcs[0].start == ang("7/8"));
    CHECK(u.arcs[0].length == rat("1/4"));
    CHECK(u.arcs[1].start == ang("1/8"));
    // They intersect exactly in the single point 1/8.
    CHECK(intersect(u.arcs[0], u.arcs[1]));
    std::vector<int> both = {0, 1};
    CHECK(common_point(u, both) == ang("1/8"));

    ArcCollection whole = balls(two, rat("1/2"));
    for (const Arc& a : whole.arcs) CHECK(a.whole_circle());

    Rng rng(7);
    for (int t = 0; t < 50; ++t) {
        Rational r(rng_below(rng, 40), 40);
        std::vector<Angle> pts = {Angle(Rational(rng_below(rng, 30), 30))};
        Arc a = balls(pts, r).arcs[0];
        CHECK(a.length == std::min(Rational(2 * r), Rational(1)));
    }
}

TEST_CASE("event keys order openings before closings at ties") {
    ArcCollection u63 = evenly_spaced(6, 3);
    EventKey open3 = event_key(u63, 3, EventKind::opening);
    EventKey close0 = event_key(u63, 0, EventKind::closing);
    CHECK(open3.position == ang("1/2"));
    CHECK(close0.position == ang("1/2"));
    CHECK(open3 < close0);

    ArcCollection pt;
    pt.arcs.push_back(Arc::from_start_length(ang("1/3"), rat("0")));
    CHECK(event_key(pt, 0, EventKind::opening) < event_key(pt, 0, EventKind::closing));

    CHECK(sorted_events(u63).size() == 12);
}

TEST_CASE("pairwise intersection matches the sampling oracle") {
    Rng rng(99);
    for (int t = 0; t < 300; ++t) {
        Arc a = Arc::from_start_length(Angle(Rational(rng_below(rng, 24), 24)),
                                       Rational(rng_below(rng, 30), 24));
        Arc b = Arc::from_start_length(Angle(Rational(rng_below(rng, 24), 24)),
                                       Rational(rng_below(rng, 30), 24));
        bool sampled = intersect_by_sampling(a, b);
        CHECK(intersect(a, b) == sampled);
        if (intersect(a, b)) {
            ArcCollection u;
            u.arcs = {a, b};
            std::vector<int> both = {0, 1};
            auto w = common_point(u, both);
            REQUIRE(w.has_value());
            CHECK(a.contains(*w));
            CHECK(b.contains(*w));
        }
    }
}

TEST_CASE("perturbed event order preserves the nerve") {
    for (int n = 2; n <= 8; ++n)
        for (int k = 0; k < n; ++k) {
            ArcCollection u = evenly_spaced(n, k);
            CHECK(perturbed_nerve(u) == nerve(u));
        }

    Rng rng(1234);
    for (int t = 0; t < 200; ++t) {
        ArcCollection u = random_collection(rng, 7, true);
        CHECK(perturbed_nerve(u) == nerve(u));
    }
}
