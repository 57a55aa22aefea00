#include "circarc/bench.hpp"

#include <algorithm>

namespace circarc {

uint64_t rng_below(Rng& rng, uint64_t bound) { return bound == 0 ? 0 : rng() % bound; }

namespace {

Rational random_fraction(Rng& rng) {
    // Small denominators on purpose: collisions between endpoints are the
    // interesting regime for the perturbation handling.
    static const int dens[] = {2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 16, 24};
    int den = dens[rng_below(rng, std::size(dens))];
    return Rational(rng_below(rng, den), den);
}

}  // namespace

ArcCollection random_collection(Rng& rng, int max_n, bool force_coincidences) {
    int n = 1 + static_cast<int>(rng_below(rng, max_n));
    ArcCollection u;
    std::vector<Rational> endpoint_pool;
    for (int i = 0; i < n; ++i) {
        Rational start;
        if (force_coincidences && !endpoint_pool.empty() && rng_below(rng, 100) < 35)
            start = endpoint_pool[rng_below(rng, endpoint_pool.size())];
        else
            start = random_fraction(rng);

        Rational length;
        uint64_t coin = rng_below(rng, 100);
        if (coin < 8) {
            length = 0;  // point arc
        } else if (coin < 11) {
            length = 1;  // whole circle
        } else if (force_coincidences && !endpoint_pool.empty() && coin < 40) {
            Rational end = endpoint_pool[rng_below(rng, endpoint_pool.size())];
            length = mod_one(end - start);
        } else {
            length = random_fraction(rng);
        }
        Arc a = Arc::from_start_length(Angle(start), length);
        endpoint_pool.push_back(a.start.value());
        endpoint_pool.push_back(a.end().value());
        u.arcs.push_back(a);
    }
    return u;
}

ArcCollection random_arcs_bulk(Rng& rng, size_t count) {
    const uint64_t den = uint64_t(1) << 20;
    ArcCollection u;
    u.arcs.reserve(count);
    for (size_t i = 0; i < count; ++i) {
        Rational start(rng_below(rng, den), den);
        Rational length(rng_below(rng, den), 2 * den);  // lengths in [0, 1/2)
        u.arcs.push_back(Arc::from_start_length(Angle(start), length));
    }
    return u;
}

BenchReport bench_reduction(size_t count, uint64_t seed, int repeats) {
    Rng rng(seed);
    ArcCollection u = random_arcs_bulk(rng, count);
    BenchReport rep;
    rep.count = count;
    bool first = true;
    for (int r = 0; r < std::max(1, repeats); ++r) {
        ReduceStats stats;
        ReductionResult res = reduce_to_minimal(u, &stats);
        double sort_sec = stats.sort_ns * 1e-9;
        double scan_sec = stats.scan_ns * 1e-9;
        if (first || sort_sec < rep.sort_sec) rep.sort_sec = sort_sec;
        if (first || scan_sec < rep.scan_sec) rep.scan_sec = scan_sec;
        rep.mutations = stats.mutations;
        rep.n_prime = res.n_prime;
        rep.k_prime = res.k_prime;
        first = false;
    }
    return rep;
}

std::vector<BenchReport> bench_ladder(int log2_min, int log2_max, uint64_t seed, int repeats) {
    std::vector<BenchReport> out;
    for (int e = log2_min; e <= log2_max; ++e)
        out.push_back(bench_reduction(size_t(1) << e, seed + e, repeats));
    return out;
}

}  // namespace circarc
