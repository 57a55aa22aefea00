// Seeded random collections and timing harness for the reduction.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "circarc/circle.hpp"
#include "circarc/reduce.hpp"

namespace circarc {

using Rng = std::mt19937_64;

// Uniform in [0, bound); raw-engine modulo keeps runs reproducible across
// standard libraries.
uint64_t rng_below(Rng& rng, uint64_t bound);

// Random collection with up to max_n arcs. When force_coincidences is set,
// endpoints are frequently reused between arcs, along with occasional point
// arcs and whole circles.
ArcCollection random_collection(Rng& rng, int max_n, bool force_coincidences);

// count random arcs with denominator-2^20 endpoints; the bench workload.
ArcCollection random_arcs_bulk(Rng& rng, size_t count);

struct BenchReport {
    size_t count = 0;
    double sort_sec = 0;
    double scan_sec = 0;
    int64_t mutations = 0;
    int n_prime = 0;
    int k_prime = 0;
};

// Reduce `count` seeded random arcs, timing the sort and post-sort phases
// separately; best of `repeats` runs for the timings.
BenchReport bench_reduction(size_t count, uint64_t seed, int repeats = 1);

std::vector<BenchReport> bench_ladder(int log2_min, int log2_max, uint64_t seed, int repeats = 3);

}  // namespace circarc
