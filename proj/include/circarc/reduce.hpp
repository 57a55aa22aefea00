// Homotopy-preserving reduction of an arc collection to a subcollection whose
// nerve is a rotation-window complex: one sort plus a linear worklist pass.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "circarc/circle.hpp"

namespace circarc {

enum class LemmaCase { a, b, c };

char lemma_case_letter(LemmaCase c);

struct Removal {
    int removed = 0;
    int dominator = 0;
    LemmaCase how = LemmaCase::a;
};

struct ReductionResult {
    std::vector<int> kept;  // original indices in cyclic start order
    int n_prime = 0;
    int k_prime = 0;
    std::vector<Removal> log;
};

struct ReduceStats {
    int64_t sort_ns = 0;
    int64_t scan_ns = 0;   // everything after sorting
    int64_t mutations = 0; // event-list unlinks plus worklist inserts/erases
};

// First applicable domination witness for vertex i by vertex j:
//   (a) arc i contained in arc j;
//   (b) arc i precedes arc j and no closing endpoint lies in [a_i, a_j];
//   (c) arc j precedes arc i and no opening endpoint lies in (b_j, b_i].
// Endpoint membership is evaluated in the symbolically perturbed order.
std::optional<LemmaCase> domination_case(const ArcCollection& collection,
                                         std::span<const char> alive, int i, int j);
std::optional<LemmaCase> lemma_domination_case(const ArcCollection& collection, int i, int j);

// Indices surviving containment elimination: every arc contained in another
// is dropped (lowest index survives among equal arcs).
std::vector<int> remove_contained(const ArcCollection& collection);

ReductionResult reduce_to_minimal(const ArcCollection& collection, ReduceStats* stats = nullptr);

// Replays the removal log, re-checking every domination claim against the
// then-current subcollection, then re-reads (n', k') off the survivors.
bool verify_reduction(const ArcCollection& collection, const ReductionResult& result);

}  // namespace circarc
