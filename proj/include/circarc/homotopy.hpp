// Closed-form homotopy-type classification of the nerve and clique complexes
// of circular arcs, plus the suspension recursion as a second derivation.
#pragma once

#include <optional>
#include <string>

#include "circarc/reduce.hpp"

namespace circarc {

// Either contractible or a wedge of `count` spheres of dimension `dim`.
// Wedge(d, 1) is the single sphere S^d; a zero count normalizes to a point.
struct HomotopyType {
    bool is_contractible = true;
    int dim = 0;
    long count = 0;

    static HomotopyType contractible() { return HomotopyType{}; }
    static HomotopyType wedge(int dim, long count);

    // "*", "S^d", or "vee^c S^d" (the table cell format).
    std::string str() const;

    friend bool operator==(const HomotopyType&, const HomotopyType&) = default;
};

HomotopyType nerve_homotopy(int n, int k);
HomotopyType clique_homotopy(int n, int k);

// Independent derivation by the double-suspension recursion; agrees with
// nerve_homotopy everywhere.
HomotopyType nerve_homotopy_by_recursion(int n, int k);

// Largest c such that the space is c-connected; nullopt means contractible
// (infinitely connected). A wedge of d-spheres is (d-1)-connected.
std::optional<int> connectivity(const HomotopyType& h);

enum class ComplexVariant { nerve, clique };

// Reduce, then read the type off the closed form for the surviving (n', k').
std::pair<HomotopyType, ReductionResult> collection_homotopy(const ArcCollection& collection,
                                                             ComplexVariant variant);

}  // namespace circarc
