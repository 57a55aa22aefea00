#include "circarc/homotopy.hpp"

#include <stdexcept>

namespace circarc {

HomotopyType HomotopyType::wedge(int dim, long count) {
    if (dim < 0 || count < 0) throw std::invalid_argument("wedge: bad parameters");
    if (count == 0) return contractible();
    return HomotopyType{false, dim, count};
}

std::string HomotopyType::str() const {
    if (is_contractible) return "*";
    std::string sphere = "S^" + std::to_string(dim);
    if (count == 1) return sphere;
    return "vee^" + std::to_string(count) + " " + sphere;
}

HomotopyType nerve_homotopy(int n, int k) {
    if (n < 1 || k < 0) throw std::invalid_argument("nerve_homotopy: need n >= 1, k >= 0");
    if (k >= n - 1) return HomotopyType::contractible();
    const int m = n - k;
    // k/n = l/(l+1) exactly iff (n-k) divides k; otherwise l/(l+1) < k/n < (l+1)/(l+2).
    if (k % m == 0) {
        int l = k / m;
        return HomotopyType::wedge(2 * l, n - k - 1);
    }
    int l = k / m;
    return HomotopyType::wedge(2 * l + 1, 1);
}

HomotopyType clique_homotopy(int n, int k) {
    if (n < 1 || k < 0) throw std::invalid_argument("clique_homotopy: need n >= 1, k >= 0");
    if (2 * k >= n) return HomotopyType::contractible();
    const int m = n - 2 * k;
    if (k % m == 0) {
        int l = k / m;
        return HomotopyType::wedge(2 * l, n - 2 * k - 1);
    }
    int l = k / m;
    return HomotopyType::wedge(2 * l + 1, 1);
}

HomotopyType nerve_homotopy_by_recursion(int n, int k) {
    if (n < 1 || k < 0) throw std::invalid_argument("nerve_homotopy_by_recursion: bad input");
    if (k >= n - 1) return HomotopyType::contractible();
    if (k == 0) return HomotopyType::wedge(0, n - 1);
    if (2 * k < n) return HomotopyType::wedge(1, 1);
    // Double suspension step onto (k, 2k - n); n decreases strictly.
    HomotopyType inner = nerve_homotopy_by_recursion(k, 2 * k - n);
    if (inner.is_contractible) return inner;
    return HomotopyType::wedge(inner.dim + 2, inner.count);
}

std::optional<int> connectivity(const HomotopyType& h) {
    if (h.is_contractible) return std::nullopt;
    return h.dim - 1;
}

std::pair<HomotopyType, ReductionResult> collection_homotopy(const ArcCollection& collection,
                                                             ComplexVariant variant) {
    ReductionResult red = reduce_to_minimal(collection);
    HomotopyType h = variant == ComplexVariant::nerve
                         ? nerve_homotopy(red.n_prime, red.k_prime)
                         : clique_homotopy(red.n_prime, red.k_prime);
    return {h, std::move(red)};
}

}  // namespace circarc
