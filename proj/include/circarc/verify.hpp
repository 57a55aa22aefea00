// The cross-verification suites: every closed-form result is replayed against
// the integer homology oracle, the generator constructions, and the
// combinatorial cross-checks. Shared by the CLI verify command and the
// acceptance runner.
#pragma once

#include <string>
#include <vector>

#include "circarc/homology.hpp"

namespace circarc {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // counts on success, first counterexample on failure
    double seconds = 0;
};

struct VerifyOptions {
    int oracle_n_max = 10;      // formula-vs-oracle sweeps
    int random_count = 200;     // random collections
    uint64_t seed = 20240801;
    OracleCaps caps{12, 10};
    std::string golden_table_path;  // empty: skip the table comparison
    bool include_bench = false;     // the scaling criterion
    bool inject_fault = false;      // deliberately corrupt one branch; the
                                    // oracle sweep must then fail
};

CheckResult check_table_golden(const std::string& path);
CheckResult check_oracle_nerve(const VerifyOptions& opt);
CheckResult check_oracle_clique(const VerifyOptions& opt);
CheckResult check_recursion();
CheckResult check_random_collections(const VerifyOptions& opt);
CheckResult check_reduction_scaling(uint64_t seed);
CheckResult check_generator_suite(const VerifyOptions& opt);
CheckResult check_polytope_suite(const VerifyOptions& opt);
CheckResult check_dihedral_suite(const VerifyOptions& opt);
CheckResult check_surjection_suite(const VerifyOptions& opt);
CheckResult check_lovasz_suite();

// Everything applicable under the options, in criterion order.
std::vector<CheckResult> run_verification(const VerifyOptions& opt);

}  // namespace circarc
