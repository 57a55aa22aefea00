// Acceptance runner: one pass/fail line per criterion, nonzero exit on any
// failure. Mirrors `circarc verify --golden-table ... --bench`.
#include <cstdio>
#include <vector>

#include "circarc/verify.hpp"

int main() {
    using namespace circarc;
    VerifyOptions opt;
    opt.oracle_n_max = 10;
    opt.random_count = 200;
    opt.seed = 20240801;
    opt.caps = OracleCaps{12, 10};
    opt.golden_table_path = GOLDEN_TABLE_FILE;
    opt.include_bench = true;

    std::vector<CheckResult> results = run_verification(opt);
    bool all_pass = true;
    for (size_t i = 0; i < results.size(); ++i) {
        const CheckResult& r = results[i];
        std::printf("criterion %2zu [%s] %-55s %8.2fs  %s\n", i + 1, r.pass ? "pass" : "FAIL",
                    r.name.c_str(), r.seconds, r.detail.c_str());
        all_pass = all_pass && r.pass;
    }
    std::printf("%s\n", all_pass ? "ACCEPTANCE: all criteria pass" : "ACCEPTANCE: FAILURES");
    return all_pass ? 0 : 1;
}
