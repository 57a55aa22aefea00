// circarc: classify the homotopy type of nerve / clique / Cech / Vietoris-Rips
// complexes of circular arcs, and cross-verify the closed forms against an
// exact integer homology oracle.
#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "circarc/bench.hpp"
#include "circarc/graphs.hpp"
#include "circarc/io.hpp"
#include "circarc/maps.hpp"
#include "circarc/polytope.hpp"
#include "circarc/verify.hpp"

namespace {

using namespace circarc;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitParse = 2;
constexpr int kExitEmpty = 3;
constexpr int kExitPrecondition = 4;

OracleCaps parse_caps(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw CLI::ValidationError("--caps expects V:D");
    OracleCaps caps;
    caps.max_vertices = std::stoi(text.substr(0, colon));
    caps.max_dim = std::stoi(text.substr(colon + 1));
    return caps;
}

ComplexVariant variant_for(const InputDocument& doc, const std::string& flag) {
    if (!flag.empty()) {
        if (flag == "nerve" || flag == "cech") return ComplexVariant::nerve;
        if (flag == "clique" || flag == "vr") return ComplexVariant::clique;
        throw CLI::ValidationError("--complex expects nerve|clique|cech|vr");
    }
    if (doc.is_arcs()) return ComplexVariant::nerve;
    return std::get<PointsInput>(doc.payload).kind == PointComplexKind::vr
               ? ComplexVariant::clique
               : ComplexVariant::nerve;
}

// For point documents the effective ball radius depends on the variant.
ArcCollection arcs_for(const InputDocument& doc, const std::string& flag,
                       const std::string& radius_override) {
    InputDocument adjusted = doc;
    if (!doc.is_arcs()) {
        PointsInput& p = std::get<PointsInput>(adjusted.payload);
        if (!radius_override.empty()) p.radius = parse_rational(radius_override);
        if (flag == "cech") p.kind = PointComplexKind::cech;
        if (flag == "vr") p.kind = PointComplexKind::vr;
    }
    return document_arcs(adjusted);
}

int run_homotopy(const std::string& input, const std::string& complex_flag,
                 const std::string& radius, bool log_removals, bool reduction_only,
                 bool check) {
    InputDocument doc = load_input_document(input);
    ArcCollection u = arcs_for(doc, complex_flag, radius);
    ComplexVariant variant = variant_for(doc, complex_flag);
    auto [h, red] = collection_homotopy(u, variant);
    if (check && !verify_reduction(u, red)) {
        std::cerr << "reduction verification failed\n";
        return kExitMismatch;
    }
    if (reduction_only)
        std::cout << reduction_report_json(u.size(), red, log_removals) << "\n";
    else
        std::cout << homotopy_report_json(u.size(), h, red, log_removals) << "\n";
    return kExitOk;
}

int run_verify(int n_max, int random_count, uint64_t seed, const std::string& caps,
               const std::string& golden, bool bench, bool inject_fault) {
    VerifyOptions opt;
    opt.oracle_n_max = n_max;
    opt.random_count = random_count;
    opt.seed = seed;
    if (!caps.empty()) opt.caps = parse_caps(caps);
    opt.golden_table_path = golden;
    opt.include_bench = bench;
    opt.inject_fault = inject_fault;
    bool all_pass = true;
    for (const CheckResult& r : run_verification(opt)) {
        std::printf("[%s] %-55s %8.2fs  %s\n", r.pass ? "pass" : "FAIL", r.name.c_str(),
                    r.seconds, r.detail.c_str());
        all_pass = all_pass && r.pass;
    }
    return all_pass ? kExitOk : kExitMismatch;
}

int run_bench(size_t count, uint64_t seed, const std::string& ladder) {
    if (!ladder.empty()) {
        auto colon = ladder.find(':');
        if (colon == std::string::npos) throw CLI::ValidationError("--ladder expects MIN:MAX");
        int lo = std::stoi(ladder.substr(0, colon));
        int hi = std::stoi(ladder.substr(colon + 1));
        for (const BenchReport& r : bench_ladder(lo, hi, seed, 3))
            std::printf("n=%zu sort=%.4fs scan=%.4fs mutations=%lld (n'=%d, k'=%d)\n", r.count,
                        r.sort_sec, r.scan_sec, static_cast<long long>(r.mutations), r.n_prime,
                        r.k_prime);
        return kExitOk;
    }
    BenchReport r = bench_reduction(count, seed, 1);
    std::printf("n=%zu sort=%.4fs scan=%.4fs mutations=%lld (n'=%d, k'=%d)\n", r.count,
                r.sort_sec, r.scan_sec, static_cast<long long>(r.mutations), r.n_prime,
                r.k_prime);
    std::printf("mutations/arc = %.2f (budget 8)\n",
                static_cast<double>(r.mutations) / static_cast<double>(r.count));
    return kExitOk;
}

int run_generators(int n, int k) {
    SimplicialComplex nk = nerve_nk(n, k);
    Cochain beta = beta_cochain_even(n, k);
    Chain bd = delta_boundary(n, k);
    std::printf("complex: %d window simplices on %d vertices\n",
                static_cast<int>(nk.maximal.size()), nk.vertex_count);
    std::printf("delta boundary: %d simplices, beta support: %d simplices\n",
                static_cast<int>(bd.coef.size()), static_cast<int>(beta.coef.size()));
    std::printf("beta cocycle: %s\n", is_cocycle(nk, beta) ? "yes" : "NO");
    std::printf("<beta, d delta> = %s\n", pair(beta, bd).str().c_str());
    IntMat eval = evaluation_matrix(n, k);
    std::printf("evaluation matrix (%dx%d):\n", eval.rows, eval.cols);
    for (int i = 0; i < eval.rows; ++i) {
        for (int j = 0; j < eval.cols; ++j) std::printf("%s ", eval.at(i, j).str().c_str());
        std::printf("\n");
    }
    Chain sum;
    sum.dim = bd.dim;
    for (int i = 0; i < n - k; ++i) sum = add_chains(sum, alpha_cycle(n, k, i));
    std::printf("sum of alpha cycles bounds: %s\n", is_boundary(nk, sum) ? "yes" : "NO");
    return kExitOk;
}

int run_polytope(int n, int two_m, int check_inclusion) {
    FacetSet fs = gale_facets(two_m, n);
    std::printf("boundary of the %d-dimensional cyclic polytope on %d vertices: %d facets\n",
                two_m, n, static_cast<int>(fs.facets.size()));
    for (const Simplex& f : fs.facets) {
        std::printf("  {");
        for (size_t i = 0; i < f.size(); ++i) std::printf("%s%d", i ? "," : "", f[i]);
        std::printf("}\n");
    }
    if (check_inclusion >= 0) {
        bool ok = check_lemma_5_8(n, check_inclusion);
        std::printf("inclusion into the window complex with k=%d: %s\n", check_inclusion,
                    ok ? "holds" : "FAILS");
        return ok ? kExitOk : kExitMismatch;
    }
    return kExitOk;
}

int run_chromatic(int n, int d) {
    LovaszReport rep = lovasz_report(n, d);
    std::printf("chi = %d, bound = %d, gap = %d, fractional = %s\n", rep.chi, rep.bound, rep.gap,
                rational_to_string(rep.fractional).c_str());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"homotopy types of nerve and clique complexes of circular arcs"};
    app.require_subcommand(1);

    std::string input, complex_flag, radius, caps, golden, ladder;
    bool log_removals = false, bench_flag = false, inject_fault = false, check_flag = false;
    int n_max = 10, random_count = 200, k_max = -1;
    uint64_t seed = 20240801;
    size_t count = 1000000;
    int pos_n = 0, pos_k = 0, pos_two_m = 0, pos_d = 0, check_inclusion = -1;

    CLI::App* homotopy = app.add_subcommand("homotopy", "classify an input document");
    homotopy->add_option("--input", input, "input JSON document")->required();
    homotopy->add_option("--complex", complex_flag, "nerve|clique|cech|vr");
    homotopy->add_option("--radius", radius, "override the radius (rational)");
    homotopy->add_flag("--log-removals", log_removals, "include the removal log");
    homotopy->add_flag("--check", check_flag, "replay and verify the removal log");

    CLI::App* reduce_cmd = app.add_subcommand("reduce", "reduce without classifying");
    reduce_cmd->add_option("--input", input, "input JSON document")->required();
    reduce_cmd->add_flag("--log-removals", log_removals, "include the removal log");
    reduce_cmd->add_flag("--check", check_flag, "replay and verify the removal log");

    CLI::App* table = app.add_subcommand("table", "print the homotopy-type table");
    table->add_option("--n-max", n_max, "largest n (rows run 2..n-max)")->required();
    table->add_option("--k-max", k_max, "largest k (default n-max minus 2)");
    table->add_option("--complex", complex_flag, "nerve|clique");

    CLI::App* verify = app.add_subcommand("verify", "run the verification suites");
    verify->add_option("--n-max", n_max, "oracle sweep bound");
    verify->add_option("--random", random_count, "number of random collections");
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--caps", caps, "oracle caps V:D");
    verify->add_option("--golden-table", golden, "golden table file to compare");
    verify->add_flag("--bench", bench_flag, "include the scaling benchmark");
    verify->add_flag("--inject-fault", inject_fault,
                     "corrupt one formula branch; the suite must then fail");

    CLI::App* bench = app.add_subcommand("bench", "time the reduction");
    bench->add_option("--count", count, "number of random arcs");
    bench->add_option("--seed", seed, "random seed");
    bench->add_option("--ladder", ladder, "doubling ladder MIN:MAX (log2 sizes)");

    CLI::App* generators = app.add_subcommand("generators", "even-sphere generator report");
    generators->add_option("n", pos_n, "number of arcs")->required();
    generators->add_option("k", pos_k, "window length")->required();

    CLI::App* polytope = app.add_subcommand("polytope", "cyclic polytope facets");
    polytope->add_option("n", pos_n, "number of vertices")->required();
    polytope->add_option("two_m", pos_two_m, "even dimension")->required();
    polytope->add_option("--check-inclusion", check_inclusion,
                         "verify the facets lie in the window complex with this k");

    CLI::App* chromatic = app.add_subcommand("chromatic", "chromatic bound report");
    chromatic->add_option("n", pos_n, "vertices")->required();
    chromatic->add_option("d", pos_d, "distance parameter")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kExitParse : kExitOk;
    }

    try {
        if (homotopy->parsed())
            return run_homotopy(input, complex_flag, radius, log_removals, false, check_flag);
        if (reduce_cmd->parsed())
            return run_homotopy(input, complex_flag, radius, log_removals, true, check_flag);
        if (table->parsed()) {
            ComplexVariant v =
                complex_flag == "clique" ? ComplexVariant::clique : ComplexVariant::nerve;
            std::cout << homotopy_table(n_max, k_max, v);
            return kExitOk;
        }
        if (verify->parsed())
            return run_verify(n_max, random_count, seed, caps, golden, bench_flag, inject_fault);
        if (bench->parsed()) return run_bench(count, seed, ladder);
        if (generators->parsed()) return run_generators(pos_n, pos_k);
        if (polytope->parsed()) return run_polytope(pos_n, pos_two_m, check_inclusion);
        if (chromatic->parsed()) return run_chromatic(pos_n, pos_d);
    } catch (const EmptyInputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitEmpty;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMismatch;
    }
    return kExitOk;
}
