// Command-line front end: verify (oracle suites), bench (measurement grid),
// compare (two-scheme percent-difference report).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qslab/qslab.hpp"

namespace {

using namespace qslab;

std::optional<std::vector<SchemeId>> expand_schemes(const std::vector<std::string>& tokens) {
    std::vector<SchemeId> out;
    for (const std::string& t : tokens) {
        if (t == "all") {
            for (SchemeId s : all_schemes()) out.push_back(s);
            continue;
        }
        const auto parsed = parse_scheme(t);
        if (!parsed) {
            std::cerr << "unknown scheme '" << t << "'. Known schemes:";
            for (SchemeId s : all_schemes()) std::cerr << " " << scheme_name(s);
            std::cerr << " (or 'all')\n";
            return std::nullopt;
        }
        out.push_back(*parsed);
    }
    return out;
}

std::optional<std::vector<WorkloadSpec>> expand_workloads(const std::vector<std::string>& tokens) {
    std::vector<WorkloadSpec> out;
    for (const std::string& t : tokens) {
        const auto parsed = parse_workload(t);
        if (!parsed) {
            std::cerr << "unknown workload '" << t
                      << "'. Known: ascending descending shuffled constant few-distinct-<k>\n";
            return std::nullopt;
        }
        out.push_back(*parsed);
    }
    return out;
}

int emit_report(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(out_path);
    if (!f) {
        std::cerr << "cannot open output file '" << out_path << "'\n";
        return 1;
    }
    f << text;
    return 0;
}

int run_verify(const std::vector<SchemeId>& schemes, std::size_t max_n, std::size_t random_cases,
               std::uint64_t seed) {
    bool all_ok = true;
    auto report = [&](const std::string& label, const Verdict& v) {
        std::cout << (v.passed ? "[PASS] " : "[FAIL] ") << label << "\n";
        if (!v.passed) {
            std::cout << "       " << failure_kind_name(*v.failure_kind) << ": " << v.detail << "\n";
            all_ok = false;
        }
    };

    // Exhaustive postcondition sweep per scheme: every permutation of
    // [1..n] up to max_n, plus a step-budget check per case.
    for (SchemeId scheme : schemes) {
        Verdict verdict = Verdict::pass();
        std::size_t cases = 0;
        for (std::size_t n = min_span_length(scheme); n <= max_n && verdict.passed; ++n) {
            std::vector<Key> perm(n);
            for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<Key>(i + 1);
            std::uint64_t idx = 0;
            const Span span{0, n};
            do {
                std::vector<Key> work = perm;
                Counters layout_ctr;
                if (is_sentinel_scheme(scheme)) {
                    SplitMix64 lay(mix_seed(seed, n, idx));
                    init_swap(work, span, lay, layout_ctr);
                }
                const std::vector<Key> before = work;
                const PartitionOutcome out = partition(scheme, work, span);
                verdict = check_partition(before, work, span, out.pivot_index);
                if (verdict.passed)
                    verdict = bounded_run(scheme, before, span, termination_step_budget(n));
                ++idx;
                ++cases;
            } while (verdict.passed && std::next_permutation(perm.begin(), perm.end()));
        }
        report("exhaustive postcondition: " + std::string(scheme_name(scheme)) + " (" +
                   std::to_string(cases) + " cases, n <= " + std::to_string(max_n) + ")",
               verdict);
    }

    // Refactoring-chain equivalence, when at least two members are present.
    {
        std::vector<SchemeId> chain;
        for (SchemeId s : stage_chain_schemes())
            for (SchemeId have : schemes)
                if (s == have) {
                    chain.push_back(s);
                    break;
                }
        if (chain.size() >= 2) {
            EquivalenceOptions opt;
            opt.compare_comparisons = true;
            report("stage-chain equivalence (" + std::to_string(chain.size()) +
                       " schemes, outputs + pivot + comparisons)",
                   exhaustive_equivalence(chain, max_n, opt));
        }
    }

    // Sentinel pair: identical array trajectory and pivot index.
    {
        bool nested = false, single = false;
        for (SchemeId s : schemes) {
            nested |= s == SchemeId::HoareNestedSentinel;
            single |= s == SchemeId::HoareSingleLoopSentinel;
        }
        if (nested && single)
            report("sentinel pair trajectory equivalence",
                   exhaustive_equivalence(
                       {SchemeId::HoareNestedSentinel, SchemeId::HoareSingleLoopSentinel}, max_n));
    }

    // Random corpus per scheme; sentinel schemes run through the
    // span-policing wrapper so removed bound checks are certified.
    for (SchemeId scheme : schemes) {
        RandomCheckOptions opt;
        opt.cases = random_cases;
        opt.seed = seed;
        opt.bounds_checked = is_sentinel_scheme(scheme);
        report("random corpus: " + std::string(scheme_name(scheme)) + " (" +
                   std::to_string(random_cases) + " cases" +
                   (opt.bounds_checked ? ", bounds-checked)" : ")"),
               check_scheme_on_random_corpus(scheme, opt));
    }

    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quicksort partition-scheme laboratory"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "run the correctness oracle suites");
    std::vector<std::string> verify_schemes{"all"};
    std::size_t max_n = 7;
    std::size_t random_cases = 10000;
    std::uint64_t verify_seed = 0;
    verify->add_option("--schemes", verify_schemes, "scheme names or 'all'")->delimiter(',');
    verify->add_option("--max-n", max_n, "exhaustive sweep bound (<= 8)");
    verify->add_option("--random-cases", random_cases, "random corpus size per scheme");
    verify->add_option("--seed", verify_seed, "corpus seed");

    // bench
    auto* bench = app.add_subcommand("bench", "measure a scheme x workload x size grid");
    std::vector<std::string> bench_schemes{"all"};
    std::vector<std::string> bench_workloads{"shuffled"};
    std::vector<std::size_t> bench_sizes{1000, 10000};
    std::size_t bench_trials = 5;
    std::uint64_t bench_seed = 0;
    std::string bench_format = "csv";
    std::string bench_out;
    bench->add_option("--schemes", bench_schemes, "scheme names or 'all'")->delimiter(',');
    bench->add_option("--workloads", bench_workloads, "workload names")->delimiter(',');
    bench->add_option("--sizes", bench_sizes, "array sizes")->delimiter(',');
    bench->add_option("--trials", bench_trials, "timed trials per cell (>= 3)");
    bench->add_option("--seed", bench_seed, "workload + engine seed");
    bench->add_option("--format", bench_format, "csv or md")
        ->check(CLI::IsMember({"csv", "md"}));
    bench->add_option("--out", bench_out, "output path (default: standard output)");

    // compare
    auto* compare = app.add_subcommand("compare", "baseline-vs-candidate percent differences");
    std::string baseline_name, candidate_name;
    std::vector<std::string> cmp_workloads{"shuffled"};
    std::vector<std::size_t> cmp_sizes{1000, 10000};
    std::size_t cmp_trials = 5;
    std::uint64_t cmp_seed = 0;
    compare->add_option("--baseline", baseline_name, "baseline scheme")->required();
    compare->add_option("--candidate", candidate_name, "candidate scheme")->required();
    compare->add_option("--workloads", cmp_workloads, "workload names")->delimiter(',');
    compare->add_option("--sizes", cmp_sizes, "array sizes")->delimiter(',');
    compare->add_option("--trials", cmp_trials, "timed trials per cell (>= 3)");
    compare->add_option("--seed", cmp_seed, "workload + engine seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // --help exits 0
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help();
        return 2;
    }

    try {
        if (verify->parsed()) {
            const auto schemes = expand_schemes(verify_schemes);
            if (!schemes) return 2;
            if (max_n > 8) {
                std::cerr << "--max-n is capped at 8\n";
                return 2;
            }
            return run_verify(*schemes, max_n, random_cases, verify_seed);
        }

        if (bench->parsed()) {
            const auto schemes = expand_schemes(bench_schemes);
            const auto workloads = expand_workloads(bench_workloads);
            if (!schemes || !workloads) return 2;
            if (bench_sizes.empty()) {
                std::cerr << "--sizes must not be empty\n";
                return 2;
            }
            if (bench_trials < 3) {
                std::cerr << "--trials must be at least 3\n";
                return 2;
            }
            const auto rows = run_grid(*schemes, *workloads, bench_sizes, bench_trials, bench_seed);
            const std::string text = bench_format == "md" ? emit_markdown(rows) : emit_csv(rows);
            if (int rc = emit_report(text, bench_out); rc != 0) return rc;
            for (const BenchRow& r : rows)
                if (!r.valid) {
                    std::cerr << "invalid row: " << scheme_name(r.scheme) << " "
                              << workload_label(r.workload) << " n=" << r.workload.n << ": "
                              << r.verdict.detail << "\n";
                    return 1;
                }
            return 0;
        }

        // compare
        const auto base = parse_scheme(baseline_name);
        const auto cand = parse_scheme(candidate_name);
        if (!base || !cand) {
            std::cerr << "unknown scheme in --baseline/--candidate\n";
            return 2;
        }
        const auto workloads = expand_workloads(cmp_workloads);
        if (!workloads) return 2;
        if (cmp_sizes.empty()) {
            std::cerr << "--sizes must not be empty\n";
            return 2;
        }
        if (cmp_trials < 3) {
            std::cerr << "--trials must be at least 3\n";
            return 2;
        }
        const auto rows = run_grid({*base, *cand}, *workloads, cmp_sizes, cmp_trials, cmp_seed);
        std::cout << emit_markdown(make_compare_rows(rows, *base, *cand));
        for (const BenchRow& r : rows)
            if (!r.valid) {
                std::cerr << "invalid row: " << scheme_name(r.scheme) << " "
                          << workload_label(r.workload) << " n=" << r.workload.n << "\n";
                return 1;
            }
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
