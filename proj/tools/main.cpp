// Command-line front end: compute diagonal matrix elements, render hook
// tableaux, run the property suite, and benchmark the convolution backends.
//
// Exit codes: 0 success, 1 computation error (pole, broken invariant,
// failed checks), 2 usage error.

#include "hookfusion/algebra_json.hpp"
#include "hookfusion/fusion.hpp"
#include "hookfusion/reorder.hpp"
#include "hookfusion/seminormal.hpp"
#include "hookfusion/verify.hpp"
#include "hookfusion/young.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace hookfusion;

// Post-parse flag violations (bad partition text, out-of-range bounds).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Evaluator { limit, reorder, oracle, hook_direct };
enum class OutputFormat { json, text };

Partition parse_partition_text(const std::string& text) {
    try {
        return Partition::parse(text);
    } catch (const std::exception& e) {
        throw UsageError(std::string("invalid --partition value: ") + e.what());
    }
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

const char* scheme_name(SchemeKind kind) {
    switch (kind) {
    case SchemeKind::hook: return "hook";
    case SchemeKind::row: return "row";
    case SchemeKind::column: return "column";
    }
    return "?";
}

const char* backend_name(ConvolutionBackend backend) {
    return backend == ConvolutionBackend::sparse ? "sparse" : "dense";
}

struct ComputeArgs {
    std::string partition;
    SchemeKind scheme = SchemeKind::hook;
    Evaluator evaluator = Evaluator::limit;
    OutputFormat output = OutputFormat::json;
};

int run_compute(const ComputeArgs& args) {
    Partition shape = parse_partition_text(args.partition);
    if (args.evaluator != Evaluator::limit && args.scheme != SchemeKind::hook)
        throw UsageError("--scheme only affects the limit evaluator; the others work at the "
                         "equal point of the hook scheme");
    if (args.evaluator == Evaluator::oracle && shape.n() > 7)
        throw UsageError("the oracle evaluator enumerates all of S_n and is limited to n <= 7");
    if (args.evaluator == Evaluator::hook_direct && !shape.is_hook())
        throw UsageError("hook-direct applies to hook shapes only (one principal hook)");

    const auto start = std::chrono::steady_clock::now();
    AlgebraElement<Rational> element = AlgebraElement<Rational>::identity(1);
    switch (args.evaluator) {
    case Evaluator::limit: {
        HookTableau T(shape);
        element = evaluate_limit(T, SubstitutionScheme::standard(T, args.scheme));
        break;
    }
    case Evaluator::reorder: {
        HookTableau T(shape);
        element = evaluate_equal_z(T);
        break;
    }
    case Evaluator::oracle: element = diagonal_element_oracle(shape); break;
    case Evaluator::hook_direct: element = hook_shape_direct(shape); break;
    }
    const double ms = elapsed_ms(start);

    if (args.output == OutputFormat::json)
        std::cout << to_json_string(element) << "\n";
    else
        std::cout << to_text(element);
    std::cerr << "computed " << shape.str() << " (" << element.support_size() << " terms) in "
              << std::fixed << std::setprecision(1) << ms << " ms\n";
    return 0;
}

struct TableauArgs {
    std::string partition;
    OutputFormat output = OutputFormat::text;
};

int run_tableau(const TableauArgs& args) {
    Partition shape = parse_partition_text(args.partition);
    HookTableau T(shape);
    const auto pairs = singular_pairs(T);

    if (args.output == OutputFormat::json) {
        nlohmann::ordered_json j;
        j["partition"] = shape.parts;
        j["n"] = T.n();
        j["hooks"] = shape.durfee();
        j["rows"] = T.rows();
        j["contents"] = T.contents();
        auto sp = nlohmann::ordered_json::array();
        for (const auto& [p, q] : pairs) sp.push_back({p, q});
        j["singularities"] = std::move(sp);
        std::cout << j.dump() << "\n";
        return 0;
    }

    std::cout << T.render() << "\n";
    std::cout << "contents:";
    for (int c : T.contents()) std::cout << " " << c;
    std::cout << "\n";
    std::cout << "singularities:";
    for (const auto& [p, q] : pairs) std::cout << " (" << p << "," << q << ")";
    std::cout << "\n";
    return 0;
}

struct VerifyArgs {
    int max_n = 6;
    std::vector<std::string> checks;
    int jobs = 1;
    std::uint64_t seed = 0;
    OutputFormat output = OutputFormat::text;
};

int run_verify(const VerifyArgs& args) {
    const auto& registry = check_registry();
    for (const auto& name : args.checks) {
        const bool known = std::any_of(registry.begin(), registry.end(),
                                       [&](const CheckInfo& info) { return info.name == name; });
        if (!known) {
            std::ostringstream os;
            os << "unknown check \"" << name << "\"; known checks:";
            for (const auto& info : registry) os << " " << info.name;
            throw UsageError(os.str());
        }
    }
    if (args.max_n < 1) throw UsageError("--max-n must be at least 1");
    if (args.jobs < 1) throw UsageError("--jobs must be at least 1");

    SuiteOptions options;
    options.max_n = args.max_n;
    options.checks = args.checks;
    options.jobs = args.jobs;
    options.seed = args.seed;

    const auto start = std::chrono::steady_clock::now();
    const std::vector<CheckReport> reports = run_suite(options);
    const double ms = elapsed_ms(start);

    bool all_pass = true;
    for (const auto& r : reports)
        if (r.outcome == Outcome::fail) all_pass = false;

    if (args.output == OutputFormat::json) {
        for (const auto& r : reports) std::cout << to_json_line(r) << "\n";
    } else {
        for (const auto& r : reports)
            if (r.outcome == Outcome::fail)
                std::cout << "FAIL " << r.check << " " << r.partition.str() << ": " << r.witness
                          << "\n";
        std::cout << summary_table(reports);
    }
    std::cerr << "suite: " << reports.size() << " reports in " << std::fixed
              << std::setprecision(1) << ms << " ms\n";
    return all_pass ? 0 : 1;
}

struct BenchArgs {
    std::string partition = "3,3,2";
};

int run_bench(const BenchArgs& args) {
    Partition shape = parse_partition_text(args.partition);
    if (shape.n() > 8) throw UsageError("the dense backend is limited to n <= 8");
    HookTableau T(shape);

    std::cout << "partition " << shape.str() << ", n = " << T.n() << "\n";
    std::cout << std::left << std::setw(8) << "scheme" << std::setw(8) << "backend" << std::right
              << std::setw(12) << "wall_ms" << std::setw(8) << "terms" << "\n";
    for (SchemeKind kind : {SchemeKind::hook, SchemeKind::row, SchemeKind::column}) {
        const auto S = SubstitutionScheme::standard(T, kind);
        for (ConvolutionBackend backend : {ConvolutionBackend::sparse, ConvolutionBackend::dense}) {
            const auto start = std::chrono::steady_clock::now();
            const auto element = evaluate_limit(T, S, backend);
            const double ms = elapsed_ms(start);
            std::cout << std::left << std::setw(8) << scheme_name(kind) << std::setw(8)
                      << backend_name(backend) << std::right << std::setw(12) << std::fixed
                      << std::setprecision(3) << ms << std::setw(8) << element.support_size()
                      << "\n";
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact diagonal matrix elements of symmetric-group irreducible representations "
                 "via the hook fusion procedure"};
    app.require_subcommand(1);

    const std::map<std::string, SchemeKind> scheme_names{
        {"hook", SchemeKind::hook}, {"row", SchemeKind::row}, {"column", SchemeKind::column}};
    const std::map<std::string, Evaluator> evaluator_names{{"limit", Evaluator::limit},
                                                           {"reorder", Evaluator::reorder},
                                                           {"oracle", Evaluator::oracle},
                                                           {"hook-direct", Evaluator::hook_direct}};
    const std::map<std::string, OutputFormat> output_names{{"json", OutputFormat::json},
                                                           {"text", OutputFormat::text}};

    ComputeArgs compute_args;
    CLI::App* compute = app.add_subcommand(
        "compute", "Compute the diagonal matrix element F of a partition");
    compute->add_option("--partition", compute_args.partition,
                        "Partition as comma-separated parts, e.g. 3,3,2")
        ->required();
    compute->add_option("--scheme", compute_args.scheme,
                        "Substitution scheme for the limit evaluator: hook, row, column "
                        "(default hook)")
        ->transform(CLI::CheckedTransformer(scheme_names));
    compute->add_option("--evaluator", compute_args.evaluator,
                        "limit, reorder, oracle, or hook-direct (default limit)")
        ->transform(CLI::CheckedTransformer(evaluator_names));
    compute->add_option("--output", compute_args.output, "json or text (default json)")
        ->transform(CLI::CheckedTransformer(output_names));

    TableauArgs tableau_args;
    CLI::App* tableau = app.add_subcommand(
        "tableau", "Render the hook tableau, its contents, and its singular pairs");
    tableau->add_option("--partition", tableau_args.partition,
                        "Partition as comma-separated parts, e.g. 3,3,2")
        ->required();
    tableau->add_option("--output", tableau_args.output, "json or text (default text)")
        ->transform(CLI::CheckedTransformer(output_names));

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "Run the property suite");
    verify->add_option("--max-n", verify_args.max_n,
                       "Run checks over every partition of every n up to this bound (default 6)");
    verify->add_option("--checks", verify_args.checks,
                       "Comma-separated subset of checks to run (default: all)")
        ->delimiter(',');
    verify->add_option("--jobs", verify_args.jobs,
                       "Worker threads; report order does not depend on this (default 1)");
    verify->add_option("--seed", verify_args.seed,
                       "Seed for the prime draws of the membership tests (default 0)");
    verify->add_option("--output", verify_args.output,
                       "json (one report per line) or text (summary table, default)")
        ->transform(CLI::CheckedTransformer(output_names));

    BenchArgs bench_args;
    CLI::App* bench = app.add_subcommand(
        "bench", "Time the sparse and dense convolution backends per scheme");
    bench->add_option("--partition", bench_args.partition,
                      "Partition to benchmark (default 3,3,2)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (compute->parsed()) return run_compute(compute_args);
        if (tableau->parsed()) return run_tableau(tableau_args);
        if (verify->parsed()) return run_verify(verify_args);
        if (bench->parsed()) return run_bench(bench_args);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
