#include <cstdio>
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

using namespace lexikit;
using namespace lexikit::cli;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitSearchBudget = 3;
constexpr int kExitHypothesis = 4;

void add_format_flag(CLI::App* cmd, std::string* format) {
    cmd->add_option("--format", *format, "Output format: json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Greedy p-ary lexicode construction and analysis"};
    app.require_subcommand(1);

    std::string format = "json";

    GenArgs gen;
    CLI::App* gen_cmd = app.add_subcommand("gen", "Build a code and report its words");
    gen_cmd->add_option("--p", gen.p, "Prime field size")->required();
    gen_cmd->add_option("--d", gen.d, "Minimum distance (>= 2)")->required();
    gen_cmd->add_option("--basis", gen.basis, "std or mod:XI,ETA");
    gen_cmd->add_option("--k", gen.k, "Build p^k words")->required();
    gen_cmd->add_option("--variant", gen.variant, "lex or bminus")
        ->check(CLI::IsMember({"lex", "bminus"}));
    gen_cmd->add_flag("--res", gen.res, "Puncture always-zero coordinates");
    gen_cmd->add_option("--engine", gen.engine)
        ->check(CLI::IsMember({"optimized", "naive"}))
        ->group("");  // debugging only; the naive engine does not scale
    gen_cmd->add_flag("--no-timing", gen.no_timing, "Suppress the timing field");
    add_format_flag(gen_cmd, &format);

    LindimArgs lindim;
    CLI::App* lindim_cmd =
        app.add_subcommand("lindim", "Largest k with a linear p^k-word code");
    lindim_cmd->add_option("--p", lindim.p, "Prime field size")->required();
    lindim_cmd->add_option("--d", lindim.d, "Minimum distance (>= 2)")->required();
    lindim_cmd->add_option("--basis", lindim.basis, "std or mod:XI,ETA");
    lindim_cmd->add_option("--cap", lindim.cap, "Stop declaring at-least here");
    lindim_cmd->add_flag("--no-timing", lindim.no_timing, "Suppress the timing field");
    add_format_flag(lindim_cmd, &format);

    AnalyzeArgs analyze;
    CLI::App* analyze_cmd =
        app.add_subcommand("analyze", "Parameters, linearity, bound and column profile");
    analyze_cmd->add_option("--p", analyze.p, "Prime field size")->required();
    analyze_cmd->add_option("--d", analyze.d, "Minimum distance (>= 2)")->required();
    analyze_cmd->add_option("--basis", analyze.basis, "std or mod:XI,ETA");
    analyze_cmd->add_option("--k", analyze.k, "Analyze the p^k-word code")->required();
    analyze_cmd->add_option("--variant", analyze.variant, "lex or bminus")
        ->check(CLI::IsMember({"lex", "bminus"}));
    analyze_cmd->add_flag("--pi-check", analyze.pi_check, "Check the column-count target profile");
    analyze_cmd->add_flag("--weights", analyze.weights, "Include the weight distribution");
    analyze_cmd->add_flag("--no-timing", analyze.no_timing, "Suppress the timing field");
    add_format_flag(analyze_cmd, &format);

    CheckArgs check;
    CLI::App* check_cmd = app.add_subcommand("check", "Verify a named code family");
    check_cmd->add_option("--family", check.family, "simplex or solomon-stiffler")
        ->required()
        ->check(CLI::IsMember({"simplex", "solomon-stiffler"}));
    check_cmd->add_option("--p", check.p, "Prime field size")->required();
    check_cmd->add_option("--k", check.k, "Family dimension parameter")->required();
    check_cmd->add_option("--basis", check.basis, "std or mod:XI,ETA");
    check_cmd->add_option("--dprime", check.d_prime, "Repetition count (simplex)");
    check_cmd->add_option("--q", check.q, "Quotient of d' by p (solomon-stiffler)");
    check_cmd->add_option("--r", check.r, "Remainder of d' mod p (solomon-stiffler)");
    check_cmd->add_flag("--no-timing", check.no_timing, "Suppress the timing field");
    add_format_flag(check_cmd, &format);

    TableArgs table;
    CLI::App* table_cmd = app.add_subcommand("table", "Run a named parameter grid");
    table_cmd->add_option("--name", table.name, "thm1.4, p5d2 or p5d5")
        ->required()
        ->check(CLI::IsMember({"thm1.4", "p5d2", "p5d5"}));
    table_cmd->add_option("--jobs", table.jobs, "Concurrent grid cells");
    table_cmd->add_flag("--no-timing", table.no_timing, "Suppress the timing field");
    add_format_flag(table_cmd, &format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        const Format fmt = parse_format(format);
        if (gen_cmd->parsed()) {
            std::cout << run_generate(gen).render(fmt);
        } else if (lindim_cmd->parsed()) {
            std::cout << run_lindim(lindim).render(fmt);
        } else if (analyze_cmd->parsed()) {
            std::cout << run_analyze(analyze).render(fmt);
        } else if (check_cmd->parsed()) {
            std::cout << run_check(check).render(fmt);
        } else if (table_cmd->parsed()) {
            const TableReport report = run_table(table);
            std::cout << report.render(fmt);
            if (report.any_failed()) {
                for (const TableRow& row : report.rows) {
                    if (row.error == "search_budget") return kExitSearchBudget;
                }
                return 1;
            }
        }
    } catch (const SearchBudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitSearchBudget;
    } catch (const HypothesisViolated& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitHypothesis;
    } catch (const NotApplicable& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitHypothesis;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return kExitOk;
}
