#include <atomic>
#include "commands.hpp"

#include <chrono>
#include <cstdlib>
#include <thread>

#include "lexikit/oracle.hpp"

namespace lexikit::cli {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string variant_name(Variant v) { return v == Variant::Greedy ? "lex" : "bminus"; }

Variant parse_variant(const std::string& text) {
    if (text == "lex") return Variant::Greedy;
    if (text == "bminus") return Variant::BGreedy;
    throw Error("unknown variant '" + text + "' (expected lex or bminus)");
}

std::vector<std::string> word_strings(std::span<const Vector> words, size_t pad) {
    std::vector<std::string> out;
    out.reserve(words.size());
    for (const Vector& w : words) out.push_back(to_digit_string(w, pad));
    return out;
}

ProfileInfo profile_info(const ColumnProfile& profile) {
    ProfileInfo info;
    info.ambient = profile.ambient;
    for (const auto& [column, count] : profile.counts) {
        info.counts[profile_column_key(column)] = count;
    }
    return info;
}

GeneratorSet naive_bminus_generators(const CodeSpec& spec, uint32_t k, uint64_t ceiling = 0) {
    GeneratorSet gens{spec, {}};
    std::vector<Vector> span_words{Vector::zero()};
    for (uint32_t i = 0; i <= k; ++i) {
        Vector g = naive_next_codeword(span_words, spec, ceiling);
        const size_t previous = span_words.size();
        for (uint32_t alpha = 1; alpha < spec.p.value(); ++alpha) {
            const Vector scaled = scale(g, static_cast<uint8_t>(alpha), spec.p);
            for (size_t j = 0; j < previous; ++j) {
                span_words.push_back(add(span_words[j], scaled, spec.p));
            }
        }
        gens.gens.push_back(std::move(g));
    }
    return gens;
}

uint32_t default_cap(uint32_t p) {
    if (p == 2) return 4;
    if (p == 3) return 7;
    return 3;
}

}  // namespace

SearchLimits limits_from_env() {
    SearchLimits limits;
    if (const char* raw = std::getenv("LEXIKIT_MAX_TOP_INDEX")) {
        const long value = std::atol(raw);
        if (value <= 0) throw Error("LEXIKIT_MAX_TOP_INDEX must be a positive integer");
        limits.max_top_index = static_cast<uint32_t>(value);
    }
    return limits;
}

Report run_generate(const GenArgs& args) {
    const auto start = Clock::now();
    const SearchLimits limits = limits_from_env();
    const CodeSpec spec(PrimeModulus(args.p), args.d, Basis::parse(args.basis),
                        parse_variant(args.variant));

    Report report;
    report.command = "gen";
    report.spec = {args.p, args.d, args.basis, args.variant, args.k};

    LexCode code{spec, {}, {}};
    std::optional<GeneratorSet> gens;
    if (spec.variant == Variant::Greedy) {
        if (args.engine == "naive") {
            code = naive_lex_code(spec, args.k);
        } else {
            code = lex_code(spec, args.k, limits);
        }
    } else {
        const uint32_t rows = args.k == 0 ? 0 : args.k - 1;
        if (args.k == 0) {
            code.words.push_back(Vector::zero());
        } else {
            gens = args.engine == "naive" ? naive_bminus_generators(spec, rows)
                                          : bminus_generators(spec, rows, limits);
            code = bminus_code(*gens);
        }
    }

    const IndexSet original_support = joint_support(code.words);
    report.support = original_support;
    if (args.res) {
        auto [res, map] = res_code(code);
        report.words = word_strings(res.words, res.support.size());
        if (gens) {
            auto [rg, gmap] = res_generators(*gens);
            report.generators = word_strings(rg.gens, map.size());
        }
    } else {
        const size_t pad = original_support.empty() ? 0 : original_support.back() + 1;
        report.words = word_strings(code.words, pad);
        if (gens) report.generators = word_strings(gens->gens, pad);
    }

    CodeParams params;
    params.n = original_support.size();
    params.k = args.k;
    if (code.words.size() >= 2) {
        params.dmin = gens ? min_distance_linear(*gens) : min_distance(code.words);
        report.params = params;
        report.griesmer = GriesmerInfo{griesmer_bound(spec.p, params.k, params.dmin),
                                       static_cast<int64_t>(params.n) -
                                           static_cast<int64_t>(griesmer_bound(
                                               spec.p, params.k, params.dmin))};
    }
    report.linear = closure_is_linear(code.words, spec.p);

    if (!args.no_timing) report.timing_ms = elapsed_ms(start);
    return report;
}

Report run_lindim(const LindimArgs& args) {
    const auto start = Clock::now();
    const SearchLimits limits = limits_from_env();
    const CodeSpec spec(PrimeModulus(args.p), args.d, Basis::parse(args.basis));
    const uint32_t cap = args.cap == 0 ? default_cap(args.p) : args.cap;

    Report report;
    report.command = "lindim";
    report.spec = {args.p, args.d, args.basis, "lex", cap};

    const LinearDimension dim = max_linear_k(spec, cap, limits);
    LindimInfo info{dim.finite, dim.k, std::nullopt};
    if (dim.finite) {
        if (const auto witness = nonlinearity_witness(spec, dim.k + 1, limits)) {
            const size_t pad = std::max(witness->greedy_word.size(), witness->combination.size());
            info.witness = WitnessInfo{witness->a, to_digit_string(witness->greedy_word, pad),
                                       to_digit_string(witness->combination, pad)};
        }
    }
    report.lindim = info;

    if (!args.no_timing) report.timing_ms = elapsed_ms(start);
    return report;
}

Report run_analyze(const AnalyzeArgs& args) {
    const auto start = Clock::now();
    const SearchLimits limits = limits_from_env();
    const CodeSpec spec(PrimeModulus(args.p), args.d, Basis::parse(args.basis),
                        parse_variant(args.variant));
    if (args.k == 0) throw Error("analyze needs k >= 1");

    Report report;
    report.command = "analyze";
    report.spec = {args.p, args.d, args.basis, args.variant, args.k};

    // Rows are the words at indices p^0 .. p^(k-1); they generate the
    // p^k-word code under analysis.
    GeneratorSet rows{spec, {}};
    if (spec.variant == Variant::BGreedy) {
        rows = bminus_generators(spec, args.k - 1, limits);
        report.linear = true;
    } else {
        GreedyPrefix prefix(spec, limits);
        for (uint32_t i = 0; i < args.k; ++i) {
            rows.gens.push_back(prefix.word(pow_u64(args.p, i)));
        }
        report.linear = is_linear_lex(spec, args.k, limits);
    }

    const ColumnProfile profile = column_profile(rows);
    report.profile = profile_info(profile);
    auto [res_rows, map] = res_generators(rows);
    report.support = map;
    report.generators = word_strings(res_rows.gens, map.size());

    CodeParams params;
    params.n = profile.ambient.size();
    params.k = args.k;
    if (spec.variant == Variant::BGreedy || *report.linear) {
        params.dmin = min_distance_linear(rows);
    } else {
        params.dmin = min_distance(lex_code(spec, args.k, limits).words);
    }
    report.params = params;
    const uint64_t bound = griesmer_bound(spec.p, params.k, params.dmin);
    report.griesmer =
        GriesmerInfo{bound, static_cast<int64_t>(params.n) - static_cast<int64_t>(bound)};

    if (args.pi_check) {
        const PiParams pi = PiParams::make(spec.p, args.k - 1, args.d);
        report.pi = PiInfo{pi.q, pi.r, pi.d_prime,
                           args.k >= 1 && is_pi_distributed(rows, pi)};
    }
    if (args.weights) report.weights = weight_enumerator(rows);

    if (!args.no_timing) report.timing_ms = elapsed_ms(start);
    return report;
}

Report run_check(const CheckArgs& args) {
    const auto start = Clock::now();
    const SearchLimits limits = limits_from_env();
    const PrimeModulus p(args.p);

    Report report;
    report.command = "check";

    if (args.family == "simplex") {
        if (args.k == 0) throw HypothesisViolated("simplex check needs k >= 1");
        const uint64_t d = pow_u64(args.p, args.k - 1) * args.d_prime;
        const CodeSpec spec(p, static_cast<uint32_t>(d), Basis::parse(args.basis),
                            Variant::BGreedy);
        report.spec = {args.p, static_cast<uint32_t>(d), args.basis, "bminus", args.k};
        const GeneratorSet gens = bminus_generators(spec, args.k - 1, limits);
        const FamilyCheck check = check_simplex_repetition(gens, args.d_prime);
        report.family = FamilyInfo{"simplex", check.ok};
        report.params = check.params;
        report.profile = profile_info(column_profile(gens));
        auto [rg, map] = res_generators(gens);
        report.generators = word_strings(rg.gens, map.size());
        report.support = map;
    } else if (args.family == "solomon-stiffler") {
        if (args.r == 0 || args.r >= args.p) {
            throw HypothesisViolated("solomon-stiffler needs 0 < r < p");
        }
        const uint64_t d = pow_u64(args.p, args.k - 1) * (args.p * args.q + args.r);
        const CodeSpec spec(p, static_cast<uint32_t>(d), Basis::parse(args.basis),
                            Variant::BGreedy);
        report.spec = {args.p, static_cast<uint32_t>(d), args.basis, "bminus", args.k + 1};
        const GeneratorSet gens = bminus_generators(spec, args.k, limits);
        const PiParams pi = PiParams::make(p, args.k, d);
        const FamilyCheck check = check_solomon_stiffler(gens, pi);
        report.family = FamilyInfo{"solomon-stiffler", check.ok};
        report.params = check.params;
        report.pi = PiInfo{pi.q, pi.r, pi.d_prime, is_pi_distributed(gens, pi)};
        report.profile = profile_info(column_profile(gens));
        auto [rg, map] = res_generators(gens);
        report.generators = word_strings(rg.gens, map.size());
        report.support = map;
    } else {
        throw Error("unknown family '" + args.family + "'");
    }

    if (!args.no_timing) report.timing_ms = elapsed_ms(start);
    return report;
}

namespace {

struct TableCell {
    uint32_t p;
    uint32_t d;
    Basis basis;
    uint32_t cap;
};

std::vector<TableCell> table_grid(const std::string& name) {
    std::vector<TableCell> cells;
    if (name == "thm1.4") {
        for (const Basis& b :
             {Basis::modified(0, 9), Basis::modified(5, 9), Basis::modified(8, 9),
              Basis::modified(0, 10), Basis::modified(3, 12), Basis::standard(),
              Basis::modified(9, 0), Basis::modified(2, 5)}) {
            cells.push_back({3, 6, b, 7});
        }
    } else if (name == "p5d2") {
        for (const Basis& b :
             {Basis::modified(0, 1), Basis::modified(0, 2), Basis::modified(1, 0),
              Basis::modified(1, 3), Basis::modified(2, 0), Basis::modified(2, 5),
              Basis::modified(3, 0), Basis::modified(3, 1), Basis::modified(4, 2),
              Basis::modified(5, 0)}) {
            cells.push_back({5, 2, b, 3});
        }
    } else if (name == "p5d5") {
        for (const Basis& b :
             {Basis::modified(2, 3), Basis::modified(2, 4), Basis::modified(2, 5),
              Basis::modified(2, 6), Basis::modified(2, 1), Basis::modified(0, 1),
              Basis::modified(1, 2), Basis::modified(3, 2)}) {
            cells.push_back({5, 5, b, 3});
        }
    } else {
        throw Error("unknown table '" + name + "' (expected thm1.4, p5d2 or p5d5)");
    }
    return cells;
}

TableRow table_cell_row(const TableCell& cell, const SearchLimits& limits) {
    TableRow row;
    row.basis = cell.basis.to_string();
    if (cell.basis.is_modified()) {
        row.xi = cell.basis.xi();
        row.eta = cell.basis.eta();
    }
    try {
        const CodeSpec spec(PrimeModulus(cell.p), cell.d, cell.basis);
        const LinearDimension dim = max_linear_k(spec, cell.cap, limits);
        row.verdict = dim.finite ? "finite" : "at_least";
        row.k = dim.k;
    } catch (const SearchBudgetExceeded&) {
        row.verdict = "error";
        row.error = "search_budget";
    } catch (const Error& e) {
        row.verdict = "error";
        row.error = e.what();
    }
    return row;
}

}  // namespace

TableReport run_table(const TableArgs& args) {
    const auto start = Clock::now();
    const SearchLimits limits = limits_from_env();
    const auto cells = table_grid(args.name);

    TableReport report;
    report.name = args.name;
    report.rows.resize(cells.size());

    const uint32_t jobs = std::max<uint32_t>(1, args.jobs);
    if (jobs == 1) {
        for (size_t i = 0; i < cells.size(); ++i) report.rows[i] = table_cell_row(cells[i], limits);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> workers;
        const uint32_t count = std::min<uint32_t>(jobs, cells.size());
        workers.reserve(count);
        for (uint32_t t = 0; t < count; ++t) {
            workers.emplace_back([&]() {
                for (size_t i = next.fetch_add(1); i < cells.size(); i = next.fetch_add(1)) {
                    report.rows[i] = table_cell_row(cells[i], limits);
                }
            });
        }
        for (std::thread& w : workers) w.join();
    }

    if (!args.no_timing) report.timing_ms = elapsed_ms(start);
    return report;
}

}  // namespace lexikit::cli
