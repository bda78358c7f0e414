#ifndef LEXIKIT_TOOLS_COMMANDS_HPP
#define LEXIKIT_TOOLS_COMMANDS_HPP

#include <string>

#include "report.hpp"

namespace lexikit::cli {

/// Search budget from LEXIKIT_MAX_TOP_INDEX, falling back to the default.
SearchLimits limits_from_env();

struct GenArgs {
    uint32_t p = 3;
    uint32_t d = 2;
    std::string basis = "std";
    uint32_t k = 1;
    std::string variant = "lex";  // lex | bminus
    bool res = false;
    std::string engine = "optimized";  // optimized | naive (debug only)
    bool no_timing = false;
};

struct LindimArgs {
    uint32_t p = 3;
    uint32_t d = 2;
    std::string basis = "std";
    uint32_t cap = 0;  // 0 = default for p (7 when p = 3, 3 when p >= 5, 4 when p = 2)
    bool no_timing = false;
};

struct AnalyzeArgs {
    uint32_t p = 3;
    uint32_t d = 2;
    std::string basis = "std";
    uint32_t k = 1;
    std::string variant = "bminus";
    bool pi_check = false;
    bool weights = false;
    bool no_timing = false;
};

struct CheckArgs {
    std::string family;  // simplex | solomon-stiffler
    uint32_t p = 3;
    uint32_t k = 1;
    std::string basis = "std";
    uint32_t d_prime = 2;  // simplex
    uint64_t q = 0;        // solomon-stiffler
    uint32_t r = 0;
    bool no_timing = false;
};

struct TableArgs {
    std::string name;  // thm1.4 | p5d2 | p5d5
    uint32_t jobs = 1;
    bool no_timing = false;
};

Report run_generate(const GenArgs& args);
Report run_lindim(const LindimArgs& args);
Report run_analyze(const AnalyzeArgs& args);
Report run_check(const CheckArgs& args);
TableReport run_table(const TableArgs& args);

}  // namespace lexikit::cli

#endif
