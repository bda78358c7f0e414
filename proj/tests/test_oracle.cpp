#include <future>

#include "doctest.h"
#include "lexikit/analysis.hpp"
#include "lexikit/oracle.hpp"

using namespace lexikit;

namespace {

Vector vec(std::initializer_list<uint8_t> coords) { return Vector(std::vector<uint8_t>(coords)); }

}  // namespace

TEST_CASE("naive step base cases") {
    const CodeSpec spec(PrimeModulus(3), 2, Basis::standard());
    CHECK(naive_next_codeword({}, spec).is_zero());

    const std::vector<Vector> just_zero{Vector::zero()};
    CHECK(naive_next_codeword(just_zero, spec) == vec({1, 1}));
}

TEST_CASE("naive step matches the nine worked words") {
    const CodeSpec spec(PrimeModulus(3), 2, Basis::standard());
    const LexCode fast = lex_code(spec, 2);
    std::vector<Vector> words;
    for (size_t a = 0; a < 9; ++a) {
        words.push_back(naive_next_codeword(words, spec));
        CHECK(words.back() == fast.words[a]);
    }
}

TEST_CASE("rank ceiling trips") {
    const CodeSpec spec(PrimeModulus(2), 6, Basis::standard());
    const std::vector<Vector> just_zero{Vector::zero()};
    CHECK_THROWS_AS(naive_next_codeword(just_zero, spec, 8), RankCeilingExceeded);
}

TEST_CASE("closure oracle") {
    const PrimeModulus p3(3);
    const LexCode lex1 = lex_code(CodeSpec(p3, 2, Basis::standard()), 1);
    CHECK(closure_is_linear(lex1.words, p3));

    const LexCode lex2 = lex_code(CodeSpec(p3, 2, Basis::standard()), 2);
    CHECK_FALSE(closure_is_linear(lex2.words, p3));

    const std::vector<Vector> trivial{Vector::zero()};
    CHECK(closure_is_linear(trivial, p3));
}

TEST_CASE("optimized construction equals the naive oracle over the grid") {
    struct Cell {
        uint32_t p, d;
        Basis basis;
    };
    std::vector<Cell> cells;
    for (uint32_t p : {2u, 3u, 5u}) {
        for (uint32_t d : {2u, 3u, 4u}) {
            for (const Basis& b : {Basis::standard(), Basis::modified(0, 1), Basis::modified(1, 0),
                                   Basis::modified(0, 2)}) {
                cells.push_back({p, d, b});
            }
        }
    }

    std::vector<std::future<std::string>> results;
    for (const Cell& cell : cells) {
        results.push_back(std::async(std::launch::async, [cell]() -> std::string {
            const CodeSpec spec(PrimeModulus(cell.p), cell.d, cell.basis);
            const LexCode fast = lex_code(spec, 2);
            const LexCode slow = naive_lex_code(spec, 2);
            if (fast.words != slow.words) return "word mismatch";
            for (uint32_t k = 1; k <= 2; ++k) {
                const std::vector<Vector> prefix(fast.words.begin(),
                                                 fast.words.begin() + pow_u64(cell.p, k));
                if (is_linear_lex(spec, k) != closure_is_linear(prefix, spec.p)) {
                    return "linearity mismatch at k=" + std::to_string(k);
                }
            }
            return "";
        }));
    }
    for (size_t i = 0; i < cells.size(); ++i) {
        const std::string failure = results[i].get();
        CAPTURE(cells[i].p);
        CAPTURE(cells[i].d);
        CAPTURE(cells[i].basis.to_string());
        CHECK(failure.empty());
    }
}
