#include <random>

#include "doctest.h"
#include "lexikit/greedy.hpp"

using namespace lexikit;

namespace {

Vector vec(std::initializer_list<uint8_t> coords) { return Vector(std::vector<uint8_t>(coords)); }

std::vector<std::string> digit_strings(const std::vector<Vector>& words, size_t pad) {
    std::vector<std::string> out;
    for (const Vector& w : words) out.push_back(to_digit_string(w, pad));
    return out;
}

}  // namespace

TEST_CASE("next_codeword base cases") {
    const CodeSpec spec(PrimeModulus(3), 2, Basis::standard());
    CHECK(next_codeword({}, spec).is_zero());

    const std::vector<Vector> just_zero{Vector::zero()};
    CHECK(next_codeword(just_zero, spec) == vec({1, 1}));
}

TEST_CASE("ternary d=2 standard words") {
    const CodeSpec spec(PrimeModulus(3), 2, Basis::standard());
    const LexCode code = lex_code(spec, 2);
    CHECK(digit_strings(code.words, 5) ==
          std::vector<std::string>{"00000", "11000", "22000", "10100", "01100", "20200", "02200",
                                   "10010", "01010"});
    CHECK(code.support == IndexSet{0, 1, 2, 3});

    // the eighth step from the first seven words
    const std::vector<Vector> first_seven(code.words.begin(), code.words.begin() + 7);
    CHECK(next_codeword(first_seven, spec) == vec({1, 0, 0, 1}));
}

TEST_CASE("resume rank never skips the answer") {
    const CodeSpec spec(PrimeModulus(3), 2, Basis::standard());
    const LexCode code = lex_code(spec, 2);
    for (size_t a = 1; a < code.words.size(); ++a) {
        const std::vector<Vector> prefix(code.words.begin(), code.words.begin() + a);
        const uint64_t resume = vector_rank(code.words[a - 1], spec.basis, spec.p) + 1;
        CHECK(next_codeword(prefix, spec, resume) == code.words[a]);
        CHECK(next_codeword(prefix, spec, 0) == code.words[a]);
    }
}

TEST_CASE("modified-basis words") {
    const LexCode c1 = lex_code(CodeSpec(PrimeModulus(3), 4, Basis::modified(3, 7)), 1);
    CHECK(to_digit_string(c1.words[1], 9) == "110100010");

    const LexCode c2 = lex_code(CodeSpec(PrimeModulus(3), 6, Basis::modified(6, 5)), 2);
    CHECK(to_digit_string(c2.words[1], 9) == "111111000");
    CHECK(to_digit_string(c2.words[3], 9) == "221001110");
}

TEST_CASE("search budget trips instead of scanning forever") {
    const CodeSpec spec(PrimeModulus(2), 8, Basis::standard());
    CHECK_THROWS_AS(lex_code(spec, 4, SearchLimits{5}), SearchBudgetExceeded);
}

TEST_CASE("b-greedy generators for the ternary d=2 code") {
    const GeneratorSet gens = bminus_generators(CodeSpec(PrimeModulus(3), 2, Basis::standard()), 1);
    auto [rg, map] = res_generators(gens);
    CHECK(digit_strings(rg.gens, 3) == std::vector<std::string>{"110", "101"});
}

TEST_CASE("binary weight-3 generator") {
    const GeneratorSet gens = bminus_generators(CodeSpec(PrimeModulus(2), 3, Basis::standard()), 0);
    CHECK(gens.gens.size() == 1);
    CHECK(to_digit_string(gens.gens[0]) == "111");
}

TEST_CASE("word_plus") {
    const CodeSpec spec(PrimeModulus(3), 2, Basis::standard());
    const LexCode code = lex_code(spec, 2);
    GeneratorSet gens{spec, {code.words[1], code.words[3]}};

    for (uint32_t i = 0; i < 2; ++i) CHECK(word_plus(pow_u64(3, i), gens) == gens.gens[i]);
    CHECK(word_plus(0, gens).is_zero());
    CHECK(word_plus(4, gens) == vec({2, 1, 1}));  // differs from the greedy word 01100
    CHECK(word_plus(4, gens) != code.words[4]);
    CHECK_THROWS_AS(word_plus(9, gens), DigitOverflow);
}

TEST_CASE("b-greedy code materialization") {
    const CodeSpec spec(PrimeModulus(3), 2, Basis::standard());

    SUBCASE("two generators give a [3,2,2] span") {
        const GeneratorSet gens = bminus_generators(spec, 1);
        const LexCode code = bminus_code(gens);
        CHECK(code.words.size() == 9);
        CHECK(code.words[0].is_zero());
        auto [res, map] = res_code(code);
        CHECK(res.support.size() == 3);
        uint32_t best = 100;
        for (size_t i = 1; i < res.words.size(); ++i)
            best = std::min(best, res.words[i].weight());
        CHECK(best == 2);
    }

    SUBCASE("single generator gives the repetition words") {
        const GeneratorSet gens = bminus_generators(spec, 0);
        const LexCode code = bminus_code(gens);
        auto [res, map] = res_code(code);
        CHECK(digit_strings(res.words, 2) == std::vector<std::string>{"00", "11", "22"});
    }

    SUBCASE("a single zero generator spans only zero") {
        GeneratorSet gens{spec, {Vector::zero()}};
        const LexCode code = bminus_code(gens);
        CHECK(code.words.size() == 3);
        for (const Vector& w : code.words) CHECK(w.is_zero());
    }
}

TEST_CASE("res keeps distances and records the index map") {
    const CodeSpec spec(PrimeModulus(3), 2, Basis::standard());
    const LexCode code = lex_code(spec, 2);
    auto [res, map] = res_code(code);
    CHECK(map == IndexSet{0, 1, 2, 3});
    CHECK(digit_strings(res.words, 4) ==
          std::vector<std::string>{"0000", "1100", "2200", "1010", "0110", "2020", "0220", "1001",
                                   "0101"});
    for (size_t i = 0; i < code.words.size(); ++i) {
        for (size_t j = i + 1; j < code.words.size(); ++j) {
            CHECK(hamming_distance(res.words[i], res.words[j]) ==
                  hamming_distance(code.words[i], code.words[j]));
        }
    }

    const LexCode lex1 = lex_code(spec, 1);
    auto [res1, map1] = res_code(lex1);
    CHECK(digit_strings(res1.words, 2) == std::vector<std::string>{"00", "11", "22"});

    LexCode zero_only{spec, {Vector::zero()}, {}};
    auto [resz, mapz] = res_code(zero_only);
    CHECK(resz.words.size() == 1);
    CHECK(resz.words[0].is_zero());
    CHECK(mapz.empty());
}

TEST_CASE("greedy invariants across a parameter grid") {
    std::mt19937_64 rng(20250810);
    const std::vector<Basis> bases{Basis::standard(), Basis::modified(0, 1), Basis::modified(1, 0),
                                   Basis::modified(0, 2), Basis::modified(2, 4)};
    for (uint32_t p : {2u, 3u, 5u}) {
        for (uint32_t d : {2u, 3u, 4u}) {
            for (const Basis& b : bases) {
                const CodeSpec spec(PrimeModulus(p), d, b);
                const LexCode code = lex_code(spec, 2);

                CHECK(code.words[0].is_zero());
                for (size_t a = 1; a < code.words.size(); ++a) {
                    CHECK(compare(code.words[a - 1], code.words[a], b, spec.p) ==
                          std::strong_ordering::less);
                }
                for (size_t i = 0; i < code.words.size(); ++i) {
                    for (size_t j = i + 1; j < code.words.size(); ++j) {
                        CHECK(hamming_distance(code.words[i], code.words[j]) >= d);
                    }
                }

                // additivity of the digit combination under digitwise sums
                GeneratorSet gens{spec, {code.words[1], code.words[p]}};
                std::uniform_int_distribution<uint64_t> dist(0, p * p - 1);
                for (int t = 0; t < 20; ++t) {
                    const uint64_t x = dist(rng);
                    const uint64_t y = dist(rng);
                    CHECK(word_plus(digitwise_add(x, y, spec.p), gens) ==
                          add(word_plus(x, gens), word_plus(y, gens), spec.p));
                }
            }
        }
    }
}

TEST_CASE("generator top support indices strictly increase") {
    for (uint32_t p : {2u, 3u}) {
        for (uint32_t d : {2u, 3u, 4u, 6u}) {
            for (const Basis& b : {Basis::standard(), Basis::modified(0, 2)}) {
                const CodeSpec spec(PrimeModulus(p), d, b);
                const GeneratorSet gens = bminus_generators(spec, 3);
                uint32_t previous_top = 0;
                bool first = true;
                for (const Vector& g : gens.gens) {
                    const IndexSet s = support(g, b, spec.p);
                    REQUIRE(!s.empty());
                    const uint32_t top = s.back();
                    if (!first) CHECK(top > previous_top);
                    previous_top = top;
                    first = false;
                }
                // first generator has minimal weight d
                CHECK(gens.gens[0].weight() == d);
            }
        }
    }
}

TEST_CASE("greedy prefix caches and extends") {
    GreedyPrefix prefix(CodeSpec(PrimeModulus(3), 2, Basis::standard()));
    CHECK(prefix.word(4) == vec({0, 1, 1}));
    CHECK(prefix.built() == 5);
    CHECK(prefix.word(8) == vec({0, 1, 0, 1}));
    CHECK(prefix.word(1) == vec({1, 1}));
}
