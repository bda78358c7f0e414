#include <random>

#include "doctest.h"
#include "lexikit/field.hpp"

using namespace lexikit;

TEST_CASE("prime modulus accepts primes and rejects the rest") {
    CHECK(PrimeModulus(2).value() == 2);
    CHECK(PrimeModulus(3).value() == 3);
    CHECK(PrimeModulus(97).value() == 97);
    CHECK_THROWS_AS(PrimeModulus(1), Error);
    CHECK_THROWS_AS(PrimeModulus(4), Error);
    CHECK_THROWS_AS(PrimeModulus(91), Error);  // 7 * 13
}

TEST_CASE("base-p digits") {
    CHECK(base_p_digits(7, PrimeModulus(3)) == std::vector<uint8_t>{1, 2});
    CHECK(base_p_digits(0, PrimeModulus(5)).empty());
    CHECK(base_p_digits(13, PrimeModulus(3)) == std::vector<uint8_t>{1, 1, 1});
}

TEST_CASE("digit round trip below a million") {
    for (uint32_t p : {2u, 3u, 5u, 7u}) {
        const PrimeModulus mod(p);
        for (uint64_t a = 0; a < 1000000; a += 997) {
            CHECK(digits_to_value(base_p_digits(a, mod), mod) == a);
        }
        CHECK(digits_to_value(base_p_digits(999999, mod), mod) == 999999);
    }
}

TEST_CASE("digitwise addition") {
    const PrimeModulus p3(3);
    CHECK(digitwise_add(7, 13, p3) == 11);
    CHECK(digitwise_add(123456, 0, p3) == 123456);
    CHECK(digitwise_add(4, 4, PrimeModulus(5)) == 3);
}

TEST_CASE("digitwise subtraction") {
    const PrimeModulus p3(3);
    CHECK(digitwise_sub(7, 13, p3) == 21);
    CHECK(digitwise_sub(4242, 4242, p3) == 0);
    CHECK(digitwise_sub(0, 1, p3) == 2);
}

TEST_CASE("add and sub are inverse, add is commutative and associative") {
    std::mt19937_64 rng(20240811);
    for (uint32_t p : {2u, 3u, 5u, 7u}) {
        const PrimeModulus mod(p);
        const uint64_t limit = pow_u64(p, 8);
        std::uniform_int_distribution<uint64_t> dist(0, limit - 1);
        for (int i = 0; i < 300; ++i) {
            const uint64_t a = dist(rng);
            const uint64_t b = dist(rng);
            const uint64_t c = dist(rng);
            CHECK(digitwise_add(digitwise_sub(a, b, mod), b, mod) == a);
            CHECK(digitwise_add(a, b, mod) == digitwise_add(b, a, mod));
            CHECK(digitwise_add(digitwise_add(a, b, mod), c, mod) ==
                  digitwise_add(a, digitwise_add(b, c, mod), mod));
        }
    }
}

TEST_CASE("digit inner product") {
    const PrimeModulus p3(3);
    const std::vector<uint8_t> column{1, 1, 2};
    CHECK(digit_inner_product(7, column, p3) == 0);  // 1*1 + 2*1 + 0*2
    CHECK(digit_inner_product(0, column, p3) == 0);

    // a power of p against the matching unit column
    for (uint32_t i = 0; i < 3; ++i) {
        std::vector<uint8_t> unit(3, 0);
        unit[i] = 1;
        CHECK(digit_inner_product(pow_u64(3, i), unit, p3) == 1);
    }

    // digits beyond the column height are ignored
    CHECK(digit_inner_product(7 + 27 * 2, std::span(column).first(2), p3) ==
          digit_inner_product(7, std::span(column).first(2), p3));
}

TEST_CASE("digit sum") {
    CHECK(digit_sum(7, PrimeModulus(3)) == 3);   // 1 + 2
    CHECK(digit_sum(13, PrimeModulus(3)) == 3);  // 1 + 1 + 1
    CHECK(digit_sum(0, PrimeModulus(5)) == 0);
}
