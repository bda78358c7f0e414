#include <random>

#include "doctest.h"
#include "lexikit/vecspace.hpp"

using namespace lexikit;

namespace {

Vector vec(std::initializer_list<uint8_t> coords) { return Vector(std::vector<uint8_t>(coords)); }

Vector random_vector(std::mt19937_64& rng, uint32_t p, uint32_t len) {
    std::uniform_int_distribution<uint32_t> digit(0, p - 1);
    std::vector<uint8_t> coords(len);
    for (auto& c : coords) c = static_cast<uint8_t>(digit(rng));
    return Vector(std::move(coords));
}

const std::vector<Basis> kBasisGrid = {
    Basis::standard(),    Basis::modified(0, 1), Basis::modified(1, 0),
    Basis::modified(0, 2), Basis::modified(3, 1), Basis::modified(2, 6),
};

}  // namespace

TEST_CASE("basis parsing round trips and rejects xi == eta") {
    CHECK(Basis::parse("std") == Basis::standard());
    CHECK(Basis::parse("mod:3,9") == Basis::modified(3, 9));
    CHECK(Basis::parse("mod:3,9").to_string() == "mod:3,9");
    CHECK_THROWS_AS(Basis::modified(4, 4), Error);
    CHECK_THROWS_AS(Basis::parse("mod:4"), Error);
    CHECK_THROWS_AS(Basis::parse("weird"), Error);
}

TEST_CASE("vectors trim trailing zeros") {
    CHECK(vec({1, 1, 0, 0, 0}).size() == 2);
    CHECK(vec({0, 0}).is_zero());
    CHECK(vec({1, 0, 1}).weight() == 2);
}

TEST_CASE("basis coordinate views") {
    const PrimeModulus p3(3);

    // e_0 + e_1 seen through f_0 = e_0 + e_1 is a single basis element
    const auto c = to_basis_coords(vec({1, 1}), Basis::modified(0, 1), p3);
    CHECK(c == std::vector<uint8_t>{1});

    // the standard view is the identity
    CHECK(to_basis_coords(vec({2, 0, 1}), Basis::standard(), p3) == std::vector<uint8_t>{2, 0, 1});

    // e_0 alone needs a correction at eta: e_0 = f_0 + 2 f_1 over F_3
    const auto e0 = to_basis_coords(vec({1}), Basis::modified(0, 1), p3);
    CHECK(e0 == std::vector<uint8_t>{1, 2});
    CHECK(from_basis_coords(e0, Basis::modified(0, 1), p3) == vec({1}));
}

TEST_CASE("from_basis_coords") {
    const PrimeModulus p3(3);
    const std::vector<uint8_t> f1{0, 1};
    CHECK(from_basis_coords(f1, Basis::modified(1, 3), p3) == vec({0, 1, 0, 1}));
    const std::vector<uint8_t> plain{2, 1};
    CHECK(from_basis_coords(plain, Basis::standard(), p3) == vec({2, 1}));
    const std::vector<uint8_t> ones{1, 1, 1, 1, 1, 1, 1};
    CHECK(from_basis_coords(ones, Basis::modified(1, 3), p3) == vec({1, 1, 1, 2, 1, 1, 1}));
}

TEST_CASE("round trip through every basis in the grid") {
    std::mt19937_64 rng(7);
    for (uint32_t p : {2u, 3u, 5u}) {
        const PrimeModulus mod(p);
        for (const Basis& b : kBasisGrid) {
            for (int i = 0; i < 50; ++i) {
                const Vector v = random_vector(rng, p, 10);
                CHECK(from_basis_coords(to_basis_coords(v, b, mod), b, mod) == v);
            }
        }
    }
}

TEST_CASE("order: standard basis examples") {
    const PrimeModulus p3(3);
    CHECK(compare(Vector::zero(), vec({1}), Basis::standard(), p3) == std::strong_ordering::less);
    CHECK(compare(vec({2, 1}), vec({2, 1}), Basis::standard(), p3) == std::strong_ordering::equal);
}

TEST_CASE("order: e_1 precedes e_0 under the modified basis F(0,1)") {
    const PrimeModulus p3(3);
    // basis coords of e_0 are (1,2), of e_1 are (0,1): top index decides
    CHECK(compare(vec({0, 1}), vec({1}), Basis::modified(0, 1), p3) == std::strong_ordering::less);
}

TEST_CASE("rank_to_vector enumerates the order") {
    const PrimeModulus p3(3);
    CHECK(rank_to_vector(3, Basis::standard(), p3) == vec({0, 1}));
    CHECK(rank_to_vector(0, Basis::modified(4, 2), p3).is_zero());
    CHECK(rank_to_vector(1, Basis::modified(0, 1), p3) == vec({1, 1}));
}

TEST_CASE("rank round trip and order agreement") {
    std::mt19937_64 rng(99);
    for (uint32_t p : {2u, 3u, 5u}) {
        const PrimeModulus mod(p);
        for (const Basis& b : kBasisGrid) {
            const uint64_t limit = pow_u64(p, 6);
            for (uint64_t m = 0; m < limit; m += (p == 2 ? 1 : 7)) {
                CHECK(vector_rank(rank_to_vector(m, b, mod), b, mod) == m);
            }
            // compare() agrees with natural rank order
            std::uniform_int_distribution<uint64_t> dist(0, limit - 1);
            for (int i = 0; i < 100; ++i) {
                const uint64_t m1 = dist(rng);
                const uint64_t m2 = dist(rng);
                const Vector v1 = rank_to_vector(m1, b, mod);
                const Vector v2 = rank_to_vector(m2, b, mod);
                CHECK(compare(v1, v2, b, mod) == (m1 <=> m2));
            }
        }
    }
}

TEST_CASE("hamming distance") {
    CHECK(hamming_distance(vec({1, 1}), vec({1, 0, 1})) == 2);
    CHECK(hamming_distance(vec({1, 2, 0, 1}), vec({1, 2, 0, 1})) == 0);
    CHECK(hamming_distance(vec({1, 1}), vec({2, 2})) == 2);
}

TEST_CASE("hamming distance is a metric") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        const Vector a = random_vector(rng, 5, 8);
        const Vector b = random_vector(rng, 5, 8);
        const Vector c = random_vector(rng, 5, 8);
        CHECK(hamming_distance(a, b) == hamming_distance(b, a));
        CHECK((hamming_distance(a, b) == 0) == (a == b));
        CHECK(hamming_distance(a, c) <= hamming_distance(a, b) + hamming_distance(b, c));
    }
}

TEST_CASE("support in both views") {
    const PrimeModulus p3(3);
    CHECK(support(vec({1, 0, 1}), Basis::standard(), p3) == IndexSet{0, 2});
    CHECK(support(Vector::zero(), Basis::modified(2, 0), p3).empty());
    CHECK(support(vec({1, 1}), Basis::modified(0, 1), p3) == IndexSet{0});
}

TEST_CASE("standard and modified coordinates differ only at eta") {
    std::mt19937_64 rng(13);
    const PrimeModulus p5(5);
    const Basis b = Basis::modified(2, 6);
    for (int i = 0; i < 100; ++i) {
        const Vector v = random_vector(rng, 5, 9);
        const auto coords = to_basis_coords(v, b, p5);
        const size_t n = std::max(coords.size(), v.size());
        for (size_t j = 0; j < n; ++j) {
            if (j == 6) continue;
            CHECK((j < coords.size() ? coords[j] : 0) == v.coord(j));
        }
    }
}

TEST_CASE("restriction") {
    CHECK(restrict_to(vec({1, 0, 1}), IndexSet{0, 1, 2}) == vec({1, 0, 1}));
    CHECK(restrict_to(vec({1, 1}), IndexSet{}).is_zero());
    CHECK(restrict_to(vec({1, 1}), IndexSet{1, 3}) == vec({1, 0}));
}

TEST_CASE("digit strings") {
    CHECK(to_digit_string(vec({1, 1}), 5) == "11000");
    CHECK(to_digit_string(Vector::zero(), 3) == "000");
    CHECK(to_digit_string(vec({11, 0, 2})) == "b02");
}

TEST_CASE("rank overflow guard") {
    const PrimeModulus p3(3);
    CHECK_THROWS_AS(rank_to_vector(100, Basis::standard(), p3, 2), SearchBudgetExceeded);
}
