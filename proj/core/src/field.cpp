#include "lexikit/field.hpp"

#include <limits>
#include <string>

namespace lexikit {

namespace {

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t q = 2; q * static_cast<uint64_t>(q) <= n; ++q) {
        if (n % q == 0) return false;
    }
    return true;
}

}  // namespace

PrimeModulus::PrimeModulus(uint32_t p) : p_(p) {
    if (!is_prime(p)) {
        throw Error("modulus " + std::to_string(p) + " is not prime");
    }
}

std::vector<uint8_t> base_p_digits(uint64_t a, PrimeModulus p) {
    std::vector<uint8_t> digits;
    const uint64_t q = p.value();
    while (a != 0) {
        digits.push_back(static_cast<uint8_t>(a % q));
        a /= q;
    }
    return digits;
}

uint64_t digits_to_value(std::span<const uint8_t> digits, PrimeModulus p) {
    const uint64_t q = p.value();
    uint64_t value = 0;
    for (size_t i = digits.size(); i-- > 0;) {
        if (value > (std::numeric_limits<uint64_t>::max() - digits[i]) / q) {
            throw DigitOverflow("digit string exceeds the 64-bit value window");
        }
        value = value * q + digits[i];
    }
    return value;
}

uint32_t digit_sum(uint64_t a, PrimeModulus p) {
    const uint64_t q = p.value();
    uint32_t s = 0;
    while (a != 0) {
        s += static_cast<uint32_t>(a % q);
        a /= q;
    }
    return s;
}

uint64_t digitwise_add(uint64_t a, uint64_t b, PrimeModulus p) {
    const uint64_t q = p.value();
    uint64_t result = 0;
    uint64_t scale = 1;
    while (a != 0 || b != 0) {
        const uint64_t digit = (a % q + b % q) % q;
        result += digit * scale;
        a /= q;
        b /= q;
        scale *= q;
    }
    return result;
}

uint64_t digitwise_sub(uint64_t a, uint64_t b, PrimeModulus p) {
    const uint64_t q = p.value();
    uint64_t result = 0;
    uint64_t scale = 1;
    while (a != 0 || b != 0) {
        const uint64_t digit = (a % q + q - b % q) % q;
        result += digit * scale;
        a /= q;
        b /= q;
        scale *= q;
    }
    return result;
}

uint8_t digit_inner_product(uint64_t a, std::span<const uint8_t> column, PrimeModulus p) {
    const uint64_t q = p.value();
    uint32_t acc = 0;
    for (size_t i = 0; i < column.size() && a != 0; ++i, a /= q) {
        acc += static_cast<uint32_t>(a % q) * column[i];
    }
    return static_cast<uint8_t>(acc % q);
}

uint64_t pow_u64(uint32_t base, uint32_t exp) {
    uint64_t result = 1;
    for (uint32_t i = 0; i < exp; ++i) {
        if (result > std::numeric_limits<uint64_t>::max() / base) {
            throw DigitOverflow("power exceeds the 64-bit value window");
        }
        result *= base;
    }
    return result;
}

}  // namespace lexikit
