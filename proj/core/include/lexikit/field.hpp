#ifndef LEXIKIT_FIELD_HPP
#define LEXIKIT_FIELD_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "lexikit/errors.hpp"

namespace lexikit {

/// A prime residue modulus.  Primality is checked by trial division at
/// construction, so a non-prime p is a construction-time error and every
/// downstream computation may assume a prime field.
class PrimeModulus {
  public:
    explicit PrimeModulus(uint32_t p);

    uint32_t value() const { return p_; }

    uint8_t add(uint8_t a, uint8_t b) const { return static_cast<uint8_t>((a + b) % p_); }
    uint8_t sub(uint8_t a, uint8_t b) const { return static_cast<uint8_t>((a + p_ - b) % p_); }
    uint8_t mul(uint8_t a, uint8_t b) const {
        return static_cast<uint8_t>((static_cast<uint32_t>(a) * b) % p_);
    }
    uint8_t neg(uint8_t a) const { return static_cast<uint8_t>((p_ - a) % p_); }

    bool operator==(const PrimeModulus&) const = default;

  private:
    uint32_t p_;
};

/// Base-p digits of a natural number, least-significant first, with no
/// trailing zeros.  Reconstruction: a = sum digits[i] * p^i.
std::vector<uint8_t> base_p_digits(uint64_t a, PrimeModulus p);

/// Inverse of base_p_digits.  Throws DigitOverflow when the value does not
/// fit in 64 bits.
uint64_t digits_to_value(std::span<const uint8_t> digits, PrimeModulus p);

/// Sum of the base-p digits of a (as a plain natural number, no reduction).
uint32_t digit_sum(uint64_t a, PrimeModulus p);

/// Digitwise modular addition of naturals in base p: no carries, the i-th
/// digit of the result is (a_i + b_i) mod p.
uint64_t digitwise_add(uint64_t a, uint64_t b, PrimeModulus p);

/// Digitwise modular subtraction: the i-th digit is (a_i - b_i) mod p.
uint64_t digitwise_sub(uint64_t a, uint64_t b, PrimeModulus p);

/// Inner product of the digit string of a against a column vector:
/// sum over i < column height of a_i * A_i in F_p.  Digits of a beyond the
/// column height are ignored.
uint8_t digit_inner_product(uint64_t a, std::span<const uint8_t> column, PrimeModulus p);

/// p^e with overflow detection (DigitOverflow past 64 bits).
uint64_t pow_u64(uint32_t base, uint32_t exp);

}  // namespace lexikit

#endif
