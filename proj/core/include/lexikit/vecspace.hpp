#ifndef LEXIKIT_VECSPACE_HPP
#define LEXIKIT_VECSPACE_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lexikit/field.hpp"

namespace lexikit {

/// Every vector produced by this library lives below this coordinate index
/// unless a caller raises the limit explicitly.  It guards greedy scans
/// against runaway growth.
inline constexpr uint32_t kDefaultMaxIndex = 64;

/// Either the standard basis or the one-modification basis whose xi-th
/// element is e_xi + e_eta (all other elements unchanged).
class Basis {
  public:
    static Basis standard() { return Basis(); }
    static Basis modified(uint32_t xi, uint32_t eta);

    bool is_modified() const { return modified_; }
    uint32_t xi() const { return xi_; }
    uint32_t eta() const { return eta_; }

    /// "std" or "mod:XI,ETA" (the CLI flag grammar).
    std::string to_string() const;
    static Basis parse(const std::string& text);

    bool operator==(const Basis&) const = default;

  private:
    Basis() = default;
    bool modified_ = false;
    uint32_t xi_ = 0;
    uint32_t eta_ = 0;
};

/// Finite-support vector over F_p stored in standard coordinates, least
/// index first, trailing zeros trimmed.  Immutable after construction.
class Vector {
  public:
    Vector() = default;
    explicit Vector(std::vector<uint8_t> coords);

    static Vector zero() { return Vector(); }

    /// Coordinate at index i (0 beyond the stored length).
    uint8_t coord(size_t i) const { return i < coords_.size() ? coords_[i] : 0; }

    /// Stored length = highest nonzero index + 1 (0 for the zero vector).
    size_t size() const { return coords_.size(); }
    bool is_zero() const { return coords_.empty(); }
    const std::vector<uint8_t>& coords() const { return coords_; }

    uint32_t weight() const;

    bool operator==(const Vector&) const = default;
    /// Container order only; the code order lives in compare().
    std::strong_ordering operator<=>(const Vector& other) const;

  private:
    std::vector<uint8_t> coords_;
};

using IndexSet = std::vector<uint32_t>;  // sorted ascending, distinct

/// Number of coordinates where u and v differ.  Basis-independent.
uint32_t hamming_distance(const Vector& u, const Vector& v);

Vector add(const Vector& u, const Vector& v, PrimeModulus p);
Vector sub(const Vector& u, const Vector& v, PrimeModulus p);
Vector scale(const Vector& v, uint8_t c, PrimeModulus p);

/// Coordinates of v in basis B.  For the modified basis only the eta entry
/// changes: result[eta] = v<eta> - v<xi> mod p.
std::vector<uint8_t> to_basis_coords(const Vector& v, const Basis& b, PrimeModulus p);

/// Inverse of to_basis_coords: the standard coordinate at eta becomes
/// c[eta] + c[xi] mod p.
Vector from_basis_coords(std::span<const uint8_t> coords, const Basis& b, PrimeModulus p);

/// Total order induced by B: compare basis coordinates at the highest
/// differing index.
std::strong_ordering compare(const Vector& u, const Vector& v, const Basis& b, PrimeModulus p);

/// Indices with nonzero coordinate in the requested basis view.
IndexSet support(const Vector& v, const Basis& b, PrimeModulus p);

/// Union of standard supports of a word list.
IndexSet joint_support(std::span<const Vector> words);

/// Keep exactly the coordinates listed in s, reindexed 0..|s|-1.
Vector restrict_to(const Vector& v, const IndexSet& s);

/// The m-th vector in the order induced by B: its basis coordinates are the
/// base-p digits of m.  Strictly increasing in m; rank 0 is the zero vector.
Vector rank_to_vector(uint64_t m, const Basis& b, PrimeModulus p,
                      uint32_t max_index = kDefaultMaxIndex);

/// Declared inverse of rank_to_vector.  Throws DigitOverflow when the rank
/// does not fit in 64 bits.
uint64_t vector_rank(const Vector& v, const Basis& b, PrimeModulus p);

/// Digit-string serialization, least index first ("11000").  Residues above
/// nine use letters a..z.  Padded with trailing zeros to pad_len.
std::string to_digit_string(const Vector& v, size_t pad_len = 0);

}  // namespace lexikit

#endif
