#ifndef LEXIKIT_ANALYSIS_HPP
#define LEXIKIT_ANALYSIS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "lexikit/greedy.hpp"

namespace lexikit {

/// Length, dimension and minimum distance of a punctured code.
struct CodeParams {
    uint64_t n = 0;
    uint32_t k = 0;
    uint32_t dmin = 0;

    bool operator==(const CodeParams&) const = default;
};

/// g_p(k, d) = sum over i < k of ceil(d / p^i).  Any [n, k, d] code over F_p
/// has n >= g_p(k, d).
uint64_t griesmer_bound(PrimeModulus p, uint32_t k, uint64_t d);

/// Multiset of generator-matrix columns, counted over the union of the row
/// supports.  Keys are column vectors read bottom row last (entry i is row
/// i's coordinate).
struct ColumnProfile {
    std::map<std::vector<uint8_t>, uint32_t> counts;
    IndexSet ambient;

    uint32_t count(const std::vector<uint8_t>& column) const {
        const auto it = counts.find(column);
        return it == counts.end() ? 0 : it->second;
    }
};

ColumnProfile column_profile(std::span<const Vector> rows);
ColumnProfile column_profile(const GeneratorSet& gens);

/// All height-(m+1) columns whose lowest-index nonzero entry is 1, in
/// profile key order.  There are (p^(m+1) - 1) / (p - 1) of them.
std::vector<std::vector<uint8_t>> projective_columns(PrimeModulus p, uint32_t m);

/// The decomposition d = p^(k-1) * (p*q + r) with 0 <= r < p that drives
/// the column-count target profile.
struct PiParams {
    PrimeModulus p;
    uint32_t k;
    uint64_t d;
    uint64_t d_prime;  // = p*q + r
    uint64_t q;
    uint32_t r;

    /// Throws HypothesisViolated when p^(k-1) does not divide d.
    static PiParams make(PrimeModulus p, uint32_t k, uint64_t d);
};

/// Target column count for a height-(l+1) column, l <= k: zero off the
/// normalized set, ceil(d/p^l) in the generic case, and q + r - p + 1 for
/// the height-(k+1) columns whose entry sum vanishes.  Throws NotApplicable
/// when that last value would be negative.
uint64_t pi_value(std::span<const uint8_t> column, const PiParams& params);

/// True when every column count matches the target profile.  The optional
/// subset restricts the check to the listed columns.
bool is_pi_distributed(const GeneratorSet& gens, const PiParams& params);
bool is_pi_distributed(const GeneratorSet& gens, const PiParams& params,
                       std::span<const std::vector<uint8_t>> subset);

/// Minimum pairwise Hamming distance of a word list.  Throws Degenerate on
/// fewer than two distinct words.
uint32_t min_distance(std::span<const Vector> words);

/// Minimum weight over the nonzero span of the rows (exact enumeration).
uint32_t min_distance_linear(const GeneratorSet& gens);

/// Exact weight distribution of the span: counts[w] is the number of span
/// words of weight w.  Throws TooLarge above 16 rows.
std::vector<uint64_t> weight_enumerator(const GeneratorSet& gens);

/// Whether the p^k-word greedy code is linear, decided by the digit-sum
/// criterion: it suffices to compare the greedy word against the
/// generator combination at every index whose base-p digit sum is at most
/// p - 1.  For p = 2 those indices are exactly the powers of two, where the
/// two sides agree by definition, so the answer is always yes.
bool is_linear_lex(const CodeSpec& spec, uint32_t k, const SearchLimits& limits = {});

/// Finite(k): linear at k, not at k+1.  AtLeast(cap): linear through cap.
struct LinearDimension {
    bool finite = false;
    uint32_t k = 0;

    static LinearDimension Finite(uint32_t k) { return {true, k}; }
    static LinearDimension AtLeast(uint32_t cap) { return {false, cap}; }
    bool operator==(const LinearDimension&) const = default;
};

/// Largest k <= cap with a linear p^k-word greedy code, or AtLeast(cap).
LinearDimension max_linear_k(const CodeSpec& spec, uint32_t cap, const SearchLimits& limits = {});

struct LinearityWitness {
    uint64_t a = 0;
    Vector greedy_word;  // the a-th greedy word
    Vector combination;  // the digit combination of the power words
};

/// The smallest index a < p^k where the greedy word differs from the
/// combination of power words, with both vectors; nullopt when linear.
std::optional<LinearityWitness> nonlinearity_witness(const CodeSpec& spec, uint32_t k,
                                                     const SearchLimits& limits = {});

struct FamilyCheck {
    bool ok = false;
    CodeParams params;
};

/// Verifies that the punctured span of the rows is the simplex code of the
/// row count, repeated d_prime times: the column multiset is exactly
/// d_prime copies of the normalized column set and the parameters are
/// [(p^k - 1)/(p - 1) * d', k, p^(k-1) * d'] for k rows.  Requires
/// spec.d = p^(k-1) * d' with d' >= 2.
FamilyCheck check_simplex_repetition(const GeneratorSet& gens, uint32_t d_prime);

/// Verifies that the punctured span of the k+1 rows is the Solomon-Stiffler
/// code of the decomposition: parameters
/// [(p^k - 1)/(p - 1) * (pq + r) + q + 1, k + 1, d] and a column multiset
/// matching the target profile.  Requires 0 < r < p and q + r - p + 1 >= 2.
FamilyCheck check_solomon_stiffler(const GeneratorSet& gens, const PiParams& params);

}  // namespace lexikit

#endif
