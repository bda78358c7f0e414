#ifndef LEXIKIT_ORACLE_HPP
#define LEXIKIT_ORACLE_HPP

#include <span>

#include "lexikit/greedy.hpp"

namespace lexikit {

/// Brute-force reference implementations.  Deliberately a distinct code
/// path from the optimized scan: no pruning, no resume ranks, no weight
/// pre-filter.  Not scalable; confined to tests and a hidden CLI flag.

/// Scans ranks 0, 1, 2, ... and returns the first vector at distance >= d
/// from every member of existing.  rank_ceiling 0 means the default p^14.
Vector naive_next_codeword(std::span<const Vector> existing, const CodeSpec& spec,
                           uint64_t rank_ceiling = 0);

/// The p^k words built exclusively with the naive step.
LexCode naive_lex_code(const CodeSpec& spec, uint32_t k, uint64_t rank_ceiling = 0);

/// Whether the word set is closed under coordinatewise addition mod p
/// (scalar closure follows over a prime field).
bool closure_is_linear(std::span<const Vector> words, PrimeModulus p);

}  // namespace lexikit

#endif
