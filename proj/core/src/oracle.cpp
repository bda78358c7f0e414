#include "lexikit/oracle.hpp"

#include <set>

namespace lexikit {

namespace {

constexpr uint32_t kCeilingExponent = 14;

}  // namespace

Vector naive_next_codeword(std::span<const Vector> existing, const CodeSpec& spec,
                           uint64_t rank_ceiling) {
    if (rank_ceiling == 0) rank_ceiling = pow_u64(spec.p.value(), kCeilingExponent);
    for (uint64_t m = 0; m < rank_ceiling; ++m) {
        const Vector candidate = rank_to_vector(m, spec.basis, spec.p);
        bool feasible = true;
        for (const Vector& w : existing) {
            if (hamming_distance(candidate, w) < spec.d) {
                feasible = false;
                break;
            }
        }
        if (feasible) return candidate;
    }
    throw RankCeilingExceeded("no feasible vector below rank " + std::to_string(rank_ceiling));
}

LexCode naive_lex_code(const CodeSpec& spec, uint32_t k, uint64_t rank_ceiling) {
    const uint64_t count = pow_u64(spec.p.value(), k);
    LexCode code{spec, {}, {}};
    code.words.reserve(count);
    for (uint64_t a = 0; a < count; ++a) {
        code.words.push_back(naive_next_codeword(code.words, spec, rank_ceiling));
    }
    code.support = joint_support(code.words);
    return code;
}

bool closure_is_linear(std::span<const Vector> words, PrimeModulus p) {
    const std::set<Vector> set(words.begin(), words.end());
    for (const Vector& u : set) {
        for (const Vector& v : set) {
            if (!set.contains(add(u, v, p))) return false;
        }
    }
    return true;
}

}  // namespace lexikit
