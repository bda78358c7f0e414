#include "lexikit/analysis.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace lexikit {

uint64_t griesmer_bound(PrimeModulus p, uint32_t k, uint64_t d) {
    uint64_t sum = 0;
    uint64_t power = 1;
    for (uint32_t i = 0; i < k; ++i) {
        sum += (d + power - 1) / power;
        if (power > d) {
            sum += k - i - 1;  // remaining ceilings are all 1
            break;
        }
        power *= p.value();
    }
    return sum;
}

ColumnProfile column_profile(std::span<const Vector> rows) {
    ColumnProfile profile;
    profile.ambient = joint_support(rows);
    for (uint32_t col : profile.ambient) {
        std::vector<uint8_t> column(rows.size());
        for (size_t r = 0; r < rows.size(); ++r) column[r] = rows[r].coord(col);
        ++profile.counts[column];
    }
    return profile;
}

ColumnProfile column_profile(const GeneratorSet& gens) {
    return column_profile(std::span<const Vector>(gens.gens));
}

std::vector<std::vector<uint8_t>> projective_columns(PrimeModulus p, uint32_t m) {
    std::vector<std::vector<uint8_t>> columns;
    const uint32_t q = p.value();
    for (uint32_t lead = 0; lead <= m; ++lead) {
        // entries below lead are zero, entry at lead is 1, entries above free
        std::vector<uint8_t> column(m + 1, 0);
        column[lead] = 1;
        const uint32_t free = m - lead;
        const uint64_t combos = pow_u64(q, free);
        for (uint64_t u = 0; u < combos; ++u) {
            uint64_t rest = u;
            for (uint32_t j = lead + 1; j <= m; ++j, rest /= q) {
                column[j] = static_cast<uint8_t>(rest % q);
            }
            columns.push_back(column);
        }
    }
    std::sort(columns.begin(), columns.end());
    return columns;
}

PiParams PiParams::make(PrimeModulus p, uint32_t k, uint64_t d) {
    if (k == 0) throw HypothesisViolated("the decomposition needs k >= 1");
    const uint64_t divisor = pow_u64(p.value(), k - 1);
    if (d % divisor != 0) {
        throw HypothesisViolated("d = " + std::to_string(d) + " is not a multiple of p^(k-1)");
    }
    const uint64_t d_prime = d / divisor;
    return PiParams{p, k, d, d_prime, d_prime / p.value(),
                    static_cast<uint32_t>(d_prime % p.value())};
}

uint64_t pi_value(std::span<const uint8_t> column, const PiParams& params) {
    if (column.empty() || column.size() > params.k + 1) {
        throw HypothesisViolated("column height must be between 1 and k+1");
    }
    const uint32_t l = static_cast<uint32_t>(column.size() - 1);
    size_t lead = 0;
    while (lead < column.size() && column[lead] == 0) ++lead;
    if (lead == column.size() || column[lead] != 1) return 0;  // off the normalized set

    uint32_t sum = 0;
    for (uint8_t e : column) sum += e;
    if (l < params.k || sum % params.p.value() != 0) {
        const uint64_t power = pow_u64(params.p.value(), l);
        return (params.d + power - 1) / power;
    }
    const int64_t value = static_cast<int64_t>(params.q) + params.r -
                          static_cast<int64_t>(params.p.value()) + 1;
    if (value < 0) {
        throw NotApplicable("q + r - p + 1 is negative for this decomposition");
    }
    return static_cast<uint64_t>(value);
}

namespace {

bool profile_matches_pi(const ColumnProfile& profile, const PiParams& params) {
    for (const auto& [column, count] : profile.counts) {
        if (count != pi_value(column, params)) return false;
    }
    // Columns absent from the matrix have count zero; only the normalized
    // full-height columns can carry a nonzero target.
    for (const auto& column : projective_columns(params.p, params.k)) {
        if (profile.counts.contains(column)) continue;
        if (pi_value(column, params) != 0) return false;
    }
    return true;
}

}  // namespace

bool is_pi_distributed(const GeneratorSet& gens, const PiParams& params) {
    if (gens.rows() != params.k + 1) {
        throw HypothesisViolated("row count does not match the decomposition height");
    }
    return profile_matches_pi(column_profile(gens), params);
}

bool is_pi_distributed(const GeneratorSet& gens, const PiParams& params,
                       std::span<const std::vector<uint8_t>> subset) {
    if (gens.rows() != params.k + 1) {
        throw HypothesisViolated("row count does not match the decomposition height");
    }
    const ColumnProfile profile = column_profile(gens);
    for (const auto& column : subset) {
        if (profile.count(column) != pi_value(column, params)) return false;
    }
    return true;
}

uint32_t min_distance(std::span<const Vector> words) {
    uint32_t best = std::numeric_limits<uint32_t>::max();
    for (size_t i = 0; i < words.size(); ++i) {
        for (size_t j = i + 1; j < words.size(); ++j) {
            const uint32_t dist = hamming_distance(words[i], words[j]);
            if (dist != 0) best = std::min(best, dist);
        }
    }
    if (best == std::numeric_limits<uint32_t>::max()) {
        throw Degenerate("need at least two distinct words");
    }
    return best;
}

namespace {

constexpr uint32_t kMaxEnumerableRows = 16;

// Walks the whole span once, reporting each word's weight.
template <typename Fn>
void for_each_span_weight(const GeneratorSet& gens, Fn&& fn) {
    const uint64_t total = pow_u64(gens.spec.p.value(), gens.rows());
    for (uint64_t a = 0; a < total; ++a) fn(word_plus(a, gens).weight());
}

}  // namespace

uint32_t min_distance_linear(const GeneratorSet& gens) {
    if (gens.rows() > kMaxEnumerableRows) throw TooLarge("span enumeration above 16 rows");
    uint32_t best = std::numeric_limits<uint32_t>::max();
    for_each_span_weight(gens, [&](uint32_t w) {
        if (w != 0) best = std::min(best, w);
    });
    if (best == std::numeric_limits<uint32_t>::max()) throw Degenerate("span is trivial");
    return best;
}

std::vector<uint64_t> weight_enumerator(const GeneratorSet& gens) {
    if (gens.rows() > kMaxEnumerableRows) throw TooLarge("span enumeration above 16 rows");
    std::vector<uint64_t> counts(joint_support(gens.gens).size() + 1, 0);
    for_each_span_weight(gens, [&](uint32_t w) { ++counts[w]; });
    return counts;
}

namespace {

void require_greedy_variant(const CodeSpec& spec) {
    if (spec.variant != Variant::Greedy) {
        throw HypothesisViolated("linearity scans apply to the greedy variant");
    }
}

// First index in [1, a_end) whose greedy word differs from the digit
// combination of the power words.  Powers of p agree by definition and are
// skipped; with `filtered`, indices with digit sum above p-1 are skipped as
// well (sufficient for the linearity verdict).
std::optional<LinearityWitness> first_mismatch(GreedyPrefix& prefix, uint64_t a_end,
                                               bool filtered) {
    const PrimeModulus p = prefix.spec().p;
    GeneratorSet gens{prefix.spec(), {}};
    uint64_t next_power = 1;
    for (uint64_t a = 1; a < a_end; ++a) {
        if (a == next_power) {
            gens.gens.push_back(prefix.word(a));
            next_power = next_power > std::numeric_limits<uint64_t>::max() / p.value()
                             ? 0
                             : next_power * p.value();
            continue;
        }
        if (filtered && digit_sum(a, p) > p.value() - 1) continue;
        const Vector& w = prefix.word(a);
        Vector combo = word_plus(a, gens);
        if (w != combo) return LinearityWitness{a, w, std::move(combo)};
    }
    return std::nullopt;
}

// Largest index with digit sum <= p-1 below p^k, plus one.
uint64_t filtered_scan_end(PrimeModulus p, uint32_t k) {
    if (k == 0) return 1;
    return (p.value() - 1) * pow_u64(p.value(), k - 1) + 1;
}

}  // namespace

bool is_linear_lex(const CodeSpec& spec, uint32_t k, const SearchLimits& limits) {
    require_greedy_variant(spec);
    if (spec.p.value() == 2 || k == 0) return true;
    GreedyPrefix prefix(spec, limits);
    return !first_mismatch(prefix, filtered_scan_end(spec.p, k), true).has_value();
}

LinearDimension max_linear_k(const CodeSpec& spec, uint32_t cap, const SearchLimits& limits) {
    require_greedy_variant(spec);
    if (spec.p.value() == 2 || cap == 0) return LinearDimension::AtLeast(cap);
    GreedyPrefix prefix(spec, limits);
    const auto witness = first_mismatch(prefix, filtered_scan_end(spec.p, cap), true);
    if (!witness) return LinearDimension::AtLeast(cap);
    const uint32_t top = static_cast<uint32_t>(base_p_digits(witness->a, spec.p).size() - 1);
    return LinearDimension::Finite(top);
}

std::optional<LinearityWitness> nonlinearity_witness(const CodeSpec& spec, uint32_t k,
                                                     const SearchLimits& limits) {
    require_greedy_variant(spec);
    if (k == 0) return std::nullopt;
    GreedyPrefix prefix(spec, limits);
    return first_mismatch(prefix, pow_u64(spec.p.value(), k), false);
}

FamilyCheck check_simplex_repetition(const GeneratorSet& gens, uint32_t d_prime) {
    const uint32_t k = gens.rows();
    const PrimeModulus p = gens.spec.p;
    if (k == 0) throw HypothesisViolated("need at least one row");
    if (d_prime < 2) throw HypothesisViolated("repetition count d' must be at least 2");
    const uint64_t expected_d = pow_u64(p.value(), k - 1) * d_prime;
    if (gens.spec.d != expected_d) {
        throw HypothesisViolated("d must factor as p^(k-1) * d' for k rows");
    }

    const ColumnProfile profile = column_profile(gens);
    const auto normalized = projective_columns(p, k - 1);
    bool ok = profile.counts.size() == normalized.size();
    for (const auto& column : normalized) {
        if (profile.count(column) != d_prime) ok = false;
    }

    FamilyCheck result;
    result.params.n = profile.ambient.size();
    result.params.k = k;
    result.params.dmin = min_distance_linear(gens);

    const CodeParams expected{(pow_u64(p.value(), k) - 1) / (p.value() - 1) * d_prime, k,
                              static_cast<uint32_t>(expected_d)};
    result.ok = ok && result.params == expected;
    return result;
}

FamilyCheck check_solomon_stiffler(const GeneratorSet& gens, const PiParams& params) {
    const PrimeModulus p = params.p;
    if (params.r == 0 || params.r >= p.value()) {
        throw HypothesisViolated("the decomposition needs 0 < r < p");
    }
    if (static_cast<int64_t>(params.q) + params.r - p.value() + 1 < 2) {
        throw HypothesisViolated("the decomposition needs q + r - p + 1 >= 2");
    }
    if (gens.rows() != params.k + 1) {
        throw HypothesisViolated("row count does not match the decomposition height");
    }

    const ColumnProfile profile = column_profile(gens);
    FamilyCheck result;
    result.params.n = profile.ambient.size();
    result.params.k = gens.rows();
    result.params.dmin = min_distance_linear(gens);

    const uint64_t n_expected =
        (pow_u64(p.value(), params.k) - 1) / (p.value() - 1) * params.d_prime + params.q + 1;
    const CodeParams expected{n_expected, params.k + 1, static_cast<uint32_t>(params.d)};
    result.ok = profile_matches_pi(profile, params) && result.params == expected;
    return result;
}

}  // namespace lexikit
