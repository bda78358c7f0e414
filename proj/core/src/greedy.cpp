#include "lexikit/greedy.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace lexikit {

CodeSpec::CodeSpec(PrimeModulus p_, uint32_t d_, Basis basis_, Variant variant_)
    : p(p_), d(d_), basis(std::move(basis_)), variant(variant_) {
    if (d < 2) throw Error("minimum distance must be at least 2");
}

namespace {

constexpr uint64_t kMaxMaterializedWords = uint64_t{1} << 24;

/// Scan lower bound in basis coordinates, least significant first, trimmed.
/// An empty digit list is the zero vector.
struct ScanBound {
    std::vector<uint8_t> digits;
    bool inclusive = true;
};

ScanBound bound_after(const Vector& v, const Basis& basis, PrimeModulus p) {
    return ScanBound{to_basis_coords(v, basis, p), false};
}

/// Depth-first scan over candidates with a fixed top basis index, in
/// strictly increasing code order.  Per existing word it tracks
/// potential = mismatches-so-far + still-undetermined coordinates; a branch
/// dies as soon as some word's potential drops below d, and the first leaf
/// reached is therefore the order-minimal feasible candidate.
class TopIndexScan {
  public:
    TopIndexScan(std::span<const Vector> existing, const CodeSpec& spec, uint32_t top_index,
                 const ScanBound& bound)
        : existing_(existing),
          spec_(spec),
          p_(spec.p.value()),
          d_(spec.d),
          top_(top_index),
          bound_(bound) {
        const Basis& b = spec.basis;
        modified_ = b.is_modified();
        xi_ = modified_ ? b.xi() : 0;
        eta_ = modified_ ? b.eta() : 0;
        ext_eta_ = modified_ && xi_ <= top_ && eta_ > top_;
        num_slots_ = top_ + 1 + (ext_eta_ ? 1 : 0);
        digits_.assign(top_ + 1, 0);
    }

    // Coordinate index covered by a slot.
    uint32_t slot_coord(uint32_t slot) const { return slot <= top_ ? slot : eta_; }

    bool prepare() {
        potential_.clear();
        active_.clear();
        for (const Vector& w : existing_) {
            uint32_t in_region = 0;
            for (uint32_t s = 0; s < num_slots_; ++s) {
                if (w.coord(slot_coord(s)) != 0) ++in_region;
            }
            const uint32_t off = w.weight() - in_region;
            if (off >= d_) continue;  // distance already guaranteed
            const int32_t pot = static_cast<int32_t>(off + num_slots_);
            if (pot < static_cast<int32_t>(d_)) return false;  // whole top index infeasible
            active_.push_back(&w);
            potential_.push_back(pot);
        }

        groups_.assign(num_slots_, std::vector<std::vector<uint32_t>>(p_));
        for (uint32_t idx = 0; idx < active_.size(); ++idx) {
            for (uint32_t s = 0; s < num_slots_; ++s) {
                groups_[s][active_[idx]->coord(slot_coord(s))].push_back(idx);
            }
        }

        build_schedule();
        return true;
    }

    bool run(Vector& out) {
        if (!prepare()) return false;
        const bool tight = !bound_.digits.empty() && bound_.digits.size() - 1 == top_;
        if (!descend(static_cast<int32_t>(top_), tight)) return false;
        out = from_basis_coords(digits_, spec_.basis, spec_.p);
        return true;
    }

  private:
    struct Determination {
        uint32_t slot;
        bool eta_sum;  // value is digit[eta] + digit[xi] (absent digits are zero)
    };

    void build_schedule() {
        schedule_.assign(top_ + 1, {});
        for (uint32_t i = 0; i <= top_; ++i) {
            if (!modified_ || (i != xi_ && i != eta_)) {
                schedule_[i].push_back({i, false});
                continue;
            }
            if (i == eta_) {
                // The standard coordinate at eta needs both digits; it
                // resolves here only when xi is already fixed.
                if (xi_ > top_ || xi_ > eta_) schedule_[i].push_back({i, true});
            } else {  // i == xi_
                schedule_[i].push_back({i, false});
                if (eta_ > top_ || eta_ > xi_) {
                    schedule_[i].push_back({eta_ <= top_ ? eta_ : top_ + 1, true});
                }
            }
        }
    }

    uint8_t digit_at(uint32_t j) const { return j <= top_ ? digits_[j] : 0; }

    uint8_t determined_value(const Determination& det, uint8_t v) const {
        if (!det.eta_sum) return v;
        return static_cast<uint8_t>((digit_at(eta_) + digit_at(xi_)) % p_);
    }

    // Applies the potential updates for assigning digit i = v; reports
    // whether the branch survives.  Updates are always applied in full so
    // that retract() mirrors them exactly.
    bool apply(uint32_t i, uint8_t v) {
        bool alive = true;
        for (const Determination& det : schedule_[i]) {
            const uint8_t value = determined_value(det, v);
            for (uint32_t idx : groups_[det.slot][value]) {
                if (--potential_[idx] < static_cast<int32_t>(d_)) alive = false;
            }
        }
        return alive;
    }

    void retract(uint32_t i, uint8_t v) {
        for (const Determination& det : schedule_[i]) {
            const uint8_t value = determined_value(det, v);
            for (uint32_t idx : groups_[det.slot][value]) ++potential_[idx];
        }
    }

    bool descend(int32_t i, bool tight) {
        if (i < 0) return !(tight && !bound_.inclusive);
        const uint32_t ui = static_cast<uint32_t>(i);
        uint8_t lo = tight ? bound_.digits[ui] : 0;
        if (ui == top_ && lo == 0) lo = 1;
        for (uint32_t v = lo; v < p_; ++v) {
            digits_[ui] = static_cast<uint8_t>(v);
            const bool alive = apply(ui, static_cast<uint8_t>(v));
            if (alive && descend(i - 1, tight && v == bound_.digits[ui] && tight)) return true;
            retract(ui, static_cast<uint8_t>(v));
        }
        digits_[ui] = 0;
        return false;
    }

    std::span<const Vector> existing_;
    const CodeSpec& spec_;
    uint32_t p_;
    uint32_t d_;
    uint32_t top_;
    const ScanBound& bound_;

    bool modified_ = false;
    uint32_t xi_ = 0;
    uint32_t eta_ = 0;
    bool ext_eta_ = false;
    uint32_t num_slots_ = 0;

    std::vector<uint8_t> digits_;
    std::vector<const Vector*> active_;
    std::vector<int32_t> potential_;
    std::vector<std::vector<std::vector<uint32_t>>> groups_;
    std::vector<std::vector<Determination>> schedule_;
};

Vector next_codeword_impl(std::span<const Vector> existing, const CodeSpec& spec,
                          const ScanBound& bound, const SearchLimits& limits) {
    if (bound.digits.empty() && bound.inclusive) {
        bool zero_ok = true;
        for (const Vector& w : existing) {
            if (w.weight() < spec.d) {
                zero_ok = false;
                break;
            }
        }
        if (zero_ok) return Vector::zero();
    }
    const uint32_t start =
        bound.digits.empty() ? 0 : static_cast<uint32_t>(bound.digits.size() - 1);
    for (uint32_t top = start; top <= limits.max_top_index; ++top) {
        TopIndexScan scan(existing, spec, top, bound);
        Vector found;
        if (scan.run(found)) return found;
    }
    throw SearchBudgetExceeded("no candidate below coordinate index " +
                               std::to_string(limits.max_top_index) +
                               "; raise the search budget");
}

}  // namespace

Vector next_codeword(std::span<const Vector> existing, const CodeSpec& spec, uint64_t resume_rank,
                     const SearchLimits& limits) {
    ScanBound bound{base_p_digits(resume_rank, spec.p), true};
    return next_codeword_impl(existing, spec, bound, limits);
}

LexCode lex_code(const CodeSpec& spec, uint32_t k, const SearchLimits& limits) {
    const uint64_t count = pow_u64(spec.p.value(), k);
    if (count > kMaxMaterializedWords) throw TooLarge("p^k words exceed the materialization cap");
    LexCode code{spec, {}, {}};
    code.words.reserve(count);
    ScanBound bound;  // zero vector, inclusive
    for (uint64_t a = 0; a < count; ++a) {
        Vector w = next_codeword_impl(code.words, spec, bound, limits);
        bound = bound_after(w, spec.basis, spec.p);
        code.words.push_back(std::move(w));
    }
    code.support = joint_support(code.words);
    return code;
}

GeneratorSet bminus_generators(const CodeSpec& spec, uint32_t k, const SearchLimits& limits) {
    const uint64_t span_size = pow_u64(spec.p.value(), k + 1);
    if (span_size > kMaxMaterializedWords)
        throw TooLarge("p^(k+1) span words exceed the materialization cap");

    GeneratorSet gens{spec, {}};
    gens.gens.reserve(k + 1);
    std::vector<Vector> span_words;
    span_words.reserve(span_size);
    span_words.push_back(Vector::zero());

    ScanBound bound;  // zero vector, inclusive
    for (uint32_t i = 0; i <= k; ++i) {
        Vector g = next_codeword_impl(span_words, spec, bound, limits);
        bound = bound_after(g, spec.basis, spec.p);
        const size_t previous = span_words.size();
        for (uint32_t alpha = 1; alpha < spec.p.value(); ++alpha) {
            const Vector scaled = scale(g, static_cast<uint8_t>(alpha), spec.p);
            for (size_t j = 0; j < previous; ++j) {
                span_words.push_back(add(span_words[j], scaled, spec.p));
            }
        }
        gens.gens.push_back(std::move(g));
    }
    return gens;
}

Vector word_plus(uint64_t a, const GeneratorSet& gens) {
    const auto digits = base_p_digits(a, gens.spec.p);
    if (digits.size() > gens.gens.size()) {
        throw DigitOverflow("index " + std::to_string(a) + " has more base-p digits than rows");
    }
    Vector acc = Vector::zero();
    for (size_t i = 0; i < digits.size(); ++i) {
        if (digits[i] != 0) acc = add(acc, scale(gens.gens[i], digits[i], gens.spec.p), gens.spec.p);
    }
    return acc;
}

LexCode bminus_code(const GeneratorSet& gens) {
    const uint64_t count = pow_u64(gens.spec.p.value(), gens.rows());
    if (count > kMaxMaterializedWords) throw TooLarge("span exceeds the materialization cap");
    CodeSpec spec = gens.spec;
    spec.variant = Variant::BGreedy;
    LexCode code{spec, {}, {}};
    code.words.reserve(count);
    for (uint64_t a = 0; a < count; ++a) code.words.push_back(word_plus(a, gens));
    code.support = joint_support(code.words);
    return code;
}

std::pair<LexCode, IndexSet> res_code(const LexCode& code) {
    const IndexSet s = joint_support(code.words);
    LexCode out{code.spec, {}, {}};
    out.words.reserve(code.words.size());
    for (const Vector& w : code.words) out.words.push_back(restrict_to(w, s));
    out.support = joint_support(out.words);
    return {std::move(out), s};
}

std::pair<GeneratorSet, IndexSet> res_generators(const GeneratorSet& gens) {
    const IndexSet s = joint_support(gens.gens);
    GeneratorSet out{gens.spec, {}};
    out.gens.reserve(gens.gens.size());
    for (const Vector& g : gens.gens) out.gens.push_back(restrict_to(g, s));
    return {std::move(out), s};
}

GreedyPrefix::GreedyPrefix(CodeSpec spec, SearchLimits limits)
    : spec_(std::move(spec)), limits_(limits) {}

const Vector& GreedyPrefix::word(uint64_t a) {
    if (a + 1 > kMaxMaterializedWords) throw TooLarge("prefix exceeds the materialization cap");
    while (words_.size() <= a) {
        ScanBound bound;
        if (!words_.empty()) bound = bound_after(words_.back(), spec_.basis, spec_.p);
        words_.push_back(next_codeword_impl(words_, spec_, bound, limits_));
    }
    return words_[a];
}

}  // namespace lexikit
