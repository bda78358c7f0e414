#ifndef LEXIKIT_GREEDY_HPP
#define LEXIKIT_GREEDY_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "lexikit/vecspace.hpp"

namespace lexikit {

/// Greedy takes the order-minimal vector at distance >= d from every
/// previous word at every index; BGreedy does so only at powers of p and
/// fills the gaps with linear combinations of the power words.
enum class Variant : uint8_t { Greedy, BGreedy };

struct CodeSpec {
    PrimeModulus p;
    uint32_t d;
    Basis basis;
    Variant variant;

    CodeSpec(PrimeModulus p_, uint32_t d_, Basis basis_, Variant variant_ = Variant::Greedy);
};

struct SearchLimits {
    /// Highest coordinate index the candidate scan may touch.
    uint32_t max_top_index = kDefaultMaxIndex;
};

/// An ordered prefix of the code: words[a] is the a-th word.
struct LexCode {
    CodeSpec spec;
    std::vector<Vector> words;
    IndexSet support;  // union of standard supports
};

/// The rows at power-of-p indices: gens[i] is the word at index p^i.
struct GeneratorSet {
    CodeSpec spec;
    std::vector<Vector> gens;

    uint32_t rows() const { return static_cast<uint32_t>(gens.size()); }
};

/// The order-minimal vector at Hamming distance >= d from every member of
/// existing, restricted to candidates of rank >= resume_rank (0 is always
/// safe; a resume rank at most the true answer's rank is required for
/// exactness).  Throws SearchBudgetExceeded when the scan would pass the
/// configured maximum coordinate index.
Vector next_codeword(std::span<const Vector> existing, const CodeSpec& spec,
                     uint64_t resume_rank = 0, const SearchLimits& limits = {});

/// The p^k greedy words, in order.  Consecutive searches resume just past
/// the previous word (sound by greedy monotonicity).
LexCode lex_code(const CodeSpec& spec, uint32_t k, const SearchLimits& limits = {});

/// The k+1 B-greedy generator words at indices p^0..p^k.  Between powers the
/// constraint set is the full span of the generators found so far.
GeneratorSet bminus_generators(const CodeSpec& spec, uint32_t k, const SearchLimits& limits = {});

/// The linear combination sum_i a_i * gens[i] with a_i the base-p digits of
/// a.  Throws DigitOverflow when a has more digits than there are rows.
Vector word_plus(uint64_t a, const GeneratorSet& gens);

/// All p^(k+1) span words of the generator set, listed in index order
/// (words[a] = word_plus(a)).
LexCode bminus_code(const GeneratorSet& gens);

/// Delete the coordinates that are zero in every word.  The index map
/// records each surviving coordinate's original position.
std::pair<LexCode, IndexSet> res_code(const LexCode& code);

/// Same puncturing, applied to generator rows.
std::pair<GeneratorSet, IndexSet> res_generators(const GeneratorSet& gens);

/// Incremental greedy word cache: word(a) builds (and keeps) everything up
/// to index a.  Used by the linearity scans so nothing gets rebuilt.
class GreedyPrefix {
  public:
    explicit GreedyPrefix(CodeSpec spec, SearchLimits limits = {});

    const Vector& word(uint64_t a);
    uint64_t built() const { return words_.size(); }
    const CodeSpec& spec() const { return spec_; }

  private:
    CodeSpec spec_;
    SearchLimits limits_;
    std::vector<Vector> words_;
};

}  // namespace lexikit

#endif
