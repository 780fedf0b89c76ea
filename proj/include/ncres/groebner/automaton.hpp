#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ncres/word/word.hpp"

namespace ncres::gb {

/// Deterministic automaton accepting exactly the words that avoid every
/// obstruction as a factor (Aho-Corasick over the obstruction set).
///
/// States are the proper prefixes of obstructions; state 0 is the empty
/// prefix and the start state. Every state is live and accepting; a missing
/// transition means the word just acquired an obstruction factor.
class NormalWordAutomaton {
public:
    static constexpr std::size_t kDead = static_cast<std::size_t>(-1);

    /// Throws std::invalid_argument if the obstructions do not form an antichain.
    static NormalWordAutomaton build(std::span<const Word> obstructions, std::size_t alphabet_size,
                                     std::size_t valid_degree);

    std::size_t state_count() const { return labels_.size(); }
    std::size_t alphabet_size() const { return alphabet_size_; }
    std::size_t valid_degree() const { return valid_degree_; }
    /// Successor state or kDead.
    std::size_t next(std::size_t state, Letter a) const { return transitions_[state * alphabet_size_ + a]; }
    /// The obstruction prefix a state stands for.
    const Word& label(std::size_t state) const { return labels_[state]; }

    bool accepts(const Word& w) const;
    /// Normal words of exactly `degree`, ascending deglex.
    std::vector<Word> words_of_degree(std::size_t degree) const;

private:
    std::size_t alphabet_size_ = 0;
    std::size_t valid_degree_ = 0;
    std::vector<Word> labels_;
    std::vector<std::size_t> transitions_;
};

/// dim A_j for j = 0..D, as normal-word counts.
struct HilbertPrefix {
    std::vector<std::uint64_t> coefficients;
};

/// Counts accepted words by degree. Throws std::invalid_argument when D
/// exceeds the automaton's valid degree and std::overflow_error if a count
/// leaves 64 bits.
HilbertPrefix hilbert_coefficients(const NormalWordAutomaton& aut, std::size_t D);

struct FinitenessVerdict {
    bool finite = false;
    std::size_t top_degree = 0;  ///< longest accepted word when finite
    /// True when the automaton is only known valid up to its degree bound.
    bool conditional = true;
};

/// Finite iff the live transition graph is acyclic. `certified` says whether
/// the obstruction set is complete in all degrees.
FinitenessVerdict is_finite_dimensional(const NormalWordAutomaton& aut, bool certified);

}  // namespace ncres::gb
