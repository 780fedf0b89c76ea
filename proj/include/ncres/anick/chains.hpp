#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "ncres/groebner/groebner.hpp"
#include "ncres/word/word.hpp"

namespace ncres::anick {

/// An Anick n-chain with its decomposition.
///
/// `ends[i]` is the length of the level-i prefix chain (ends[0] = 1 and
/// ends[level] = |word|). `starts[i-1]` is where the i-th obstruction
/// occurrence begins; it lies inside the tail of the level-(i-1) prefix.
struct Chain {
    Word word;
    std::size_t level = 0;
    std::vector<std::size_t> ends;
    std::vector<std::size_t> starts;

    std::size_t degree() const { return word.degree(); }
    /// Start of the tail: the letter for level 0, otherwise the end of the prefix chain.
    std::size_t tail_start() const { return level == 0 ? 0 : ends[level - 1]; }
    Word tail() const { return word.suffix_from(tail_start()); }

    static Chain letter(Letter a) { return Chain{Word{a}, 0, {1}, {}}; }

    friend bool operator==(const Chain&, const Chain&) = default;
};

struct ChainSplit {
    Chain prefix;
    Word tail;
};

/// The level-(n-1) prefix chain and the tail. Throws std::invalid_argument at level 0.
ChainSplit chain_split(const Chain& c);

/// One way to grow a chain whose tail is `from`: the new tail `tail` makes
/// from*tail end with obstruction `obstruction`, which starts at `start`
/// inside `from`, and from*tail has no other obstruction factor.
struct TailExtension {
    Word tail;
    std::size_t obstruction;
    std::size_t start;
};

/// All extensions of a normal tail word, ordered by the new tail (deglex).
std::vector<TailExtension> tail_extensions(const Word& from, const gb::ObstructionIndex& obstructions);

/// The chain one level above `prefix` that is a prefix of `word`, if any.
/// `word` must start with `prefix.word`.
std::optional<Chain> next_chain_prefix(const Word& word, const Chain& prefix,
                                       const gb::ObstructionIndex& obstructions);

/// Decomposes `word` as a chain of the given level, if it is one.
std::optional<Chain> decompose_chain(const Word& word, std::size_t level, const gb::ObstructionIndex& obstructions);

/// Chains grouped by level, each level sorted by deglex; complete for levels
/// <= level_max and degrees <= deg_max when the obstructions are valid to deg_max.
class ChainSet {
public:
    ChainSet() = default;
    ChainSet(std::size_t level_max, std::size_t deg_max, std::vector<std::vector<Chain>> by_level)
        : level_max_(level_max), deg_max_(deg_max), by_level_(std::move(by_level)) {}

    std::size_t level_max() const { return level_max_; }
    std::size_t deg_max() const { return deg_max_; }
    const std::vector<Chain>& at_level(std::size_t level) const;
    std::vector<const Chain*> at(std::size_t level, std::size_t degree) const;
    std::size_t count(std::size_t level, std::size_t degree) const { return at(level, degree).size(); }

private:
    std::size_t level_max_ = 0;
    std::size_t deg_max_ = 0;
    std::vector<std::vector<Chain>> by_level_;
};

/// Level 0 holds the letters, level 1 the obstructions, and level n the
/// extensions of level n-1. Throws std::invalid_argument on a non-antichain.
ChainSet enumerate_chains(std::span<const Word> obstructions, std::size_t alphabet_size, std::size_t level_max,
                          std::size_t deg_max);

}  // namespace ncres::anick
