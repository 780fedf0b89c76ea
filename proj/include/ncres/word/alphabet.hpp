#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ncres/word/word.hpp"

namespace ncres {

/// Generator names together with their deglex precedence.
///
/// Letter codes are precedence ranks, so `name(c)` is the name of the letter
/// with rank `c` (0 = smallest). All generators have weight 1.
class Alphabet {
public:
    Alphabet() = default;

    /// Names listed from the largest letter to the smallest, as in
    /// `vars: x > y > z`. Throws std::invalid_argument on empty or
    /// duplicate names.
    static Alphabet from_descending(const std::vector<std::string>& names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(Letter code) const { return names_.at(code); }
    std::optional<Letter> code(const std::string& name) const;

    /// Names from largest to smallest.
    std::vector<std::string> descending_names() const;

    /// Throws std::invalid_argument if any letter code is outside the alphabet.
    void check(const Word& w) const;

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::vector<std::string> names_;  // indexed by code, ascending precedence
};

/// Deglex order over a particular alphabet. Shorter words are smaller;
/// equal-length words compare letterwise by precedence.
class DegLexOrder {
public:
    explicit DegLexOrder(std::size_t alphabet_size) : alphabet_size_(alphabet_size) {}
    explicit DegLexOrder(const Alphabet& alphabet) : alphabet_size_(alphabet.size()) {}

    /// Throws std::invalid_argument when a word uses a letter outside the alphabet.
    std::strong_ordering compare(const Word& u, const Word& w) const;

    std::size_t alphabet_size() const { return alphabet_size_; }

private:
    std::size_t alphabet_size_;
};

/// Spelled form of a word: runs of equal letters become `x^k`, letters are
/// joined by `*`, and the empty word prints as `1`.
std::string format_word(const Word& w, const Alphabet& alphabet);

}  // namespace ncres
