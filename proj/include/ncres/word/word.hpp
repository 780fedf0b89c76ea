#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace ncres {

/// Letter code. Codes are precedence ranks: a larger code is a larger letter
/// under deglex, so word comparison never needs the alphabet.
using Letter = std::uint16_t;

/// A word in the free monoid. The empty word is the unit.
class Word {
public:
    Word() = default;
    Word(std::initializer_list<Letter> letters) : letters_(letters) {}
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    std::size_t degree() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    std::span<const Letter> letters() const { return letters_; }

    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }

    Word subword(std::size_t pos, std::size_t len) const;
    Word prefix(std::size_t len) const { return subword(0, len); }
    Word suffix_from(std::size_t pos) const { return subword(pos, degree() - pos); }

    /// True when `factor` occurs in this word starting at `pos`.
    bool has_factor_at(const Word& factor, std::size_t pos) const;
    std::optional<std::size_t> find(const Word& factor, std::size_t from = 0) const;
    bool contains(const Word& factor) const { return find(factor).has_value(); }
    bool starts_with(const Word& w) const { return has_factor_at(w, 0); }
    bool ends_with(const Word& w) const;

    void push_back(Letter a) { letters_.push_back(a); }
    Word& operator*=(const Word& rhs);

    friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }
    friend bool operator==(const Word&, const Word&) = default;

private:
    std::vector<Letter> letters_;
};

/// Degree-lexicographic comparison on letter codes.
std::strong_ordering deglex(const Word& u, const Word& w);

struct DegLexLess {
    bool operator()(const Word& u, const Word& w) const { return deglex(u, w) < 0; }
};

struct DegLexGreater {
    bool operator()(const Word& u, const Word& w) const { return deglex(u, w) > 0; }
};

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept;
};

/// Overlap lengths k such that the length-k suffix of u equals the length-k
/// prefix of w, with 0 < k < |u| and 0 < k < |w|. Ascending.
std::vector<std::size_t> overlaps(const Word& u, const Word& w);

/// The overlap word u[0, |u|-k) * w for an overlap of length k.
Word overlap_word(const Word& u, const Word& w, std::size_t k);

/// All words of the given degree over an alphabet of `alphabet_size` letters,
/// in ascending deglex order.
std::vector<Word> all_words(std::size_t alphabet_size, std::size_t degree);

}  // namespace ncres
