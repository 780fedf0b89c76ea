#include "ncres/word/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncres {

Word Word::subword(std::size_t pos, std::size_t len) const {
    if (pos + len > letters_.size()) {
        throw std::out_of_range("Word::subword: range exceeds word");
    }
    return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                                    letters_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

bool Word::has_factor_at(const Word& factor, std::size_t pos) const {
    if (pos + factor.degree() > degree()) return false;
    return std::equal(factor.letters_.begin(), factor.letters_.end(),
                      letters_.begin() + static_cast<std::ptrdiff_t>(pos));
}

std::optional<std::size_t> Word::find(const Word& factor, std::size_t from) const {
    if (factor.degree() > degree()) return std::nullopt;
    for (std::size_t pos = from; pos + factor.degree() <= degree(); ++pos) {
        if (has_factor_at(factor, pos)) return pos;
    }
    return std::nullopt;
}

bool Word::ends_with(const Word& w) const {
    return w.degree() <= degree() && has_factor_at(w, degree() - w.degree());
}

Word& Word::operator*=(const Word& rhs) {
    letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
    return *this;
}

std::strong_ordering deglex(const Word& u, const Word& w) {
    if (u.degree() != w.degree()) return u.degree() <=> w.degree();
    for (std::size_t i = 0; i < u.degree(); ++i) {
        if (u[i] != w[i]) return u[i] <=> w[i];
    }
    return std::strong_ordering::equal;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Letter a : w) {
        h ^= a + 1;
        h *= 1099511628211ull;
    }
    return h;
}

std::vector<std::size_t> overlaps(const Word& u, const Word& w) {
    std::vector<std::size_t> out;
    const std::size_t bound = std::min(u.degree(), w.degree());
    for (std::size_t k = 1; k < bound; ++k) {
        if (std::equal(u.end() - static_cast<std::ptrdiff_t>(k), u.end(), w.begin())) {
            out.push_back(k);
        }
    }
    return out;
}

Word overlap_word(const Word& u, const Word& w, std::size_t k) {
    return u.prefix(u.degree() - k) * w;
}

std::vector<Word> all_words(std::size_t alphabet_size, std::size_t degree) {
    std::vector<Word> out;
    if (alphabet_size == 0) {
        if (degree == 0) out.emplace_back();
        return out;
    }
    std::vector<Letter> cur(degree, 0);
    while (true) {
        out.emplace_back(cur);
        std::size_t i = degree;
        while (i > 0 && cur[i - 1] + 1u >= alphabet_size) {
            cur[i - 1] = 0;
            --i;
        }
        if (i == 0) return out;
        ++cur[i - 1];
    }
}

}  // namespace ncres
