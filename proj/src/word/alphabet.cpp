#include "ncres/word/alphabet.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace ncres {

Alphabet Alphabet::from_descending(const std::vector<std::string>& names) {
    if (names.empty()) throw std::invalid_argument("alphabet must not be empty");
    if (names.size() > std::numeric_limits<Letter>::max()) {
        throw std::invalid_argument("alphabet too large");
    }
    Alphabet a;
    a.names_.assign(names.rbegin(), names.rend());
    for (std::size_t i = 0; i < a.names_.size(); ++i) {
        if (a.names_[i].empty()) throw std::invalid_argument("empty letter name");
        for (std::size_t j = 0; j < i; ++j) {
            if (a.names_[i] == a.names_[j]) {
                throw std::invalid_argument("duplicate letter '" + a.names_[i] + "'");
            }
        }
    }
    return a;
}

std::optional<Letter> Alphabet::code(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<Letter>(it - names_.begin());
}

std::vector<std::string> Alphabet::descending_names() const {
    return {names_.rbegin(), names_.rend()};
}

void Alphabet::check(const Word& w) const {
    for (Letter a : w) {
        if (a >= names_.size()) throw std::invalid_argument("word uses a letter outside the alphabet");
    }
}

std::strong_ordering DegLexOrder::compare(const Word& u, const Word& w) const {
    for (const Word* word : {&u, &w}) {
        for (Letter a : *word) {
            if (a >= alphabet_size_) {
                throw std::invalid_argument("mismatched alphabets: letter code out of range");
            }
        }
    }
    return deglex(u, w);
}

std::string format_word(const Word& w, const Alphabet& alphabet) {
    if (w.empty()) return "1";
    std::string out;
    std::size_t i = 0;
    while (i < w.degree()) {
        std::size_t j = i;
        while (j < w.degree() && w[j] == w[i]) ++j;
        if (!out.empty()) out += '*';
        out += alphabet.name(w[i]);
        if (j - i > 1) out += '^' + std::to_string(j - i);
        i = j;
    }
    return out;
}

}  // namespace ncres
