#include "ncres/anick/resolution.hpp"

#include <algorithm>
#include <string>

#include "ncres/word/alphabet.hpp"

namespace ncres::anick {

Scalar FreeModuleElement::coefficient(const BasisKey& k) const {
    auto it = terms.find(k);
    return it == terms.end() ? Scalar(0) : it->second;
}

void FreeModuleElement::add(const BasisKey& k, const Scalar& c, const Field& field) {
    Scalar v = field.normalize(c);
    if (v == 0) return;
    auto [it, inserted] = terms.try_emplace(k, v);
    if (inserted) return;
    it->second = field.add(it->second, v);
    if (it->second == 0) terms.erase(it);
}

Resolution::Resolution(const gb::Presentation& presentation, std::size_t level_max, std::size_t deg_max)
    : Resolution(presentation, gb::complete(presentation, deg_max), level_max, deg_max) {}

Resolution::Resolution(const gb::Presentation& presentation, gb::GroebnerBasis basis, std::size_t level_max,
                       std::size_t deg_max)
    : presentation_(presentation),
      basis_(std::move(basis)),
      reducer_(basis_.elements),
      automaton_(gb::NormalWordAutomaton::build(basis_.obstructions(), presentation.alphabet.size(), deg_max)),
      chains_(enumerate_chains(basis_.obstructions(), presentation.alphabet.size(), level_max, deg_max)) {
    if (!basis_.certified() && basis_.truncation_degree < deg_max) {
        throw gb::TruncationError("Groebner basis truncated below the requested degree");
    }
    for (const auto& w : basis_.obstructions()) {
        if (w.degree() < 2) {
            throw std::invalid_argument("linear relations are not supported by the resolution; eliminate the generator");
        }
    }
    for (std::size_t n = 0; n <= level_max; ++n) {
        auto& cache = chain_cache_[n];
        for (const auto& c : chains_.at_level(n)) cache.emplace(c.word, c);
    }
}

const Polynomial& Resolution::normal_form(const Word& w) {
    auto it = nf_cache_.find(w);
    if (it != nf_cache_.end()) return it->second;
    return nf_cache_.emplace(w, reducer_.reduce(Polynomial::monomial(field(), w))).first->second;
}

const std::vector<Word>& Resolution::normal_words(std::size_t degree) {
    auto it = normal_words_.find(degree);
    if (it != normal_words_.end()) return it->second;
    return normal_words_.emplace(degree, automaton_.words_of_degree(degree)).first->second;
}

const Chain& Resolution::chain_of(std::size_t level, const Word& word) {
    auto& cache = chain_cache_[level];
    auto it = cache.find(word);
    if (it != cache.end()) return it->second;
    auto c = decompose_chain(word, level, reducer_.index());
    if (!c) {
        throw SplittingError("word " + format_word(word, presentation_.alphabet) + " is not a chain of level " +
                             std::to_string(level));
    }
    return cache.emplace(word, std::move(*c)).first->second;
}

FreeModuleElement Resolution::times(const FreeModuleElement& x, const Word& w) {
    if (w.empty()) return x;
    FreeModuleElement out;
    out.level = x.level;
    for (const auto& [key, c] : x.terms) {
        const Word chain = key.chain();
        const Polynomial& nf = normal_form(key.cofactor() * w);
        for (const auto& [v, e] : nf.terms()) out.add({chain * v, key.split}, field().mul(c, e), field());
    }
    return out;
}

const FreeModuleElement& Resolution::differential(const Chain& c) {
    auto& level_memo = memo_[c.level];
    if (auto it = level_memo.find(c.word); it != level_memo.end()) return it->second;

    FreeModuleElement d;
    d.level = static_cast<int>(c.level) - 1;
    if (c.level == 0) {
        d.add({c.word, 0}, 1, field());
    } else {
        // d(c (x) 1) = c' (x) t - lift(d(c' (x) t)) for c = c' t.
        auto [prefix, tail] = chain_split(c);
        FreeModuleElement correction = lift(times(differential(prefix), tail));
        for (const auto& [key, coeff] : correction.terms) d.add(key, field().neg(coeff), field());
        d.add({c.word, static_cast<std::uint32_t>(prefix.degree())}, 1, field());
    }
    return level_memo.emplace(c.word, std::move(d)).first->second;
}

FreeModuleElement Resolution::apply(const FreeModuleElement& x) {
    FreeModuleElement out;
    out.level = x.level - 1;
    if (x.level < 0) throw std::invalid_argument("apply: no differential below level 0");
    for (const auto& [key, c] : x.terms) {
        const Chain& chain = chain_of(static_cast<std::size_t>(x.level), key.chain());
        FreeModuleElement image = times(differential(chain), key.cofactor());
        for (const auto& [k, e] : image.terms) out.add(k, field().mul(c, e), field());
    }
    return out;
}

FreeModuleElement Resolution::lift(FreeModuleElement x) {
    FreeModuleElement y;
    y.level = x.level + 1;
    while (!x.is_zero()) {
        const BasisKey key = x.terms.begin()->first;
        const Scalar lambda = x.terms.begin()->second;

        Chain next;
        if (x.level < 0) {
            if (key.word.empty()) throw SplittingError("constant term outside the augmentation ideal");
            next = Chain::letter(key.word[0]);
        } else {
            const Chain& current = chain_of(static_cast<std::size_t>(x.level), key.chain());
            auto found = next_chain_prefix(key.word, current, reducer_.index());
            if (!found) {
                throw SplittingError("no chain of level " + std::to_string(x.level + 1) + " is a prefix of " +
                                     format_word(key.word, presentation_.alphabet));
            }
            next = std::move(*found);
        }
        const auto split = static_cast<std::uint32_t>(next.degree());
        const Word rest = key.word.suffix_from(split);
        chain_cache_[next.level].emplace(next.word, next);

        FreeModuleElement image = times(differential(next), rest);
        if (image.is_zero() || !(image.terms.begin()->first == key) || image.terms.begin()->second != 1) {
            throw SplittingError("leading term of the lifted differential does not match at " +
                                 format_word(key.word, presentation_.alphabet));
        }
        y.add({key.word, split}, lambda, field());
        const Scalar minus = field().neg(lambda);
        for (const auto& [k, c] : image.terms) x.add(k, field().mul(minus, c), field());
    }
    return y;
}

ResolutionSlice Resolution::slice(std::size_t level, std::size_t degree) {
    if (level > level_max() || degree > deg_max()) throw std::out_of_range("slice outside the resolution bounds");
    ResolutionSlice s;
    s.level = level;
    s.degree = degree;

    auto basis_at = [&](int lvl) {
        std::vector<BasisKey> out;
        if (lvl < 0) {
            for (const auto& w : normal_words(degree)) out.push_back({w, 0});
            return out;
        }
        for (const auto& c : chains_.at_level(static_cast<std::size_t>(lvl))) {
            if (c.degree() > degree) continue;
            for (const auto& w : normal_words(degree - c.degree())) {
                out.push_back({c.word * w, static_cast<std::uint32_t>(c.degree())});
            }
        }
        return out;
    };
    s.domain = basis_at(static_cast<int>(level));
    s.codomain = basis_at(static_cast<int>(level) - 1);

    std::map<BasisKey, std::size_t, BasisKeyGreater> row_of;
    for (std::size_t r = 0; r < s.codomain.size(); ++r) row_of.emplace(s.codomain[r], r);

    for (const auto& key : s.domain) {
        const Chain& c = chain_of(level, key.chain());
        FreeModuleElement image = times(differential(c), key.cofactor());
        std::vector<std::pair<std::size_t, Scalar>> col;
        for (const auto& [k, v] : image.terms) {
            auto it = row_of.find(k);
            if (it == row_of.end()) throw SplittingError("differential leaves the codomain basis");
            col.emplace_back(it->second, v);
        }
        std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        s.columns.push_back(std::move(col));
    }
    return s;
}

std::vector<ResolutionSlice> resolution_slices(Resolution& resolution) {
    std::vector<ResolutionSlice> out;
    for (std::size_t n = 0; n <= resolution.level_max(); ++n) {
        for (std::size_t j = 1; j <= resolution.deg_max(); ++j) {
            ResolutionSlice s = resolution.slice(n, j);
            if (!s.domain.empty()) out.push_back(std::move(s));
        }
    }
    return out;
}

bool composes_to_zero(const ResolutionSlice& upper, const ResolutionSlice& lower, const Field& field) {
    if (upper.level != lower.level + 1 || upper.degree != lower.degree || !(upper.codomain == lower.domain)) {
        throw std::invalid_argument("composes_to_zero: slices are not consecutive");
    }
    for (const auto& col : upper.columns) {
        std::map<std::size_t, Scalar> acc;
        for (const auto& [mid, c] : col) {
            for (const auto& [row, e] : lower.columns[mid]) acc[row] = field.add(acc[row], field.mul(c, e));
        }
        for (const auto& [row, v] : acc) {
            if (v != 0) return false;
        }
    }
    return true;
}

}  // namespace ncres::anick
