#include "ncres/anick/chains.hpp"

#include <algorithm>

namespace ncres::anick {

ChainSplit chain_split(const Chain& c) {
    if (c.level == 0) throw std::invalid_argument("chain_split: level-0 chains have no prefix chain");
    Chain prefix;
    prefix.level = c.level - 1;
    prefix.word = c.word.prefix(c.ends[c.level - 1]);
    prefix.ends.assign(c.ends.begin(), c.ends.begin() + static_cast<std::ptrdiff_t>(c.level));
    prefix.starts.assign(c.starts.begin(), c.starts.begin() + static_cast<std::ptrdiff_t>(c.level - 1));
    return {std::move(prefix), c.tail()};
}

std::vector<TailExtension> tail_extensions(const Word& from, const gb::ObstructionIndex& obstructions) {
    std::vector<TailExtension> out;
    const std::size_t n = from.degree();
    for (std::size_t k = 0; k < obstructions.size(); ++k) {
        const Word& v = obstructions.words()[k];
        for (std::size_t p = 0; p < n; ++p) {
            const std::size_t inside = n - p;
            if (v.degree() <= inside) continue;
            if (!v.starts_with(from.suffix_from(p))) continue;
            Word tail = v.suffix_from(inside);
            Word joined = from * tail;
            // The only obstruction factor of from*tail must be the final one.
            bool clean = true;
            for (std::size_t q = n + 1; q < joined.degree() && clean; ++q) {
                clean = !obstructions.ending_at(joined, q, 0).has_value();
            }
            if (!clean) continue;
            auto last = obstructions.ending_at(joined, joined.degree(), 0);
            if (!last || last->start != p) continue;
            out.push_back({std::move(tail), k, p});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const TailExtension& a, const TailExtension& b) { return deglex(a.tail, b.tail) < 0; });
    return out;
}

std::optional<Chain> next_chain_prefix(const Word& word, const Chain& prefix,
                                       const gb::ObstructionIndex& obstructions) {
    const std::size_t from = prefix.tail_start();
    const std::size_t end = prefix.degree();
    for (std::size_t q = end + 1; q <= word.degree(); ++q) {
        auto occ = obstructions.ending_at(word, q, from);
        if (!occ) continue;
        if (occ->start >= end) return std::nullopt;
        Chain c;
        c.word = word.prefix(q);
        c.level = prefix.level + 1;
        c.ends = prefix.ends;
        c.ends.push_back(q);
        c.starts = prefix.starts;
        c.starts.push_back(occ->start);
        return c;
    }
    return std::nullopt;
}

std::optional<Chain> decompose_chain(const Word& word, std::size_t level, const gb::ObstructionIndex& obstructions) {
    if (word.empty()) return std::nullopt;
    Chain c = Chain::letter(word[0]);
    while (c.level < level) {
        auto next = next_chain_prefix(word, c, obstructions);
        if (!next) return std::nullopt;
        c = std::move(*next);
    }
    if (c.degree() != word.degree()) return std::nullopt;
    return c;
}

const std::vector<Chain>& ChainSet::at_level(std::size_t level) const {
    static const std::vector<Chain> empty;
    return level < by_level_.size() ? by_level_[level] : empty;
}

std::vector<const Chain*> ChainSet::at(std::size_t level, std::size_t degree) const {
    std::vector<const Chain*> out;
    for (const auto& c : at_level(level)) {
        if (c.degree() == degree) out.push_back(&c);
    }
    return out;
}

ChainSet enumerate_chains(std::span<const Word> obstructions, std::size_t alphabet_size, std::size_t level_max,
                          std::size_t deg_max) {
    gb::ObstructionIndex index{std::vector<Word>(obstructions.begin(), obstructions.end())};
    if (!index.is_antichain()) throw std::invalid_argument("obstructions do not form an antichain");

    std::vector<std::vector<Chain>> by_level(level_max + 1);
    if (deg_max >= 1) {
        for (Letter a = 0; a < alphabet_size; ++a) by_level[0].push_back(Chain::letter(a));
    }
    for (std::size_t n = 1; n <= level_max; ++n) {
        for (const Chain& c : by_level[n - 1]) {
            for (const auto& ext : tail_extensions(c.tail(), index)) {
                if (c.degree() + ext.tail.degree() > deg_max) continue;
                Chain next;
                next.word = c.word * ext.tail;
                next.level = n;
                next.ends = c.ends;
                next.ends.push_back(next.word.degree());
                next.starts = c.starts;
                next.starts.push_back(c.tail_start() + ext.start);
                by_level[n].push_back(std::move(next));
            }
        }
        std::sort(by_level[n].begin(), by_level[n].end(),
                  [](const Chain& a, const Chain& b) { return deglex(a.word, b.word) < 0; });
    }
    return ChainSet(level_max, deg_max, std::move(by_level));
}

}  // namespace ncres::anick
