#include "ncres/groebner/automaton.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "ncres/groebner/groebner.hpp"

namespace ncres::gb {

NormalWordAutomaton NormalWordAutomaton::build(std::span<const Word> obstructions, std::size_t alphabet_size,
                                               std::size_t valid_degree) {
    ObstructionIndex index{std::vector<Word>(obstructions.begin(), obstructions.end())};
    if (!index.is_antichain()) throw std::invalid_argument("obstructions do not form an antichain");

    NormalWordAutomaton aut;
    aut.alphabet_size_ = alphabet_size;
    aut.valid_degree_ = valid_degree;

    // Proper obstruction prefixes numbered in deglex order; the empty prefix is state 0.
    std::map<Word, std::size_t, DegLexLess> prefixes;
    for (const Word& w : obstructions) {
        for (std::size_t len = 0; len < w.degree(); ++len) prefixes.emplace(w.prefix(len), 0);
    }
    if (prefixes.empty()) prefixes.emplace(Word{}, 0);
    for (auto& [w, id] : prefixes) {
        id = aut.labels_.size();
        aut.labels_.push_back(w);
    }

    // The state after reading a is the longest suffix of label*a that is a
    // proper obstruction prefix, unless label*a ends with an obstruction.
    aut.transitions_.assign(aut.labels_.size() * alphabet_size, kDead);
    for (std::size_t s = 0; s < aut.labels_.size(); ++s) {
        for (Letter a = 0; a < alphabet_size; ++a) {
            Word next = aut.labels_[s];
            next.push_back(a);
            if (index.ending_at(next, next.degree(), 0)) continue;
            for (std::size_t cut = 0; cut <= next.degree(); ++cut) {
                auto it = prefixes.find(next.suffix_from(cut));
                if (it != prefixes.end()) {
                    aut.transitions_[s * alphabet_size + a] = it->second;
                    break;
                }
            }
        }
    }
    return aut;
}

bool NormalWordAutomaton::accepts(const Word& w) const {
    std::size_t s = 0;
    for (Letter a : w) {
        if (a >= alphabet_size_) return false;
        s = next(s, a);
        if (s == kDead) return false;
    }
    return true;
}

std::vector<Word> NormalWordAutomaton::words_of_degree(std::size_t degree) const {
    std::vector<std::pair<Word, std::size_t>> frontier{{Word{}, 0}};
    for (std::size_t d = 0; d < degree; ++d) {
        std::vector<std::pair<Word, std::size_t>> grown;
        for (const auto& [w, s] : frontier) {
            for (Letter a = 0; a < alphabet_size_; ++a) {
                std::size_t t = next(s, a);
                if (t == kDead) continue;
                Word v = w;
                v.push_back(a);
                grown.emplace_back(std::move(v), t);
            }
        }
        frontier = std::move(grown);
    }
    std::vector<Word> out;
    out.reserve(frontier.size());
    for (auto& [w, s] : frontier) out.push_back(std::move(w));
    return out;
}

HilbertPrefix hilbert_coefficients(const NormalWordAutomaton& aut, std::size_t D) {
    if (D > aut.valid_degree()) {
        throw std::invalid_argument("Hilbert degree " + std::to_string(D) + " beyond automaton validity " +
                                    std::to_string(aut.valid_degree()));
    }
    HilbertPrefix h;
    std::vector<std::uint64_t> counts(aut.state_count(), 0);
    counts[0] = 1;
    h.coefficients.push_back(1);
    for (std::size_t d = 1; d <= D; ++d) {
        std::vector<std::uint64_t> grown(aut.state_count(), 0);
        for (std::size_t s = 0; s < aut.state_count(); ++s) {
            if (counts[s] == 0) continue;
            for (Letter a = 0; a < aut.alphabet_size(); ++a) {
                std::size_t t = aut.next(s, a);
                if (t == NormalWordAutomaton::kDead) continue;
                if (__builtin_add_overflow(grown[t], counts[s], &grown[t])) {
                    throw std::overflow_error("Hilbert coefficient exceeds 64 bits");
                }
            }
        }
        counts = std::move(grown);
        std::uint64_t total = 0;
        for (auto c : counts) {
            if (__builtin_add_overflow(total, c, &total)) throw std::overflow_error("Hilbert coefficient exceeds 64 bits");
        }
        h.coefficients.push_back(total);
    }
    return h;
}

FinitenessVerdict is_finite_dimensional(const NormalWordAutomaton& aut, bool certified) {
    // Longest path by DFS with colouring; every state is reachable from 0.
    const std::size_t n = aut.state_count();
    std::vector<int> colour(n, 0);
    std::vector<std::size_t> longest(n, 0);
    bool cyclic = false;

    struct Frame {
        std::size_t state;
        Letter next_letter;
    };
    std::vector<Frame> stack{{0, 0}};
    colour[0] = 1;
    while (!stack.empty() && !cyclic) {
        Frame& f = stack.back();
        if (f.next_letter == aut.alphabet_size()) {
            colour[f.state] = 2;
            stack.pop_back();
            continue;
        }
        const std::size_t t = aut.next(f.state, f.next_letter++);
        if (t == NormalWordAutomaton::kDead) continue;
        if (colour[t] == 1) {
            cyclic = true;
        } else if (colour[t] == 0) {
            colour[t] = 1;
            stack.push_back({t, 0});
        }
    }

    FinitenessVerdict v;
    v.conditional = !certified;
    if (cyclic) return v;
    // Acyclic: post-order visits successors first, so one relaxation pass suffices.
    std::vector<std::size_t> order;
    std::vector<Frame> st{{0, 0}};
    std::vector<bool> seen(n, false);
    seen[0] = true;
    while (!st.empty()) {
        Frame& f = st.back();
        if (f.next_letter == aut.alphabet_size()) {
            order.push_back(f.state);
            st.pop_back();
            continue;
        }
        const std::size_t t = aut.next(f.state, f.next_letter++);
        if (t != NormalWordAutomaton::kDead && !seen[t]) {
            seen[t] = true;
            st.push_back({t, 0});
        }
    }
    for (std::size_t s : order) {
        for (Letter a = 0; a < aut.alphabet_size(); ++a) {
            const std::size_t t = aut.next(s, a);
            if (t != NormalWordAutomaton::kDead) longest[s] = std::max(longest[s], longest[t] + 1);
        }
    }
    v.finite = true;
    v.top_degree = longest[0];
    return v;
}

}  // namespace ncres::gb
