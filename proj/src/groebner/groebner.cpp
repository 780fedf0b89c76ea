#include "ncres/groebner/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace ncres::gb {

ObstructionIndex::ObstructionIndex(std::vector<Word> words) {
    for (auto& w : words) add(w);
}

void ObstructionIndex::add(const Word& w) {
    if (w.empty()) throw std::invalid_argument("empty obstruction");
    if (lookup_.contains(w)) return;
    lookup_.emplace(w, words_.size());
    words_.push_back(w);
    auto it = std::lower_bound(lengths_.begin(), lengths_.end(), w.degree());
    if (it == lengths_.end() || *it != w.degree()) lengths_.insert(it, w.degree());
}

std::optional<std::size_t> ObstructionIndex::index_of(const Word& w) const {
    auto it = lookup_.find(w);
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
}

std::optional<ObstructionIndex::Occurrence> ObstructionIndex::leftmost(const Word& w) const {
    for (std::size_t start = 0; start < w.degree(); ++start) {
        for (std::size_t len : lengths_) {
            if (start + len > w.degree()) break;
            if (auto idx = index_of(w.subword(start, len))) return Occurrence{*idx, start};
        }
    }
    return std::nullopt;
}

std::optional<ObstructionIndex::Occurrence> ObstructionIndex::ending_at(const Word& w, std::size_t end,
                                                                        std::size_t min_start) const {
    for (std::size_t len : lengths_) {
        if (len > end || end - len < min_start) break;
        if (auto idx = index_of(w.subword(end - len, len))) return Occurrence{*idx, end - len};
    }
    return std::nullopt;
}

bool ObstructionIndex::is_antichain() const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        for (std::size_t j = 0; j < words_.size(); ++j) {
            if (i != j && words_[j].contains(words_[i])) return false;
        }
    }
    return true;
}

namespace {

Polynomial reduce_with(const Polynomial& p, std::span<const Polynomial> basis, const ObstructionIndex& index,
                       std::vector<RewriteStep>* trace) {
    const Field& field = p.field();
    Polynomial work = p;
    Polynomial result(field);
    while (!work.is_zero()) {
        const Word w = work.leading_word();
        const Scalar c = work.leading_coefficient();
        if (auto occ = index.leftmost(w)) {
            const Polynomial& g = basis[occ->index];
            Word left = w.prefix(occ->start);
            Word right = w.suffix_from(occ->start + g.leading_word().degree());
            Scalar coeff = field.div(c, g.leading_coefficient());
            work.add_scaled(field.neg(coeff), left, g, right);
            if (trace) trace->push_back({coeff, std::move(left), occ->index, std::move(right)});
        } else {
            result.add_term(w, c);
            work.add_term(w, field.neg(c));
        }
    }
    return result;
}

ObstructionIndex index_of_leads(std::span<const Polynomial> basis) {
    ObstructionIndex index;
    for (const auto& g : basis) {
        if (g.is_zero()) throw std::invalid_argument("zero polynomial in reduction basis");
        // Duplicate leads keep the first generator.
        index.add(g.leading_word());
    }
    return index;
}

}  // namespace

Polynomial normal_form(const Polynomial& p, std::span<const Polynomial> basis, std::vector<RewriteStep>* trace) {
    // Map lead-index positions back to basis positions when leads repeat.
    std::vector<Polynomial> unique;
    std::vector<std::size_t> origin;
    ObstructionIndex index;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].is_zero()) throw std::invalid_argument("zero polynomial in reduction basis");
        if (index.index_of(basis[i].leading_word())) continue;
        index.add(basis[i].leading_word());
        unique.push_back(basis[i]);
        origin.push_back(i);
    }
    const std::size_t first = trace ? trace->size() : 0;
    Polynomial r = reduce_with(p, unique, index, trace);
    if (trace) {
        for (std::size_t k = first; k < trace->size(); ++k) (*trace)[k].generator = origin[(*trace)[k].generator];
    }
    return r;
}

Reducer::Reducer(std::vector<Polynomial> basis) : basis_(std::move(basis)), index_(index_of_leads(basis_)) {
    if (index_.size() != basis_.size()) throw std::invalid_argument("Reducer: repeated leading words");
}

Polynomial Reducer::reduce(const Polynomial& p, std::vector<RewriteStep>* trace) const {
    return reduce_with(p, basis_, index_, trace);
}

Polynomial s_polynomial(const Polynomial& g, const Polynomial& h, std::size_t overlap_length) {
    if (g.is_zero() || h.is_zero()) throw std::invalid_argument("s_polynomial of a zero polynomial");
    const Word& u = g.leading_word();
    const Word& w = h.leading_word();
    auto lens = overlaps(u, w);
    if (std::find(lens.begin(), lens.end(), overlap_length) == lens.end()) {
        throw std::invalid_argument("invalid overlap position");
    }
    Word prefix = u.prefix(u.degree() - overlap_length);
    Word suffix = w.suffix_from(overlap_length);
    Polynomial out = g.monic().multiplied({}, suffix);
    out.add_scaled(-1, prefix, h.monic(), {});
    return out;
}

std::vector<Polynomial> interreduce(std::vector<Polynomial> generators) {
    std::vector<Polynomial> g;
    for (auto& p : generators) {
        if (!p.is_zero()) g.push_back(p.monic());
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < g.size(); ++i) {
            std::vector<Polynomial> others;
            others.reserve(g.size() - 1);
            for (std::size_t j = 0; j < g.size(); ++j) {
                if (j != i) others.push_back(g[j]);
            }
            Polynomial r = normal_form(g[i], others).monic();
            if (r == g[i]) continue;
            changed = true;
            if (r.is_zero()) {
                g.erase(g.begin() + static_cast<std::ptrdiff_t>(i));
            } else {
                g[i] = std::move(r);
            }
            break;
        }
    }
    std::sort(g.begin(), g.end(),
              [](const Polynomial& a, const Polynomial& b) { return deglex(a.leading_word(), b.leading_word()) < 0; });
    return g;
}

std::string to_string(Certificate c) {
    return c == Certificate::CertifiedComplete ? "certified-complete" : "complete-up-to-degree";
}

std::vector<Word> GroebnerBasis::obstructions() const {
    std::vector<Word> out;
    out.reserve(elements.size());
    for (const auto& g : elements) out.push_back(g.leading_word());
    return out;
}

namespace {

struct PendingPair {
    std::size_t degree;
    Word word;
    std::size_t left;
    std::size_t right;
    std::size_t length;

    friend bool operator<(const PendingPair& a, const PendingPair& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        if (auto c = deglex(a.word, b.word); c != 0) return c < 0;
        return std::tie(a.left, a.right, a.length) < std::tie(b.left, b.right, b.length);
    }
};

class Completion {
public:
    explicit Completion(const Field& field) : field_(field) {}

    void insert(Polynomial p) {
        const std::size_t fresh = basis_.size();
        index_.add(p.leading_word());
        basis_.push_back(std::move(p));
        for (std::size_t i = 0; i <= fresh; ++i) {
            register_pairs(i, fresh);
            if (i != fresh) register_pairs(fresh, i);
        }
    }

    Polynomial reduce(const Polynomial& p) const { return reduce_with(p, basis_, index_, nullptr); }

    void reduce_tails(std::size_t degree) {
        for (auto& g : basis_) {
            if (g.leading_word().degree() != degree) continue;
            Polynomial tail = g;
            tail.add_term(g.leading_word(), field_.neg(g.leading_coefficient()));
            Polynomial reduced = reduce(tail);
            reduced.add_term(g.leading_word(), g.leading_coefficient());
            g = std::move(reduced);
        }
    }

    std::set<PendingPair>& queue() { return queue_; }
    const std::vector<Polynomial>& basis() const { return basis_; }

private:
    void register_pairs(std::size_t left, std::size_t right) {
        const Word& u = basis_[left].leading_word();
        const Word& w = basis_[right].leading_word();
        for (std::size_t k : overlaps(u, w)) {
            queue_.insert({u.degree() + w.degree() - k, overlap_word(u, w, k), left, right, k});
        }
    }

    Field field_;
    std::vector<Polynomial> basis_;
    ObstructionIndex index_;
    std::set<PendingPair> queue_;
};

}  // namespace

GroebnerBasis complete(const Presentation& presentation, std::size_t max_deg) {
    presentation.validate();
    if (max_deg < presentation.max_relation_degree()) {
        throw TruncationError("truncation degree " + std::to_string(max_deg) + " is below relation degree " +
                              std::to_string(presentation.max_relation_degree()));
    }
    std::map<std::size_t, std::vector<Polynomial>> inputs;
    for (const auto& r : presentation.relations) inputs[r.leading_word().degree()].push_back(r);

    Completion state(presentation.field);
    for (std::size_t d = 1; d <= max_deg; ++d) {
        auto consider = [&](const Polynomial& p) {
            Polynomial r = state.reduce(p);
            if (!r.is_zero()) state.insert(r.monic());
        };
        if (auto it = inputs.find(d); it != inputs.end()) {
            for (const auto& r : it->second) consider(r);
        }
        auto& queue = state.queue();
        while (!queue.empty() && queue.begin()->degree == d) {
            PendingPair pair = *queue.begin();
            queue.erase(queue.begin());
            consider(s_polynomial(state.basis()[pair.left], state.basis()[pair.right], pair.length));
        }
        state.reduce_tails(d);
    }

    GroebnerBasis out;
    out.elements = state.basis();
    std::sort(out.elements.begin(), out.elements.end(),
              [](const Polynomial& a, const Polynomial& b) { return deglex(a.leading_word(), b.leading_word()) < 0; });
    out.truncation_degree = max_deg;
    out.unprocessed_pairs = state.queue().size();
    out.certificate = out.unprocessed_pairs == 0 ? Certificate::CertifiedComplete : Certificate::CompleteUpToDegree;
    return out;
}

}  // namespace ncres::gb
