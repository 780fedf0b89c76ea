#include "ncres/groebner/presentation.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncres::gb {

void Presentation::validate() const {
    if (alphabet.size() == 0) throw std::invalid_argument("presentation has no generators");
    for (const auto& r : relations) {
        if (!(r.field() == field)) throw std::invalid_argument("relation over a different field");
        if (r.is_zero()) throw std::invalid_argument("zero relation");
        if (!r.is_homogeneous()) throw std::invalid_argument("non-homogeneous relation");
        if (r.leading_word().degree() == 0) throw std::invalid_argument("relation of degree 0");
        for (const auto& [w, c] : r.terms()) alphabet.check(w);
    }
}

std::size_t Presentation::max_relation_degree() const {
    std::size_t d = 0;
    for (const auto& r : relations) {
        if (!r.is_zero()) d = std::max(d, r.leading_word().degree());
    }
    return d;
}

bool Presentation::is_quadratic() const {
    return std::all_of(relations.begin(), relations.end(),
                       [](const Polynomial& r) { return r.degree() == std::size_t{2}; });
}

Presentation Presentation::reordered(const std::vector<std::string>& descending_names) const {
    Alphabet target = Alphabet::from_descending(descending_names);
    if (target.size() != alphabet.size()) throw std::invalid_argument("reordering must keep the alphabet");
    std::vector<Letter> recode(alphabet.size());
    for (Letter a = 0; a < alphabet.size(); ++a) {
        auto c = target.code(alphabet.name(a));
        if (!c) throw std::invalid_argument("reordering must keep the alphabet");
        recode[a] = *c;
    }
    Presentation out{target, field, {}};
    for (const auto& r : relations) {
        Polynomial q(field);
        for (const auto& [w, c] : r.terms()) {
            Word v;
            for (Letter a : w) v.push_back(recode[a]);
            q.add_term(v, c);
        }
        out.relations.push_back(std::move(q));
    }
    return out;
}

}  // namespace ncres::gb
