#include "ncres/word/polynomial.hpp"

#include <stdexcept>

namespace ncres {

Polynomial Polynomial::monomial(const Field& field, const Word& w, const Scalar& c) {
    Polynomial p(field);
    p.add_term(w, c);
    return p;
}

Scalar Polynomial::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar(0) : it->second;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

std::optional<std::size_t> Polynomial::degree() const {
    if (terms_.empty() || !is_homogeneous()) return std::nullopt;
    return leading_word().degree();
}

void Polynomial::add_term(const Word& w, const Scalar& c) {
    Scalar v = field_.normalize(c);
    if (v == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, v);
    if (inserted) return;
    it->second = field_.add(it->second, v);
    if (it->second == 0) terms_.erase(it);
}

Polynomial& Polynomial::add_scaled(const Scalar& c, const Word& l, const Polynomial& q, const Word& r) {
    if (!(q.field_ == field_)) throw std::invalid_argument("polynomials over different fields");
    const Scalar cn = field_.normalize(c);
    if (cn == 0) return *this;
    for (const auto& [w, coeff] : q.terms_) {
        add_term(l * w * r, field_.mul(cn, coeff));
    }
    return *this;
}

Polynomial Polynomial::monic() const {
    if (terms_.empty()) return *this;
    return scaled(field_.inv(leading_coefficient()));
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    Polynomial out(field_);
    return out.add_scaled(c, {}, *this, {});
}

Polynomial Polynomial::multiplied(const Word& l, const Word& r) const {
    Polynomial out(field_);
    return out.add_scaled(1, l, *this, r);
}

Polynomial poly_combine(const Polynomial& p, const Scalar& c, const Word& l, const Polynomial& q,
                        const Word& r) {
    Polynomial out = p;
    out.add_scaled(c, l, q, r);
    return out;
}

std::string format_polynomial(const Polynomial& p, const Alphabet& alphabet) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : p.terms()) {
        Scalar mag = c;
        bool negative = c < 0;
        if (negative) mag = -c;
        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        if (w.empty()) {
            out += format_scalar(mag);
        } else {
            if (mag != 1) out += format_scalar(mag) + '*';
            out += format_word(w, alphabet);
        }
    }
    return out;
}

}  // namespace ncres
