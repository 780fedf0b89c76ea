#pragma once

#include <map>
#include <optional>
#include <string>

#include "ncres/word/alphabet.hpp"
#include "ncres/word/field.hpp"
#include "ncres/word/word.hpp"

namespace ncres {

/// Element of the free algebra: finitely many words with nonzero coefficients.
/// Terms are kept in descending deglex order, so the first term leads.
class Polynomial {
public:
    using Terms = std::map<Word, Scalar, DegLexGreater>;

    explicit Polynomial(Field field = Field::rationals()) : field_(field) {}
    static Polynomial monomial(const Field& field, const Word& w, const Scalar& c = 1);

    const Field& field() const { return field_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    /// Requires a nonzero polynomial.
    const Word& leading_word() const { return terms_.begin()->first; }
    const Scalar& leading_coefficient() const { return terms_.begin()->second; }
    Scalar coefficient(const Word& w) const;

    bool is_homogeneous() const;
    /// Common degree of a nonzero homogeneous polynomial.
    std::optional<std::size_t> degree() const;

    /// this += c * w, dropping the term if it cancels.
    void add_term(const Word& w, const Scalar& c);
    /// this += c * l * q * r.
    Polynomial& add_scaled(const Scalar& c, const Word& l, const Polynomial& q, const Word& r);

    Polynomial monic() const;
    Polynomial scaled(const Scalar& c) const;
    Polynomial multiplied(const Word& l, const Word& r) const;

    Polynomial& operator+=(const Polynomial& rhs) { return add_scaled(1, {}, rhs, {}); }
    Polynomial& operator-=(const Polynomial& rhs) { return add_scaled(-1, {}, rhs, {}); }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.field_ == b.field_ && a.terms_ == b.terms_;
    }

private:
    Field field_;
    Terms terms_;
};

/// p + c * l * q * r with zero terms pruned.
Polynomial poly_combine(const Polynomial& p, const Scalar& c, const Word& l, const Polynomial& q,
                        const Word& r);

/// Infix form such as `x^2 + y*x` or `-3/2*x*z + z*y`; zero prints as `0`.
std::string format_polynomial(const Polynomial& p, const Alphabet& alphabet);

}  // namespace ncres
