#pragma once

#include <string>
#include <vector>

#include "ncres/word/alphabet.hpp"
#include "ncres/word/field.hpp"
#include "ncres/word/polynomial.hpp"

namespace ncres::gb {

/// A finitely presented graded algebra k<X | R>. The monomial order is deglex
/// with the alphabet's precedence.
struct Presentation {
    Alphabet alphabet;
    Field field;
    std::vector<Polynomial> relations;

    /// Throws std::invalid_argument unless every relation is nonzero,
    /// homogeneous of degree >= 1, over `field`, and uses only alphabet letters.
    void validate() const;

    std::size_t max_relation_degree() const;
    bool is_quadratic() const;

    /// Same algebra under a different letter precedence (names largest first).
    Presentation reordered(const std::vector<std::string>& descending_names) const;

    friend bool operator==(const Presentation&, const Presentation&) = default;
};

}  // namespace ncres::gb
