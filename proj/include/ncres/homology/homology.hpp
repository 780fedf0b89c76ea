#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ncres/anick/resolution.hpp"
#include "ncres/groebner/automaton.hpp"
#include "ncres/groebner/presentation.hpp"
#include "ncres/homology/linalg.hpp"

namespace ncres::homology {

/// The resolution tensored down to k: for each internal degree j and level
/// n, the matrix of d-bar_n from the level-n chains of degree j to the
/// level-(n-1) chains of degree j. Level -1 is the unit chain in degree 0.
struct InducedComplex {
    struct Block {
        std::vector<Word> domain;    ///< level-n chains of degree j
        std::vector<Word> codomain;  ///< level-(n-1) chains of degree j
        Matrix matrix;               ///< codomain.size() x domain.size()
    };

    std::size_t level_max = 0;
    std::size_t deg_max = 0;
    /// blocks[j][n]
    std::vector<std::vector<Block>> blocks;

    const Block& at(std::size_t degree, std::size_t level) const { return blocks.at(degree).at(level); }
};

/// Keeps exactly the terms of each d(c (x) 1) whose cofactor is the unit word.
InducedComplex induce(anick::Resolution& resolution);

struct BettiTable {
    std::size_t i_max = 0;
    std::size_t j_max = 0;
    /// b[i][j] = dim Tor_{i,j}(k,k); entries outside the reliable mask are
    /// upper bounds (or zero when nothing was computed).
    std::vector<std::vector<std::size_t>> b;
    std::vector<std::vector<bool>> reliable;
    /// Whether the source presentation was quadratic.
    bool quadratic = false;

    std::size_t at(std::size_t i, std::size_t j) const { return b.at(i).at(j); }
    bool is_reliable(std::size_t i, std::size_t j) const { return reliable.at(i).at(j); }
    std::vector<std::size_t> diagonal() const;
};

/// Betti numbers from the induced complex. Chains of level n feed
/// Tor_{n+1}; entries with i > level_max are unreliable.
BettiTable betti_table(const InducedComplex& complex, const Field& field, std::size_t i_max, std::size_t j_max,
                       bool quadratic);

/// Builds the resolution with chain levels up to `level_max` (default i_max)
/// and a Groebner basis truncated at j_max.
BettiTable betti_table(const gb::Presentation& presentation, std::size_t i_max, std::size_t j_max,
                       std::optional<std::size_t> level_max = std::nullopt);

class NotQuadraticError : public std::invalid_argument {
public:
    NotQuadraticError() : std::invalid_argument("presentation is not quadratic") {}
};

class CoverageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct KoszulVerdict {
    enum class Status { KoszulUpTo, FailsAt };
    Status status = Status::KoszulUpTo;
    std::size_t degree = 0;  ///< D for KoszulUpTo
    std::size_t i = 0;       ///< witness for FailsAt
    std::size_t j = 0;
    std::size_t value = 0;

    bool koszul() const { return status == Status::KoszulUpTo; }
};

/// KoszulUpTo(D) iff b[i][j] = 0 for all i != j with j <= D. Throws
/// NotQuadraticError for non-quadratic input and CoverageError unless every
/// entry with i <= j <= D is reliable.
KoszulVerdict koszul_verdict(const BettiTable& table, std::size_t D);

/// Annihilator of the relation span under <a b, a* b*> = delta delta, in
/// reduced echelon form. Dual letter names toggle a trailing '!'.
/// Throws NotQuadraticError.
gb::Presentation quadratic_dual(const gb::Presentation& presentation);

struct EulerCheck {
    /// Sum over i of (-1)^i b[i][j], j = 0..J.
    std::vector<long long> numerator;
    /// [t^j] H_A(t) * numerator(t) - [j = 0].
    std::vector<long long> residuals;
    /// Whether all Betti entries feeding residual j were reliable.
    std::vector<bool> reliable;

    bool all_zero() const;
};

EulerCheck euler_check(const BettiTable& table, const gb::HilbertPrefix& hilbert);

struct GldimReport {
    std::size_t degree_bound = 0;
    std::size_t generators = 0;  ///< dim A_1
    KoszulVerdict koszul;
    BettiTable betti;
    gb::Presentation dual;
    gb::GroebnerBasis dual_basis;
    gb::HilbertPrefix dual_hilbert;
    gb::FinitenessVerdict dual_finiteness;
    /// Global dimension when Koszul up to the bound and the dual is finite.
    std::optional<std::size_t> gldim;
    /// True when the conclusion rests on Koszulness beyond the checked bound.
    bool conditional = true;
    /// Koszul, finite global dimension d and dim A_1 < d.
    bool conjecture_counterexample = false;
};

/// Combines the Koszul verdict up to D with the finiteness of the quadratic
/// dual: Koszul with dual concentrated in degrees <= d and nonzero in d
/// gives global dimension d. Throws NotQuadraticError.
GldimReport gldim_report(const gb::Presentation& presentation, std::size_t D);

}  // namespace ncres::homology
