#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ncres/anick/chains.hpp"
#include "ncres/groebner/automaton.hpp"
#include "ncres/groebner/groebner.hpp"
#include "ncres/groebner/presentation.hpp"

namespace ncres::anick {

/// Raised when the splitting recursion cannot continue, which means the
/// Groebner data is invalid or incomplete for the requested degree.
class SplittingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Basis element c (x) w of kC_n (x) A, stored as the word c*w together with
/// the length of c. Level -1 (the module A itself) uses split = 0.
struct BasisKey {
    Word word;
    std::uint32_t split = 0;

    Word chain() const { return word.prefix(split); }
    Word cofactor() const { return word.suffix_from(split); }
    friend bool operator==(const BasisKey&, const BasisKey&) = default;
};

/// Deglex on c*w, ties broken by the chain part (longer chain is larger).
struct BasisKeyGreater {
    bool operator()(const BasisKey& a, const BasisKey& b) const {
        if (auto c = deglex(a.word, b.word); c != 0) return c > 0;
        return a.split > b.split;
    }
};

/// An element of kC_n (x) A in the (chain, normal word) basis.
struct FreeModuleElement {
    using Terms = std::map<BasisKey, Scalar, BasisKeyGreater>;

    int level = -1;
    Terms terms;

    bool is_zero() const { return terms.empty(); }
    Scalar coefficient(const BasisKey& k) const;
    void add(const BasisKey& k, const Scalar& c, const Field& field);
};

/// d_n restricted to internal degree j, as a sparse matrix from the level-n
/// basis to the level-(n-1) basis.
struct ResolutionSlice {
    std::size_t level = 0;
    std::size_t degree = 0;
    std::vector<BasisKey> domain;
    std::vector<BasisKey> codomain;
    /// columns[k]: (codomain row, coefficient) pairs of the image of domain[k].
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> columns;
    /// Always true inside the bounds: d preserves internal degree, so the
    /// support of every emitted differential stays below deg_max.
    bool complete = true;
};

/// Anick resolution of the trivial right module over k<X | G>, computed
/// lazily with memoised differentials.
class Resolution {
public:
    /// Computes a Groebner basis truncated at deg_max.
    Resolution(const gb::Presentation& presentation, std::size_t level_max, std::size_t deg_max);
    Resolution(const gb::Presentation& presentation, gb::GroebnerBasis basis, std::size_t level_max,
               std::size_t deg_max);

    const gb::Presentation& presentation() const { return presentation_; }
    const gb::GroebnerBasis& basis() const { return basis_; }
    const ChainSet& chains() const { return chains_; }
    const Field& field() const { return presentation_.field; }
    std::size_t level_max() const { return chains_.level_max(); }
    std::size_t deg_max() const { return chains_.deg_max(); }

    /// d_n(c (x) 1), memoised.
    const FreeModuleElement& differential(const Chain& c);
    /// d applied to an arbitrary element (level n to level n-1).
    FreeModuleElement apply(const FreeModuleElement& x);
    /// Right action of a word: (c (x) u) w = c (x) NF(u w).
    FreeModuleElement times(const FreeModuleElement& x, const Word& w);
    /// Contracting homotopy on a cycle of level m >= -1: returns y of level
    /// m+1 with d(y) = x. Throws SplittingError if x is not a cycle.
    FreeModuleElement lift(FreeModuleElement x);

    const Polynomial& normal_form(const Word& w);
    const std::vector<Word>& normal_words(std::size_t degree);

    /// Throws std::out_of_range outside the level/degree bounds.
    ResolutionSlice slice(std::size_t level, std::size_t degree);

private:
    const Chain& chain_of(std::size_t level, const Word& word);

    gb::Presentation presentation_;
    gb::GroebnerBasis basis_;
    gb::Reducer reducer_;
    gb::NormalWordAutomaton automaton_;
    ChainSet chains_;
    // Node-based maps: references handed out stay valid while recursion inserts.
    std::map<std::size_t, std::map<Word, FreeModuleElement, DegLexLess>> memo_;
    std::map<std::size_t, std::unordered_map<Word, Chain, WordHash>> chain_cache_;
    std::unordered_map<Word, Polynomial, WordHash> nf_cache_;
    std::map<std::size_t, std::vector<Word>> normal_words_;
};

/// All slices for levels 0..level_max and degrees 1..deg_max.
std::vector<ResolutionSlice> resolution_slices(Resolution& resolution);

/// True when lower * upper is the zero matrix (upper at level n, lower at n-1,
/// same internal degree). Throws std::invalid_argument on mismatched bases.
bool composes_to_zero(const ResolutionSlice& upper, const ResolutionSlice& lower, const Field& field);

}  // namespace ncres::anick
