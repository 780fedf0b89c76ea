#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "ncres/groebner/presentation.hpp"
#include "ncres/word/polynomial.hpp"

namespace ncres::gb {

/// Raised when a requested truncation cannot support the input.
class TruncationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Factor lookup over a set of obstruction words.
class ObstructionIndex {
public:
    struct Occurrence {
        std::size_t index;
        std::size_t start;
    };

    ObstructionIndex() = default;
    explicit ObstructionIndex(std::vector<Word> words);

    void add(const Word& w);
    const std::vector<Word>& words() const { return words_; }
    std::size_t size() const { return words_.size(); }
    std::optional<std::size_t> index_of(const Word& w) const;

    /// Leftmost occurrence of any obstruction in `w`; at equal start the
    /// shortest obstruction wins.
    std::optional<Occurrence> leftmost(const Word& w) const;
    /// An occurrence ending exactly at `end` and starting at or after
    /// `min_start`; the latest start wins.
    std::optional<Occurrence> ending_at(const Word& w, std::size_t end, std::size_t min_start) const;

    bool contains_factor(const Word& w) const { return leftmost(w).has_value(); }
    /// No word is a factor of another.
    bool is_antichain() const;

private:
    std::vector<Word> words_;
    std::unordered_map<Word, std::size_t, WordHash> lookup_;
    std::vector<std::size_t> lengths_;  // distinct, ascending
};

/// One rewrite p -> p - coefficient * left * g * right.
struct RewriteStep {
    Scalar coefficient;
    Word left;
    std::size_t generator;
    Word right;
};

/// Normal form modulo `basis`: repeatedly rewrites the largest reducible term
/// at its leftmost obstruction. When `trace` is given, the steps are appended
/// so that p - result = sum of coefficient * left * basis[generator] * right.
Polynomial normal_form(const Polynomial& p, std::span<const Polynomial> basis,
                       std::vector<RewriteStep>* trace = nullptr);

/// Normal forms against a fixed basis with a prebuilt obstruction index.
class Reducer {
public:
    explicit Reducer(std::vector<Polynomial> basis);

    Polynomial reduce(const Polynomial& p, std::vector<RewriteStep>* trace = nullptr) const;
    bool is_normal(const Word& w) const { return !index_.contains_factor(w); }
    const std::vector<Polynomial>& basis() const { return basis_; }
    const ObstructionIndex& index() const { return index_; }

private:
    std::vector<Polynomial> basis_;
    ObstructionIndex index_;
};

/// g * suffix - prefix * h for the overlap of length `overlap_length` between
/// lead(g) (suffix side) and lead(h) (prefix side), with g and h taken monic.
/// Throws std::invalid_argument if no such overlap exists.
Polynomial s_polynomial(const Polynomial& g, const Polynomial& h, std::size_t overlap_length);

/// Inter-reduced monic generators of the same ideal, sorted by leading word.
std::vector<Polynomial> interreduce(std::vector<Polynomial> generators);

enum class Certificate { CertifiedComplete, CompleteUpToDegree };

std::string to_string(Certificate c);

struct GroebnerBasis {
    std::vector<Polynomial> elements;  ///< monic, reduced, ascending leading words
    std::size_t truncation_degree = 0;
    Certificate certificate = Certificate::CompleteUpToDegree;
    /// Overlaps whose word exceeds the truncation degree.
    std::size_t unprocessed_pairs = 0;

    bool certified() const { return certificate == Certificate::CertifiedComplete; }
    std::vector<Word> obstructions() const;
};

/// Truncated Buchberger completion. Overlaps are processed by ascending
/// overlap-word degree, then deglex; every overlap of degree <= max_deg is
/// resolved. Throws TruncationError when max_deg is below a relation degree.
GroebnerBasis complete(const Presentation& presentation, std::size_t max_deg);

}  // namespace ncres::gb
