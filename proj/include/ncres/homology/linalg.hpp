#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ncres/kernels/modp.hpp"
#include "ncres/word/field.hpp"

namespace ncres::homology {

/// Dense row-major matrix of exact scalars.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const;
    /// this * rhs over `field`.
    Matrix multiply(const Matrix& rhs, const Field& field) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

/// Exact rank over `field`: fraction-free Bareiss elimination over Z for the
/// rationals, row reduction with the mod-p kernels for a prime field.
std::size_t rank(const Matrix& m, const Field& field);

/// Bareiss elimination on the matrix cleared of denominators row by row.
std::size_t rank_rational(const Matrix& m);

/// Rank of the reduction mod p (entries' denominators must be prime to p).
std::size_t rank_mod_p(const Matrix& m, std::uint32_t p, kernels::Isa isa = kernels::best_isa());

}  // namespace ncres::homology
