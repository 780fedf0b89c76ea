#include "ncres/homology/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncres::homology {

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& x) { return x == 0; });
}

Matrix Matrix::multiply(const Matrix& rhs, const Field& field) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("Matrix::multiply: shape mismatch");
    Matrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                if (rhs(k, j) != 0) out(i, j) = field.add(out(i, j), field.mul(a, rhs(k, j)));
            }
        }
    }
    return out;
}

std::size_t rank_rational(const Matrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < cols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
    }

    // Every entry after step k is a (k+1)-minor of the input, so the
    // division by the previous pivot is exact.
    mpz_class previous = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[rank]);
        const mpz_class& p = a[rank][col];
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                mpz_class v = p * a[i][j] - a[i][col] * a[rank][j];
                mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
            }
            a[i][col] = 0;
        }
        previous = p;
        ++rank;
    }
    return rank;
}

std::size_t rank_mod_p(const Matrix& m, std::uint32_t p, kernels::Isa isa) {
    const Field fp = Field::prime(p);
    std::vector<double> data(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            data[i * m.cols() + j] = fp.normalize(m(i, j)).get_num().get_d();
        }
    }
    return kernels::rank_mod_p(data, m.rows(), m.cols(), p, isa);
}

std::size_t rank(const Matrix& m, const Field& field) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    if (field.is_rational()) return rank_rational(m);
    return rank_mod_p(m, field.characteristic());
}

}  // namespace ncres::homology
