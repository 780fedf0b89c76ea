#include <stdexcept>
#include <utility>
#include <vector>

#include "ncres/kernels/modp.hpp"

namespace ncres::kernels {

namespace scalar {

void axpy_mod(std::span<double> row, std::span<const double> pivot, double factor, std::uint32_t p) {
    const auto f = static_cast<std::uint64_t>(factor);
    for (std::size_t i = 0; i < row.size(); ++i) {
        const auto a = static_cast<std::uint64_t>(row[i]);
        const auto b = static_cast<std::uint64_t>(pivot[i]);
        row[i] = static_cast<double>((a + f * b) % p);
    }
}

void scale_mod(std::span<double> row, double factor, std::uint32_t p) {
    const auto f = static_cast<std::uint64_t>(factor);
    for (double& x : row) x = static_cast<double>((static_cast<std::uint64_t>(x) * f) % p);
}

}  // namespace scalar

std::string_view to_string(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

bool available(Isa isa) {
    if (isa == Isa::Scalar) return true;
#if defined(NCRES_HAVE_AVX2)
    static const bool ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    return ok;
#else
    return false;
#endif
}

Isa best_isa() {
    static const Isa isa = available(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
    return isa;
}

void axpy_mod(std::span<double> row, std::span<const double> pivot, double factor, std::uint32_t p, Isa isa) {
    if (row.size() != pivot.size()) throw std::invalid_argument("axpy_mod: length mismatch");
    if (isa == Isa::Avx2) {
        if (!available(Isa::Avx2)) throw std::runtime_error("AVX2 kernels unavailable");
        avx2::axpy_mod(row, pivot, factor, p);
    } else {
        scalar::axpy_mod(row, pivot, factor, p);
    }
}

void scale_mod(std::span<double> row, double factor, std::uint32_t p, Isa isa) {
    if (isa == Isa::Avx2) {
        if (!available(Isa::Avx2)) throw std::runtime_error("AVX2 kernels unavailable");
        avx2::scale_mod(row, factor, p);
    } else {
        scalar::scale_mod(row, factor, p);
    }
}

namespace {

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
    std::uint64_t result = 1;
    std::uint64_t e = p - 2;
    while (e) {
        if (e & 1) result = result * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return result;
}

}  // namespace

std::size_t rank_mod_p(std::span<double> data, std::size_t rows, std::size_t cols, std::uint32_t p, Isa isa) {
    if (data.size() != rows * cols) throw std::invalid_argument("rank_mod_p: size mismatch");
    auto row = [&](std::size_t r) { return data.subspan(r * cols, cols); };
    std::size_t rank = 0;
    std::vector<double> swap_buffer(cols);
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && data[pivot * cols + col] == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank) {
            auto a = row(pivot);
            auto b = row(rank);
            std::copy(a.begin(), a.end(), swap_buffer.begin());
            std::copy(b.begin(), b.end(), a.begin());
            std::copy(swap_buffer.begin(), swap_buffer.end(), b.begin());
        }
        auto prow = row(rank).subspan(col);
        const auto inv = inverse_mod(static_cast<std::uint64_t>(prow[0]), p);
        scale_mod(prow, static_cast<double>(inv), p, isa);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const double lead = data[r * cols + col];
            if (lead == 0) continue;
            axpy_mod(row(r).subspan(col), prow, static_cast<double>(p) - lead, p, isa);
        }
        ++rank;
    }
    return rank;
}

}  // namespace ncres::kernels
