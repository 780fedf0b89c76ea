#pragma once

// Row kernels for Gaussian elimination over F_p.
//
// Residues are stored as doubles holding integers in [0, p) with p < 2^26,
// so a + f*b stays below 2^53 and every intermediate is exact. The scalar
// variants use 64-bit integer arithmetic and serve as the reference; the
// AVX2 variants must agree with them bit for bit.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace ncres::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa);

/// True when the CPU (and the build) can run `isa`.
bool available(Isa isa);

/// Widest available instruction set, chosen once at first use.
Isa best_isa();

/// row[i] = (row[i] + factor * pivot[i]) mod p for i < row.size().
/// Requires row.size() == pivot.size() and factor in [0, p).
void axpy_mod(std::span<double> row, std::span<const double> pivot, double factor, std::uint32_t p, Isa isa);

/// row[i] = (factor * row[i]) mod p.
void scale_mod(std::span<double> row, double factor, std::uint32_t p, Isa isa);

namespace scalar {
void axpy_mod(std::span<double> row, std::span<const double> pivot, double factor, std::uint32_t p);
void scale_mod(std::span<double> row, double factor, std::uint32_t p);
}  // namespace scalar

namespace avx2 {
void axpy_mod(std::span<double> row, std::span<const double> pivot, double factor, std::uint32_t p);
void scale_mod(std::span<double> row, double factor, std::uint32_t p);
}  // namespace avx2

/// Rank of a dense row-major matrix of residues mod p; `data` is clobbered.
std::size_t rank_mod_p(std::span<double> data, std::size_t rows, std::size_t cols, std::uint32_t p, Isa isa);

}  // namespace ncres::kernels
