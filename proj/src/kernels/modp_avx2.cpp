// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.

#include <cmath>

#include "ncres/kernels/modp.hpp"

#if defined(NCRES_HAVE_AVX2)
#include <immintrin.h>
#endif

namespace ncres::kernels::avx2 {

#if defined(NCRES_HAVE_AVX2)

namespace {

// x mod p for exact integers 0 <= x < 2^53. The floor estimate may be off
// by one in either direction; two conditional corrections fix it.
inline __m256d reduce(__m256d x, __m256d p, __m256d pinv) {
    const __m256d q = _mm256_floor_pd(_mm256_mul_pd(x, pinv));
    __m256d r = _mm256_fnmadd_pd(q, p, x);
    r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, _mm256_setzero_pd(), _CMP_LT_OQ), p));
    r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, p, _CMP_GE_OQ), p));
    return r;
}

inline double reduce_one(double x, double p, double pinv) {
    double r = x - std::floor(x * pinv) * p;
    if (r < 0) r += p;
    if (r >= p) r -= p;
    return r;
}

}  // namespace

void axpy_mod(std::span<double> row, std::span<const double> pivot, double factor, std::uint32_t p) {
    const double pd = static_cast<double>(p);
    const double pinv = 1.0 / pd;
    const __m256d vp = _mm256_set1_pd(pd);
    const __m256d vpinv = _mm256_set1_pd(pinv);
    const __m256d vf = _mm256_set1_pd(factor);
    std::size_t i = 0;
    for (; i + 4 <= row.size(); i += 4) {
        const __m256d a = _mm256_loadu_pd(row.data() + i);
        const __m256d b = _mm256_loadu_pd(pivot.data() + i);
        _mm256_storeu_pd(row.data() + i, reduce(_mm256_fmadd_pd(vf, b, a), vp, vpinv));
    }
    for (; i < row.size(); ++i) row[i] = reduce_one(std::fma(factor, pivot[i], row[i]), pd, pinv);
}

void scale_mod(std::span<double> row, double factor, std::uint32_t p) {
    const double pd = static_cast<double>(p);
    const double pinv = 1.0 / pd;
    const __m256d vp = _mm256_set1_pd(pd);
    const __m256d vpinv = _mm256_set1_pd(pinv);
    const __m256d vf = _mm256_set1_pd(factor);
    std::size_t i = 0;
    for (; i + 4 <= row.size(); i += 4) {
        const __m256d a = _mm256_loadu_pd(row.data() + i);
        _mm256_storeu_pd(row.data() + i, reduce(_mm256_mul_pd(vf, a), vp, vpinv));
    }
    for (; i < row.size(); ++i) row[i] = reduce_one(factor * row[i], pd, pinv);
}

#else

void axpy_mod(std::span<double> row, std::span<const double> pivot, double factor, std::uint32_t p) {
    scalar::axpy_mod(row, pivot, factor, p);
}

void scale_mod(std::span<double> row, double factor, std::uint32_t p) { scalar::scale_mod(row, factor, p); }

#endif

}  // namespace ncres::kernels::avx2
