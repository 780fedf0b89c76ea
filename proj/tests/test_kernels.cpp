#include <doctest.h>

#include <random>
#include <vector>

#include "ncres/homology/linalg.hpp"
#include "ncres/kernels/modp.hpp"
#include "oracles.hpp"

using namespace ncres;
using kernels::Isa;

namespace {

const std::vector<std::uint32_t> kPrimes = {2, 3, 7, 101, 65521, 1000003, 67108859};

std::vector<double> random_residues(std::mt19937_64& rng, std::size_t n, std::uint32_t p) {
    std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
    std::vector<double> v(n);
    for (auto& x : v) x = d(rng);
    return v;
}

}  // namespace

TEST_CASE("dispatch") {
    CHECK(kernels::available(Isa::Scalar));
    CHECK(kernels::available(kernels::best_isa()));
    CHECK(kernels::to_string(Isa::Scalar) == "scalar");
    CHECK(kernels::to_string(Isa::Avx2) == "avx2");
    if (!kernels::available(Isa::Avx2)) {
        std::vector<double> row(4, 1.0);
        CHECK_THROWS_AS(kernels::scale_mod(row, 2, 7, Isa::Avx2), std::runtime_error);
    }
}

TEST_CASE("axpy and scale agree between scalar and AVX2") {
    if (!kernels::available(Isa::Avx2)) return;
    std::mt19937_64 rng(1234);
    std::uniform_int_distribution<std::size_t> len(0, 67);
    for (const auto p : kPrimes) {
        std::uniform_int_distribution<std::uint32_t> f(0, p - 1);
        for (int trial = 0; trial < 300; ++trial) {
            const std::size_t n = len(rng);
            const auto row = random_residues(rng, n, p);
            const auto pivot = random_residues(rng, n, p);
            const double factor = trial == 0 ? p - 1 : f(rng);
            auto a = row, b = row;
            kernels::axpy_mod(a, pivot, factor, p, Isa::Scalar);
            kernels::axpy_mod(b, pivot, factor, p, Isa::Avx2);
            CHECK(a == b);
            auto c = row, d = row;
            kernels::scale_mod(c, factor, p, Isa::Scalar);
            kernels::scale_mod(d, factor, p, Isa::Avx2);
            CHECK(c == d);
        }
    }
}

TEST_CASE("scalar axpy matches integer arithmetic at the largest prime") {
    const std::uint32_t p = 67108859;
    std::vector<double> row = {double(p - 1), 0, 1};
    const std::vector<double> pivot = {double(p - 1), double(p - 1), 2};
    kernels::axpy_mod(row, pivot, p - 1, p, Isa::Scalar);
    const auto expect = [&](std::uint64_t a, std::uint64_t b) { return double((a + (p - 1ull) * b) % p); };
    CHECK(row == std::vector<double>{expect(p - 1, p - 1), expect(0, p - 1), expect(1, 2)});
    CHECK_THROWS_AS(kernels::axpy_mod(row, std::vector<double>{1.0}, 1, p, Isa::Scalar), std::invalid_argument);
}

TEST_CASE("modular rank agrees across kernels and with a naive oracle") {
    std::mt19937_64 rng(4321);
    std::uniform_int_distribution<std::size_t> dim(0, 24);
    for (const auto p : kPrimes) {
        for (int trial = 0; trial < 60; ++trial) {
            const std::size_t r = dim(rng), c = dim(rng);
            auto data = random_residues(rng, r * c, p);
            // Low rank on every third trial: rows repeat a small set.
            if (trial % 3 == 0 && r > 2) {
                for (std::size_t i = 2; i < r; ++i)
                    for (std::size_t j = 0; j < c; ++j) data[i * c + j] = data[(i % 2) * c + j];
            }
            std::vector<std::vector<std::int64_t>> naive(r, std::vector<std::int64_t>(c));
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < c; ++j) naive[i][j] = static_cast<std::int64_t>(data[i * c + j]);
            const auto expected = oracle::rank_p(naive, p);
            auto s = data;
            CHECK(kernels::rank_mod_p(s, r, c, p, Isa::Scalar) == expected);
            if (kernels::available(Isa::Avx2)) {
                auto v = data;
                CHECK(kernels::rank_mod_p(v, r, c, p, Isa::Avx2) == expected);
            }
        }
    }
}

TEST_CASE("exact matrices reduce consistently modulo p") {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> entry(-5, 5);
    for (int trial = 0; trial < 100; ++trial) {
        homology::Matrix m(6, 8);
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = 0; j < 8; ++j) m(i, j) = entry(rng);
        for (const auto isa : {Isa::Scalar, Isa::Avx2}) {
            if (!kernels::available(isa)) continue;
            std::vector<std::vector<std::int64_t>> naive(6, std::vector<std::int64_t>(8));
            for (std::size_t i = 0; i < 6; ++i)
                for (std::size_t j = 0; j < 8; ++j) naive[i][j] = oracle::mod(m(i, j).get_num().get_si(), 5);
            CHECK(homology::rank_mod_p(m, 5, isa) == oracle::rank_p(naive, 5));
        }
        CHECK(homology::rank(m, Field::prime(5)) == homology::rank_mod_p(m, 5, Isa::Scalar));
    }
}
