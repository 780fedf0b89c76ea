#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "ncres/anick/resolution.hpp"
#include "ncres/groebner/automaton.hpp"
#include "ncres/groebner/groebner.hpp"
#include "ncres/homology/homology.hpp"
#include "ncres/homology/linalg.hpp"

using namespace ncres;
using fixture::poly;
using fixture::word;

namespace {

/// Column images of d-bar at (degree, level) as word -> coefficient maps.
std::map<std::string, std::map<std::string, long>> induced_images(const homology::InducedComplex& c, std::size_t j,
                                                                  std::size_t n, const Alphabet& a) {
    std::map<std::string, std::map<std::string, long>> out;
    const auto& b = c.at(j, n);
    for (std::size_t col = 0; col < b.domain.size(); ++col) {
        auto& img = out[oracle::to_str(b.domain[col], a)];
        for (std::size_t row = 0; row < b.codomain.size(); ++row) {
            if (b.matrix(row, col) != 0) img[oracle::to_str(b.codomain[row], a)] = b.matrix(row, col).get_num().get_si();
        }
    }
    return out;
}

std::vector<std::uint64_t> hilbert(const gb::Presentation& p, std::size_t D) {
    const auto g = gb::complete(p, std::max<std::size_t>(D, p.max_relation_degree()));
    const auto aut = gb::NormalWordAutomaton::build(g.obstructions(), p.alphabet.size(), D);
    return gb::hilbert_coefficients(aut, D).coefficients;
}

std::vector<std::uint64_t> hilbert_by_ideal(const gb::Presentation& p, std::size_t D) {
    std::string letters;
    for (const auto& n : p.alphabet.descending_names()) letters += n.substr(0, 1);
    std::vector<oracle::Poly> rels;
    for (const auto& r : p.relations) {
        oracle::Poly q;
        for (const auto& [w, c] : r.terms()) {
            std::string s;
            for (auto l : w) s += p.alphabet.name(l).substr(0, 1);
            q[s] = c;
        }
        rels.push_back(q);
    }
    std::vector<std::uint64_t> out;
    std::uint64_t total = 1;
    for (std::size_t d = 0; d <= D; ++d) {
        out.push_back(total - oracle::ideal_slice_dim(letters, rels, d));
        total *= letters.size();
    }
    return out;
}

}  // namespace

TEST_CASE("induced differential of A") {
    const auto A = fixture::A();
    anick::Resolution res(A, 4, 6);
    const auto c = homology::induce(res);
    using Img = std::map<std::string, std::map<std::string, long>>;
    CHECK(induced_images(c, 3, 2, A.alphabet) == Img{{"xxx", {{"xyx", 1}}}, {"xxz", {}}, {"xzy", {}}});
    for (std::size_t j = 0; j <= 6; ++j) {
        CHECK(c.at(j, 1).matrix.is_zero());
        CHECK(c.at(j, 0).matrix.is_zero());
    }
    CHECK(induced_images(c, 4, 3, A.alphabet).at("xxxx") == std::map<std::string, long>{{"xyxx", -1}, {"xxyx", 1}});
    // d-bar o d-bar = 0.
    for (std::size_t j = 0; j <= 6; ++j) {
        for (std::size_t n = 1; n <= 4; ++n) {
            CHECK(c.at(j, n - 1).matrix.multiply(c.at(j, n).matrix, A.field).is_zero());
        }
    }
}

TEST_CASE("Betti table of A") {
    const auto t = homology::betti_table(fixture::A(), 5, 8);
    CHECK(t.diagonal() == std::vector<std::size_t>{1, 3, 3, 2, 1, 0});
    for (std::size_t i = 0; i <= 5; ++i) {
        for (std::size_t j = 0; j <= 8; ++j) {
            CHECK(t.is_reliable(i, j));
            if (i != j) CHECK(t.at(i, j) == 0);
        }
    }
    CHECK(t.at(0, 0) == 1);
    CHECK(t.at(1, 1) == 3);
}

TEST_CASE("Betti tables of A' agree under both orderings") {
    const auto ty = homology::betti_table(fixture::Aprime_y(), 4, 8);
    const auto tx = homology::betti_table(fixture::Aprime_x(), 4, 8);
    CHECK(ty.diagonal() == std::vector<std::size_t>{1, 2, 1, 0, 0});
    CHECK(tx.b == ty.b);
}

TEST_CASE("monomial relation without self-overlap") {
    const auto p = fixture::parse("vars: x > y\nrelations:\n  x*y\n");
    const auto t = homology::betti_table(p, 4, 6);
    CHECK(t.diagonal() == std::vector<std::size_t>{1, 2, 1, 0, 0});
    for (std::size_t j = 0; j <= 6; ++j) CHECK(t.at(3, j) == 0);
}

TEST_CASE("Betti tables are order independent on reliable entries") {
    const auto t1 = homology::betti_table(fixture::A(), 5, 7);
    const auto t2 = homology::betti_table(fixture::A_yxz(), 5, 7);
    for (std::size_t i = 0; i <= 5; ++i)
        for (std::size_t j = 0; j <= 7; ++j)
            if (t1.is_reliable(i, j) && t2.is_reliable(i, j)) CHECK(t1.at(i, j) == t2.at(i, j));
}

TEST_CASE("reliability at the level boundary") {
    const auto t = homology::betti_table(fixture::A(), 4, 6, 3);
    CHECK(t.is_reliable(3, 3));
    CHECK_FALSE(t.is_reliable(4, 4));
    CHECK(t.is_reliable(4, 3));
    CHECK_THROWS_AS(homology::koszul_verdict(t, 6), homology::CoverageError);
}

TEST_CASE("Koszul verdicts") {
    CHECK(homology::koszul_verdict(homology::betti_table(fixture::A(), 8, 8), 8).status ==
          homology::KoszulVerdict::Status::KoszulUpTo);
    const auto comm = fixture::parse("vars: x > y\nrelations:\n  x*y - y*x\n");
    const auto v = homology::koszul_verdict(homology::betti_table(comm, 6, 6), 6);
    CHECK(v.koszul());
    CHECK(v.degree == 6);
    const auto cubic = fixture::parse("vars: x > y\nrelations:\n  x^3 - y*x*y\n");
    CHECK_THROWS_AS(homology::koszul_verdict(homology::betti_table(cubic, 4, 6), 4), homology::NotQuadraticError);
}

TEST_CASE("a quadratic algebra that is not Koszul") {
    const auto p = fixture::parse("vars: x > y\nrelations:\n  x^2 - y*x\n  x*y\n");
    // Independent evidence: H_A(t) H_{A!}(-t) differs from 1 in degree 4.
    const auto ha = hilbert_by_ideal(p, 5);
    const auto hd = hilbert_by_ideal(homology::quadratic_dual(p), 5);
    long t4 = 0;
    for (std::size_t i = 0; i <= 4; ++i)
        t4 += static_cast<long>(ha[i]) * ((4 - i) % 2 ? -1 : 1) * static_cast<long>(hd[4 - i]);
    CHECK(t4 != 0);
    const auto v = homology::koszul_verdict(homology::betti_table(p, 6, 6), 6);
    CHECK(v.status == homology::KoszulVerdict::Status::FailsAt);
    CHECK(v.i == 3);
    CHECK(v.j == 4);
    CHECK(v.value == 1);
}

TEST_CASE("quadratic duals") {
    const auto A = fixture::A();
    const auto d = homology::quadratic_dual(A);
    CHECK(d.alphabet.descending_names() == std::vector<std::string>{"x!", "y!", "z!"});
    const std::vector<Polynomial> expected = {poly(d, "x!^2 - y!*x!"), poly(d, "x!*y!"), poly(d, "y!^2"),
                                              poly(d, "y!*z!"),        poly(d, "z!*x!"), poly(d, "z!^2")};
    CHECK(gb::interreduce(d.relations) == gb::interreduce(expected));

    // Annihilator check against the pairing.
    for (const auto& r : A.relations) {
        for (const auto& s : d.relations) {
            Scalar pairing = 0;
            for (const auto& [w, c] : r.terms()) pairing += c * s.coefficient(w);
            CHECK(pairing == 0);
        }
    }

    const auto comm = fixture::parse("vars: x > y\nrelations:\n  x*y - y*x\n");
    const auto dc = homology::quadratic_dual(comm);
    CHECK(gb::interreduce(dc.relations) ==
          gb::interreduce({poly(dc, "x!^2"), poly(dc, "y!^2"), poly(dc, "x!*y! + y!*x!")}));

    const auto dd = homology::quadratic_dual(d);
    CHECK(dd.alphabet == A.alphabet);
    CHECK(gb::interreduce(dd.relations) == gb::interreduce(A.relations));

    CHECK_THROWS_AS(homology::quadratic_dual(fixture::parse("vars: x\nrelations:\n  x^3\n")),
                    homology::NotQuadraticError);
}

TEST_CASE("quadratic dual dimension identity on random quadratic presentations") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        const auto r = oracle::random_presentation(rng, 3, 2);
        const auto p = fixture::parse(oracle::presentation_text(r));
        const auto d = homology::quadratic_dual(p);
        std::vector<std::vector<mpq_class>> m;
        for (const auto& rel : r.relations) {
            std::vector<mpq_class> row;
            for (const auto& w : oracle::words(r.letters, 2)) row.push_back(rel.count(w) ? rel.at(w) : 0);
            m.push_back(row);
        }
        const std::size_t n = r.letters.size();
        CHECK(d.relations.size() + oracle::rank_q(m) == n * n);
    }
}

TEST_CASE("Euler characteristic identity") {
    SUBCASE("A") {
        const auto A = fixture::A();
        const auto e = homology::euler_check(homology::betti_table(A, 8, 8), {hilbert(A, 8)});
        CHECK(e.all_zero());
        CHECK(std::vector<long long>(e.numerator.begin(), e.numerator.begin() + 6) ==
              std::vector<long long>{1, -3, 3, -2, 1, 0});
        CHECK(e.residuals[0] == 0);
        CHECK(std::all_of(e.reliable.begin(), e.reliable.end(), [](bool b) { return b; }));
    }
    SUBCASE("A'") {
        const auto Ap = fixture::Aprime_y();
        const auto e = homology::euler_check(homology::betti_table(Ap, 6, 6), {hilbert(Ap, 6)});
        CHECK(e.all_zero());
        CHECK(e.numerator == std::vector<long long>{1, -2, 1, 0, 0, 0, 0});
    }
}

TEST_CASE("Koszul diagonals match the dual Hilbert prefix") {
    for (const auto& p : {fixture::A(), fixture::Aprime_y()}) {
        const auto t = homology::betti_table(p, 6, 6);
        const auto h = hilbert(homology::quadratic_dual(p), 6);
        const auto diag = t.diagonal();
        for (std::size_t i = 0; i <= 6; ++i) CHECK(diag[i] == h[i]);
    }
}

TEST_CASE("global dimension reports") {
    SUBCASE("A") {
        const auto r = homology::gldim_report(fixture::A(), 8);
        CHECK(r.koszul.koszul());
        CHECK(r.dual_basis.certified());
        CHECK(r.dual_finiteness.finite);
        CHECK(r.dual_finiteness.top_degree == 4);
        REQUIRE(r.gldim);
        CHECK(*r.gldim == 4);
        CHECK(r.generators == 3);
        CHECK(r.conjecture_counterexample);
        CHECK(r.conditional);
    }
    SUBCASE("A'") {
        const auto r = homology::gldim_report(fixture::Aprime_y(), 8);
        REQUIRE(r.gldim);
        CHECK(*r.gldim == 2);
        CHECK(r.generators == 2);
        CHECK_FALSE(r.conjecture_counterexample);
    }
    SUBCASE("free algebra") {
        const auto r = homology::gldim_report(fixture::free_algebra({"x", "y", "z"}), 6);
        REQUIRE(r.gldim);
        CHECK(*r.gldim == 1);
        CHECK_FALSE(r.conjecture_counterexample);
    }
    SUBCASE("non-quadratic input") {
        CHECK_THROWS_AS(homology::gldim_report(fixture::parse("vars: x\nrelations:\n  x^3\n"), 6),
                        homology::NotQuadraticError);
    }
}

TEST_CASE("exact ranks agree with naive elimination") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> entry(-3, 3);
    std::uniform_int_distribution<int> den(1, 4);
    std::uniform_int_distribution<std::size_t> dim(0, 9);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t r = dim(rng), c = dim(rng);
        homology::Matrix m(r, c);
        std::vector<std::vector<mpq_class>> naive(r, std::vector<mpq_class>(c));
        std::vector<std::vector<std::int64_t>> modular(r, std::vector<std::int64_t>(c));
        const bool sparse = trial % 3 == 0;
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < c; ++j) {
                const int v = (sparse && entry(rng) != 0) ? 0 : entry(rng);
                m(i, j) = v;
                naive[i][j] = v;
                modular[i][j] = v;
            }
        }
        // Rank deficiency on purpose: duplicate a combination of rows.
        if (r >= 3) {
            for (std::size_t j = 0; j < c; ++j) {
                m(r - 1, j) = m(0, j) * mpq_class(1, den(rng) + 1) + m(1, j);
                naive[r - 1][j] = m(r - 1, j);
            }
        }
        CHECK(homology::rank_rational(m) == oracle::rank_q(naive));
        CHECK(homology::rank(m, Field::rationals()) == oracle::rank_q(naive));
        if (r < 3) CHECK(homology::rank(m, Field::prime(7)) == oracle::rank_p(modular, 7));
    }
}
