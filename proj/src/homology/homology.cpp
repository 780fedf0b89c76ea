#include "ncres/homology/homology.hpp"

#include <algorithm>
#include <map>

#include "ncres/groebner/groebner.hpp"

namespace ncres::homology {

InducedComplex induce(anick::Resolution& resolution) {
    InducedComplex complex;
    complex.level_max = resolution.level_max();
    complex.deg_max = resolution.deg_max();
    const auto& chains = resolution.chains();
    complex.blocks.resize(complex.deg_max + 1);
    for (std::size_t j = 0; j <= complex.deg_max; ++j) {
        for (std::size_t n = 0; n <= complex.level_max; ++n) {
            InducedComplex::Block block;
            for (const auto* c : chains.at(n, j)) block.domain.push_back(c->word);
            if (n == 0) {
                if (j == 0) block.codomain.push_back(Word{});
            } else {
                for (const auto* c : chains.at(n - 1, j)) block.codomain.push_back(c->word);
            }
            block.matrix = Matrix(block.codomain.size(), block.domain.size());
            if (n > 0) {
                const auto lower = chains.at(n - 1, j);
                for (std::size_t col = 0; col < block.domain.size(); ++col) {
                    const auto& d = resolution.differential(*chains.at(n, j)[col]);
                    for (std::size_t row = 0; row < lower.size(); ++row) {
                        const Word& w = lower[row]->word;
                        block.matrix(row, col) = d.coefficient({w, static_cast<std::uint32_t>(w.degree())});
                    }
                }
            }
            complex.blocks[j].push_back(std::move(block));
        }
    }
    return complex;
}

std::vector<std::size_t> BettiTable::diagonal() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i <= std::min(i_max, j_max); ++i) out.push_back(b[i][i]);
    return out;
}

BettiTable betti_table(const InducedComplex& complex, const Field& field, std::size_t i_max, std::size_t j_max,
                       bool quadratic) {
    if (j_max > complex.deg_max) throw CoverageError("Betti degree bound exceeds the resolution's degree bound");
    BettiTable t;
    t.i_max = i_max;
    t.j_max = j_max;
    t.quadratic = quadratic;
    t.b.assign(i_max + 1, std::vector<std::size_t>(j_max + 1, 0));
    t.reliable.assign(i_max + 1, std::vector<bool>(j_max + 1, false));

    std::map<std::pair<std::size_t, std::size_t>, std::size_t> ranks;
    auto rank_at = [&](std::size_t j, std::size_t n) {
        auto key = std::make_pair(j, n);
        auto it = ranks.find(key);
        if (it != ranks.end()) return it->second;
        const std::size_t r = rank(complex.at(j, n).matrix, field);
        ranks.emplace(key, r);
        return r;
    };

    const std::size_t levels = complex.level_max;
    t.b[0][0] = 1;
    std::fill(t.reliable[0].begin(), t.reliable[0].end(), true);
    for (std::size_t i = 1; i <= i_max; ++i) {
        const std::size_t n = i - 1;
        for (std::size_t j = 0; j <= j_max; ++j) {
            // A level-n chain has degree at least n+1.
            if (j < i) {
                t.reliable[i][j] = true;
                continue;
            }
            if (n > levels) continue;
            const auto& block = complex.at(j, n);
            std::size_t value = block.domain.size() - rank_at(j, n);
            if (n + 1 <= levels) {
                value -= rank_at(j, n + 1);
                t.reliable[i][j] = true;
            }
            t.b[i][j] = value;
        }
    }
    return t;
}

BettiTable betti_table(const gb::Presentation& presentation, std::size_t i_max, std::size_t j_max,
                       std::optional<std::size_t> level_max) {
    anick::Resolution resolution(presentation, level_max.value_or(i_max), j_max);
    InducedComplex complex = induce(resolution);
    return betti_table(complex, presentation.field, i_max, j_max, presentation.is_quadratic());
}

KoszulVerdict koszul_verdict(const BettiTable& table, std::size_t D) {
    if (!table.quadratic) throw NotQuadraticError();
    if (D > table.j_max || D > table.i_max) {
        throw CoverageError("Betti table does not cover all entries up to degree " + std::to_string(D));
    }
    for (std::size_t j = 0; j <= D; ++j) {
        for (std::size_t i = 0; i <= j; ++i) {
            if (!table.is_reliable(i, j)) {
                throw CoverageError("unreliable Betti entry (" + std::to_string(i) + ", " + std::to_string(j) + ")");
            }
        }
    }
    for (std::size_t j = 0; j <= D; ++j) {
        for (std::size_t i = 0; i <= j; ++i) {
            if (i != j && table.at(i, j) != 0) {
                return {KoszulVerdict::Status::FailsAt, 0, i, j, table.at(i, j)};
            }
        }
    }
    return {KoszulVerdict::Status::KoszulUpTo, D, 0, 0, 0};
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(std::vector<std::vector<Scalar>>& rows, const Field& field) {
    std::vector<std::size_t> pivots;
    if (rows.empty()) return pivots;
    const std::size_t cols = rows.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        const Scalar inv = field.inv(rows[r][c]);
        for (auto& x : rows[r]) x = field.mul(x, inv);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const Scalar f = rows[i][c];
            for (std::size_t k = 0; k < cols; ++k) rows[i][k] = field.sub(rows[i][k], field.mul(f, rows[r][k]));
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

std::string toggle_dual_name(const std::string& name) {
    if (name.size() > 1 && name.back() == '!') return name.substr(0, name.size() - 1);
    return name + '!';
}

}  // namespace

gb::Presentation quadratic_dual(const gb::Presentation& presentation) {
    if (!presentation.is_quadratic()) throw NotQuadraticError();
    const Field& field = presentation.field;
    const std::size_t n = presentation.alphabet.size();

    // Degree-2 words, largest first, so echelon pivots are leading words.
    std::vector<Word> words = all_words(n, 2);
    std::reverse(words.begin(), words.end());
    std::map<Word, std::size_t, DegLexLess> column;
    for (std::size_t k = 0; k < words.size(); ++k) column.emplace(words[k], k);

    std::vector<std::vector<Scalar>> rel;
    for (const auto& r : presentation.relations) {
        std::vector<Scalar> row(words.size(), 0);
        for (const auto& [w, c] : r.terms()) row[column.at(w)] = c;
        rel.push_back(std::move(row));
    }
    const auto pivots = row_reduce(rel, field);

    // Null space of the relation matrix: one vector per free column.
    std::vector<std::vector<Scalar>> null;
    for (std::size_t f = 0; f < words.size(); ++f) {
        if (std::find(pivots.begin(), pivots.end(), f) != pivots.end()) continue;
        std::vector<Scalar> v(words.size(), 0);
        v[f] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = field.neg(rel[k][f]);
        null.push_back(std::move(v));
    }
    row_reduce(null, field);

    std::vector<std::string> names;
    for (const auto& name : presentation.alphabet.descending_names()) names.push_back(toggle_dual_name(name));
    gb::Presentation dual{Alphabet::from_descending(names), field, {}};
    for (const auto& v : null) {
        Polynomial p(field);
        for (std::size_t k = 0; k < words.size(); ++k) p.add_term(words[k], v[k]);
        dual.relations.push_back(std::move(p));
    }
    return dual;
}

bool EulerCheck::all_zero() const {
    return std::all_of(residuals.begin(), residuals.end(), [](long long r) { return r == 0; });
}

EulerCheck euler_check(const BettiTable& table, const gb::HilbertPrefix& hilbert) {
    if (hilbert.coefficients.empty()) throw std::invalid_argument("empty Hilbert prefix");
    const std::size_t J = std::min(table.j_max, hilbert.coefficients.size() - 1);
    auto to_ll = [](const mpz_class& z) {
        if (!z.fits_slong_p()) throw std::overflow_error("Euler residual exceeds machine range");
        return static_cast<long long>(z.get_si());
    };

    EulerCheck out;
    std::vector<mpz_class> numerator(J + 1);
    bool ok_so_far = true;
    for (std::size_t j = 0; j <= J; ++j) {
        bool ok = j <= table.i_max;
        for (std::size_t i = 0; i <= std::min(j, table.i_max); ++i) {
            ok = ok && table.is_reliable(i, j);
            const mpz_class v(static_cast<unsigned long>(table.at(i, j)));
            numerator[j] += (i % 2 == 0) ? v : mpz_class(-v);
        }
        ok_so_far = ok_so_far && ok;
        out.numerator.push_back(to_ll(numerator[j]));
        mpz_class acc = (j == 0) ? -1 : 0;
        for (std::size_t a = 0; a <= j; ++a) {
            acc += mpz_class(static_cast<unsigned long>(hilbert.coefficients[a])) * numerator[j - a];
        }
        out.residuals.push_back(to_ll(acc));
        out.reliable.push_back(ok_so_far);
    }
    return out;
}

GldimReport gldim_report(const gb::Presentation& presentation, std::size_t D) {
    if (!presentation.is_quadratic()) throw NotQuadraticError();
    GldimReport r;
    r.degree_bound = D;
    r.generators = presentation.alphabet.size();
    r.betti = betti_table(presentation, D, D);
    r.koszul = koszul_verdict(r.betti, D);

    r.dual = quadratic_dual(presentation);
    r.dual_basis = gb::complete(r.dual, std::max<std::size_t>(D, 2));
    const auto aut = gb::NormalWordAutomaton::build(r.dual_basis.obstructions(), r.dual.alphabet.size(), D);
    r.dual_hilbert = gb::hilbert_coefficients(aut, D);
    r.dual_finiteness = gb::is_finite_dimensional(aut, r.dual_basis.certified());

    // Extra obstructions only remove words, so a finite truncated language
    // whose longest word lies within the bound already has the exact top degree.
    const bool top_known = r.dual_finiteness.finite &&
                           (r.dual_basis.certified() || r.dual_finiteness.top_degree <= D);
    if (r.koszul.koszul() && top_known) r.gldim = r.dual_finiteness.top_degree;
    r.conditional = true;
    r.conjecture_counterexample = r.gldim.has_value() && r.generators < *r.gldim;
    return r;
}

}  // namespace ncres::homology
