#include "ncres/cli/report.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "ncres/anick/graph.hpp"
#include "ncres/anick/resolution.hpp"
#include "ncres/cli/parse.hpp"
#include "ncres/groebner/automaton.hpp"
#include "ncres/groebner/groebner.hpp"
#include "ncres/homology/homology.hpp"

namespace ncres::cli {

namespace {

Json word_list(const std::vector<Word>& words, const Alphabet& alphabet) {
    Json out = Json::array();
    for (const auto& w : words) out.push_back(format_word(w, alphabet));
    return out;
}

Json polynomial_list(const std::vector<Polynomial>& polys, const Alphabet& alphabet) {
    Json out = Json::array();
    for (const auto& p : polys) out.push_back(format_polynomial(p, alphabet));
    return out;
}

Json presentation_json(const gb::Presentation& p) {
    return Json{{"vars", p.alphabet.descending_names()},
                {"field", p.field.to_string()},
                {"relations", polynomial_list(p.relations, p.alphabet)}};
}

Json top_degree_json(const gb::FinitenessVerdict& v) {
    return v.finite ? Json(v.top_degree) : Json(nullptr);
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::string counts_line(const std::vector<std::uint64_t>& values) {
    std::vector<std::string> parts;
    for (auto v : values) parts.push_back(std::to_string(v));
    return join(parts, " ");
}

Json betti_json(const homology::BettiTable& t) {
    Json rows = Json::array();
    Json mask = Json::array();
    for (std::size_t i = 0; i <= t.i_max; ++i) {
        rows.push_back(t.b[i]);
        Json r = Json::array();
        for (std::size_t j = 0; j <= t.j_max; ++j) r.push_back(static_cast<bool>(t.reliable[i][j]));
        mask.push_back(std::move(r));
    }
    return Json{{"betti", rows}, {"reliable", mask}, {"diagonal", t.diagonal()}};
}

std::string betti_text(const homology::BettiTable& t) {
    std::ostringstream os;
    os << "b[i][j] (rows i = 0.." << t.i_max << ", columns j = 0.." << t.j_max << "; '?' marks unreliable)\n";
    for (std::size_t i = 0; i <= t.i_max; ++i) {
        os << "  i=" << i << ":";
        for (std::size_t j = 0; j <= t.j_max; ++j) {
            os << ' ' << t.b[i][j];
            if (!t.reliable[i][j]) os << '?';
        }
        os << '\n';
    }
    return os.str();
}

Json verdict_json(const homology::KoszulVerdict& v) {
    if (v.koszul()) return Json{{"status", "koszul-up-to"}, {"degree", v.degree}};
    return Json{{"status", "fails-at"}, {"i", v.i}, {"j", v.j}, {"value", v.value}};
}

std::string verdict_text(const homology::KoszulVerdict& v) {
    if (v.koszul()) return "Koszul up to degree " + std::to_string(v.degree);
    return "not Koszul: b[" + std::to_string(v.i) + "][" + std::to_string(v.j) + "] = " + std::to_string(v.value);
}

void gb_report(Report& r, const gb::Presentation& p, const Config& cfg) {
    const auto basis = gb::complete(p, cfg.max_deg);
    r.certified = basis.certified();
    r.payload = Json{{"basis", polynomial_list(basis.elements, p.alphabet)},
                     {"obstructions", word_list(basis.obstructions(), p.alphabet)},
                     {"certificate", gb::to_string(basis.certificate)},
                     {"truncation_degree", basis.truncation_degree},
                     {"unprocessed_pairs", basis.unprocessed_pairs}};
    std::ostringstream os;
    os << "certificate: " << gb::to_string(basis.certificate) << " (degree " << basis.truncation_degree << ")\n";
    for (const auto& g : basis.elements) os << "  " << format_polynomial(g, p.alphabet) << '\n';
    r.text = os.str();
}

void chains_report(Report& r, const gb::Presentation& p, const Config& cfg) {
    const auto basis = gb::complete(p, cfg.max_deg);
    r.certified = basis.certified();
    const auto obstructions = basis.obstructions();
    const auto chains = anick::enumerate_chains(obstructions, p.alphabet.size(), cfg.level(), cfg.max_deg);
    Json levels = Json::array();
    std::ostringstream os;
    for (std::size_t n = 0; n <= chains.level_max(); ++n) {
        std::vector<std::uint64_t> counts;
        std::vector<Word> words;
        for (std::size_t j = 0; j <= chains.deg_max(); ++j) counts.push_back(chains.count(n, j));
        for (const auto& c : chains.at_level(n)) words.push_back(c.word);
        levels.push_back(Json{{"level", n}, {"counts", counts}, {"words", word_list(words, p.alphabet)}});
        os << "level " << n << ": " << words.size() << " chains; by degree " << counts_line(counts) << '\n';
        for (const auto& w : words) os << "  " << format_word(w, p.alphabet) << '\n';
    }
    r.payload = Json{{"certificate", gb::to_string(basis.certificate)},
                     {"obstructions", word_list(obstructions, p.alphabet)},
                     {"chains", levels}};
    r.text = os.str();
}

Json element_json(const anick::FreeModuleElement& x, const Alphabet& alphabet) {
    Json terms = Json::array();
    for (const auto& [key, c] : x.terms) {
        terms.push_back(Json{{"chain", format_word(key.chain(), alphabet)},
                             {"cofactor", format_word(key.cofactor(), alphabet)},
                             {"coefficient", format_scalar(c)}});
    }
    return terms;
}

std::string element_text(const anick::FreeModuleElement& x, const Alphabet& alphabet) {
    if (x.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, c] : x.terms) {
        const bool negative = c < 0;
        if (!first) out += negative ? " - " : " + ";
        if (first && negative) out += "-";
        const Scalar a = negative ? Scalar(-c) : c;
        if (a != 1) out += format_scalar(a) + "*";
        out += "[" + format_word(key.chain(), alphabet) + "]";
        if (key.cofactor().degree() > 0) out += format_word(key.cofactor(), alphabet);
        first = false;
    }
    return out;
}

void resolution_report(Report& r, const gb::Presentation& p, const Config& cfg) {
    auto basis = gb::complete(p, cfg.max_deg);
    r.certified = basis.certified();
    const std::string certificate = gb::to_string(basis.certificate);
    anick::Resolution res(p, std::move(basis), cfg.level(), cfg.max_deg);

    Json diffs = Json::array();
    std::ostringstream os;
    for (std::size_t n = 0; n <= res.level_max(); ++n) {
        for (const auto& c : res.chains().at_level(n)) {
            const auto& d = res.differential(c);
            diffs.push_back(Json{{"level", n},
                                 {"chain", format_word(c.word, p.alphabet)},
                                 {"image", element_json(d, p.alphabet)}});
            os << "d_" << n << "[" << format_word(c.word, p.alphabet) << "] = " << element_text(d, p.alphabet)
               << '\n';
        }
    }

    std::map<std::pair<std::size_t, std::size_t>, anick::ResolutionSlice> slices;
    for (std::size_t n = 0; n <= res.level_max(); ++n)
        for (std::size_t j = 1; j <= res.deg_max(); ++j) slices.emplace(std::make_pair(n, j), res.slice(n, j));
    bool zero = true;
    Json checks = Json::array();
    for (const auto& [key, upper] : slices) {
        if (key.first == 0) continue;
        const auto& lower = slices.at({key.first - 1, key.second});
        const bool ok = anick::composes_to_zero(upper, lower, p.field);
        zero = zero && ok;
        if (!upper.domain.empty()) {
            checks.push_back(Json{{"level", key.first}, {"degree", key.second}, {"zero", ok}});
        }
    }
    r.payload = Json{{"certificate", certificate},
                     {"differentials", diffs},
                     {"d_squared_zero", zero},
                     {"d_squared_checks", checks}};
    os << "d o d = 0: " << (zero ? "yes" : "no") << '\n';
    r.text = os.str();
}

homology::BettiTable betti_for(const gb::Presentation& p, const Config& cfg, bool& certified) {
    auto basis = gb::complete(p, cfg.max_deg);
    certified = basis.certified();
    anick::Resolution res(p, std::move(basis), cfg.level(), cfg.max_deg);
    const auto complex = homology::induce(res);
    return homology::betti_table(complex, p.field, cfg.level(), cfg.max_deg, p.is_quadratic());
}

void betti_report(Report& r, const gb::Presentation& p, const Config& cfg) {
    const auto table = betti_for(p, cfg, r.certified);
    r.payload = betti_json(table);
    r.text = betti_text(table);
}

void koszul_report(Report& r, const gb::Presentation& p, const Config& cfg) {
    if (!p.is_quadratic()) throw homology::NotQuadraticError();
    const auto table = betti_for(p, cfg, r.certified);
    const auto verdict = homology::koszul_verdict(table, cfg.max_deg);
    r.payload = Json{{"verdict", verdict_json(verdict)}};
    const Json betti = betti_json(table);
    for (const auto& [k, v] : betti.items()) r.payload[k] = v;
    r.text = verdict_text(verdict) + "\n" + betti_text(table);
}

void dual_report(Report& r, const gb::Presentation& p, const Config& cfg) {
    const auto dual = homology::quadratic_dual(p);
    const auto basis = gb::complete(dual, std::max<std::size_t>(cfg.max_deg, 2));
    r.certified = basis.certified();
    const auto aut = gb::NormalWordAutomaton::build(basis.obstructions(), dual.alphabet.size(), cfg.max_deg);
    const auto hilbert = gb::hilbert_coefficients(aut, cfg.max_deg);
    const auto fin = gb::is_finite_dimensional(aut, basis.certified());
    r.payload = Json{{"dual", presentation_json(dual)},
                     {"basis", polynomial_list(basis.elements, dual.alphabet)},
                     {"certificate", gb::to_string(basis.certificate)},
                     {"hilbert", hilbert.coefficients},
                     {"finite", fin.finite},
                     {"top_degree", top_degree_json(fin)},
                     {"conditional", fin.conditional}};
    std::ostringstream os;
    os << format_presentation(dual);
    os << "basis (" << gb::to_string(basis.certificate) << "):\n";
    for (const auto& g : basis.elements) os << "  " << format_polynomial(g, dual.alphabet) << '\n';
    os << "hilbert: " << counts_line(hilbert.coefficients) << '\n';
    if (fin.finite) os << "finite, top degree " << fin.top_degree << '\n';
    else os << "infinite\n";
    r.text = os.str();
}

void hilbert_report(Report& r, const gb::Presentation& p, const Config& cfg) {
    const auto basis = gb::complete(p, cfg.max_deg);
    r.certified = basis.certified();
    const auto aut = gb::NormalWordAutomaton::build(basis.obstructions(), p.alphabet.size(), cfg.max_deg);
    const auto hilbert = gb::hilbert_coefficients(aut, cfg.max_deg);
    const auto fin = gb::is_finite_dimensional(aut, basis.certified());
    r.payload = Json{{"hilbert", hilbert.coefficients},
                     {"certificate", gb::to_string(basis.certificate)},
                     {"finite", fin.finite},
                     {"top_degree", top_degree_json(fin)},
                     {"conditional", fin.conditional}};
    r.text = "hilbert: " + counts_line(hilbert.coefficients) + "\n" +
             (fin.finite ? "finite, top degree " + std::to_string(fin.top_degree) : std::string("infinite")) +
             (fin.conditional ? " (conditional on the truncation)\n" : "\n");
}

void gldim_report(Report& r, const gb::Presentation& p, const Config& cfg) {
    const auto rep = homology::gldim_report(p, cfg.max_deg);
    r.certified = rep.dual_basis.certified();
    r.payload = Json{{"gldim", rep.gldim ? Json(*rep.gldim) : Json(nullptr)},
                     {"dim_A1", rep.generators},
                     {"conjecture_counterexample", rep.conjecture_counterexample},
                     {"conditional", rep.conditional},
                     {"verdict", verdict_json(rep.koszul)},
                     {"dual", presentation_json(rep.dual)},
                     {"dual_certificate", gb::to_string(rep.dual_basis.certificate)},
                     {"dual_top_degree", top_degree_json(rep.dual_finiteness)},
                     {"dual_hilbert", rep.dual_hilbert.coefficients}};
    const Json betti = betti_json(rep.betti);
    for (const auto& [k, v] : betti.items()) r.payload[k] = v;
    std::ostringstream os;
    os << verdict_text(rep.koszul) << '\n';
    os << "dual hilbert: " << counts_line(rep.dual_hilbert.coefficients) << " ("
       << gb::to_string(rep.dual_basis.certificate) << ")\n";
    if (rep.gldim) {
        os << "gldim = " << *rep.gldim << ", dim A_1 = " << rep.generators
           << (rep.conjecture_counterexample ? " < gldim: counterexample" : "") << '\n';
    } else {
        os << "gldim undetermined, dim A_1 = " << rep.generators << '\n';
    }
    if (rep.conditional) os << "(Koszulness checked up to degree " << rep.degree_bound << ")\n";
    r.text = os.str();
}

void graph_report(Report& r, const gb::Presentation& p, const Config& cfg) {
    const auto basis = gb::complete(p, cfg.max_deg);
    r.certified = basis.certified();
    const auto graph = anick::build_chain_graph(basis.obstructions(), p.alphabet.size());
    Json edges = Json::array();
    for (const auto& e : graph.edges) {
        edges.push_back(Json{{"from", e.from}, {"to", e.to}, {"obstruction", format_word(e.obstruction, p.alphabet)}});
    }
    Json paths = Json::array();
    std::vector<std::uint64_t> counts;
    for (std::size_t n = 0; n <= cfg.level(); ++n) counts.push_back(anick::count_chain_paths(graph, n, cfg.max_deg));
    r.payload = Json{{"certificate", gb::to_string(basis.certificate)},
                     {"vertices", word_list(graph.vertices, p.alphabet)},
                     {"letter_count", graph.letter_count},
                     {"edges", edges},
                     {"path_counts", counts}};
    r.dot = anick::to_dot(graph, p.alphabet);
    std::ostringstream os;
    os << graph.vertices.size() << " vertices, " << graph.edges.size() << " edges\n";
    os << "paths by length (degree <= " << cfg.max_deg << "): " << counts_line(counts) << '\n';
    r.text = os.str();
}

}  // namespace

Report build_report(const std::string& command, const gb::Presentation& presentation, const Config& config) {
    Report r;
    r.command = command;
    r.config = Json{{"max_deg", config.max_deg},
                    {"max_level", command == "gldim" ? config.max_deg : config.level()},
                    {"field", presentation.field.to_string()},
                    {"order", presentation.alphabet.descending_names()}};
    if (command == "gb") gb_report(r, presentation, config);
    else if (command == "chains") chains_report(r, presentation, config);
    else if (command == "resolution") resolution_report(r, presentation, config);
    else if (command == "betti") betti_report(r, presentation, config);
    else if (command == "koszul") koszul_report(r, presentation, config);
    else if (command == "dual") dual_report(r, presentation, config);
    else if (command == "hilbert") hilbert_report(r, presentation, config);
    else if (command == "gldim") gldim_report(r, presentation, config);
    else if (command == "graph") graph_report(r, presentation, config);
    else throw std::invalid_argument("unknown command '" + command + "'");
    return r;
}

Json to_json(const Report& report, std::optional<double> elapsed_ms) {
    Json out{{"command", report.command}, {"config", report.config}, {"payload", report.payload}};
    if (elapsed_ms) out["timing"] = Json{{"elapsed_ms", *elapsed_ms}};
    return out;
}

namespace {

struct Options {
    std::string input;
    std::size_t max_deg = 8;
    std::size_t max_level = 0;
    bool has_max_level = false;
    std::string format = "json";
    std::string field;
    bool require_certified = false;
    bool no_timing = false;
};

int fail(std::ostream& out, std::ostream& err, const std::string& format, const std::string& message,
         std::optional<std::pair<std::size_t, std::size_t>> position = std::nullopt) {
    err << "error: " << message << '\n';
    if (format == "json") {
        Json e{{"message", message}};
        e["line"] = position ? Json(position->first) : Json(nullptr);
        e["column"] = position ? Json(position->second) : Json(nullptr);
        out << Json{{"error", e}}.dump(2) << '\n';
    }
    return 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Groebner bases, Anick resolutions and Betti tables of graded algebras", "ncres"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--input", opt.input, "Presentation file (default: standard input)");
    app.add_option("--max-deg", opt.max_deg, "Degree bound D")->check(CLI::Range(1, 64));
    app.add_option("--max-level", opt.max_level, "Highest chain level (default: D)")->check(CLI::Range(0, 64));
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text", "dot"}));
    app.add_option("--field", opt.field, "Coefficient field: q or fp:<p>");
    app.add_flag("--require-certified", opt.require_certified, "Exit with 2 unless the answer is certified");
    app.add_flag("--no-timing", opt.no_timing, "Omit the timing field");
    const std::map<std::string, std::string> help = {
        {"gb", "Groebner basis truncated at degree D"},
        {"chains", "Anick chains by level"},
        {"resolution", "Differentials of the Anick resolution and the d o d = 0 check"},
        {"betti", "Bigraded Betti numbers b[i][j] = dim Tor_{i,j}(k,k)"},
        {"koszul", "Koszul verdict up to degree D"},
        {"dual", "Quadratic dual with its Groebner basis and Hilbert series"},
        {"hilbert", "Hilbert series prefix and finiteness"},
        {"gldim", "Global dimension from the Koszul verdict and the dual"},
        {"graph", "Chain-generation graph"},
    };
    for (const auto& name : commands()) app.add_subcommand(name, help.at(name));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }
    opt.has_max_level = app.count("--max-level") > 0;
    const std::string command = app.get_subcommands().front()->get_name();

    if (opt.format == "dot" && command != "graph") {
        return fail(out, err, "text", "dot output is only available for the graph command");
    }

    std::string text;
    if (opt.input.empty() || opt.input == "-") {
        std::ostringstream buffer;
        buffer << in.rdbuf();
        text = buffer.str();
    } else {
        std::ifstream file(opt.input, std::ios::binary);
        if (!file) return fail(out, err, opt.format, "cannot read '" + opt.input + "'");
        std::ostringstream buffer;
        buffer << file.rdbuf();
        text = buffer.str();
    }

    std::optional<Field> field;
    if (!opt.field.empty()) {
        try {
            field = parse_field(opt.field);
        } catch (const std::invalid_argument& e) {
            return fail(out, err, opt.format, e.what());
        }
    }

    gb::Presentation presentation;
    try {
        presentation = parse_presentation(text, field);
    } catch (const ParseError& e) {
        return fail(out, err, opt.format, e.message(), std::make_pair(e.line(), e.column()));
    } catch (const std::invalid_argument& e) {
        return fail(out, err, opt.format, e.what());
    }

    Config config;
    config.max_deg = opt.max_deg;
    if (opt.has_max_level) config.max_level = opt.max_level;

    Report report;
    const auto start = std::chrono::steady_clock::now();
    try {
        report = build_report(command, presentation, config);
    } catch (const std::exception& e) {
        return fail(out, err, opt.format, e.what());
    }
    const double elapsed =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    if (opt.format == "json") {
        out << to_json(report, opt.no_timing ? std::nullopt : std::optional<double>(elapsed)).dump(2) << '\n';
    } else if (opt.format == "dot") {
        out << report.dot;
    } else {
        out << report.text;
    }

    if (opt.require_certified && !report.certified) {
        err << "error: the answer rests on a Groebner basis that is only complete up to degree " << config.max_deg
            << '\n';
        return 2;
    }
    return 0;
}

}  // namespace ncres::cli
