#pragma once

#include <string>
#include <vector>

#include "ncres/cli/parse.hpp"
#include "ncres/groebner/presentation.hpp"
#include "oracles.hpp"

namespace fixture {

inline const char* kA = "vars: x > y > z\nrelations:\n  x^2 + y*x\n  x*z\n  z*y\n";
inline const char* kAyxz = "vars: y > x > z\nrelations:\n  x^2 + y*x\n  x*z\n  z*y\n";
inline const char* kAprimeYLeading = "vars: x < y\nrelations:\n  x^2 - y*x\n";
inline const char* kAprimeXLeading = "vars: x > y\nrelations:\n  x^2 - y*x\n";

inline ncres::gb::Presentation parse(const std::string& text) { return ncres::cli::parse_presentation(text); }

inline ncres::gb::Presentation A() { return parse(kA); }
inline ncres::gb::Presentation A_yxz() { return parse(kAyxz); }
inline ncres::gb::Presentation Aprime_y() { return parse(kAprimeYLeading); }
inline ncres::gb::Presentation Aprime_x() { return parse(kAprimeXLeading); }

/// The free algebra on the given letters, largest first.
inline ncres::gb::Presentation free_algebra(const std::vector<std::string>& letters) {
    return ncres::gb::Presentation{ncres::Alphabet::from_descending(letters), ncres::Field::rationals(), {}};
}

inline ncres::Word word(const ncres::gb::Presentation& p, const std::string& s) {
    return oracle::to_word(s, p.alphabet);
}

/// A homogeneous polynomial written in presentation syntax.
inline ncres::Polynomial poly(const ncres::gb::Presentation& p, const std::string& text) {
    std::string header = "vars: ";
    const auto names = p.alphabet.descending_names();
    for (std::size_t i = 0; i < names.size(); ++i) header += (i ? " > " : "") + names[i];
    header += "\nfield: " + p.field.to_string() + "\nrelations:\n  " + text + "\n";
    return ncres::cli::parse_presentation(header).relations.at(0);
}

inline std::vector<std::string> strs(const std::vector<ncres::Word>& ws, const ncres::Alphabet& a) {
    std::vector<std::string> out;
    for (const auto& w : ws) out.push_back(oracle::to_str(w, a));
    return out;
}

inline std::vector<oracle::Poly> oracle_relations(const ncres::gb::Presentation& p) {
    std::vector<oracle::Poly> out;
    for (const auto& r : p.relations) out.push_back(oracle::to_poly(r, p.alphabet));
    return out;
}

inline std::string letters(const ncres::gb::Presentation& p) {
    std::string s;
    for (const auto& n : p.alphabet.descending_names()) s += n;
    return s;
}

}  // namespace fixture
