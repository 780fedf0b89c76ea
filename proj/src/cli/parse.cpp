#include "ncres/cli/parse.hpp"

#include <cctype>
#include <charconv>
#include <vector>

namespace ncres::cli {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::invalid_argument("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t'; }

bool is_name_char(char c) {
    static constexpr std::string_view reserved = "*^+-/#()<>,:";
    return !is_space(c) && c != '\n' && c != '\r' && reserved.find(c) == std::string_view::npos;
}

std::uint64_t parse_unsigned(std::string_view digits) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) throw std::invalid_argument("bad number");
    return v;
}

class LineParser {
public:
    LineParser(std::string_view text, std::size_t line, std::size_t offset, const Alphabet& alphabet,
               const Field& field)
        : text_(text), line_(line), offset_(offset), alphabet_(alphabet), field_(field) {}

    Polynomial polynomial() {
        Polynomial p(field_);
        skip_ws();
        if (at_end()) fail("expected a polynomial");
        bool first = true;
        while (true) {
            skip_ws();
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            skip_ws();
            auto [coeff, word] = term();
            p.add_term(word, sign < 0 ? Scalar(-coeff) : coeff);
            first = false;
            skip_ws();
            if (at_end()) break;
        }
        return p;
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(line_, offset_ + pos_ + 1, message);
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    void skip_ws() {
        while (!at_end() && is_space(text_[pos_])) ++pos_;
    }

    std::string_view digits() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return text_.substr(start, pos_ - start);
    }

    Scalar number() {
        const std::size_t start = pos_;
        const mpz_class num{std::string(digits())};
        mpz_class den = 1;
        if (peek() == '/') {
            ++pos_;
            auto d = digits();
            if (d.empty()) fail("expected a denominator");
            den = mpz_class(std::string(d));
            if (den == 0) {
                pos_ = start;
                fail("zero denominator");
            }
        }
        Scalar q(num, den);
        q.canonicalize();
        try {
            return field_.normalize(q);
        } catch (const std::domain_error&) {
            pos_ = start;
            fail("denominator is divisible by the field characteristic");
        }
    }

    std::optional<Letter> letter() {
        std::size_t best_len = 0;
        std::optional<Letter> best;
        for (Letter a = 0; a < alphabet_.size(); ++a) {
            const std::string& name = alphabet_.name(a);
            if (name.size() > best_len && text_.substr(pos_, name.size()) == name) {
                best_len = name.size();
                best = a;
            }
        }
        pos_ += best_len;
        return best;
    }

    std::pair<Scalar, Word> term() {
        Scalar coeff = 1;
        Word w;
        bool have_coeff = false;
        bool have_factor = false;
        bool need_factor = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = number();
            have_coeff = true;
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                need_factor = true;
            }
        }
        while (true) {
            skip_ws();
            const std::size_t at = pos_;
            auto a = letter();
            if (!a) {
                if (!at_end() && is_name_char(peek()) && !std::isdigit(static_cast<unsigned char>(peek()))) {
                    fail("unknown letter");
                }
                if (need_factor) fail("expected a letter");
                break;
            }
            std::uint64_t power = 1;
            skip_ws();
            if (peek() == '^') {
                ++pos_;
                skip_ws();
                auto d = digits();
                if (d.empty()) fail("expected an exponent");
                power = parse_unsigned(d);
                if (power == 0 || power > 4096) {
                    pos_ = at;
                    fail("exponent out of range");
                }
            }
            for (std::uint64_t k = 0; k < power; ++k) w.push_back(*a);
            have_factor = true;
            need_factor = false;
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                need_factor = true;
            }
        }
        if (!have_coeff && !have_factor) {
            if (!at_end() && is_name_char(peek()) && !std::isdigit(static_cast<unsigned char>(peek()))) {
                fail("unknown letter");
            }
            fail("expected a term");
        }
        return {coeff, w};
    }

    std::string_view text_;
    std::size_t line_;
    std::size_t offset_;
    std::size_t pos_ = 0;
    const Alphabet& alphabet_;
    const Field& field_;
};

struct Line {
    std::size_t number;
    std::string_view text;  // comment stripped
};

std::size_t leading_ws(std::string_view s) {
    std::size_t i = 0;
    while (i < s.size() && is_space(s[i])) ++i;
    return i;
}

std::string_view trim_right(std::string_view s) {
    while (!s.empty() && (is_space(s.back()) || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string> parse_vars(std::string_view body, std::size_t line, std::size_t offset) {
    std::vector<std::string> names;
    char separator = '\0';
    std::size_t i = 0;
    bool expect_name = true;
    while (true) {
        while (i < body.size() && is_space(body[i])) ++i;
        if (i >= body.size()) break;
        const char c = body[i];
        if (expect_name) {
            const std::size_t start = i;
            while (i < body.size() && is_name_char(body[i])) ++i;
            if (i == start) throw ParseError(line, offset + i + 1, "expected a letter name");
            if (std::isdigit(static_cast<unsigned char>(body[start]))) {
                throw ParseError(line, offset + start + 1, "letter names must not start with a digit");
            }
            std::string name(body.substr(start, i - start));
            for (const auto& n : names) {
                if (n == name) throw ParseError(line, offset + start + 1, "duplicate letter '" + name + "'");
            }
            names.push_back(std::move(name));
            expect_name = false;
        } else {
            if (c != '>' && c != '<') {
                throw ParseError(line, offset + i + 1, "expected '>' or '<' between letters");
            }
            if (separator != '\0' && separator != c) {
                throw ParseError(line, offset + i + 1, "mixed '>' and '<' in the precedence");
            }
            separator = c;
            ++i;
            expect_name = true;
        }
    }
    if (names.empty()) throw ParseError(line, offset + 1, "no letters declared");
    if (expect_name) throw ParseError(line, offset + body.size() + 1, "expected a letter name");
    if (separator == '<') std::reverse(names.begin(), names.end());
    return names;
}

}  // namespace

Field parse_field(std::string_view text) {
    std::string s;
    for (char c : text) {
        if (!is_space(c)) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    if (s == "q") return Field::rationals();
    std::string_view rest = s;
    if (rest.starts_with("fp:")) {
        rest.remove_prefix(3);
    } else if (rest.starts_with("fp")) {
        rest.remove_prefix(2);
    } else {
        throw std::invalid_argument("unknown field '" + std::string(text) + "' (expected Q or Fp <prime>)");
    }
    if (rest.empty() || rest.size() > 9) throw std::invalid_argument("bad prime in field '" + std::string(text) + "'");
    return Field::prime(static_cast<std::uint32_t>(parse_unsigned(rest)));
}

gb::Presentation parse_presentation(std::string_view text, std::optional<Field> field_override) {
    std::vector<Line> lines;
    std::size_t number = 1;
    while (true) {
        const auto nl = text.find('\n');
        std::string_view raw = text.substr(0, nl);
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        lines.push_back({number++, trim_right(raw)});
        if (nl == std::string_view::npos) break;
        text.remove_prefix(nl + 1);
    }

    std::optional<Alphabet> alphabet;
    std::optional<Field> field;
    std::vector<std::pair<Line, std::size_t>> relation_lines;
    bool in_relations = false;

    auto header = [](std::string_view body, std::string_view key) {
        return body.starts_with(key) && body.size() > key.size() && body[key.size()] == ':';
    };

    for (const auto& line : lines) {
        const std::size_t indent = leading_ws(line.text);
        std::string_view body = line.text.substr(indent);
        if (body.empty()) continue;
        if (header(body, "vars")) {
            if (alphabet) throw ParseError(line.number, indent + 1, "duplicate 'vars:' line");
            const std::size_t offset = indent + 5;
            alphabet = Alphabet::from_descending(parse_vars(body.substr(5), line.number, offset));
            in_relations = false;
        } else if (header(body, "field")) {
            if (field) throw ParseError(line.number, indent + 1, "duplicate 'field:' line");
            try {
                field = parse_field(body.substr(6));
            } catch (const std::invalid_argument& e) {
                throw ParseError(line.number, indent + 7, e.what());
            }
            in_relations = false;
        } else if (header(body, "weights")) {
            throw ParseError(line.number, indent + 1, "weighted gradings are not supported; all generators have weight 1");
        } else if (header(body, "relations")) {
            if (!alphabet) throw ParseError(line.number, indent + 1, "'relations:' before 'vars:'");
            in_relations = true;
            std::string_view rest = body.substr(10);
            const std::size_t skip = leading_ws(rest);
            if (skip < rest.size()) relation_lines.push_back({{line.number, rest.substr(skip)}, indent + 10 + skip});
        } else if (in_relations) {
            relation_lines.push_back({{line.number, body}, indent});
        } else {
            throw ParseError(line.number, indent + 1, "unexpected line (expected 'vars:', 'field:' or 'relations:')");
        }
    }
    if (!alphabet) throw ParseError(number - 1, 1, "missing 'vars:' line");

    gb::Presentation p;
    p.alphabet = *alphabet;
    p.field = field_override.value_or(field.value_or(Field::rationals()));
    for (const auto& [line, offset] : relation_lines) {
        LineParser parser(line.text, line.number, offset, p.alphabet, p.field);
        Polynomial r = parser.polynomial();
        if (r.is_zero()) throw ParseError(line.number, offset + 1, "zero relation");
        if (!r.is_homogeneous()) throw ParseError(line.number, offset + 1, "non-homogeneous relation");
        if (r.leading_word().degree() == 0) throw ParseError(line.number, offset + 1, "relation of degree 0");
        p.relations.push_back(std::move(r));
    }
    return p;
}

std::string format_presentation(const gb::Presentation& presentation) {
    std::string out = "vars: ";
    const auto names = presentation.alphabet.descending_names();
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) out += " > ";
        out += names[i];
    }
    out += "\nfield: " + presentation.field.to_string() + "\nrelations:\n";
    for (const auto& r : presentation.relations) out += "  " + format_polynomial(r, presentation.alphabet) + "\n";
    return out;
}

}  // namespace ncres::cli
