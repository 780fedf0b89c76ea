#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ncres/groebner/presentation.hpp"

namespace ncres::cli {

/// Presentation-file error with a 1-based position.
class ParseError : public std::invalid_argument {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message);

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::string& message() const { return message_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string message_;
};

/// Parses the presentation format:
///
///     # comment
///     vars: x > y > z        (or x < y; names largest first with '>')
///     field: Q               (optional; or 'Fp 101')
///     relations:
///       x^2 + y*x
///       x*z
///       z*y
///
/// Terms are an optional coefficient (integer or a/b) followed by letters,
/// joined by juxtaposition or '*', with '^' powers. `field_override`
/// replaces the header's field.
gb::Presentation parse_presentation(std::string_view text, std::optional<Field> field_override = std::nullopt);

/// Parses `q`, `Q`, `fp:<p>` or `Fp <p>`. Throws std::invalid_argument.
Field parse_field(std::string_view text);

/// Inverse of parse_presentation.
std::string format_presentation(const gb::Presentation& presentation);

}  // namespace ncres::cli
