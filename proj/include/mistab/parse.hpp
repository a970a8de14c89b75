#pragma once

#include <string>

#include "mistab/ideal.hpp"

namespace mistab {

/// Parse failure with a 1-based source position.
class ParseError : public UsageError {
public:
    ParseError(const std::string& message, int line, int column)
        : UsageError(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// Comma-separated variable names, e.g. "x,y,z".
Ring parse_ring(const std::string& text);

/// One monomial in the generator grammar: "1" or factors joined by '*',
/// each factor a declared variable with an optional positive exponent.
Monomial parse_monomial(const Ring& ring, const std::string& text);

/// Comma-separated generator list; the result is minimalized on parse.
MonomialIdeal parse_ideal(const Ring& ring, const std::string& text);

} // namespace mistab
