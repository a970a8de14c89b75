#include "mistab/parse.hpp"

#include <cctype>

namespace mistab {

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;
    int line = 1;
    int column = 1;

    explicit Cursor(const std::string& t) : text(t) {}

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    void advance() {
        if (text[pos] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
        ++pos;
    }

    void skip_space() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek())))
            advance();
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(message, line, column);
    }
};

std::string read_name(Cursor& c) {
    std::string name;
    while (!c.done() && std::isalnum(static_cast<unsigned char>(c.peek()))) {
        name += c.peek();
        c.advance();
    }
    return name;
}

std::int64_t read_posint(Cursor& c) {
    if (c.done() || !std::isdigit(static_cast<unsigned char>(c.peek())))
        c.fail("expected a positive integer exponent");
    std::int64_t value = 0;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
        value = value * 10 + (c.peek() - '0');
        if (value > (std::int64_t(1) << 40))
            c.fail("exponent is unreasonably large");
        c.advance();
    }
    if (value == 0)
        c.fail("exponent must be positive");
    return value;
}

Monomial read_monomial(const Ring& ring, Cursor& c) {
    c.skip_space();
    if (c.done())
        c.fail("expected a monomial");
    if (c.peek() == '1') {
        c.advance();
        return Monomial::one(ring.nvars());
    }
    std::vector<std::int64_t> exps(static_cast<std::size_t>(ring.nvars()), 0);
    while (true) {
        c.skip_space();
        int at_line = c.line, at_col = c.column;
        std::string name = read_name(c);
        if (name.empty())
            c.fail("expected a variable name");
        auto idx = ring.index_of(name);
        if (!idx)
            throw ParseError("unknown variable '" + name + "'", at_line, at_col);
        std::int64_t exp = 1;
        c.skip_space();
        if (!c.done() && c.peek() == '^') {
            c.advance();
            c.skip_space();
            exp = read_posint(c);
        }
        exps[static_cast<std::size_t>(*idx)] += exp;
        c.skip_space();
        if (!c.done() && c.peek() == '*') {
            c.advance();
            continue;
        }
        break;
    }
    return Monomial(std::move(exps));
}

} // namespace

Ring parse_ring(const std::string& text) {
    std::vector<std::string> names;
    std::string current;
    auto push = [&](int line, int col) {
        // trim
        std::size_t a = current.find_first_not_of(" \t");
        std::size_t b = current.find_last_not_of(" \t");
        if (a == std::string::npos)
            throw ParseError("empty variable name in ring declaration", line, col);
        names.push_back(current.substr(a, b - a + 1));
        current.clear();
    };
    int line = 1, col = 1;
    for (char ch : text) {
        if (ch == ',') {
            push(line, col);
        } else {
            current += ch;
        }
        if (ch == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    push(line, col);
    return Ring(std::move(names));
}

Monomial parse_monomial(const Ring& ring, const std::string& text) {
    Cursor c(text);
    Monomial m = read_monomial(ring, c);
    c.skip_space();
    if (!c.done())
        c.fail("unexpected trailing input after monomial");
    return m;
}

MonomialIdeal parse_ideal(const Ring& ring, const std::string& text) {
    Cursor c(text);
    c.skip_space();
    if (c.done())
        c.fail("empty generator list");
    std::vector<Monomial> gens;
    while (true) {
        gens.push_back(read_monomial(ring, c));
        c.skip_space();
        if (!c.done() && c.peek() == ',') {
            c.advance();
            continue;
        }
        break;
    }
    c.skip_space();
    if (!c.done())
        c.fail("unexpected trailing input after generator list");
    return MonomialIdeal::make(ring, std::move(gens));
}

} // namespace mistab
