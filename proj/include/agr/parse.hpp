#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "agr/errors.hpp"
#include "agr/monomial.hpp"
#include "agr/series.hpp"

namespace agr {

// Hand-rolled scanners for the two element syntaxes of the input language:
//   series polynomials   2*t^3 - 1/2*t^7 + 1
//   monomials            x^2*y
// Errors carry 1-based line/column positions supplied by the caller.

namespace parse_detail {

struct Cursor {
    const std::string& s;
    size_t pos = 0;
    int line;
    int col_base;

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    int column() const { return col_base + static_cast<int>(pos) + 1; }
    [[noreturn]] void fail(const std::string& expected) {
        throw ParseError("expected " + expected, line, column());
    }
    bool eat(char c) {
        if (peek() != c) return false;
        ++pos;
        return true;
    }
    long integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("an integer");
        return std::stol(s.substr(start, pos - start));
    }
    std::string identifier() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        if (pos == start) fail("a name");
        return s.substr(start, pos - start);
    }
};

}  // namespace parse_detail

// Parses one series polynomial in the variable t, with coefficients that are
// integers or fractions; the K prototype supplies field constants.
template <class K>
Series<K> parse_series_element(const std::string& text, const K& proto, int line = 0,
                               int col_base = 0) {
    parse_detail::Cursor c{text, 0, line, col_base};
    Series<K> out;
    bool first = true;
    while (!c.done()) {
        // sign
        long sign = 1;
        if (c.eat('-')) {
            sign = -1;
        } else if (c.eat('+')) {
            if (first) c.fail("a term");
        } else if (!first) {
            c.fail("'+' or '-'");
        }
        // coefficient
        K coeff = proto.make(sign);
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            long num = c.integer();
            coeff = proto.make(sign * num);
            if (c.eat('/')) {
                long den = c.integer();
                if (den == 0) c.fail("a nonzero denominator");
                coeff /= proto.make(den);
            }
            have_coeff = true;
        }
        int exponent = 0;
        if ((have_coeff && c.eat('*')) || (!have_coeff)) {
            if (c.peek() == 't') {
                c.eat('t');
                if (c.eat('^')) exponent = static_cast<int>(c.integer());
                else exponent = 1;
            } else if (!have_coeff) {
                c.fail("a coefficient or 't'");
            } else {
                c.fail("'t'");
            }
        }
        out = out + Series<K>::monomial(exponent, coeff);
        first = false;
    }
    if (first) throw ParseError("empty element", line, c.column());
    return out;
}

// Parses one monomial over the named variables; "1" is the empty monomial.
inline Exponents parse_monomial_element(const std::string& text,
                                        const std::vector<std::string>& names, int line = 0,
                                        int col_base = 0) {
    parse_detail::Cursor c{text, 0, line, col_base};
    Exponents out(names.size(), 0);
    if (c.peek() == '1') {
        c.eat('1');
        if (!c.done()) c.fail("end of monomial");
        return out;
    }
    bool first = true;
    while (!c.done()) {
        if (!first && !c.eat('*')) c.fail("'*'");
        int col = c.column();
        std::string var = c.identifier();
        size_t idx = names.size();
        for (size_t i = 0; i < names.size(); ++i)
            if (names[i] == var) { idx = i; break; }
        if (idx == names.size())
            throw ParseError("unknown variable '" + var + "'", line, col);
        int e = 1;
        if (c.eat('^')) e = static_cast<int>(c.integer());
        out[idx] += e;
        first = false;
    }
    if (first) throw ParseError("empty monomial", line, c.column());
    return out;
}

// Splits on top-level commas (no nesting in this grammar).
inline std::vector<std::pair<std::string, int>> split_commas(const std::string& s, int col_base) {
    std::vector<std::pair<std::string, int>> out;
    size_t start = 0;
    for (size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == ',') {
            out.emplace_back(s.substr(start, i - start), col_base + static_cast<int>(start));
            start = i + 1;
        }
    }
    return out;
}

}  // namespace agr
