#ifndef SUPERHOPF_PARSE_HPP
#define SUPERHOPF_PARSE_HPP

#include <cctype>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <superhopf/localized.hpp>

namespace superhopf
{

class ParseError : public std::runtime_error
{
public:
    ParseError(const std::string &what, std::size_t line, std::size_t column)
        : std::runtime_error(what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
          m_line(line), m_column(column)
    {
    }

    std::size_t line() const { return m_line; }
    std::size_t column() const { return m_column; }

private:
    std::size_t m_line;
    std::size_t m_column;
};

inline std::string to_string(const FreeSuperalgebra &ring, const Monomial &m)
{
    std::string out;
    auto append = [&](const std::string &s) {
        if (!out.empty()) out += '*';
        out += s;
    };
    for (std::size_t i = 0; i < m.even.size(); ++i) {
        if (m.even[i] == 0) continue;
        append(m.even[i] == 1 ? ring.name(i) : ring.name(i) + "^" + std::to_string(m.even[i]));
    }
    for (std::size_t j = 0; j < ring.num_odd(); ++j) {
        if ((m.odd >> j) & 1U) append(ring.name(ring.num_even() + j));
    }
    return out;
}

/// Render as `3/2*t1^2*z1*z2 - t1 + 1`, leading term first.
inline std::string to_string(const SuperPolynomial &p)
{
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto &[m, c] : p.terms()) {
        Rational mag = abs(c);
        const bool neg = sgn(c) < 0;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        const std::string mono = to_string(*p.ring(), m);
        if (mono.empty()) {
            out += to_string(mag);
        } else if (mag == 1) {
            out += mono;
        } else {
            out += to_string(mag) + "*" + mono;
        }
    }
    return out;
}

/// Render as `(num)*(d)^-k...`; plain numerator when there is no denominator.
inline std::string to_string(const LocalizedElement &x)
{
    if (x.is_polynomial()) return to_string(x.numerator());
    std::string out = "(" + to_string(x.numerator()) + ")";
    const auto &den = x.denominator_exponents();
    for (std::size_t i = 0; i < den.size(); ++i) {
        if (den[i] == 0) continue;
        out += "*(" + to_string(x.algebra()->denominators()[i]) + ")^-" + std::to_string(den[i]);
    }
    return out;
}

namespace detail
{

class ExpressionParser
{
public:
    ExpressionParser(AlgebraPtr alg, std::string_view text) : m_alg(std::move(alg)), m_text(text) {}

    LocalizedElement parse()
    {
        skip();
        if (at_end()) fail("empty expression");
        LocalizedElement r = sum();
        skip();
        if (!at_end()) fail(std::string("unexpected character '") + m_text[m_pos] + "'");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string &msg) const
    {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < m_pos && i < m_text.size(); ++i) {
            if (m_text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(msg, line, col);
    }

    bool at_end() const { return m_pos >= m_text.size(); }
    char peek() const { return at_end() ? '\0' : m_text[m_pos]; }

    void skip()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(m_text[m_pos]))) ++m_pos;
    }

    bool accept(char c)
    {
        skip();
        if (peek() == c) {
            ++m_pos;
            return true;
        }
        return false;
    }

    LocalizedElement sum()
    {
        LocalizedElement acc(m_alg);
        bool first = true;
        for (;;) {
            skip();
            int sign = 1;
            if (accept('+')) {
            } else if (accept('-')) {
                sign = -1;
            } else if (!first) {
                break;
            }
            first = false;
            LocalizedElement t = product();
            acc = sign > 0 ? acc + t : acc - t;
        }
        return acc;
    }

    LocalizedElement product()
    {
        LocalizedElement acc = power();
        for (;;) {
            if (accept('*')) {
                acc = acc * power();
            } else if (accept('/')) {
                const std::size_t at = m_pos;
                LocalizedElement d = power();
                if (auto c = d.constant_value()) {
                    if (superhopf::is_zero(*c)) {
                        m_pos = at;
                        fail("division by zero");
                    }
                    acc = acc * Rational(1 / *c);
                } else {
                    acc = acc * invert(d, at);
                }
            } else {
                return acc;
            }
        }
    }

    LocalizedElement invert(const LocalizedElement &x, std::size_t at)
    {
        try {
            return invert_unit(x);
        } catch (const NonUnit &e) {
            m_pos = at;
            fail(std::string("not a unit: ") + e.what());
        }
    }

    LocalizedElement power()
    {
        const std::size_t at = m_pos;
        LocalizedElement base = atom();
        skip();
        if (!accept('^')) return base;
        skip();
        bool negative = false;
        if (accept('-')) negative = true;
        skip();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
        unsigned k = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            k = k * 10 + static_cast<unsigned>(m_text[m_pos] - '0');
            ++m_pos;
        }
        if (negative) base = invert(base, at);
        return base.pow(k);
    }

    LocalizedElement atom()
    {
        skip();
        const char c = peek();
        if (c == '(') {
            ++m_pos;
            LocalizedElement inner = sum();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = m_pos;
            while (std::isdigit(static_cast<unsigned char>(peek()))) ++m_pos;
            // p/q literal binds tighter than the product.
            if (peek() == '/' && m_pos + 1 < m_text.size() &&
                std::isdigit(static_cast<unsigned char>(m_text[m_pos + 1]))) {
                ++m_pos;
                while (std::isdigit(static_cast<unsigned char>(peek()))) ++m_pos;
            }
            const std::string lit(m_text.substr(start, m_pos - start));
            Rational r;
            try {
                r = parse_rational(lit);
            } catch (const std::invalid_argument &) {
                m_pos = start;
                fail("malformed rational '" + lit + "'");
            }
            return LocalizedElement::constant(m_alg, r);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = m_pos;
            while (!at_end()) {
                const char d = m_text[m_pos];
                if (std::isalnum(static_cast<unsigned char>(d)) || d == '_' || d == '@' || d == '\'') {
                    ++m_pos;
                } else {
                    break;
                }
            }
            const std::string name(m_text.substr(start, m_pos - start));
            auto var = m_alg->free()->index_of(name);
            if (!var) {
                m_pos = start;
                fail("unknown variable '" + name + "'");
            }
            return LocalizedElement::generator(m_alg, *var);
        }
        if (at_end()) fail("unexpected end of expression");
        fail(std::string("unexpected character '") + c + "'");
    }

    AlgebraPtr m_alg;
    std::string_view m_text;
    std::size_t m_pos = 0;
};

} // namespace detail

/// Parse `+ - * / ^` expressions over declared names and rational literals.
/// Negative powers and division are allowed for units of the algebra.
inline LocalizedElement parse_element(const AlgebraPtr &alg, std::string_view text)
{
    return detail::ExpressionParser(alg, text).parse();
}

inline SuperPolynomial parse_polynomial(const FreeRingPtr &ring, std::string_view text)
{
    auto alg = make_algebra(ring);
    LocalizedElement e = parse_element(alg, text);
    return e.numerator();
}

} // namespace superhopf

#endif
