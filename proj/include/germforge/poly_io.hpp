// Text syntax for polynomials: identifiers, `^` powers, optional `*`,
// rationals as `a/b`, e.g. `y^2+x*z+x^2*y`.
#pragma once

#include <cctype>
#include <sstream>

#include "polynomial.hpp"

namespace germforge {

inline std::string to_string(const Monomial& m, const RingContext& ctx)
{
    std::string s;
    for (int i = 0; i < ctx.arity(); ++i) {
        if (!m.e[i]) continue;
        if (!s.empty()) s += "*";
        s += ctx.vars[i];
        if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
    }
    return s.empty() ? "1" : s;
}

inline std::string to_string(const Polynomial& p)
{
    if (p.is_zero()) return "0";
    std::string s;
    for (const auto& t : p.terms()) {
        Q c = t.c;
        if (s.empty()) {
            if (c < 0) {
                s += "-";
                c = -c;
            }
        } else {
            s += c < 0 ? "-" : "+";
            if (c < 0) c = -c;
        }
        std::string mono = to_string(t.m, *p.ring());
        if (mono == "1")
            s += c.get_str();
        else if (c == 1)
            s += mono;
        else
            s += c.get_str() + "*" + mono;
    }
    return s;
}

namespace detail {

class PolyParser {
public:
    PolyParser(const std::string& src, Ring ring) : s_(src), ring_(std::move(ring)) {}

    Polynomial parse()
    {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != s_.size()) throw error("trailing junk in polynomial: " + s_.substr(pos_));
        return p;
    }

private:
    Polynomial expr()
    {
        skip_ws();
        bool neg = false;
        while (peek() == '+' || peek() == '-') {
            if (get() == '-') neg = !neg;
            skip_ws();
        }
        Polynomial acc = term();
        if (neg) acc = -acc;
        skip_ws();
        while (peek() == '+' || peek() == '-') {
            bool minus = get() == '-';
            Polynomial t = term();
            acc = minus ? acc - t : acc + t;
            skip_ws();
        }
        return acc;
    }

    Polynomial term()
    {
        Polynomial acc = factor();
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '*') {
                get();
                acc = acc * factor();
            } else if (c == '(' || std::isalpha((unsigned char)c) || c == '_' ||
                       std::isdigit((unsigned char)c)) {
                acc = acc * factor();  // implicit multiplication
            } else {
                return acc;
            }
        }
    }

    Polynomial factor()
    {
        Polynomial b = base();
        skip_ws();
        if (peek() == '^') {
            get();
            skip_ws();
            b = b.pow(natural());
        }
        return b;
    }

    Polynomial base()
    {
        skip_ws();
        char c = peek();
        if (c == '(') {
            get();
            Polynomial p = expr();
            skip_ws();
            if (get() != ')') throw error("missing ')' in polynomial");
            return p;
        }
        if (std::isdigit((unsigned char)c)) return number();
        if (std::isalpha((unsigned char)c) || c == '_') {
            std::string name = identifier();
            return Polynomial::variable(ring_, name);
        }
        throw error("unexpected character in polynomial: " + std::string(1, c));
    }

    Polynomial number()
    {
        std::string num = digits();
        skip_ws();
        if (peek() == '/') {
            size_t save = pos_;
            get();
            skip_ws();
            if (std::isdigit((unsigned char)peek())) {
                std::string den = digits();
                return Polynomial::constant(ring_, parse_rational(num + "/" + den));
            }
            pos_ = save;  // not a rational; leave '/' for the caller (an error)
        }
        return Polynomial::constant(ring_, parse_rational(num));
    }

    std::string digits()
    {
        std::string s;
        while (std::isdigit((unsigned char)peek())) s += get();
        return s;
    }

    std::string identifier()
    {
        std::string s;
        while (std::isalnum((unsigned char)peek()) || peek() == '_') s += get();
        return s;
    }

    long natural()
    {
        std::string d = digits();
        if (d.empty()) throw error("expected exponent");
        return std::stol(d);
    }

    void skip_ws()
    {
        while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) ++pos_;
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }

    std::string s_;
    size_t pos_ = 0;
    Ring ring_;
};

}  // namespace detail

inline Polynomial parse_poly(const std::string& text, const Ring& ring)
{
    return detail::PolyParser(text, ring).parse();
}

}  // namespace germforge
