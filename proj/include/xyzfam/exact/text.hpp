#pragma once

/*
 * Canonical text form.
 *
 *   polynomial   2*a^2*t^8+10*a*s^4*t^4-s^8      terms in monomial order
 *   rational fn  (num)/(den)                     den omitted when it is 1
 *
 * The parser accepts the usual infix grammar over integers and the
 * parameter names: + - * / ^ (integer exponent, may be negative) and
 * parentheses, so both canonical output and hand-written factored forms
 * such as "(s^4-4*a)^2/(2*s^3*(s^4+12*a))" are read back.
 */

#include <cctype>
#include <type_traits>
#include <vector>
#include <sstream>
#include <string>
#include <string_view>

#include "xyzfam/exact/rational_function.hpp"

namespace xyzfam {

namespace detail {

template <class Vars, std::size_t N>
std::string monomial_text(Monomial<N> m) {
    std::string out;
    for (std::size_t v = 0; v < N; ++v) {
        unsigned e = m.exponent(v);
        if (e == 0) continue;
        if (!out.empty()) out += '*';
        out += Vars::names[v];
        if (e > 1) out += '^' + std::to_string(e);
    }
    return out;
}

}  // namespace detail

inline std::string to_string(const Rational& r) { return r.to_string(); }

inline std::string to_string(const RationalFunction& f);

/// Renders any polynomial; non-constant coefficients of a polynomial over
/// Q(a,s,t) are parenthesized.
template <class C, class V>
std::string to_string(const Polynomial<C, V>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& t : p.terms()) {
        std::string mono = detail::monomial_text<V>(t.mono);
        std::string piece;
        if constexpr (std::is_same_v<C, Rational>) {
            if (mono.empty()) {
                piece = t.coeff.to_string();
            } else if (t.coeff == Rational(1)) {
                piece = mono;
            } else if (t.coeff == Rational(-1)) {
                piece = "-" + mono;
            } else {
                piece = t.coeff.to_string() + "*" + mono;
            }
        } else {
            bool constant = t.coeff.is_constant();
            if (constant && t.coeff.constant_value() == Rational(1) && !mono.empty()) {
                piece = mono;
            } else if (constant && t.coeff.constant_value() == Rational(-1) && !mono.empty()) {
                piece = "-" + mono;
            } else if (constant) {
                piece = t.coeff.constant_value().to_string() + (mono.empty() ? "" : "*" + mono);
            } else {
                piece = "(" + to_string(t.coeff) + ")" + (mono.empty() ? "" : "*" + mono);
            }
        }
        if (!out.empty() && piece[0] != '-') out += '+';
        out += piece;
    }
    return out;
}

inline std::string to_string(const RationalFunction& f) {
    if (f.den().is_constant()) return to_string(f.num());
    return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

namespace detail {

class ExprParser {
public:
    explicit ExprParser(std::string_view text) : s_(text) {}

    RationalFunction parse_all() {
        RationalFunction v = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    RationalFunction expr() {
        RationalFunction v = term();
        while (true) {
            if (accept('+'))
                v += term();
            else if (accept('-'))
                v -= term();
            else
                return v;
        }
    }

    RationalFunction term() {
        RationalFunction v = unary();
        while (true) {
            if (accept('*'))
                v *= unary();
            else if (accept('/'))
                v /= unary();
            else
                return v;
        }
    }

    RationalFunction unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    RationalFunction power() {
        RationalFunction base = primary();
        if (accept('^')) {
            skip_ws();
            bool neg = false;
            if (accept('-')) neg = true;
            skip_ws();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected integer exponent");
            if (pos_ - start > 5) fail("exponent too large");
            long e = std::stol(std::string(s_.substr(start, pos_ - start)));
            return base.pow(neg ? -e : e);
        }
        return base;
    }

    RationalFunction primary() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            RationalFunction v = expr();
            if (!accept(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return RationalFunction(Rational(BigInt(std::string(s_.substr(start, pos_ - start)), 10)));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            std::string_view name = s_.substr(start, pos_ - start);
            for (std::size_t v = 0; v < ParamVars::names.size(); ++v)
                if (name == ParamVars::names[v]) return RationalFunction::variable(v);
            pos_ = start;
            fail("unknown variable '" + std::string(name) + "'");
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline RationalFunction parse_rational_function(std::string_view text) {
    return detail::ExprParser(text).parse_all();
}

/// Parses and requires a polynomial result.
inline MultiPolynomial parse_polynomial(std::string_view text) {
    RationalFunction f = parse_rational_function(text);
    if (!f.is_polynomial()) throw ParseError("not a polynomial: '" + std::string(text) + "'");
    return f.num().scaled(f.den().constant_coeff().inverse());
}

/// Parses a value that must be a rational constant, e.g. "-98/39".
inline Rational parse_rational_value(std::string_view text) {
    RationalFunction f = parse_rational_function(text);
    if (!f.is_constant()) throw ParseError("not a constant: '" + std::string(text) + "'");
    return f.constant_value();
}

/// Splits on commas that are not nested in parentheses or brackets.
inline std::vector<std::string> split_top_level(std::string_view text, char sep = ',') {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : text) {
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (c == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

inline std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

/// Parses "a=1,s=1/2,t=3" into bindings.
inline Bindings parse_bindings(std::string_view text) {
    Bindings out;
    if (trim(text).empty()) return out;
    for (const auto& item : split_top_level(text)) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw ParseError("expected name=value in '" + item + "'");
        std::string name = trim(std::string_view(item).substr(0, eq));
        bool known = false;
        for (auto n : ParamVars::names) known = known || n == name;
        if (!known) throw ParseError("unknown variable '" + name + "'");
        out[name] = parse_rational_value(trim(std::string_view(item).substr(eq + 1)));
    }
    return out;
}

}  // namespace xyzfam
