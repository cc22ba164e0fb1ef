#pragma once

/*
 * Exact rationals.
 *
 * Thin value type over GMP's mpq_class that keeps the invariants the rest of
 * the library relies on: always reduced, denominator positive, zero is 0/1.
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "xyzfam/exact/errors.hpp"

namespace xyzfam {

using BigInt = mpz_class;

class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(int v) : q_(static_cast<long>(v)) {}  // NOLINT
    Rational(const BigInt& v) : q_(v) {}  // NOLINT

    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw DivisionByZero("rational with zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

    /// Parses "p", "-p" or "p/q" (optional surrounding spaces not allowed).
    static Rational parse(std::string_view text) {
        std::string s(text);
        if (s.empty()) throw ParseError("empty rational");
        auto slash = s.find('/');
        auto valid_int = [](const std::string& t) {
            std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
            if (i == t.size()) return false;
            for (; i < t.size(); ++i)
                if (t[i] < '0' || t[i] > '9') return false;
            return true;
        };
        auto to_int = [](const std::string& t) {
            return BigInt(t[0] == '+' ? t.substr(1) : t, 10);
        };
        if (slash == std::string::npos) {
            if (!valid_int(s)) throw ParseError("not a rational: '" + s + "'");
            return Rational(to_int(s));
        }
        std::string n = s.substr(0, slash), d = s.substr(slash + 1);
        if (!valid_int(n) || !valid_int(d) || d[0] == '-' || d[0] == '+')
            throw ParseError("not a rational: '" + s + "'");
        return Rational(to_int(n), to_int(d));
    }

    BigInt numerator() const { return q_.get_num(); }
    BigInt denominator() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    /// max(|p|, q) for p/q in lowest terms.
    BigInt height() const {
        BigInt n = abs(q_.get_num());
        return n > q_.get_den() ? n : BigInt(q_.get_den());
    }

    std::string to_string() const { return q_.get_str(10); }

    Rational operator-() const { return from_raw(-q_); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DivisionByZero("rational division by zero");
        q_ /= o.q_;
        return *this;
    }
    friend Rational operator+(Rational l, const Rational& r) { return l += r; }
    friend Rational operator-(Rational l, const Rational& r) { return l -= r; }
    friend Rational operator*(Rational l, const Rational& r) { return l *= r; }
    friend Rational operator/(Rational l, const Rational& r) { return l /= r; }

    friend bool operator==(const Rational& l, const Rational& r) { return l.q_ == r.q_; }
    friend std::strong_ordering operator<=>(const Rational& l, const Rational& r) {
        int c = cmp(l.q_, r.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    Rational inverse() const {
        if (is_zero()) throw DivisionByZero("inverse of zero");
        return from_raw(1 / q_);
    }

    /// Integer power; negative exponents invert.
    Rational pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        mpz_class n, d;
        mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
        return Rational(n, d);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

private:
    static Rational from_raw(mpq_class q) {
        Rational r;
        r.q_ = std::move(q);
        return r;
    }

    mpq_class q_;
};

inline bool is_zero(const Rational& r) { return r.is_zero(); }

/// Exact square root of a non-negative rational.
inline Rational rat_sqrt(const Rational& q) {
    if (q.sign() < 0) throw NegativeInput(q.to_string());
    BigInt n = q.numerator(), d = q.denominator();
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0 || mpz_perfect_square_p(d.get_mpz_t()) == 0)
        throw NotASquare(q.to_string() + " is not a rational square");
    BigInt rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return Rational(rn, rd);
}

inline bool is_rational_square(const Rational& q) {
    if (q.sign() < 0) return false;
    return mpz_perfect_square_p(q.raw().get_num_mpz_t()) != 0 &&
           mpz_perfect_square_p(q.raw().get_den_mpz_t()) != 0;
}

/// Square root in the field of rationals; the non-negative root.
inline Rational field_sqrt(const Rational& q) {
    if (q.sign() < 0) throw NotASquare(q.to_string() + " is negative");
    return rat_sqrt(q);
}

inline BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
    BigInt l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

}  // namespace xyzfam
