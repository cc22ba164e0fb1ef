#pragma once

#include <map>
#include <string>
#include <utility>

#include "xyzfam/exact/poly_algebra.hpp"

namespace xyzfam {

/// Bindings of parameter variables to rationals.
using Bindings = std::map<std::string, Rational, std::less<>>;

/// Element of Q(a,s,t) in canonical form: gcd(num, den) = 1 and den has
/// coprime integer coefficients with positive leading coefficient.
class RationalFunction {
public:
    RationalFunction() : den_(1) {}
    RationalFunction(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    RationalFunction(long c) : RationalFunction(Rational(c)) {}  // NOLINT
    RationalFunction(int c) : RationalFunction(Rational(c)) {}  // NOLINT
    RationalFunction(const MultiPolynomial& p) : num_(p), den_(1) {}  // NOLINT

    RationalFunction(const MultiPolynomial& num, const MultiPolynomial& den) {
        if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
        if (num.is_zero()) {
            den_ = MultiPolynomial(1);
            return;
        }
        MultiPolynomial g = poly_gcd(num, den);
        if (g.is_constant()) {
            assign_normalized(num, den);
        } else {
            assign_normalized(num.div_exact(g), den.div_exact(g));
        }
    }

    static RationalFunction variable(std::size_t i) { return RationalFunction(MultiPolynomial::variable(i)); }

    const MultiPolynomial& num() const { return num_; }
    const MultiPolynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    /// Value of a constant function.  Requires is_constant().
    Rational constant_value() const { return num_.constant_coeff() / den_.constant_coeff(); }

    RationalFunction operator-() const {
        RationalFunction r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RationalFunction operator+(const RationalFunction& l, const RationalFunction& r) {
        return add(l, r, false);
    }
    friend RationalFunction operator-(const RationalFunction& l, const RationalFunction& r) {
        return add(l, r, true);
    }

    friend RationalFunction operator*(const RationalFunction& l, const RationalFunction& r) {
        if (l.is_zero() || r.is_zero()) return {};
        if (l.is_constant()) return r.scaled(l.constant_value());
        if (r.is_constant()) return l.scaled(r.constant_value());
        MultiPolynomial g1 = poly_gcd(l.num_, r.den_);
        MultiPolynomial g2 = poly_gcd(r.num_, l.den_);
        MultiPolynomial n1 = g1.is_constant() ? l.num_ : l.num_.div_exact(g1);
        MultiPolynomial d2 = g1.is_constant() ? r.den_ : r.den_.div_exact(g1);
        MultiPolynomial n2 = g2.is_constant() ? r.num_ : r.num_.div_exact(g2);
        MultiPolynomial d1 = g2.is_constant() ? l.den_ : l.den_.div_exact(g2);
        RationalFunction out;
        out.assign_normalized(n1 * n2, d1 * d2);
        return out;
    }

    RationalFunction inverse() const {
        if (is_zero()) throw DivisionByZero("inverse of zero rational function");
        RationalFunction out;
        out.assign_normalized(den_, num_);
        return out;
    }

    friend RationalFunction operator/(const RationalFunction& l, const RationalFunction& r) {
        if (r.is_zero()) throw DivisionByZero("rational function division by zero");
        return l * r.inverse();
    }

    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    RationalFunction scaled(const Rational& c) const {
        if (c.is_zero()) return {};
        RationalFunction r = *this;
        r.num_ = r.num_.scaled(c);
        return r;
    }

    /// Integer power; negative exponents invert.
    RationalFunction pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        RationalFunction r;
        r.num_ = num_.pow(static_cast<unsigned>(e));
        r.den_ = den_.pow(static_cast<unsigned>(e));
        if (r.num_.is_zero()) r.den_ = MultiPolynomial(1);
        return r;
    }

    /// Exact value at a point.  Unbound variables are an error.
    Rational evaluate(const std::array<Rational, 3>& at) const {
        Rational d = den_.evaluate(at);
        if (d.is_zero()) throw PoleAtPoint("denominator vanishes");
        return num_.evaluate(at) / d;
    }

    /// Substitutes values for some variables; the rest stay symbolic.
    RationalFunction substitute(const Bindings& at) const {
        std::array<RationalFunction, 3> vals;
        for (std::size_t v = 0; v < 3; ++v) {
            auto it = at.find(ParamVars::names[v]);
            vals[v] = it == at.end() ? variable(v) : RationalFunction(it->second);
        }
        RationalFunction d = den_.evaluate(vals);
        if (d.is_zero()) throw PoleAtPoint("denominator vanishes");
        return num_.evaluate(vals) / d;
    }

    friend bool operator==(const RationalFunction& l, const RationalFunction& r) {
        return l.num_ == r.num_ && l.den_ == r.den_;
    }

private:
    void assign_normalized(MultiPolynomial num, MultiPolynomial den) {
        if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
        if (num.is_zero()) {
            num_ = MultiPolynomial{};
            den_ = MultiPolynomial(1);
            return;
        }
        auto [unit, d] = split_unit(den);
        num_ = unit.is_one() ? std::move(num) : num.scaled(unit.inverse());
        den_ = std::move(d);
    }

    static RationalFunction add(const RationalFunction& l, const RationalFunction& r, bool subtract) {
        const MultiPolynomial rn = subtract ? -r.num_ : r.num_;
        if (l.is_zero()) {
            RationalFunction out = r;
            out.num_ = rn;
            return out;
        }
        if (r.is_zero()) return l;
        RationalFunction out;
        if (l.den_ == r.den_) {
            MultiPolynomial n = l.num_ + rn;
            if (n.is_zero()) return {};
            if (l.den_.is_constant()) {
                out.assign_normalized(std::move(n), l.den_);
                return out;
            }
            MultiPolynomial g = poly_gcd(n, l.den_);
            if (g.is_constant())
                out.assign_normalized(std::move(n), l.den_);
            else
                out.assign_normalized(n.div_exact(g), l.den_.div_exact(g));
            return out;
        }
        MultiPolynomial g = poly_gcd(l.den_, r.den_);
        if (g.is_constant()) {
            out.assign_normalized(l.num_ * r.den_ + rn * l.den_, l.den_ * r.den_);
            return out;
        }
        MultiPolynomial ld = l.den_.div_exact(g), rd = r.den_.div_exact(g);
        MultiPolynomial n = l.num_ * rd + rn * ld;
        if (n.is_zero()) return {};
        MultiPolynomial d = ld * r.den_;
        MultiPolynomial g2 = poly_gcd(n, g);
        if (g2.is_constant())
            out.assign_normalized(std::move(n), std::move(d));
        else
            out.assign_normalized(n.div_exact(g2), d.div_exact(g2));
        return out;
    }

    MultiPolynomial num_;
    MultiPolynomial den_;
};

inline bool is_zero(const RationalFunction& f) { return f.is_zero(); }

enum class RatOp { add, sub, mul, div };

inline RationalFunction ratfunc_arith(const RationalFunction& lhs, const RationalFunction& rhs, RatOp kind) {
    switch (kind) {
        case RatOp::add: return lhs + rhs;
        case RatOp::sub: return lhs - rhs;
        case RatOp::mul: return lhs * rhs;
        case RatOp::div: return lhs / rhs;
    }
    return {};
}

/// Point from bindings; every parameter must be bound.
inline std::array<Rational, 3> point_from_bindings(const Bindings& at) {
    std::array<Rational, 3> pt;
    for (std::size_t v = 0; v < 3; ++v) {
        auto it = at.find(ParamVars::names[v]);
        if (it == at.end()) throw Undefined(std::string("variable '") + std::string(ParamVars::names[v]) + "' is unbound");
        pt[v] = it->second;
    }
    return pt;
}

inline Rational ratfunc_eval(const RationalFunction& f, const Bindings& at) {
    return f.evaluate(point_from_bindings(at));
}

/// Square root in Q(a,s,t), the root whose numerator has positive leading coefficient.
inline RationalFunction field_sqrt(const RationalFunction& f) {
    if (f.is_zero()) return {};
    if (f.num().leading_coeff().sign() < 0) throw NotASquare("negative leading coefficient");
    // den is unit-normalized, so try the direct split first.
    try {
        return RationalFunction(poly_sqrt(f.num()), poly_sqrt(f.den()));
    } catch (const NotASquare&) {
    }
    return RationalFunction(poly_sqrt(f.num() * f.den()), f.den());
}

namespace param {
inline RationalFunction fa() { return RationalFunction::variable(ParamVars::a); }
inline RationalFunction fs() { return RationalFunction::variable(ParamVars::s); }
inline RationalFunction ft() { return RationalFunction::variable(ParamVars::t); }
}  // namespace param

}  // namespace xyzfam
