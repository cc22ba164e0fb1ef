#pragma once

/*
 * Long Weierstrass curves
 *
 *     Y^2 + a1*X*Y + a3*Y = X^3 + a2*X^2 + a4*X + a6
 *
 * over an exact field (Rational, or RationalFunction for curves over
 * Q(a,s,t)), with the chord-tangent group law in affine coordinates plus an
 * explicit point at infinity.
 */

#include <array>
#include <concepts>
#include <cstdlib>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>

#include "xyzfam/exact/rational_function.hpp"
#include "xyzfam/exact/text.hpp"

namespace xyzfam {

template <class F>
concept ExactField = requires(const F& x, long n) {
    { x + x } -> std::convertible_to<F>;
    { x - x } -> std::convertible_to<F>;
    { x * x } -> std::convertible_to<F>;
    { x / x } -> std::convertible_to<F>;
    { -x } -> std::convertible_to<F>;
    { x == x } -> std::convertible_to<bool>;
    { is_zero(x) } -> std::convertible_to<bool>;
    F(n);
};

/// Largest |n| accepted by scalar_mul by default; 0 means unlimited.
template <class F>
constexpr long default_multiple_cap() {
    if constexpr (std::is_same_v<F, RationalFunction>)
        return 4;
    else
        return 0;
}

template <ExactField F>
class CurvePoint {
public:
    CurvePoint() = default;  // infinity
    CurvePoint(F x, F y) : xy_(std::pair<F, F>{std::move(x), std::move(y)}) {}

    static CurvePoint infinity() { return {}; }

    bool is_infinity() const { return !xy_.has_value(); }
    /// Requires an affine point.
    const F& x() const { return xy_->first; }
    const F& y() const { return xy_->second; }

    friend bool operator==(const CurvePoint&, const CurvePoint&) = default;

private:
    std::optional<std::pair<F, F>> xy_;
};

template <ExactField F>
class WeierstrassCurve {
public:
    /// Coefficients in the order (a1, a3, a2, a4, a6).  Throws SingularCurve.
    WeierstrassCurve(F a1, F a3, F a2, F a4, F a6)
        : a1_(std::move(a1)), a3_(std::move(a3)), a2_(std::move(a2)), a4_(std::move(a4)), a6_(std::move(a6)) {
        if (is_zero(discriminant())) throw SingularCurve("discriminant vanishes");
    }

    /// y^2 = x^3 + a*x + b.
    static WeierstrassCurve short_form(F a, F b) { return WeierstrassCurve(F(0), F(0), F(0), std::move(a), std::move(b)); }

    const F& a1() const { return a1_; }
    const F& a3() const { return a3_; }
    const F& a2() const { return a2_; }
    const F& a4() const { return a4_; }
    const F& a6() const { return a6_; }

    F b2() const { return a1_ * a1_ + F(4) * a2_; }
    F b4() const { return F(2) * a4_ + a1_ * a3_; }
    F b6() const { return a3_ * a3_ + F(4) * a6_; }
    F b8() const {
        return a1_ * a1_ * a6_ + F(4) * a2_ * a6_ - a1_ * a3_ * a4_ + a2_ * a3_ * a3_ - a4_ * a4_;
    }
    F c4() const {
        F b2v = b2();
        return b2v * b2v - F(24) * b4();
    }
    F c6() const {
        F b2v = b2();
        return -(b2v * b2v * b2v) + F(36) * b2v * b4() - F(216) * b6();
    }
    F discriminant() const {
        F b2v = b2(), b4v = b4(), b6v = b6(), b8v = b8();
        return -(b2v * b2v * b8v) - F(8) * b4v * b4v * b4v - F(27) * b6v * b6v + F(9) * b2v * b4v * b6v;
    }

    bool is_short() const { return is_zero(a1_) && is_zero(a3_) && is_zero(a2_); }

    /// Left minus right side of the curve equation at (x, y).
    F residual(const F& x, const F& y) const {
        return y * y + a1_ * x * y + a3_ * y - (x * x * x + a2_ * x * x + a4_ * x + a6_);
    }

    bool contains(const CurvePoint<F>& p) const {
        if (p.is_infinity()) return true;
        if constexpr (std::is_same_v<F, RationalFunction>)
            return cleared_residual(p.x(), p.y()).is_zero();
        else
            return is_zero(residual(p.x(), p.y()));
    }

    /// -(X, Y) = (X, -Y - a1*X - a3).
    CurvePoint<F> negate(const CurvePoint<F>& p) const {
        if (p.is_infinity()) return p;
        return {p.x(), -p.y() - a1_ * p.x() - a3_};
    }

    /// Chord-tangent sum; inputs are assumed on the curve.
    CurvePoint<F> add_unchecked(const CurvePoint<F>& p, const CurvePoint<F>& q) const {
        if (p.is_infinity()) return q;
        if (q.is_infinity()) return p;
        const F& x1 = p.x();
        const F& y1 = p.y();
        const F& x2 = q.x();
        const F& y2 = q.y();
        F lambda, nu;
        if (x1 == x2) {
            F denom = F(2) * y1 + a1_ * x1 + a3_;
            // Covers both q == -p and doubling a 2-torsion point.
            if (is_zero(y1 + y2 + a1_ * x2 + a3_) || is_zero(denom)) return CurvePoint<F>::infinity();
            lambda = (F(3) * x1 * x1 + F(2) * a2_ * x1 + a4_ - a1_ * y1) / denom;
            nu = (-(x1 * x1 * x1) + a4_ * x1 + F(2) * a6_ - a3_ * y1) / denom;
        } else {
            F dx = x2 - x1;
            lambda = (y2 - y1) / dx;
            nu = (y1 * x2 - y2 * x1) / dx;
        }
        F x3 = lambda * lambda + a1_ * lambda - a2_ - x1 - x2;
        F y3 = -(lambda + a1_) * x3 - nu - a3_;
        return {std::move(x3), std::move(y3)};
    }

    friend bool operator==(const WeierstrassCurve&, const WeierstrassCurve&) = default;

private:
    // residual * den(x)^3 den(y)^2 prod(den(ai)), built from polynomial
    // products only; canonical sums would pay a gcd per step.
    MultiPolynomial cleared_residual(const RationalFunction& x, const RationalFunction& y) const
        requires std::is_same_v<F, RationalFunction>
    {
        const MultiPolynomial &X = x.num(), &D = x.den(), &Y = y.num(), &E = y.den();
        const std::array<const RationalFunction*, 5> coeffs{&a1_, &a3_, &a2_, &a4_, &a6_};
        MultiPolynomial all(1);
        for (const auto* c : coeffs) all = all * c->den();
        auto scaled = [&](const RationalFunction& c, const MultiPolynomial& p) {
            return c.is_zero() ? MultiPolynomial{} : c.num() * all.div_exact(c.den()) * p;
        };
        MultiPolynomial D2 = D * D, D3 = D2 * D, E2 = E * E;
        MultiPolynomial lhs = all * Y * Y * D3 + scaled(a1_, X * Y * D2 * E) + scaled(a3_, Y * D3 * E);
        MultiPolynomial rhs = all * X * X * X * E2 + scaled(a2_, X * X * D * E2) + scaled(a4_, X * D2 * E2) +
                              scaled(a6_, D3 * E2);
        return lhs - rhs;
    }

    F a1_, a3_, a2_, a4_, a6_;
};

template <ExactField F>
bool on_curve(const WeierstrassCurve<F>& curve, const CurvePoint<F>& pt) {
    return curve.contains(pt);
}

template <ExactField F>
CurvePoint<F> group_add(const WeierstrassCurve<F>& curve, const CurvePoint<F>& p, const CurvePoint<F>& q) {
    if (!curve.contains(p) || !curve.contains(q)) throw OffCurveInput("group_add operand is not on the curve");
    return curve.add_unchecked(p, q);
}

template <ExactField F>
CurvePoint<F> double_point(const WeierstrassCurve<F>& curve, const CurvePoint<F>& p) {
    return group_add(curve, p, p);
}

/// n*P by double-and-add.  |n| above `cap` (0: unlimited) throws SymbolicDepthExceeded.
template <ExactField F>
CurvePoint<F> scalar_mul(const WeierstrassCurve<F>& curve, long n, const CurvePoint<F>& p,
                         long cap = default_multiple_cap<F>()) {
    if (!curve.contains(p)) throw OffCurveInput("scalar_mul operand is not on the curve");
    if (cap > 0 && std::labs(n) > cap)
        throw SymbolicDepthExceeded("multiple " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    if (n < 0) return curve.negate(scalar_mul(curve, -n, p, cap));
    CurvePoint<F> result, addend = p;
    unsigned long k = static_cast<unsigned long>(n);
    while (k) {
        if (k & 1ul) result = curve.add_unchecked(result, addend);
        k >>= 1u;
        if (k) addend = curve.add_unchecked(addend, addend);
    }
    return result;
}

// ---- specialization ------------------------------------------------------

inline WeierstrassCurve<Rational> specialize(const WeierstrassCurve<RationalFunction>& c, const Bindings& at) {
    auto pt = point_from_bindings(at);
    return WeierstrassCurve<Rational>(c.a1().evaluate(pt), c.a3().evaluate(pt), c.a2().evaluate(pt),
                                      c.a4().evaluate(pt), c.a6().evaluate(pt));
}

inline CurvePoint<Rational> specialize(const CurvePoint<RationalFunction>& p, const Bindings& at) {
    if (p.is_infinity()) return {};
    auto pt = point_from_bindings(at);
    return {p.x().evaluate(pt), p.y().evaluate(pt)};
}

// ---- text ----------------------------------------------------------------

/// "[a1, a3, a2, a4, a6]".
template <ExactField F>
std::string to_string(const WeierstrassCurve<F>& c) {
    return "[" + to_string(c.a1()) + ", " + to_string(c.a3()) + ", " + to_string(c.a2()) + ", " +
           to_string(c.a4()) + ", " + to_string(c.a6()) + "]";
}

/// "(X, Y)" or "O" for the point at infinity.
template <ExactField F>
std::string to_string(const CurvePoint<F>& p) {
    if (p.is_infinity()) return "O";
    return "(" + to_string(p.x()) + ", " + to_string(p.y()) + ")";
}

namespace detail {

template <class F>
F field_from_text(const std::string& text) {
    if constexpr (std::is_same_v<F, Rational>)
        return parse_rational_value(text);
    else
        return parse_rational_function(text);
}

inline std::string strip_brackets(const std::string& text, char open, char close) {
    std::string t = trim(text);
    if (t.size() < 2 || t.front() != open || t.back() != close)
        throw ParseError("expected " + std::string(1, open) + "..." + std::string(1, close) + ": '" + text + "'");
    return t.substr(1, t.size() - 2);
}

}  // namespace detail

template <ExactField F>
WeierstrassCurve<F> parse_curve(const std::string& text) {
    auto parts = split_top_level(detail::strip_brackets(text, '[', ']'));
    if (parts.size() != 5) throw ParseError("curve needs five coefficients: '" + text + "'");
    return WeierstrassCurve<F>(detail::field_from_text<F>(parts[0]), detail::field_from_text<F>(parts[1]),
                               detail::field_from_text<F>(parts[2]), detail::field_from_text<F>(parts[3]),
                               detail::field_from_text<F>(parts[4]));
}

template <ExactField F>
CurvePoint<F> parse_point(const std::string& text) {
    if (trim(text) == "O") return {};
    auto parts = split_top_level(detail::strip_brackets(text, '(', ')'));
    if (parts.size() != 2) throw ParseError("point needs two coordinates: '" + text + "'");
    return {detail::field_from_text<F>(parts[0]), detail::field_from_text<F>(parts[1])};
}

}  // namespace xyzfam
