#pragma once

/*
 * Quartic models v^2 = q4*u^4 + q3*u^3 + q2*u^2 + q1*u + q0 with q0 = e^2,
 * and the classical birational map to a long Weierstrass curve anchored at
 * the rational point (0, e):
 *
 *   a1 = q1/e   a2 = q2 - q1^2/(4e^2)   a3 = 2e*q3   a4 = -4e^2*q4   a6 = a2*a4
 *
 *   x = (2e(v+e) + q1*u) / u^2
 *   y = (4e^2(v+e) + 2e(q1*u + q2*u^2) - q1^2*u^2/(2e)) / u^3
 *
 *   u = (2e(x+q2) - q1^2/(2e)) / y
 *   v = -e + u(u*x - q1)/(2e)
 *
 * (0, e) goes to infinity and (0, -e) to the point with
 * x = q1^2/(4e^2) - q2.
 */

#include <utility>

#include "xyzfam/curve/weierstrass.hpp"

namespace xyzfam {

template <ExactField F>
struct QuarticPoint {
    F u, v;
    friend bool operator==(const QuarticPoint&, const QuarticPoint&) = default;
};

template <ExactField F>
F quartic_discriminant(const F& a, const F& b, const F& c, const F& d, const F& e) {
    auto k = [](long n) { return F(n); };
    F a2 = a * a, b2 = b * b, c2 = c * c, d2 = d * d, e2 = e * e;
    return k(256) * a2 * a * e2 * e - k(192) * a2 * b * d * e2 - k(128) * a2 * c2 * e2 +
           k(144) * a2 * c * d2 * e - k(27) * a2 * d2 * d2 + k(144) * a * b2 * c * e2 -
           k(6) * a * b2 * d2 * e - k(80) * a * b * c2 * d * e + k(18) * a * b * c * d2 * d +
           k(16) * a * c2 * c2 * e - k(4) * a * c2 * c * d2 - k(27) * b2 * b2 * e2 +
           k(18) * b2 * b * c * d * e - k(4) * b2 * b * d2 * d - k(4) * b2 * c2 * c * e + b2 * c2 * d2;
}

template <ExactField F>
class QuarticModel {
public:
    /// e is taken as the canonical square root of q0.
    QuarticModel(F q4, F q3, F q2, F q1, F q0) : QuarticModel(q4, q3, q2, q1, q0, field_sqrt(q0)) {}

    QuarticModel(F q4, F q3, F q2, F q1, F q0, F e)
        : q4_(std::move(q4)), q3_(std::move(q3)), q2_(std::move(q2)), q1_(std::move(q1)), q0_(std::move(q0)),
          e_(std::move(e)) {
        if (is_zero(e_)) throw SingularQuartic("constant term must be a non-zero square");
        if (!(e_ * e_ == q0_)) throw SingularQuartic("e^2 differs from the constant term");
        if (is_zero(quartic_discriminant(q4_, q3_, q2_, q1_, q0_)))
            throw SingularQuartic("quartic has a repeated root");
    }

    const F& q4() const { return q4_; }
    const F& q3() const { return q3_; }
    const F& q2() const { return q2_; }
    const F& q1() const { return q1_; }
    const F& q0() const { return q0_; }
    const F& e() const { return e_; }

    F value(const F& u) const { return (((q4_ * u + q3_) * u + q2_) * u + q1_) * u + q0_; }
    bool contains(const QuarticPoint<F>& p) const { return p.v * p.v == value(p.u); }

    friend bool operator==(const QuarticModel&, const QuarticModel&) = default;

private:
    F q4_, q3_, q2_, q1_, q0_, e_;
};

/// Mutually inverse maps between a quartic model and its Weierstrass curve.
template <ExactField F>
class BirationalMapPair {
public:
    explicit BirationalMapPair(QuarticModel<F> quartic) : quartic_(std::move(quartic)), curve_(build_curve(quartic_)) {}

    const QuarticModel<F>& quartic() const { return quartic_; }
    const WeierstrassCurve<F>& curve() const { return curve_; }

    /// Image of (0, -e); the other u = 0 point goes to infinity.
    CurvePoint<F> branch_image() const {
        const F& e = quartic_.e();
        const F& c = quartic_.q2();
        const F& d = quartic_.q1();
        const F& b = quartic_.q3();
        F x = d * d / (F(4) * e * e) - c;
        F y = -(F(2) * e * b) + c * d / e - d * d * d / (F(4) * e * e * e);
        return {std::move(x), std::move(y)};
    }

    CurvePoint<F> forward(const QuarticPoint<F>& p) const {
        if (!quartic_.contains(p)) throw OffCurveInput("point is not on the quartic");
        const F& e = quartic_.e();
        if (is_zero(p.u)) return p.v == e ? CurvePoint<F>::infinity() : branch_image();
        const F& c = quartic_.q2();
        const F& d = quartic_.q1();
        F ve = p.v + e;
        F u2 = p.u * p.u;
        F x = (F(2) * e * ve + d * p.u) / u2;
        F y = (F(4) * e * e * ve + F(2) * e * (d * p.u + c * u2) - d * d * u2 / (F(2) * e)) / (u2 * p.u);
        return {std::move(x), std::move(y)};
    }

    /// Throws ExceptionalPoint where the inverse formula is undefined.
    QuarticPoint<F> inverse(const CurvePoint<F>& pt) const {
        if (!curve_.contains(pt)) throw OffCurveInput("point is not on the curve");
        const F& e = quartic_.e();
        if (pt.is_infinity()) return {F(0), e};
        const F& c = quartic_.q2();
        const F& d = quartic_.q1();
        CurvePoint<F> branch = branch_image();
        if (pt.x() == branch.x()) {
            if (pt == branch) return {F(0), -e};
            throw ExceptionalPoint("curve point lies over the branch x-coordinate but is not its image");
        }
        if (is_zero(pt.y())) throw ExceptionalPoint("inverse map has a pole at y = 0");
        F u = (F(2) * e * (pt.x() + c) - d * d / (F(2) * e)) / pt.y();
        F v = -e + u * (u * pt.x() - d) / (F(2) * e);
        return {std::move(u), std::move(v)};
    }

    friend bool operator==(const BirationalMapPair&, const BirationalMapPair&) = default;

private:
    static WeierstrassCurve<F> build_curve(const QuarticModel<F>& q) {
        const F& e = q.e();
        F a1 = q.q1() / e;
        F a2 = q.q2() - q.q1() * q.q1() / (F(4) * e * e);
        F a3 = F(2) * e * q.q3();
        F a4 = -(F(4) * e * e * q.q4());
        F a6 = a2 * a4;
        try {
            return WeierstrassCurve<F>(std::move(a1), std::move(a3), std::move(a2), std::move(a4), std::move(a6));
        } catch (const SingularCurve&) {
            throw SingularQuartic("reduction produced a singular cubic");
        }
    }

    QuarticModel<F> quartic_;
    WeierstrassCurve<F> curve_;
};

template <ExactField F>
std::pair<WeierstrassCurve<F>, BirationalMapPair<F>> quartic_to_weierstrass(const QuarticModel<F>& q) {
    BirationalMapPair<F> maps(q);
    return {maps.curve(), maps};
}

template <ExactField F>
QuarticPoint<F> curve_point_to_quartic(const BirationalMapPair<F>& maps, const CurvePoint<F>& pt) {
    return maps.inverse(pt);
}

inline QuarticModel<Rational> specialize(const QuarticModel<RationalFunction>& q, const Bindings& at) {
    auto pt = point_from_bindings(at);
    return QuarticModel<Rational>(q.q4().evaluate(pt), q.q3().evaluate(pt), q.q2().evaluate(pt),
                                  q.q1().evaluate(pt), q.q0().evaluate(pt), q.e().evaluate(pt));
}

inline BirationalMapPair<Rational> specialize(const BirationalMapPair<RationalFunction>& m, const Bindings& at) {
    return BirationalMapPair<Rational>(specialize(m.quartic(), at));
}

}  // namespace xyzfam
