#pragma once

/*
 * Ansatz schemes for  prod(components) * sum(components) = a.
 *
 * Each component is  c * a^[carries_a] * s^se * t^te * A^eA * B^eB * C^eC
 * with integer (possibly negative) exponents.  Substituting into the target
 * and clearing the Laurent denominators gives a polynomial constraint in
 * A, B, C over Q(a,s,t), quadratic in C for all three schemes.
 */

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "xyzfam/exact/poly_algebra.hpp"
#include "xyzfam/exact/rational_function.hpp"
#include "xyzfam/exact/text.hpp"

namespace xyzfam {

enum class Scheme { euler3, elkies3, fourvar };

inline std::string_view scheme_name(Scheme s) {
    switch (s) {
        case Scheme::euler3: return "euler3";
        case Scheme::elkies3: return "elkies3";
        default: return "fourvar";
    }
}

inline Scheme parse_scheme(std::string_view name) {
    for (Scheme s : {Scheme::euler3, Scheme::elkies3, Scheme::fourvar})
        if (scheme_name(s) == name) return s;
    throw ParseError("unknown scheme '" + std::string(name) + "'");
}

struct AnsatzComponent {
    std::string name;
    Rational coeff;
    bool carries_a = false;
    int s_exp = 0, t_exp = 0;
    std::array<int, 3> abc{};  // exponents of A, B, C
};

struct AnsatzConfig {
    Scheme scheme;
    std::vector<AnsatzComponent> components;
    std::optional<Rational> fixed_B;  // B is substituted before the constraint is formed

    static AnsatzConfig defaults(Scheme scheme) {
        using Q = Rational;
        switch (scheme) {
            case Scheme::euler3:
                return {scheme,
                        {{"x", Q(6), true, 1, 3, {2, -1, -1}},
                         {"y", Q(3, 2), false, 5, -1, {-1, 2, -1}},
                         {"z", Q(2, 3), false, -3, -1, {0, -1, 1}}},
                        std::nullopt};
            case Scheme::elkies3:
                return {scheme,
                        {{"x", Q(1, 2), false, -3, 0, {2, 0, -1}},
                         {"y", Q(2), true, -3, 0, {-1, 2, -1}},
                         {"z", Q(1, 2), false, 1, 0, {0, -1, 1}}},
                        std::nullopt};
            default:
                return {scheme,
                        {{"w", Q(1), true, 0, 1, {-1, -1, -1}},
                         {"x", Q(1), false, 0, 1, {-1, 1, 0}},
                         {"y", Q(1), false, 0, 1, {1, 0, -1}},
                         {"z", Q(1), false, 0, 1, {0, -1, 1}}},
                        Q(1)};
        }
    }

    std::vector<std::string> variables() const {
        switch (scheme) {
            case Scheme::euler3: return {"a", "s", "t"};
            case Scheme::elkies3: return {"a", "s"};
            default: return {"a", "t"};
        }
    }
};

/// Polynomial in A, B, C over Q(a,s,t).
using ConstraintPoly = Polynomial<RationalFunction, UnknownVars>;

namespace detail {

inline RationalFunction component_scalar(const AnsatzComponent& c) {
    RationalFunction r(c.coeff);
    if (c.carries_a) r *= param::fa();
    if (c.s_exp) r *= param::fs().pow(c.s_exp);
    if (c.t_exp) r *= param::ft().pow(c.t_exp);
    return r;
}

}  // namespace detail

/// prod * sum - a with denominators cleared, divided by the gcd of its
/// coefficients and normalized to integral coprime coefficients with a
/// positive leading coefficient.
inline ConstraintPoly ansatz_constraint(const AnsatzConfig& config) {
    using Exps = std::array<int, 3>;
    RationalFunction prod_coeff(1);
    Exps prod_exp{};
    for (const auto& c : config.components) {
        prod_coeff *= detail::component_scalar(c);
        for (int v = 0; v < 3; ++v) prod_exp[v] += c.abc[v];
    }

    std::map<Exps, RationalFunction> laurent;
    auto add_term = [&](Exps e, RationalFunction coeff) {
        if (config.fixed_B) {
            coeff *= RationalFunction(config.fixed_B->pow(e[UnknownVars::B]));
            e[UnknownVars::B] = 0;
        }
        laurent[e] += coeff;
    };
    for (const auto& c : config.components) {
        Exps e{};
        for (int v = 0; v < 3; ++v) e[v] = prod_exp[v] + c.abc[v];
        add_term(e, prod_coeff * detail::component_scalar(c));
    }
    add_term({0, 0, 0}, -param::fa());
    std::erase_if(laurent, [](const auto& kv) { return kv.second.is_zero(); });
    if (laurent.empty()) return {};

    Exps lo{};
    lo.fill(std::numeric_limits<int>::max());
    for (const auto& [e, c] : laurent)
        for (int v = 0; v < 3; ++v) lo[v] = std::min(lo[v], e[v]);

    // Common denominator of the coefficients, then the gcd of the numerators.
    MultiPolynomial den_lcm(1);
    for (const auto& [e, c] : laurent)
        den_lcm = den_lcm * c.den().div_exact(poly_gcd(den_lcm, c.den()));
    std::vector<std::pair<Exps, MultiPolynomial>> numerators;
    MultiPolynomial common;
    for (const auto& [e, c] : laurent) {
        MultiPolynomial n = c.num() * den_lcm.div_exact(c.den());
        common = common.is_zero() ? n : poly_gcd(common, n);
        numerators.emplace_back(e, std::move(n));
    }
    std::vector<ConstraintPoly::Term> terms;
    for (auto& [e, n] : numerators) {
        std::array<unsigned, 3> shifted{};
        for (int v = 0; v < 3; ++v) shifted[v] = static_cast<unsigned>(e[v] - lo[v]);
        terms.push_back({ConstraintPoly::Mono::from_exponents(shifted), RationalFunction(n.div_exact(common))});
    }
    ConstraintPoly out = ConstraintPoly::from_terms(std::move(terms));

    // Rational content across every coefficient; sign from the leading one.
    BigInt num_gcd = 0, den_lcm_q = 1;
    for (const auto& t : out.terms()) {
        for (const auto& pt : t.coeff.num().terms()) {
            num_gcd = gcd(num_gcd, pt.coeff.numerator());
            den_lcm_q = lcm(den_lcm_q, pt.coeff.denominator());
        }
    }
    Rational unit(num_gcd, den_lcm_q);
    if (out.leading_coeff().num().leading_coeff().sign() < 0) unit = -unit;
    return out.map_coeffs([&](const RationalFunction& c) { return c.scaled(unit.inverse()); });
}

/// alpha C^2 + beta C + gamma with A, B (and a, s, t) substituted.
template <class F>
struct CQuadratic {
    F alpha, beta, gamma;
    F discriminant() const { return beta * beta - F(4) * alpha * gamma; }
};

/// Values of a, s, t in the working field.
template <class F>
struct Parameters {
    F a, s, t;

    /// Image of an element of Q(a,s,t).
    F lift(const RationalFunction& f) const {
        if constexpr (std::is_same_v<F, RationalFunction>) {
            if (a == param::fa() && s == param::fs() && t == param::ft()) return f;
        }
        std::array<F, 3> at{a, s, t};
        F den = f.den().template evaluate<F>(at);
        if (is_zero(den)) throw PoleAtPoint("coefficient " + to_string(f) + " has a pole at the parameters");
        return f.num().template evaluate<F>(at) / den;
    }
};

inline Parameters<RationalFunction> generic_parameters() { return {param::fa(), param::fs(), param::ft()}; }

inline Parameters<Rational> parameters_at(const Bindings& at) {
    auto pt = point_from_bindings(at);
    return {pt[0], pt[1], pt[2]};
}

/// Requires degree <= 2 in C.
template <class F>
CQuadratic<F> c_quadratic(const ConstraintPoly& constraint, const Parameters<F>& params, const F& A, const F& B) {
    if (constraint.degree(UnknownVars::C) > 2) throw Undefined("constraint is not quadratic in C");
    std::array<F, 3> coeffs{F(0), F(0), F(0)};
    for (const auto& t : constraint.terms()) {
        F v = params.lift(t.coeff);
        auto ea = t.mono.exponent(UnknownVars::A), eb = t.mono.exponent(UnknownVars::B);
        if (ea) v = v * A.pow(ea);
        if (eb) v = v * B.pow(eb);
        coeffs[t.mono.exponent(UnknownVars::C)] = coeffs[t.mono.exponent(UnknownVars::C)] + v;
    }
    return {coeffs[2], coeffs[1], coeffs[0]};
}

/// Root C = (-beta + sqrt(disc)) / (2 alpha).  The square root is `sqrt_hint`
/// when given (checked against the discriminant), else the canonical one.
/// Throws NotASquare, DegenerateDenominator.
template <class F>
F recover_C(const ConstraintPoly& constraint, const Parameters<F>& params, const F& A, const F& B,
            const std::optional<F>& sqrt_hint = std::nullopt) {
    CQuadratic<F> q = c_quadratic(constraint, params, A, B);
    if (is_zero(q.alpha)) {
        if (is_zero(q.beta)) throw DegenerateDenominator("constraint does not involve C at this (A, B)");
        return -q.gamma / q.beta;
    }
    F disc = q.discriminant();
    F root;
    if (sqrt_hint) {
        if (!(*sqrt_hint * *sqrt_hint == disc)) throw NotASquare("square-root hint does not square to the discriminant");
        root = *sqrt_hint;
    } else {
        root = field_sqrt(disc);
    }
    return (root - q.beta) / (F(2) * q.alpha);
}

inline RationalFunction recover_C(Scheme scheme, const RationalFunction& A, const RationalFunction& B) {
    return recover_C(ansatz_constraint(AnsatzConfig::defaults(scheme)), generic_parameters(), A, B);
}

}  // namespace xyzfam
