#pragma once

/*
 * Solution families from multiples of a base point.
 *
 *   euler3, fourvar   nP on the curve of the C-discriminant quartic (B = 1),
 *                     pulled back to A = u, C from the quadratic formula with
 *                     sqrt(disc) = -scale * v taken from the quartic point.
 *   elkies3           nP = (X, Y) on V^2 = A^3 + 4aA^2 - 32s^4 aA + 64s^8 a,
 *                     A = X, B = 4s^4 - A, C = Y/s^2.
 *
 * Everything is generic over the field, so the same code runs symbolically
 * over Q(a,s,t) and numerically at a specialization.
 */

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "xyzfam/curve/quartic.hpp"
#include "xyzfam/curve/weierstrass.hpp"
#include "xyzfam/families/ansatz.hpp"

namespace xyzfam {

template <class F>
struct IntermediateTuple {
    F A, B, C;
};

template <class F>
struct SolutionTuple {
    Scheme scheme;
    long n;
    Parameters<F> params;
    IntermediateTuple<F> intermediate;
    std::vector<std::string> names;
    std::vector<F> components;
};

template <class F>
struct FamilyContext {
    AnsatzConfig config;
    ConstraintPoly constraint;
    Parameters<F> params;
    std::optional<BirationalMapPair<F>> maps;  // quartic schemes only
    WeierstrassCurve<F> curve;
    CurvePoint<F> base;
    F quartic_scale;  // disc(A, B = 1) = quartic_scale^2 * quartic(A)
    long cap;
};

/// (A, V) = (s^4 + p, s^6 + q s^4 + r s^2) as a point of the Elkies curve.
struct ParametrizationGuess {
    RationalFunction p, q, r;
};

inline bool verify_elkies_parametrization(const ParametrizationGuess& g) {
    using param::fa, param::fs;
    RationalFunction s2 = fs().pow(2), s4 = fs().pow(4);
    RationalFunction A = s4 + g.p;
    RationalFunction V = s4 * s2 + g.q * s4 + g.r * s2;
    RationalFunction rhs = A.pow(3) + RationalFunction(4) * fa() * A * A -
                           RationalFunction(32) * s4 * fa() * A + RationalFunction(64) * s4 * s4 * fa();
    return (V * V - rhs).is_zero();
}

inline ParametrizationGuess elkies_parametrization() {
    return {RationalFunction(-4) * param::fa(), RationalFunction(0), RationalFunction(12) * param::fa()};
}

inline WeierstrassCurve<RationalFunction> elkies_curve() {
    using param::fa, param::fs;
    using RF = RationalFunction;
    return {RF(0), RF(0), RF(4) * fa(), RF(-32) * fs().pow(4) * fa(), RF(64) * fs().pow(8) * fa()};
}

/// Scale taking the C-discriminant at B = 1 to a quartic with constant term s^4 or t^10.
inline RationalFunction quartic_scale(Scheme scheme) {
    return scheme == Scheme::euler3 ? RationalFunction(6) * param::fs().pow(2) : RationalFunction(1);
}

/// The C-discriminant of the constraint at B = 1, divided by scale^2, as a quartic in A.
inline QuarticModel<RationalFunction> discriminant_quartic(const ConstraintPoly& constraint,
                                                           const RationalFunction& scale) {
    std::vector<ConstraintPoly::Term> at_b1;
    for (const auto& t : constraint.terms()) at_b1.push_back({t.mono.without(UnknownVars::B), t.coeff});
    auto parts = ConstraintPoly::from_terms(std::move(at_b1)).split(UnknownVars::C);
    auto part = [&](unsigned k) { return parts.count(k) ? parts.at(k) : ConstraintPoly{}; };
    ConstraintPoly disc = part(1) * part(1) - part(2) * part(0) * ConstraintPoly(4);
    if (disc.degree(UnknownVars::A) > 4 || disc.degree(UnknownVars::C) > 0)
        throw SingularQuartic("C-discriminant is not a quartic in A");
    std::array<RationalFunction, 5> q{};
    RationalFunction inv = (scale * scale).inverse();
    for (const auto& t : disc.terms()) q[t.mono.exponent(UnknownVars::A)] = t.coeff * inv;
    return QuarticModel<RationalFunction>(q[4], q[3], q[2], q[1], q[0]);
}

/// Symbolic context over Q(a,s,t) with the default ansatz.
inline FamilyContext<RationalFunction> family_context(Scheme scheme) {
    using RF = RationalFunction;
    AnsatzConfig config = AnsatzConfig::defaults(scheme);
    ConstraintPoly constraint = ansatz_constraint(config);
    const long cap = default_multiple_cap<RF>();
    if (scheme == Scheme::elkies3) {
        auto g = elkies_parametrization();
        RF s2 = param::fs().pow(2), s4 = param::fs().pow(4);
        CurvePoint<RF> base(s4 + g.p, s4 * s2 + g.q * s4 + g.r * s2);
        return {config, constraint, generic_parameters(), std::nullopt, elkies_curve(), base, RF(1), cap};
    }
    RF scale = quartic_scale(scheme);
    BirationalMapPair<RF> maps(discriminant_quartic(constraint, scale));
    return {config, constraint, generic_parameters(), maps, maps.curve(), maps.branch_image(), scale, cap};
}

namespace detail {

/// Binds the variables a scheme does not use to 1; the used ones must be bound.
inline Bindings complete_bindings(const AnsatzConfig& config, const Bindings& at) {
    Bindings out = at;
    for (auto name : ParamVars::names) {
        bool used = false;
        for (const auto& v : config.variables()) used = used || v == name;
        if (out.count(std::string(name))) continue;
        if (used) throw Undefined("variable '" + std::string(name) + "' is unbound");
        out[std::string(name)] = Rational(1);
    }
    return out;
}

inline std::string describe(const Bindings& at) {
    std::string out;
    for (const auto& [k, v] : at) out += (out.empty() ? "" : ", ") + k + "=" + v.to_string();
    return out;
}

}  // namespace detail

/// Context at a numeric point.  Throws SingularCurve / SingularQuartic on degenerate fibres.
inline FamilyContext<Rational> specialize(const FamilyContext<RationalFunction>& ctx, const Bindings& at) {
    Bindings full = detail::complete_bindings(ctx.config, at);
    auto pt = point_from_bindings(full);
    std::optional<BirationalMapPair<Rational>> maps;
    if (ctx.maps) maps = specialize(*ctx.maps, full);
    return {ctx.config,
            ctx.constraint,
            parameters_at(full),
            maps,
            specialize(ctx.curve, full),
            specialize(ctx.base, full),
            ctx.quartic_scale.evaluate(pt),
            default_multiple_cap<Rational>()};
}

namespace detail {

template <class F>
std::vector<F> assemble(const AnsatzConfig& config, const Parameters<F>& params, const IntermediateTuple<F>& abc) {
    const std::array<const F*, 3> unknowns{&abc.A, &abc.B, &abc.C};
    static constexpr std::array<const char*, 3> labels{"A", "B", "C"};
    std::vector<F> out;
    for (const auto& c : config.components) {
        F v = params.lift(component_scalar(c));
        for (std::size_t k = 0; k < 3; ++k) {
            if (c.abc[k] == 0) continue;
            if (c.abc[k] < 0 && is_zero(*unknowns[k]))
                throw PoleAtPoint("component " + c.name + ": " + labels[k] + " vanishes");
            v = v * unknowns[k]->pow(c.abc[k]);
        }
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace detail

/// Solution built from n*P.  Throws SymbolicDepthExceeded, ExceptionalPoint, PoleAtPoint.
template <class F>
SolutionTuple<F> family_member(const FamilyContext<F>& ctx, long n) {
    if (n < 1) throw Undefined("family index must be at least 1");
    CurvePoint<F> np = scalar_mul(ctx.curve, n, ctx.base, ctx.cap);
    if (np.is_infinity()) throw ExceptionalPoint(std::to_string(n) + "P is the point at infinity");
    IntermediateTuple<F> abc;
    if (ctx.config.scheme == Scheme::elkies3) {
        const F& s = ctx.params.s;
        F s2 = s * s;
        if (is_zero(s2)) throw PoleAtPoint("C = V/s^2 with s = 0");
        abc.A = np.x();
        abc.B = F(4) * s2 * s2 - abc.A;
        abc.C = np.y() / s2;
    } else {
        QuarticPoint<F> q = ctx.maps->inverse(np);
        if (is_zero(q.u)) throw ExceptionalPoint(std::to_string(n) + "P maps to the u = 0 branch of the quartic");
        abc.A = q.u;
        abc.B = F(1);
        abc.C = recover_C(ctx.constraint, ctx.params, abc.A, abc.B, std::optional<F>(-(ctx.quartic_scale * q.v)));
    }
    std::vector<std::string> names;
    for (const auto& c : ctx.config.components) names.push_back(c.name);
    auto comps = detail::assemble(ctx.config, ctx.params, abc);
    return {ctx.config.scheme, n, ctx.params, std::move(abc), std::move(names), std::move(comps)};
}

inline SolutionTuple<RationalFunction> euler_family(long n) { return family_member(family_context(Scheme::euler3), n); }
inline SolutionTuple<RationalFunction> elkies_family(long n) { return family_member(family_context(Scheme::elkies3), n); }
inline SolutionTuple<RationalFunction> fourvar_family(long n) { return family_member(family_context(Scheme::fourvar), n); }

/// prod * sum == a.
template <class F>
bool verify_solution_identity(const std::vector<F>& components, const F& a) {
    if (components.empty()) return false;
    if constexpr (std::is_same_v<F, RationalFunction>) {
        // prod(n) * sum(n_i * prod_{j != i} d_j) == a * prod(d)^2, polynomials only.
        MultiPolynomial pn(1), pd(1), sum;
        for (const auto& c : components) {
            sum = sum * c.den() + pd * c.num();
            pn = pn * c.num();
            pd = pd * c.den();
        }
        return pn * sum * a.den() == a.num() * pd * pd;
    }
    F prod(1), sum(0);
    for (const auto& c : components) {
        prod = prod * c;
        sum = sum + c;
    }
    return prod * sum == a;
}

template <class F>
bool verify_solution_identity(const SolutionTuple<F>& tuple) {
    return verify_solution_identity(tuple.components, tuple.params.a);
}

/// The intermediate (A, B, C) satisfies the scheme's constraint.
template <class F>
bool verify_intermediate(const FamilyContext<F>& ctx, const IntermediateTuple<F>& abc) {
    auto q = c_quadratic(ctx.constraint, ctx.params, abc.A, abc.B);
    return is_zero((q.alpha * abc.C + q.beta) * abc.C + q.gamma);
}

struct NumericTuple {
    std::vector<std::string> names;
    std::vector<Rational> values;
    bool verified;
};

/// Evaluates a symbolic tuple at a point.  A pole is reported with the
/// component and, where one is found, the vanishing factor.
inline NumericTuple specialize(const SolutionTuple<RationalFunction>& tuple, const Bindings& at) {
    AnsatzConfig config = AnsatzConfig::defaults(tuple.scheme);
    Bindings full = detail::complete_bindings(config, at);
    auto pt = point_from_bindings(full);
    NumericTuple out{tuple.names, {}, false};
    for (std::size_t i = 0; i < tuple.components.size(); ++i) {
        const auto& comp = tuple.components[i];
        if (is_zero(comp.den().evaluate(pt))) {
            std::string msg = "component " + tuple.names[i] + " has a pole at " + detail::describe(at);
            std::vector<MultiPolynomial> candidates;
            for (const auto* f : {&tuple.intermediate.A, &tuple.intermediate.B, &tuple.intermediate.C}) {
                candidates.push_back(f->num());
                candidates.push_back(f->den());
            }
            for (std::size_t v = 0; v < ParamVars::names.size(); ++v) candidates.push_back(MultiPolynomial::variable(v));
            for (const auto& cand : candidates) {
                if (cand.is_constant() || !is_zero(cand.evaluate(pt))) continue;
                MultiPolynomial g = poly_gcd(cand, comp.den());
                if (g.is_constant() || !is_zero(g.evaluate(pt))) continue;
                msg += " (factor " + to_string(g) + " vanishes)";
                break;
            }
            throw PoleAtPoint(msg);
        }
        out.values.push_back(comp.evaluate(pt));
    }
    out.verified = verify_solution_identity(out.values, pt[ParamVars::a]);
    return out;
}

inline nlohmann::json to_json(const SolutionTuple<RationalFunction>& tuple, bool verified) {
    nlohmann::json j;
    j["scheme"] = std::string(scheme_name(tuple.scheme));
    j["n"] = tuple.n;
    j["variables"] = AnsatzConfig::defaults(tuple.scheme).variables();
    j["components"] = nlohmann::json::array();
    for (const auto& c : tuple.components) j["components"].push_back(to_string(c));
    j["verified"] = verified;
    return j;
}

}  // namespace xyzfam
