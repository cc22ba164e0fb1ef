#pragma once

/*
 * gcd, content and square root for Q[a,s,t].
 *
 * gcd works one variable at a time: the inputs are viewed as univariate in
 * their most significant variable with coefficients in the remaining ones,
 * contents are split off recursively and the primitive parts go through a
 * primitive pseudo-remainder sequence.  Results are normalized to integer
 * coefficients with content 1 and positive leading coefficient.
 *
 * Before that, the heuristic integer gcd is tried: evaluate the main variable
 * at a large integer xi, recurse, and read the answer back off the xi-adic
 * digits of the image gcd.  Its candidates are only accepted after exact
 * division of both inputs, so the fallback is only a matter of speed.
 */

#include <optional>
#include <tuple>
#include <utility>

#include "xyzfam/exact/polynomial.hpp"

namespace xyzfam {

/// Positive rational c such that p / c has coprime integer coefficients.
inline Rational rational_content(const MultiPolynomial& p) {
    if (p.is_zero()) return Rational(0);
    BigInt num_gcd = 0, den_lcm = 1;
    for (const auto& t : p.terms()) {
        num_gcd = gcd(num_gcd, t.coeff.numerator());
        den_lcm = lcm(den_lcm, t.coeff.denominator());
    }
    return Rational(num_gcd, den_lcm);
}

/// Unit factor u and primitive q with p == u * q, q integral with lead > 0.
inline std::pair<Rational, MultiPolynomial> split_unit(const MultiPolynomial& p) {
    if (p.is_zero()) return {Rational(1), p};
    Rational c = rational_content(p);
    if (p.leading_coeff().sign() < 0) c = -c;
    if (c.is_one()) return {c, p};
    return {c, p.scaled(c.inverse())};
}

inline MultiPolynomial normalize_unit(const MultiPolynomial& p) { return split_unit(p).second; }

namespace detail {

inline MultiPolynomial gcd_impl(const MultiPolynomial& f, const MultiPolynomial& g, bool heuristic = true);

/// gcd of all coefficients of f with respect to var, seeded with `seed`.
inline MultiPolynomial content_with(const MultiPolynomial& f, std::size_t var, MultiPolynomial seed) {
    auto parts = f.split(var);
    // Smallest coefficients first: cheaper gcds, earlier exit at 1.
    std::vector<const MultiPolynomial*> order;
    for (const auto& [k, c] : parts) order.push_back(&c);
    std::sort(order.begin(), order.end(),
              [](const MultiPolynomial* x, const MultiPolynomial* y) { return x->size() < y->size(); });
    for (const auto* c : order) {
        seed = seed.is_zero() ? normalize_unit(*c) : gcd_impl(seed, *c);
        if (seed.is_constant()) return MultiPolynomial(1);
    }
    return seed;
}

inline std::size_t main_variable(const MultiPolynomial& f, const MultiPolynomial& g) {
    for (std::size_t v = 0; v < MultiPolynomial::kVars; ++v)
        if (f.contains(v) || g.contains(v)) return v;
    return MultiPolynomial::kVars;
}

inline BigInt max_norm(const MultiPolynomial& p) {
    BigInt m = 0;
    for (const auto& t : p.terms()) {
        BigInt v = abs(t.coeff.numerator());
        if (v > m) m = v;
    }
    return m;
}

inline BigInt integer_content(const MultiPolynomial& p) {
    BigInt g = 0;
    for (const auto& t : p.terms()) g = gcd(g, t.coeff.numerator());
    return g;
}

/// p with `var` replaced by the integer x.
inline MultiPolynomial eval_at_integer(const MultiPolynomial& p, std::size_t var, const BigInt& x) {
    std::vector<BigInt> powers{BigInt(1)};
    std::vector<MultiPolynomial::Term> out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) {
        unsigned e = t.mono.exponent(var);
        while (powers.size() <= e) powers.push_back(powers.back() * x);
        out.push_back({t.mono.without(var), t.coeff * Rational(powers[e])});
    }
    return MultiPolynomial::from_terms(std::move(out));
}

/// Rebuilds a polynomial in var from the balanced base-x digits of h's coefficients.
inline MultiPolynomial xi_interpolate(MultiPolynomial h, std::size_t var, const BigInt& x) {
    using Mono = MultiPolynomial::Mono;
    const BigInt half = x / 2;
    const Rational inv_x = Rational(x).inverse();
    std::vector<MultiPolynomial::Term> out;
    for (unsigned k = 0; !h.is_zero(); ++k) {
        std::vector<MultiPolynomial::Term> digit;
        for (const auto& t : h.terms()) {
            BigInt r = t.coeff.numerator() % x;  // sign follows the dividend
            if (r > half) r -= x;
            if (r < -half) r += x;
            if (r != 0) digit.push_back({t.mono, Rational(r)});
        }
        MultiPolynomial g = MultiPolynomial::from_terms(digit);
        for (const auto& t : digit) out.push_back({t.mono * Mono::variable(var, k), t.coeff});
        h = (h - g).scaled(inv_x);
    }
    MultiPolynomial r = MultiPolynomial::from_terms(std::move(out));
    return r.is_zero() || r.leading_coeff().sign() > 0 ? r : -r;
}

inline MultiPolynomial integer_primitive(const MultiPolynomial& p) {
    if (p.is_zero()) return p;
    BigInt c = integer_content(p);
    if (p.leading_coeff().sign() < 0) c = -c;
    return c == 1 ? p : p.scaled(Rational(BigInt(1), c));
}

using HeuResult = std::tuple<MultiPolynomial, MultiPolynomial, MultiPolynomial>;

/// (gcd, f/gcd, g/gcd) for integral non-zero f, g; nullopt when the heuristic gives up.
inline std::optional<HeuResult> heuristic_gcd(const MultiPolynomial& f, const MultiPolynomial& g) {
    if (f.is_constant() && g.is_constant()) {
        BigInt h = gcd(f.constant_coeff().numerator(), g.constant_coeff().numerator());
        Rational hr(h);
        return HeuResult{MultiPolynomial(hr), f.scaled(hr.inverse()), g.scaled(hr.inverse())};
    }
    const BigInt common = gcd(integer_content(f), integer_content(g));
    const Rational common_inv = Rational(common).inverse();
    const MultiPolynomial fp = f.scaled(common_inv), gp = g.scaled(common_inv);
    const std::size_t var = main_variable(fp, gp);

    const BigInt fn = max_norm(fp), gn = max_norm(gp);
    const BigInt bound = 2 * std::min(fn, gn) + 29;
    BigInt x = std::min(bound, BigInt(BigInt(99) * BigInt(sqrt(bound))));
    BigInt alt = 2 * std::min(BigInt(fn / abs(fp.leading_coeff().numerator())),
                              BigInt(gn / abs(gp.leading_coeff().numerator()))) + 4;
    if (alt > x) x = alt;

    auto accept = [&](const MultiPolynomial& h) -> std::optional<HeuResult> {
        if (h.is_zero()) return std::nullopt;
        auto cf = fp.try_div_exact(h);
        if (!cf) return std::nullopt;
        auto cg = gp.try_div_exact(h);
        if (!cg) return std::nullopt;
        return HeuResult{h.scaled(Rational(common)), *cf, *cg};
    };

    for (int attempt = 0; attempt < 6; ++attempt) {
        MultiPolynomial ff = eval_at_integer(fp, var, x);
        MultiPolynomial gg = eval_at_integer(gp, var, x);
        if (!ff.is_zero() && !gg.is_zero()) {
            auto image = heuristic_gcd(ff, gg);
            if (!image) return std::nullopt;
            auto& [h, cff, cfg] = *image;
            if (auto r = accept(integer_primitive(xi_interpolate(h, var, x)))) return r;
            // A cofactor image can be right even when the gcd image is not.
            MultiPolynomial cf = xi_interpolate(cff, var, x);
            if (!cf.is_zero()) {
                if (auto q = fp.try_div_exact(cf)) {
                    if (auto r = accept(integer_primitive(*q))) return r;
                }
            }
            MultiPolynomial cg = xi_interpolate(cfg, var, x);
            if (!cg.is_zero()) {
                if (auto q = gp.try_div_exact(cg)) {
                    if (auto r = accept(integer_primitive(*q))) return r;
                }
            }
        }
        x = BigInt(73794) * x * BigInt(sqrt(BigInt(sqrt(x)))) / 27011;
    }
    return std::nullopt;
}

/// Pseudo-remainder of a by b, both univariate in var.
inline MultiPolynomial pseudo_remainder(MultiPolynomial a, const MultiPolynomial& b, std::size_t var) {
    const unsigned db = b.degree(var);
    auto bparts = b.split(var);
    const MultiPolynomial& lcb = bparts.rbegin()->second;
    while (!a.is_zero()) {
        unsigned da = a.degree(var);
        if (da < db) break;
        auto aparts = a.split(var);
        const MultiPolynomial& lca = aparts.rbegin()->second;
        auto shift = MultiPolynomial::Mono::variable(var, da - db);
        a = a * lcb - (lca * b).mul_term(shift, Rational(1));
    }
    return a;
}

/// Primitive part with respect to var, unit-normalized.
inline MultiPolynomial primitive_part(const MultiPolynomial& f, std::size_t var) {
    auto c = content_with(f, var, MultiPolynomial{});
    auto p = c.is_constant() ? f : f.div_exact(c);
    return normalize_unit(p);
}

inline MultiPolynomial gcd_impl(const MultiPolynomial& f, const MultiPolynomial& g, bool heuristic) {
    if (f.is_zero() && g.is_zero()) throw Undefined("gcd(0, 0)");
    if (f.is_zero()) return normalize_unit(g);
    if (g.is_zero()) return normalize_unit(f);
    if (f.is_constant() || g.is_constant()) return MultiPolynomial(1);

    using Mono = MultiPolynomial::Mono;
    const Mono mf = f.monomial_content(), mg = g.monomial_content();
    const Mono common = Mono::min(mf, mg);
    const MultiPolynomial mono_gcd = MultiPolynomial::monomial(common, Rational(1));
    MultiPolynomial fr = mf.is_one() ? f : f.shifted_down(mf);
    MultiPolynomial gr = mg.is_one() ? g : g.shifted_down(mg);
    if (fr.is_constant() || gr.is_constant()) return mono_gcd;

    if (fr == gr) return mono_gcd * normalize_unit(fr);

    if (heuristic) {
        if (auto heu = heuristic_gcd(normalize_unit(fr), normalize_unit(gr)))
            return mono_gcd * normalize_unit(std::get<0>(*heu));
    }

    const std::size_t var = main_variable(fr, gr);
    if (!gr.contains(var)) return mono_gcd * content_with(fr, var, normalize_unit(gr));
    if (!fr.contains(var)) return mono_gcd * content_with(gr, var, normalize_unit(fr));

    MultiPolynomial cf = content_with(fr, var, MultiPolynomial{});
    MultiPolynomial cg = content_with(gr, var, MultiPolynomial{});
    MultiPolynomial c = gcd_impl(cf, cg);
    MultiPolynomial a = normalize_unit(cf.is_constant() ? fr : fr.div_exact(cf));
    MultiPolynomial b = normalize_unit(cg.is_constant() ? gr : gr.div_exact(cg));
    if (a.degree(var) < b.degree(var)) std::swap(a, b);

    // Cheap exit when one primitive part divides the other.
    if (a.divisible_by(b)) return mono_gcd * normalize_unit(c * b);

    MultiPolynomial h;
    while (true) {
        MultiPolynomial r = pseudo_remainder(a, b, var);
        if (r.is_zero()) {
            h = b;
            break;
        }
        if (!r.contains(var)) {
            h = MultiPolynomial(1);
            break;
        }
        a = std::move(b);
        b = primitive_part(r, var);
    }
    if (!h.is_constant()) h = primitive_part(h, var);
    return mono_gcd * normalize_unit(c * h);
}

}  // namespace detail

/// gcd over Q, normalized to integer coefficients with positive leading coefficient.
inline MultiPolynomial poly_gcd(const MultiPolynomial& lhs, const MultiPolynomial& rhs) {
    return detail::gcd_impl(lhs, rhs);
}

/// Square root with positive leading coefficient.  Throws NotASquare.
inline MultiPolynomial poly_sqrt(const MultiPolynomial& p) {
    using Poly = MultiPolynomial;
    using Mono = Poly::Mono;
    if (p.is_zero()) return {};
    if (p.leading_coeff().sign() < 0) throw NotASquare("negative leading coefficient");

    std::array<unsigned, Poly::kVars> bound{};
    for (std::size_t v = 0; v < Poly::kVars; ++v) {
        unsigned d = p.degree(v);
        if (d % 2 != 0) throw NotASquare("odd degree in a variable");
        bound[v] = d / 2;
    }
    const auto& lead = p.leading_term();
    std::array<unsigned, Poly::kVars> root_exp{};
    for (std::size_t v = 0; v < Poly::kVars; ++v) {
        unsigned e = lead.mono.exponent(v);
        if (e % 2 != 0) throw NotASquare("leading monomial is not a square");
        root_exp[v] = e / 2;
    }
    if (!is_rational_square(lead.coeff)) throw NotASquare("leading coefficient is not a square");

    const Mono root_lead = Mono::from_exponents(root_exp);
    const Rational root_coeff = rat_sqrt(lead.coeff);
    const Rational twice_lead = root_coeff * Rational(2);

    Poly root = Poly::monomial(root_lead, root_coeff);
    Poly rem = p - root * root;
    Mono last = root_lead;
    while (!rem.is_zero()) {
        const auto& top = rem.leading_term();
        if (!root_lead.divides(top.mono)) throw NotASquare("remainder not divisible");
        Mono m = top.mono / root_lead;
        if (!(m < last)) throw NotASquare("non-descending root term");
        for (std::size_t v = 0; v < Poly::kVars; ++v)
            if (m.exponent(v) > bound[v]) throw NotASquare("root term exceeds degree bound");
        Rational c = top.coeff / twice_lead;
        Poly term = Poly::monomial(m, c);
        // rem -= (2 root + term) * term
        rem -= (root.scaled(Rational(2)) + term).mul_term(m, c);
        root += term;
        last = m;
    }
    return root;
}

}  // namespace xyzfam
