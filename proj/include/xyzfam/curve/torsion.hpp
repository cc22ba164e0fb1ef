#pragma once

// Nagell-Lutz style torsion test on an integral short model.

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "xyzfam/curve/weierstrass.hpp"

namespace xyzfam {

/// y^2 = x^3 + A x + B with integral A, B, plus the map from the source curve:
///   (X, Y) -> (u^2 (X + b2/12), u^3 (Y + (a1 X + a3)/2)).
struct ShortIntegralModel {
    WeierstrassCurve<Rational> curve;
    Rational u;
    Rational x_shift;
    Rational a1, a3;

    CurvePoint<Rational> map(const CurvePoint<Rational>& p) const {
        if (p.is_infinity()) return p;
        Rational u2 = u * u;
        return {u2 * (p.x() + x_shift), u2 * u * (p.y() + (a1 * p.x() + a3) / Rational(2))};
    }
};

namespace detail {

/// Largest divisor of d built from primes of r.
inline BigInt part_over(BigInt d, const BigInt& r) {
    BigInt part = 1, g = gcd(d, r);
    while (g > 1) {
        part *= g;
        d /= g;
        g = gcd(d, r);
    }
    return part;
}

/// Smallest k with part | r^(step*k).
inline unsigned covering_power(const BigInt& part, const BigInt& r, unsigned step) {
    unsigned k = 0;
    BigInt acc = 1, rs;
    mpz_pow_ui(rs.get_mpz_t(), r.get_mpz_t(), step);
    while (acc % part != 0) {
        acc *= rs;
        ++k;
    }
    return k;
}

/// u > 0 with u^4 A and u^6 B integral; least possible unless the
/// denominators hold a large unfactored cofactor.
inline BigInt integral_scale(const Rational& A, const Rational& B) {
    const BigInt da = A.denominator(), db = B.denominator();
    BigInt rest = lcm(da, db), u = 1;
    auto take = [&](const BigInt& r) {
        unsigned k = std::max(covering_power(part_over(da, r), r, 4), covering_power(part_over(db, r), r, 6));
        BigInt rk;
        mpz_pow_ui(rk.get_mpz_t(), r.get_mpz_t(), k);
        u *= rk;
        rest /= part_over(rest, r);
    };
    for (unsigned long p = 2; p < 100000 && rest > 1; ++p)
        if (rest % p == 0) take(BigInt(p));
    if (rest > 1) take(BigInt(rest));
    return u;
}

}  // namespace detail

inline ShortIntegralModel to_short_integral_form(const WeierstrassCurve<Rational>& c) {
    Rational A = -c.c4() / Rational(48);
    Rational B = -c.c6() / Rational(864);
    Rational u(detail::integral_scale(A, B));
    Rational u4 = u.pow(4), u6 = u.pow(6);
    return {WeierstrassCurve<Rational>::short_form(A * u4, B * u6), u, c.b2() / Rational(12), c.a1(), c.a3()};
}

enum class TorsionVerdict { non_torsion, torsion, inconclusive };

struct TorsionWitness {
    long n;
    CurvePoint<Rational> point;  // n*P on the integral model
    bool integral;
};

struct TorsionCertificate {
    WeierstrassCurve<Rational> curve;  // integral short model
    CurvePoint<Rational> point;
    std::vector<TorsionWitness> witness;
    TorsionVerdict verdict;
    std::optional<long> order;  // set for torsion
};

/// Largest torsion order over Q (Mazur).
inline constexpr long kMazurBound = 12;

/// Walks n*P for n = 1..max_multiple on the integral model.  A non-integral
/// multiple, or max_multiple >= 12 finite multiples, proves infinite order.
inline TorsionCertificate non_torsion_certificate(const WeierstrassCurve<Rational>& curve,
                                                  const CurvePoint<Rational>& p, long max_multiple = kMazurBound) {
    if (!curve.contains(p)) throw OffCurveInput("point is not on the curve");
    ShortIntegralModel model = to_short_integral_form(curve);
    CurvePoint<Rational> base = model.map(p);
    TorsionCertificate cert{model.curve, base, {}, TorsionVerdict::inconclusive, std::nullopt};
    if (base.is_infinity()) {
        cert.witness.push_back({1, base, true});
        cert.verdict = TorsionVerdict::torsion;
        cert.order = 1;
        return cert;
    }
    CurvePoint<Rational> q;
    for (long n = 1; n <= max_multiple; ++n) {
        q = model.curve.add_unchecked(q, base);
        if (q.is_infinity()) {
            cert.witness.push_back({n, q, true});
            cert.verdict = TorsionVerdict::torsion;
            cert.order = n;
            return cert;
        }
        bool integral = q.x().is_integer() && q.y().is_integer();
        cert.witness.push_back({n, q, integral});
        if (!integral) {
            cert.verdict = TorsionVerdict::non_torsion;
            return cert;
        }
    }
    if (max_multiple >= kMazurBound) cert.verdict = TorsionVerdict::non_torsion;
    return cert;
}

inline std::string to_string(TorsionVerdict v) {
    switch (v) {
        case TorsionVerdict::non_torsion: return "non-torsion";
        case TorsionVerdict::torsion: return "torsion";
        default: return "inconclusive";
    }
}

inline nlohmann::json to_json(const TorsionCertificate& c) {
    nlohmann::json j;
    j["curve"] = to_string(c.curve);
    j["point"] = to_string(c.point);
    j["verdict"] = to_string(c.verdict);
    if (c.order) j["order"] = *c.order;
    j["witness"] = nlohmann::json::array();
    for (const auto& w : c.witness) {
        nlohmann::json e;
        e["n"] = w.n;
        e["X"] = w.point.is_infinity() ? "O" : to_string(w.point.x());
        e["Y"] = w.point.is_infinity() ? "O" : to_string(w.point.y());
        e["integral"] = w.integral ? "yes" : "no";
        j["witness"].push_back(std::move(e));
    }
    return j;
}

}  // namespace xyzfam
