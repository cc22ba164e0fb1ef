// Acceptance gate: one line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "test_support.hpp"
#include "xyzfam/xyzfam.hpp"

using namespace xyzfam;
using RF = RationalFunction;

namespace {

RF F(const std::string& text) { return parse_rational_function(text); }

struct Check {
    bool ok = true;
    std::string note;

    void expect(bool cond, const std::string& what) {
        if (cond) return;
        ok = false;
        note += (note.empty() ? "" : "; ") + what;
    }
};

int failures = 0;

void criterion(int id, const std::string& title, double budget_s, const std::function<void(Check&)>& body) {
    Check c;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.ok = false;
        c.note += std::string(c.note.empty() ? "" : "; ") + "threw " + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (budget_s > 0 && secs > budget_s) c.expect(false, "over budget of " + std::to_string(budget_s) + " s");
    if (!c.ok) ++failures;
    char time[32];
    std::snprintf(time, sizeof time, "%.2f s", secs);
    std::cout << (c.ok ? "PASS" : "FAIL") << "  " << id << ". " << title << " (" << time << ")";
    if (!c.note.empty()) std::cout << "  -- " << c.note;
    std::cout << std::endl;
}

bool equal_up_to_negation(const std::vector<RF>& got, const std::vector<RF>& want) {
    if (got.size() != want.size()) return false;
    bool same = true, negated = true;
    for (std::size_t i = 0; i < got.size(); ++i) {
        same = same && got[i] == want[i];
        negated = negated && got[i] == -want[i];
    }
    return same || negated;
}

bool componentwise_up_to_sign(const std::vector<RF>& got, const std::vector<RF>& want) {
    if (got.size() != want.size()) return false;
    for (std::size_t i = 0; i < got.size(); ++i)
        if (!(got[i] == want[i] || got[i] == -want[i])) return false;
    return true;
}

// ---- closed forms ----------------------------------------------------------

const std::string kEulerC = "(2*a^2*t^8+10*a*s^4*t^4-s^8)";

std::vector<RF> euler_2p() {
    return {F("6*a*s*t^3*(a*t^4-2*s^4)^2/((4*a*t^4+s^4)*" + kEulerC + ")"),
            F("3/2*s^5*(4*a*t^4+s^4)^2/(t*(a*t^4-2*s^4)*" + kEulerC + ")"),
            F("2/3*" + kEulerC + "/(s^3*t*(4*a*t^4+s^4))")};
}

std::vector<RF> euler_3p() {
    const std::string big =
        "(a^6*t^24+6*s^4*a^5*t^20-255*s^8*a^4*t^16-790*a^3*t^12*s^12-2253*a^2*t^8*s^16-264*s^20*a*t^4+s^24)";
    const std::string c3 = "(a^3*t^12+3*s^4*a^2*t^8+111*a*t^4*s^8+s^12)";
    const std::string q = "(a^2*t^8-5*s^8+14*a*t^4*s^4)";
    return {F("18*a*s^5*t^3*(-2*s^4+a*t^4)^2*(-s^8+10*a*t^4*s^4+2*a^2*t^8)^2*" + q + "/((a*t^4+s^4)*" + c3 + "*" +
              big + ")"),
            F("1/6*(-(a*t^4+s^4)^2*" + c3 + "^2*" + q + ")/(s^3*t*(-2*s^4+a*t^4)*(-s^8+10*a*t^4*s^4+2*a^2*t^8)*" +
              big + ")"),
            F("2*s*" + big + "/(" + q + "*t*(a*t^4+s^4)*" + c3 + ")")};
}

std::vector<RF> elkies_1p() {
    return {F("1/2*(s^4-4*a)^2/(s^3*(s^4+12*a))"), F("2*a*(3*s^4+4*a)^2/(s^3*(s^4-4*a)*(s^4+12*a))"),
            F("1/2*s*(s^4+12*a)/(3*s^4+4*a)")};
}

const std::string kE16 = "(s^16+1136*s^12*a-928*s^8*a^2+1792*a^3*s^4+256*a^4)";
const std::string kE8 = "(-16*a^2-32*s^4*a+s^8)";
const std::string kE12 = "(s^12-460*s^8*a-208*a^2*s^4-64*a^3)";
const std::string kB = "(-4*a+5*s^4)*(4*a+3*s^4)*(s^8+56*s^4*a+16*a^2)";

std::vector<RF> elkies_2p() {
    return {F("-1/4*(-4*a+s^4)^2*" + kE12 + "^2/(s^3*(s^4+12*a)*" + kE8 + "*" + kE16 + ")"),
            F("-4*(s^4+12*a)*s*(-4*a+5*s^4)^2*(4*a+3*s^4)^2*(s^8+56*s^4*a+16*a^2)^2*a/(" + kE16 + "*" + kE8 +
              "*(-4*a+s^4)*" + kE12 + ")"),
            F("-1/4*" + kE8 + "*" + kE16 + "/(s^3*" + kB + "*(s^4+12*a))")};
}

const std::string kQ = "(t^10*a^4-2*t^5*a^3-t^5+a^2)";
const std::string kR = "(-2*a^2+2*t^5*a^3+t^5)";
const std::string kC = "(t^10+a-2*t^5*a^2+t^10*a^3)";

std::vector<RF> fourvar_2p() {
    return {F("-a*" + kQ + "*(t^5*a+1)*(t^5*a-1)/(t^4*" + kR + "*" + kC + ")"), F("-" + kQ + "/(t^4*" + kR + ")"),
            F("-t^6*" + kR + "*(t^5*a+1)*(t^5*a-1)/(" + kQ + "*" + kC + ")"),
            F(kC + "*t/((t^5*a+1)*(t^5*a-1))")};
}

// ---- search oracle ---------------------------------------------------------

using i128 = __int128;

std::vector<long long> divisors(long long n) {
    std::vector<long long> out;
    for (long long d = 1; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n) out.push_back(n / d);
        }
    return out;
}

long long gcd_ll(long long a, long long b) {
    while (b) a %= b, std::swap(a, b);
    return a;
}

// x >= y over height <= h; z runs over the rational-root candidates of
// P Q z^2 + P S z - a Q^2 = 0 (x = p1/q1, y = p2/q2).
std::set<std::string> double_loop(long a, long h) {
    std::vector<std::pair<long long, long long>> fr;
    for (long long p = 1; p <= h; ++p)
        for (long long q = 1; q <= h; ++q)
            if (gcd_ll(p, q) == 1) fr.emplace_back(p, q);
    std::set<std::string> out;
    for (auto [p1, q1] : fr)
        for (auto [p2, q2] : fr) {
            if (p2 * q1 > p1 * q2) continue;  // y > x
            long long P = p1 * p2, Q = q1 * q2, S = p1 * q2 + p2 * q1;
            long long A2 = P * Q, A1 = P * S, A0 = a * Q * Q;
            for (long long zp : divisors(A0))
                for (long long zq : divisors(A2)) {
                    if (gcd_ll(zp, zq) != 1) continue;
                    if (static_cast<i128>(A2) * zp * zp + static_cast<i128>(A1) * zp * zq !=
                        static_cast<i128>(A0) * zq * zq)
                        continue;
                    if (zp * q2 > p2 * zq) continue;  // z > y
                    out.insert(to_csv({a, Rational(p1, q1), Rational(p2, q2), Rational(zp, zq)}));
                }
        }
    return out;
}

std::set<std::string> as_set(const std::vector<TableRow>& rows) {
    std::set<std::string> out;
    for (const auto& r : rows) out.insert(to_csv(r));
    return out;
}

Bindings random_bindings(std::mt19937_64& rng) {
    return {{"a", testing::random_nonzero(rng, 9, 5)},
            {"s", testing::random_nonzero(rng, 6, 4)},
            {"t", testing::random_nonzero(rng, 5, 4)}};
}

}  // namespace

int main() {
    criterion(1, "Euler family n=2 equals the closed form up to simultaneous negation", 10, [](Check& c) {
        auto f = euler_family(2);
        c.expect(equal_up_to_negation(f.components, euler_2p()), "components differ");
        c.expect(verify_solution_identity(f), "identity fails");
    });

    criterion(2, "Euler family n=3 equals the closed 3P form up to simultaneous negation", 120, [](Check& c) {
        auto f = euler_family(3);
        c.expect(equal_up_to_negation(f.components, euler_3p()), "components differ");
        c.expect(verify_solution_identity(f), "identity fails");
    });

    criterion(3, "Elkies family n=1 exact, n=2 up to componentwise negation", 30, [](Check& c) {
        auto one = elkies_family(1);
        c.expect(one.components == elkies_1p(), "n=1 differs");
        auto two = elkies_family(2);
        c.expect(componentwise_up_to_sign(two.components, elkies_2p()), "n=2 differs");
        c.expect(verify_solution_identity(one) && verify_solution_identity(two), "identity fails");
    });

    criterion(4, "Curve anchors: Elkies 2P(A), four-variable 2P(X), Euler quartic image of 2P", 0, [](Check& c) {
        auto elkies = family_context(Scheme::elkies3);
        auto e2 = double_point(elkies.curve, elkies.base);
        c.expect(e2.x() == F("1/4*(s^16-464*s^12*a+1632*s^8*a^2+768*a^3*s^4+256*a^4)/(s^4*(s^4+12*a)^2)"),
                 "Elkies 2P(A)");

        WeierstrassCurve<RF> fv_curve(F("-4*t^5*a"), F("-8*t^15"), F("4*t^5*a-4*t^10*a^2"), F("-16*t^15"),
                                      F("-64*t^20*a+64*t^25*a^2"));
        CurvePoint<RF> ap(F("-4*t^5*a+4*t^10*a^2"), F("-16*t^10*a^2+16*t^15*a^3+8*t^15"));
        auto a2 = double_point(fv_curve, ap);
        c.expect(a2.x() == F("4*((-a^2-2*a^5+a^8)*t^20+(-2*a^4-a-4*a^7)*t^15+(1+6*a^6+6*a^3)*t^10+(-2*a^2-4*a^5)*t^5+"
                             "a^4)/((2*a^3+1)*t^5-2*a^2)^2"),
                 "four-variable 2P(X)");

        auto euler = family_context(Scheme::euler3);
        WeierstrassCurve<RF> expected(F("-4*s^2"), F("8*s^2*a*t^4"), F("-4*s^4"), F("64*a*t^4*s^4"),
                                     F("-256*a*t^4*s^8"));
        c.expect(euler.curve == expected, "Euler curve differs");
        c.expect(euler.base == CurvePoint<RF>(F("4*s^4"), F("16*s^6-8*s^2*a*t^4")), "Euler P");
        auto q = euler.maps->inverse(double_point(euler.curve, euler.base));
        c.expect(q.u == F("(a*t^4-2*s^4)/(4*a*t^4+s^4)"), "Euler 2Q(U)");
    });

    criterion(5, "Four-variable family n=2 (A,C) and (w,x,y,z) match; identity for n=2,3", 0, [](Check& c) {
        auto two = fourvar_family(2);
        c.expect(two.intermediate.A == F("-t^5*" + kR + "/" + kQ), "A differs");
        RF pc = F(kC + "/(t^10*a^2-1)");
        c.expect(two.intermediate.C == pc || two.intermediate.C == -pc, "C differs");
        c.expect(componentwise_up_to_sign(two.components, fourvar_2p()), "(w,x,y,z) differ");
        c.expect(verify_solution_identity(two), "identity n=2");
        c.expect(verify_solution_identity(fourvar_family(3)), "identity n=3");
    });

    criterion(6, "Elkies parametrization (-4a, 0, 12a) verifies, perturbations fail", 0, [](Check& c) {
        c.expect(verify_elkies_parametrization(elkies_parametrization()), "(-4a,0,12a) rejected");
        c.expect(verify_elkies_parametrization({F("-4*a"), F("0"), F("12*a")}), "literal guess rejected");
        for (const auto& g : std::vector<ParametrizationGuess>{{F("0"), F("0"), F("0")},
                                                               {F("-4*a"), F("0"), F("12*a+1")},
                                                               {F("-4*a+1"), F("0"), F("12*a")},
                                                               {F("-4*a"), F("1"), F("12*a")},
                                                               {F("4*a"), F("0"), F("12*a")},
                                                               {F("-4*a"), F("0"), F("-12*a")}})
            c.expect(!verify_elkies_parametrization(g), "perturbation accepted");
    });

    criterion(7, "Known-solution table: all 99 shipped rows verify exactly", 1, [](Check& c) {
        std::ifstream in(std::string(XYZFAM_DATA_DIR) + "/table1.csv");
        c.expect(in.good(), "data/table1.csv missing");
        auto rows = read_table_csv(in);
        c.expect(rows.size() == 99, std::to_string(rows.size()) + " rows");
        auto report = verify_table(rows);
        c.expect(report.ok(), to_string(report));
        c.expect(rows == table1(), "file differs from embedded copy");
    });

    criterion(8, "Search finds every table row for a=1..30 at H=60; double loop agrees for a<=10, H<=12", 600,
              [](Check& c) {
                  auto found = as_set(search_range(1, 30, 60));
                  auto table = table1();
                  int hits = 0;
                  for (long a = 1; a <= 30; ++a) {
                      bool hit = found.count(to_csv(table[static_cast<std::size_t>(a - 1)])) > 0;
                      hits += hit;
                      c.expect(hit, "missing row a=" + std::to_string(a));
                  }
                  for (long a = 1; a <= 10; ++a)
                      for (long h = 1; h <= 12; ++h) {
                          auto oracle = double_loop(a, h);
                          c.expect(as_set(search_solutions({a, h})) == oracle,
                                   "search differs at a=" + std::to_string(a) + " H=" + std::to_string(h));
                          std::vector<TableRow> exact;
                          detail::search_exact(a, farey_fractions(h), exact);
                          c.expect(as_set(exact) == oracle,
                                   "solve_z differs at a=" + std::to_string(a) + " H=" + std::to_string(h));
                      }
                  c.note += (c.note.empty() ? "" : "; ") + std::to_string(hits) + "/30 rows found";
              });

    criterion(9, "Non-torsion certificates at >= 3 integer specializations per scheme", 0, [](Check& c) {
        struct Case {
            Scheme scheme;
            std::vector<Bindings> points;
        };
        auto b = [](long a, long s, long t) { return Bindings{{"a", Rational(a)}, {"s", Rational(s)}, {"t", Rational(t)}}; };
        std::vector<Case> cases{{Scheme::elkies3, {b(1, 1, 1), b(2, 1, 1), b(3, 2, 1), b(-5, 1, 1)}},
                                {Scheme::euler3, {b(1, 1, 1), b(2, 1, 1), b(1, 2, 1), b(3, 1, 2)}},
                                {Scheme::fourvar, {b(1, 1, 1), b(2, 1, 1), b(3, 1, 1), b(1, 1, 2)}}};
        std::string summary;
        for (const auto& k : cases) {
            auto ctx = family_context(k.scheme);
            int certified = 0;
            for (const auto& at : k.points) {
                auto local = specialize(ctx, at);
                auto cert = non_torsion_certificate(local.curve, local.base);
                if (cert.verdict != TorsionVerdict::non_torsion) continue;
                // Re-derive the witness on the certificate's own model.
                bool consistent = cert.curve.is_short() && cert.curve.a4().is_integer() && cert.curve.a6().is_integer();
                for (const auto& w : cert.witness)
                    consistent = consistent && w.n <= kMazurBound && w.point == scalar_mul(cert.curve, w.n, cert.point);
                certified += consistent;
            }
            c.expect(certified >= 3, std::string(scheme_name(k.scheme)) + " has " + std::to_string(certified));
            summary += (summary.empty() ? "" : ", ") + std::string(scheme_name(k.scheme)) + " " +
                       std::to_string(certified) + "/" + std::to_string(k.points.size());
        }
        auto elkies = non_torsion_certificate(specialize(elkies_curve(), b(1, 1, 1)), CurvePoint<Rational>(-3, 13));
        c.expect(elkies.verdict == TorsionVerdict::non_torsion, "Elkies (1,1) P=(-3,13)");
        c.note += (c.note.empty() ? "" : "; ") + summary;
    });

    criterion(10, "Property suites: group law at 100 points, poly_sqrt on 200 polynomials, 50 commutation points", 0,
              [](Check& c) {
                  std::mt19937_64 rng(20260101);
                  std::vector<FamilyContext<RF>> ctxs{family_context(Scheme::euler3), family_context(Scheme::elkies3),
                                                      family_context(Scheme::fourvar)};
                  int group_checked = 0;
                  for (int attempt = 0; group_checked < 100 && attempt < 1000; ++attempt) {
                      const auto& ctx = ctxs[static_cast<std::size_t>(attempt) % ctxs.size()];
                      std::optional<FamilyContext<Rational>> local;
                      try {
                          local.emplace(specialize(ctx, random_bindings(rng)));
                      } catch (const Error&) {
                          continue;
                      }
                      const auto& E = local->curve;
                      const auto& P = local->base;
                      auto P2 = group_add(E, P, P);
                      auto P3 = group_add(E, P2, P);
                      bool ok = E.contains(P2) && E.contains(P3);
                      ok = ok && group_add(E, P, P2) == group_add(E, P2, P);
                      ok = ok && group_add(E, P, CurvePoint<Rational>()) == P;
                      ok = ok && group_add(E, P, E.negate(P)).is_infinity();
                      ok = ok && group_add(E, group_add(E, P, P2), P3) == group_add(E, P, group_add(E, P2, P3));
                      ok = ok && scalar_mul(E, 6, P) == group_add(E, P3, P3);
                      c.expect(ok, "group law fails at a specialization");
                      ++group_checked;
                  }
                  c.expect(group_checked == 100, "only " + std::to_string(group_checked) + " group-law points");

                  for (int i = 0; i < 200; ++i) {
                      auto p = testing::random_nonzero_poly(rng, 1 + i % 5, 4);
                      auto r = poly_sqrt(p * p);
                      c.expect(r == (p.leading_coeff().sign() > 0 ? p : -p), "poly_sqrt(p^2) != |p|");
                  }

                  std::vector<std::pair<CurvePoint<RF>, CurvePoint<RF>>> symbolic;
                  for (const auto& ctx : ctxs)
                      symbolic.emplace_back(scalar_mul(ctx.curve, 2, ctx.base), scalar_mul(ctx.curve, 3, ctx.base));
                  int commuted = 0;
                  for (int attempt = 0; commuted < 50 && attempt < 1000; ++attempt) {
                      std::size_t k = static_cast<std::size_t>(attempt) % ctxs.size();
                      Bindings at = random_bindings(rng);
                      try {
                          auto local = specialize(ctxs[k], at);
                          auto two = specialize(symbolic[k].first, at);
                          auto three = specialize(symbolic[k].second, at);
                          c.expect(two == scalar_mul(local.curve, 2, local.base), "2P does not commute");
                          c.expect(three == scalar_mul(local.curve, 3, local.base), "3P does not commute");
                          ++commuted;
                      } catch (const Error&) {
                      }
                  }
                  c.expect(commuted == 50, "only " + std::to_string(commuted) + " commutation points");
              });

    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
