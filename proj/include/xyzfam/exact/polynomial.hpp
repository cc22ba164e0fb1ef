#pragma once

/*
 * Sparse multivariate polynomials.
 *
 * Terms are kept sorted by the lexicographic monomial order in which the
 * first variable of the variable set is the most significant (a > s > t for
 * the parameter ring).  Exponents are packed into 16-bit fields of a single
 * 64-bit key so that comparing keys is comparing monomials.
 *
 * Coefficients can be any exact field type with value semantics: Rational
 * for Q[a,s,t], RationalFunction for polynomials in the unknowns A, B, C.
 */

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "xyzfam/exact/errors.hpp"
#include "xyzfam/exact/rational.hpp"

namespace xyzfam {

/// Parameter ring variables, in monomial-order priority.
struct ParamVars {
    static constexpr std::array<std::string_view, 3> names{"a", "s", "t"};
    static constexpr std::size_t a = 0, s = 1, t = 2;
};

/// Unknowns of an ansatz.
struct UnknownVars {
    static constexpr std::array<std::string_view, 3> names{"A", "B", "C"};
    static constexpr std::size_t A = 0, B = 1, C = 2;
};

namespace detail {
// Unqualified call so that ADL finds is_zero for coefficient types declared later.
template <class T>
bool coeff_zero(const T& c) {
    return is_zero(c);
}
}  // namespace detail

template <std::size_t N>
class Monomial {
    static_assert(N >= 1 && N <= 4, "at most four variables fit a packed key");

public:
    static constexpr unsigned kBits = 16;
    static constexpr std::uint64_t kFieldMask = (std::uint64_t{1} << kBits) - 1;
    static constexpr unsigned kMaxExponent = 0x7fff;

    constexpr Monomial() = default;
    constexpr explicit Monomial(std::uint64_t key) : key_(key) {}

    static Monomial from_exponents(const std::array<unsigned, N>& e) {
        std::uint64_t k = 0;
        for (std::size_t i = 0; i < N; ++i) {
            if (e[i] > kMaxExponent) throw ExponentOverflow("exponent too large");
            k |= std::uint64_t{e[i]} << shift(i);
        }
        return Monomial(k);
    }

    static Monomial variable(std::size_t i, unsigned power = 1) {
        std::array<unsigned, N> e{};
        e[i] = power;
        return from_exponents(e);
    }

    constexpr std::uint64_t key() const { return key_; }
    constexpr unsigned exponent(std::size_t i) const {
        return static_cast<unsigned>((key_ >> shift(i)) & kFieldMask);
    }
    std::array<unsigned, N> exponents() const {
        std::array<unsigned, N> e{};
        for (std::size_t i = 0; i < N; ++i) e[i] = exponent(i);
        return e;
    }
    constexpr bool is_one() const { return key_ == 0; }
    unsigned total_degree() const {
        unsigned d = 0;
        for (std::size_t i = 0; i < N; ++i) d += exponent(i);
        return d;
    }

    bool divides(Monomial other) const {
        for (std::size_t i = 0; i < N; ++i)
            if (exponent(i) > other.exponent(i)) return false;
        return true;
    }

    friend Monomial operator*(Monomial l, Monomial r) {
        std::uint64_t k = 0;
        for (std::size_t i = 0; i < N; ++i) {
            unsigned e = l.exponent(i) + r.exponent(i);
            if (e > kMaxExponent) throw ExponentOverflow("monomial product overflows");
            k |= std::uint64_t{e} << shift(i);
        }
        return Monomial(k);
    }
    /// Requires r | l.
    friend Monomial operator/(Monomial l, Monomial r) { return Monomial(l.key_ - r.key_); }

    static Monomial min(Monomial l, Monomial r) {
        std::uint64_t k = 0;
        for (std::size_t i = 0; i < N; ++i)
            k |= std::uint64_t{std::min(l.exponent(i), r.exponent(i))} << shift(i);
        return Monomial(k);
    }

    Monomial without(std::size_t var) const {
        return Monomial(key_ & ~(kFieldMask << shift(var)));
    }

    friend constexpr auto operator<=>(Monomial, Monomial) = default;

private:
    static constexpr unsigned shift(std::size_t i) {
        return static_cast<unsigned>(kBits * (N - 1 - i));
    }

    std::uint64_t key_ = 0;
};

template <class Coeff, class Vars>
class Polynomial {
public:
    static constexpr std::size_t kVars = Vars::names.size();
    using Mono = Monomial<kVars>;
    using CoeffType = Coeff;
    using VarSet = Vars;

    struct Term {
        Mono mono;
        Coeff coeff;
        friend bool operator==(const Term&, const Term&) = default;
    };

    Polynomial() = default;
    Polynomial(const Coeff& c) {  // NOLINT(google-explicit-constructor)
        if (!detail::coeff_zero(c)) terms_.push_back({Mono{}, c});
    }
    Polynomial(long c) : Polynomial(Coeff(c)) {}  // NOLINT

    static Polynomial variable(std::size_t i) { return monomial(Mono::variable(i), Coeff(1)); }

    static Polynomial monomial(Mono m, const Coeff& c) {
        Polynomial p;
        if (!detail::coeff_zero(c)) p.terms_.push_back({m, c});
        return p;
    }

    /// Builds from arbitrary (possibly unsorted, repeated, zero) terms.
    static Polynomial from_terms(std::vector<Term> terms) {
        Polynomial p;
        p.terms_ = std::move(terms);
        p.canonicalize();
        return p;
    }

    std::span<const Term> terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
    bool is_monomial() const { return terms_.size() == 1; }

    /// Requires non-zero.
    const Term& leading_term() const { return terms_.front(); }
    const Coeff& leading_coeff() const { return terms_.front().coeff; }
    Coeff constant_coeff() const {
        if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
        return Coeff(0);
    }
    Coeff coeff(Mono m) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [](const Term& t, Mono k) { return t.mono > k; });
        if (it != terms_.end() && it->mono == m) return it->coeff;
        return Coeff(0);
    }

    unsigned degree(std::size_t var) const {
        unsigned d = 0;
        for (const auto& t : terms_) d = std::max(d, t.mono.exponent(var));
        return d;
    }
    bool contains(std::size_t var) const { return degree(var) > 0; }

    unsigned total_degree() const {
        unsigned d = 0;
        for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
        return d;
    }

    /// Greatest monomial dividing every term.  Requires non-zero.
    Mono monomial_content() const {
        Mono m = terms_.front().mono;
        for (const auto& t : terms_) m = Mono::min(m, t.mono);
        return m;
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& t : r.terms_) t.coeff = -t.coeff;
        return r;
    }

    friend Polynomial operator+(const Polynomial& l, const Polynomial& r) { return merge(l, r, false); }
    friend Polynomial operator-(const Polynomial& l, const Polynomial& r) { return merge(l, r, true); }
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }

    friend Polynomial operator*(const Polynomial& l, const Polynomial& r) {
        if (l.is_zero() || r.is_zero()) return {};
        if (l.size() == 1) return r.mul_term(l.terms_[0].mono, l.terms_[0].coeff);
        if (r.size() == 1) return l.mul_term(r.terms_[0].mono, r.terms_[0].coeff);
        const Polynomial& small = l.size() <= r.size() ? l : r;
        const Polynomial& big = l.size() <= r.size() ? r : l;
        // Accumulate row by row; each row is already sorted.
        std::map<std::uint64_t, Coeff, std::greater<>> acc;
        for (const auto& ts : small.terms_)
            for (const auto& tb : big.terms_) {
                auto key = (ts.mono * tb.mono).key();
                auto [it, inserted] = acc.try_emplace(key, ts.coeff * tb.coeff);
                if (!inserted) it->second += ts.coeff * tb.coeff;
            }
        Polynomial p;
        p.terms_.reserve(acc.size());
        for (auto& [k, c] : acc)
            if (!detail::coeff_zero(c)) p.terms_.push_back({Mono(k), std::move(c)});
        return p;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial mul_term(Mono m, const Coeff& c) const {
        if (detail::coeff_zero(c)) return {};
        Polynomial p;
        p.terms_.reserve(terms_.size());
        for (const auto& t : terms_) p.terms_.push_back({t.mono * m, t.coeff * c});
        return p;
    }
    Polynomial scaled(const Coeff& c) const { return mul_term(Mono{}, c); }

    /// Divides every exponent vector by m.  Requires m | every term.
    Polynomial shifted_down(Mono m) const {
        Polynomial p = *this;
        for (auto& t : p.terms_) t.mono = t.mono / m;
        return p;
    }

    Polynomial pow(unsigned e) const {
        Polynomial result(Coeff(1)), base = *this;
        while (e) {
            if (e & 1u) result *= base;
            e >>= 1u;
            if (e) base *= base;
        }
        return result;
    }

    /// Exact quotient, or nullopt when divisor does not divide *this.
    std::optional<Polynomial> try_div_exact(const Polynomial& divisor) const {
        if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
        if (is_zero()) return Polynomial{};
        if (divisor.size() == 1) {
            const auto& d = divisor.terms_[0];
            Polynomial q;
            q.terms_.reserve(terms_.size());
            for (const auto& t : terms_) {
                if (!d.mono.divides(t.mono)) return std::nullopt;
                q.terms_.push_back({t.mono / d.mono, t.coeff / d.coeff});
            }
            return q;
        }
        const Term& lead = divisor.terms_.front();
        // Per-variable degrees add under multiplication, which bounds every quotient term.
        std::array<unsigned, kVars> budget{};
        for (std::size_t v = 0; v < kVars; ++v) {
            if (divisor.degree(v) > degree(v)) return std::nullopt;
            budget[v] = degree(v) - divisor.degree(v);
        }
        std::map<std::uint64_t, Coeff, std::greater<>> rem;
        for (const auto& t : terms_) rem.emplace(t.mono.key(), t.coeff);
        Polynomial q;
        while (!rem.empty()) {
            auto top = rem.begin();
            Mono tm(top->first);
            if (!lead.mono.divides(tm)) return std::nullopt;
            Mono qm = tm / lead.mono;
            for (std::size_t v = 0; v < kVars; ++v)
                if (qm.exponent(v) > budget[v]) return std::nullopt;
            Coeff qc = top->second / lead.coeff;
            rem.erase(top);
            for (std::size_t i = 1; i < divisor.terms_.size(); ++i) {
                const auto& dt = divisor.terms_[i];
                auto key = (qm * dt.mono).key();
                Coeff delta = qc * dt.coeff;
                auto [it, inserted] = rem.try_emplace(key, -delta);
                if (!inserted) {
                    it->second -= delta;
                    if (detail::coeff_zero(it->second)) rem.erase(it);
                }
            }
            q.terms_.push_back({qm, std::move(qc)});
        }
        return q;
    }

    /// Quotient q with q * divisor == *this.
    Polynomial div_exact(const Polynomial& divisor) const {
        auto q = try_div_exact(divisor);
        if (!q) throw InexactDivision("divisor does not divide dividend");
        return *std::move(q);
    }

    bool divisible_by(const Polynomial& divisor) const { return try_div_exact(divisor).has_value(); }

    /// Evaluates at values of a ring T into which Coeff converts.
    template <class T>
    T evaluate(const std::array<T, kVars>& at) const {
        std::array<std::vector<T>, kVars> powers;
        for (std::size_t v = 0; v < kVars; ++v) {
            unsigned d = degree(v);
            powers[v].reserve(d + 1);
            powers[v].push_back(T(1));
            for (unsigned k = 1; k <= d; ++k) powers[v].push_back(powers[v].back() * at[v]);
        }
        T sum(0);
        for (const auto& t : terms_) {
            T term(t.coeff);
            for (std::size_t v = 0; v < kVars; ++v)
                if (unsigned e = t.mono.exponent(v)) term = term * powers[v][e];
            sum = sum + term;
        }
        return sum;
    }

    template <class F>
    auto map_coeffs(F&& f) const {
        using Out = std::decay_t<decltype(f(std::declval<const Coeff&>()))>;
        std::vector<typename Polynomial<Out, Vars>::Term> out;
        out.reserve(terms_.size());
        for (const auto& t : terms_) out.push_back({t.mono, f(t.coeff)});
        return Polynomial<Out, Vars>::from_terms(std::move(out));
    }

    /// Splits into coefficients of powers of var: result[k] is free of var.
    std::map<unsigned, Polynomial> split(std::size_t var) const {
        std::map<unsigned, std::vector<Term>> buckets;
        for (const auto& t : terms_) buckets[t.mono.exponent(var)].push_back({t.mono.without(var), t.coeff});
        std::map<unsigned, Polynomial> out;
        for (auto& [k, ts] : buckets) {
            Polynomial p;
            p.terms_ = std::move(ts);  // still sorted: removing one field preserves relative lex order
            out.emplace(k, std::move(p));
        }
        return out;
    }

    friend bool operator==(const Polynomial& l, const Polynomial& r) { return l.terms_ == r.terms_; }

private:
    void canonicalize() {
        std::sort(terms_.begin(), terms_.end(), [](const Term& x, const Term& y) { return x.mono > y.mono; });
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!out.empty() && out.back().mono == t.mono)
                out.back().coeff += t.coeff;
            else
                out.push_back(std::move(t));
        }
        std::erase_if(out, [](const Term& t) { return detail::coeff_zero(t.coeff); });
        terms_ = std::move(out);
    }

    static Polynomial merge(const Polynomial& l, const Polynomial& r, bool subtract) {
        Polynomial p;
        p.terms_.reserve(l.terms_.size() + r.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < l.terms_.size() || j < r.terms_.size()) {
            if (j == r.terms_.size() || (i < l.terms_.size() && l.terms_[i].mono > r.terms_[j].mono)) {
                p.terms_.push_back(l.terms_[i++]);
            } else if (i == l.terms_.size() || r.terms_[j].mono > l.terms_[i].mono) {
                const auto& t = r.terms_[j++];
                p.terms_.push_back({t.mono, subtract ? -t.coeff : t.coeff});
            } else {
                Coeff c = subtract ? l.terms_[i].coeff - r.terms_[j].coeff
                                   : l.terms_[i].coeff + r.terms_[j].coeff;
                if (!detail::coeff_zero(c)) p.terms_.push_back({l.terms_[i].mono, std::move(c)});
                ++i;
                ++j;
            }
        }
        return p;
    }

    std::vector<Term> terms_;  // strictly decreasing monomials, no zero coefficients
};

template <class C, class V>
bool is_zero(const Polynomial<C, V>& p) { return p.is_zero(); }

/// Q[a,s,t].
using MultiPolynomial = Polynomial<Rational, ParamVars>;

enum class PolyOp { add, sub, mul, div_exact };

inline MultiPolynomial poly_arith(const MultiPolynomial& lhs, const MultiPolynomial& rhs, PolyOp kind) {
    switch (kind) {
        case PolyOp::add: return lhs + rhs;
        case PolyOp::sub: return lhs - rhs;
        case PolyOp::mul: return lhs * rhs;
        case PolyOp::div_exact: return lhs.div_exact(rhs);
    }
    return {};
}

namespace param {
inline MultiPolynomial a() { return MultiPolynomial::variable(ParamVars::a); }
inline MultiPolynomial s() { return MultiPolynomial::variable(ParamVars::s); }
inline MultiPolynomial t() { return MultiPolynomial::variable(ParamVars::t); }
}  // namespace param

}  // namespace xyzfam
