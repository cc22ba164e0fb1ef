#pragma once

/*
 * Brute-force search for positive rational solutions of xyz(x+y+z) = a.
 *
 * x >= y run over reduced fractions of height <= H (height of p/q is
 * max(p, q)); z is the positive root of  xy z^2 + xy(x+y) z - a = 0.
 * With x = p1/q1, y = p2/q2, P = p1 p2, Q = q1 q2, S = p1 q2 + p2 q1:
 *
 *     z = (r - P S) / (2 P Q),   r^2 = P^2 S^2 + 4 a P Q^3,
 *
 * so each pair costs one integer square test.
 */

#include <algorithm>
#include <atomic>
#include <cmath>
#include <condition_variable>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <thread>
#include <tuple>
#include <vector>

#include "xyzfam/search/table.hpp"

namespace xyzfam {

/// Positive root z, or none when the discriminant is not a rational square.
inline std::optional<Rational> solve_z(const Rational& a, const Rational& x, const Rational& y) {
    if (x.sign() <= 0 || y.sign() <= 0) return std::nullopt;
    Rational xy = x * y;
    Rational b = xy * (x + y);
    Rational disc = b * b + Rational(4) * xy * a;
    if (!is_rational_square(disc)) return std::nullopt;
    Rational z = (rat_sqrt(disc) - b) / (Rational(2) * xy);
    if (z.sign() <= 0) return std::nullopt;
    return z;
}

struct Fraction {
    long p, q;
};

/// Every positive reduced p/q with p, q <= h, ascending.
inline std::vector<Fraction> farey_fractions(long h) {
    std::vector<Fraction> below;  // (0, 1]
    long a = 0, b = 1, c = 1, d = h;
    while (c <= h) {
        below.push_back({c, d});
        long k = (h + b) / d;
        std::tie(a, b, c, d) = std::tuple{c, d, k * c - a, k * d - b};
    }
    std::vector<Fraction> out = below;
    for (auto it = below.rbegin(); it != below.rend(); ++it)
        if (it->p != it->q) out.push_back({it->q, it->p});
    return out;
}

struct SearchConfig {
    long a;
    long height;
};

/// Max component height, then (x, y, z) ascending.
inline bool smaller_row(const TableRow& l, const TableRow& r) {
    auto h = [](const TableRow& t) { return std::max({t.x.height(), t.y.height(), t.z.height()}); };
    BigInt hl = h(l), hr = h(r);
    if (hl != hr) return hl < hr;
    return std::tie(l.x, l.y, l.z) < std::tie(r.x, r.y, r.z);
}

namespace detail {

using u128 = unsigned __int128;

inline bool maybe_square_mod64(u128 n) {
    constexpr std::uint64_t mask = [] {
        std::uint64_t m = 0;
        for (unsigned k = 0; k < 64; ++k) m |= std::uint64_t{1} << (k * k % 64);
        return m;
    }();
    return (mask >> static_cast<unsigned>(n & 63u)) & 1u;
}

inline std::optional<u128> exact_isqrt(u128 n) {
    if (!maybe_square_mod64(n)) return std::nullopt;
    auto r = static_cast<u128>(std::sqrt(static_cast<long double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    if (r * r != n) return std::nullopt;
    return r;
}

// Keeps every intermediate below 2^127.
constexpr long kFastHeight = 2000;
constexpr long kFastA = 1000000;

inline void search_fast(long a, const std::vector<Fraction>& fr, std::vector<TableRow>& out) {
    for (std::size_t i = 0; i < fr.size(); ++i) {
        const auto [p1, q1] = fr[i];
        for (std::size_t j = 0; j <= i; ++j) {
            const auto [p2, q2] = fr[j];
            u128 P = static_cast<u128>(p1) * p2, Q = static_cast<u128>(q1) * q2;
            u128 S = static_cast<u128>(p1) * q2 + static_cast<u128>(p2) * q1;
            u128 PS = P * S;
            auto r = exact_isqrt(PS * PS + 4u * static_cast<u128>(a) * P * Q * Q * Q);
            if (!r || *r <= PS) continue;
            // z <= y  <=>  (r - PS) q2 <= 2 P Q p2
            if ((*r - PS) * static_cast<u128>(q2) > 2u * P * Q * static_cast<u128>(p2)) continue;
            auto big = [](u128 v) {
                BigInt out(static_cast<unsigned long>(v >> 64));
                out <<= 64;
                return BigInt(out + static_cast<unsigned long>(v));
            };
            out.push_back({a, Rational(p1, q1), Rational(p2, q2), Rational(big(*r - PS), big(2u * P * Q))});
        }
    }
}

inline void search_exact(long a, const std::vector<Fraction>& fr, std::vector<TableRow>& out) {
    Rational qa(a);
    for (std::size_t i = 0; i < fr.size(); ++i) {
        Rational x(fr[i].p, fr[i].q);
        for (std::size_t j = 0; j <= i; ++j) {
            Rational y(fr[j].p, fr[j].q);
            auto z = solve_z(qa, x, y);
            if (z && *z <= y) out.push_back({a, x, y, *z});
        }
    }
}

}  // namespace detail

/// Canonical rows (x >= y >= z > 0) with x, y of height <= H, ranked.
inline std::vector<TableRow> search_solutions(const SearchConfig& cfg) {
    if (cfg.height < 1) throw Undefined("height bound must be at least 1");
    std::vector<TableRow> rows;
    if (cfg.a <= 0) return rows;
    auto fr = farey_fractions(cfg.height);
    if (cfg.height <= detail::kFastHeight && cfg.a <= detail::kFastA)
        detail::search_fast(cfg.a, fr, rows);
    else
        detail::search_exact(cfg.a, fr, rows);
    std::sort(rows.begin(), rows.end(), smaller_row);
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    return rows;
}

/// Searches a = lo..hi on `threads` workers.  `emit` sees each a's rows in
/// increasing a as soon as that a and all smaller ones are done; the merged
/// result is ordered by a, then rank, whatever the thread count.
inline std::vector<TableRow> search_range(long lo, long hi, long height, unsigned threads = 0,
                                          const std::function<void(const std::vector<TableRow>&)>& emit = {}) {
    if (height < 1) throw Undefined("height bound must be at least 1");
    if (hi < lo) return {};
    const std::size_t count = static_cast<std::size_t>(hi - lo + 1);
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));

    std::vector<std::vector<TableRow>> slots(count);
    std::vector<char> done(count, 0);
    std::atomic<std::size_t> next{0};
    std::mutex m;
    std::condition_variable cv;
    std::exception_ptr error;

    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < count;) {
            std::vector<TableRow> rows;
            try {
                rows = search_solutions({lo + static_cast<long>(i), height});
            } catch (...) {
                std::lock_guard lock(m);
                if (!error) error = std::current_exception();
            }
            std::lock_guard lock(m);
            slots[i] = std::move(rows);
            done[i] = 1;
            cv.notify_all();
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);

    std::vector<TableRow> merged;
    for (std::size_t i = 0; i < count; ++i) {
        std::unique_lock lock(m);
        cv.wait(lock, [&] { return done[i] != 0; });
        const bool failed = static_cast<bool>(error);
        lock.unlock();
        if (emit && !failed) emit(slots[i]);
        merged.insert(merged.end(), slots[i].begin(), slots[i].end());
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    return merged;
}

}  // namespace xyzfam
