#include <gtest/gtest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "xyzfam/search/search.hpp"

using namespace xyzfam;

namespace {

Rational Q(long p, long q = 1) { return Rational(p, q); }

TableRow row(long a, Rational x, Rational y, Rational z) { return {a, std::move(x), std::move(y), std::move(z)}; }

bool contains(const std::vector<TableRow>& rows, const TableRow& r) {
    return std::find(rows.begin(), rows.end(), r) != rows.end();
}

std::vector<BigInt> positive_divisors(BigInt n) {
    if (n < 0) n = -n;
    std::vector<BigInt> out;
    for (BigInt d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        if (d * d != n) out.push_back(n / d);
    }
    return out;
}

// Oracle: positive roots of xy z^2 + xy(x+y) z - a by the rational root
// theorem on the integer-scaled polynomial, no square roots.
std::vector<Rational> rational_roots(long a, const Rational& x, const Rational& y) {
    Rational c2 = x * y, c1 = x * y * (x + y), c0 = Rational(-a);
    BigInt l = lcm(lcm(c2.denominator(), c1.denominator()), c0.denominator());
    Rational L(l);
    BigInt A2 = (c2 * L).numerator(), A1 = (c1 * L).numerator(), A0 = (c0 * L).numerator();
    std::vector<Rational> roots;
    if (A0 == 0) return roots;
    for (const auto& p : positive_divisors(A0))
        for (const auto& q : positive_divisors(A2)) {
            Rational z(p, q);
            if (std::find(roots.begin(), roots.end(), z) != roots.end()) continue;
            if (Rational(A2) * z * z + Rational(A1) * z + Rational(A0) == Rational(0)) roots.push_back(z);
        }
    return roots;
}

std::set<std::string> oracle_search(long a, long h) {
    std::vector<Rational> fr;
    for (long p = 1; p <= h; ++p)
        for (long q = 1; q <= h; ++q)
            if (gcd(BigInt(p), BigInt(q)) == 1) fr.push_back(Q(p, q));
    std::set<std::string> out;
    for (const auto& x : fr)
        for (const auto& y : fr) {
            if (y > x) continue;
            for (const auto& z : rational_roots(a, x, y))
                if (z <= y) out.insert(to_csv(row(a, x, y, z)));
        }
    return out;
}

std::set<std::string> as_set(const std::vector<TableRow>& rows) {
    std::set<std::string> out;
    for (const auto& r : rows) out.insert(to_csv(r));
    return out;
}

}  // namespace

TEST(SolveZ, Examples) {
    EXPECT_EQ(solve_z(Q(1), Q(3, 2), Q(4, 3)), Q(1, 6));
    EXPECT_EQ(solve_z(Q(3), Q(1), Q(1)), Q(1));
    EXPECT_EQ(solve_z(Q(1), Q(1), Q(1)), std::nullopt);
    EXPECT_EQ(solve_z(Q(1), Q(-1), Q(1)), std::nullopt);
    EXPECT_EQ(solve_z(Q(0), Q(1), Q(1)), std::nullopt);
}

TEST(Farey, SmallHeights) {
    auto one = farey_fractions(1);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0].p, 1);
    auto five = farey_fractions(5);
    std::size_t expected = 0;
    for (long p = 1; p <= 5; ++p)
        for (long q = 1; q <= 5; ++q) expected += gcd(BigInt(p), BigInt(q)) == 1;
    EXPECT_EQ(five.size(), expected);
    for (std::size_t i = 1; i < five.size(); ++i)
        EXPECT_LT(Q(five[i - 1].p, five[i - 1].q), Q(five[i].p, five[i].q));
    for (const auto& f : five) EXPECT_EQ(gcd(BigInt(f.p), BigInt(f.q)), 1);
}

TEST(Search, Examples) {
    EXPECT_TRUE(contains(search_solutions({3, 10}), row(3, Q(1), Q(1), Q(1))));
    EXPECT_TRUE(contains(search_solutions({48, 10}), row(48, Q(2), Q(2), Q(2))));
    EXPECT_TRUE(search_solutions({1, 1}).empty());
    EXPECT_TRUE(search_solutions({0, 5}).empty());
    EXPECT_THROW(search_solutions({3, 0}), Undefined);
}

TEST(Search, Ranking) {
    auto rows = search_solutions({3, 10});
    ASSERT_FALSE(rows.empty());
    EXPECT_EQ(rows.front(), row(3, Q(1), Q(1), Q(1)));
    for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_TRUE(smaller_row(rows[i - 1], rows[i]));
}

TEST(Search, ExactPathAgreesWithFastPath) {
    for (long a : {1L, 7L, 48L}) {
        auto fr = farey_fractions(9);
        std::vector<TableRow> fast, exact;
        detail::search_fast(a, fr, fast);
        detail::search_exact(a, fr, exact);
        EXPECT_EQ(as_set(fast), as_set(exact)) << "a=" << a;
    }
}

TEST(Search, RangeIsDeterministic) {
    auto one = search_range(1, 12, 10, 1);
    auto many = search_range(1, 12, 10, 5);
    EXPECT_EQ(one, many);
    std::vector<long> seen;
    search_range(1, 12, 10, 3, [&](const std::vector<TableRow>& rows) {
        for (const auto& r : rows) seen.push_back(r.a);
    });
    EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));
    EXPECT_TRUE(search_range(5, 4, 10).empty());
}

TEST(Table, ShippedTableVerifies) {
    auto rows = table1();
    ASSERT_EQ(rows.size(), 99u);
    for (std::size_t i = 0; i < rows.size(); ++i) EXPECT_EQ(rows[i].a, static_cast<long>(i + 1));
    auto report = verify_table(rows);
    EXPECT_TRUE(report.ok()) << to_string(report);
    EXPECT_EQ(report.checked, 99u);
    EXPECT_EQ(rows[96], row(97, Q(10, 3), Q(49, 20), Q(45, 28)));
}

TEST(Table, DataFileMatchesEmbeddedCopy) {
    std::ifstream in(std::string(XYZFAM_DATA_DIR) + "/table1.csv");
    ASSERT_TRUE(in.good());
    std::stringstream text;
    text << in.rdbuf();
    EXPECT_EQ(text.str(), std::string(kTable1Csv));
}

TEST(Table, Failures) {
    auto report = verify_table({row(1, Q(1), Q(1), Q(1)), row(2, Q(5, 2), Q(5, 6), Q(4, 15)),
                                row(3, Q(-1), Q(-1), Q(-1))});
    ASSERT_EQ(report.failures.size(), 2u);
    EXPECT_EQ(report.failures[0].index, 1u);
    EXPECT_NE(report.failures[0].reason.find("value 3"), std::string::npos);
    EXPECT_EQ(report.failures[1].index, 3u);
    EXPECT_EQ(report.failures[1].reason, "non-positive component");
    EXPECT_TRUE(verify_table({}).ok());
}

TEST(Table, Parsing) {
    std::istringstream ok("a,x,y,z\n\n2,5/2,5/6,4/15\n");
    EXPECT_EQ(read_table_csv(ok), (std::vector<TableRow>{row(2, Q(5, 2), Q(5, 6), Q(4, 15))}));
    std::istringstream bad("1,3/2,4/3\n");
    EXPECT_THROW(read_table_csv(bad), MalformedRow);
    EXPECT_THROW(parse_table_row("1,3/2,4/x,1/6"), MalformedRow);
    EXPECT_THROW(parse_table_row("1/2,3/2,4/3,1/6"), MalformedRow);
    EXPECT_THROW(parse_table_row("1,3/0,4/3,1/6"), MalformedRow);
    EXPECT_EQ(to_csv(row(1, Q(3, 2), Q(4, 3), Q(1, 6))), "1,3/2,4/3,1/6");
    EXPECT_EQ(to_json(row(3, Q(1), Q(1), Q(1)))["x"], "1");
}

// ---- properties -----------------------------------------------------------

TEST(SearchProperties, SoundAndCanonical) {
    for (long a = 1; a <= 20; ++a)
        for (const auto& r : search_solutions({a, 15})) {
            EXPECT_EQ(r.value(), Q(a)) << to_csv(r);
            EXPECT_TRUE(r.x >= r.y && r.y >= r.z && r.z > Q(0)) << to_csv(r);
            EXPECT_LE(r.x.height(), 15);
            EXPECT_LE(r.y.height(), 15);
        }
}

TEST(SearchProperties, CompleteAgainstRationalRootOracle) {
    for (long a = 1; a <= 10; ++a)
        for (long h : {3L, 8L}) EXPECT_EQ(as_set(search_solutions({a, h})), oracle_search(a, h)) << a << " " << h;
}

TEST(SearchProperties, MonotoneInHeight) {
    for (long a : {3L, 6L, 13L}) {
        auto small = as_set(search_solutions({a, 6})), large = as_set(search_solutions({a, 14}));
        EXPECT_TRUE(std::includes(large.begin(), large.end(), small.begin(), small.end())) << a;
    }
}
