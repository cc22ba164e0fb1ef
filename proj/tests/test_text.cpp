#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"
#include "xyzfam/exact/text.hpp"

using namespace xyzfam;

namespace {
namespace tst = xyzfam::testing;
}

TEST(Render, Polynomials) {
    EXPECT_EQ(to_string(parse_polynomial("2*a^2*t^8+10*a*s^4*t^4-s^8")), "2*a^2*t^8+10*a*s^4*t^4-s^8");
    EXPECT_EQ(to_string(parse_polynomial("-s^8+10*a*s^4*t^4+2*a^2*t^8")), "2*a^2*t^8+10*a*s^4*t^4-s^8");
    EXPECT_EQ(to_string(MultiPolynomial()), "0");
    EXPECT_EQ(to_string(parse_polynomial("1/2*a-3")), "1/2*a-3");
}

TEST(Render, RationalFunctions) {
    auto z = parse_rational_function("(2*a^2*t^8+10*a*s^4*t^4-s^8)/(s^3*t*(4*a*t^4+s^4))");
    EXPECT_EQ(to_string(z), "(2*a^2*t^8+10*a*s^4*t^4-s^8)/(4*a*s^3*t^5+s^7*t)");
    EXPECT_EQ(to_string(parse_rational_function("(a^2-1)/(a-1)")), "a+1");
    EXPECT_EQ(to_string(parse_rational_function("-6/4")), "-3/2");
    EXPECT_EQ(to_string(parse_rational_function("s^-2")), "(1)/(s^2)");
}

TEST(Parse, Grammar) {
    EXPECT_EQ(parse_rational_function("  ( a + 1 ) ^ 2 "), parse_rational_function("a^2+2*a+1"));
    EXPECT_EQ(parse_rational_function("-(-a)"), parse_rational_function("a"));
    EXPECT_EQ(parse_rational_function("a/2/2"), parse_rational_function("a/4"));
    EXPECT_EQ(parse_rational_value("-98/39"), Rational(-98, 39));
}

TEST(Parse, Errors) {
    for (const char* bad : {"", "a+", "(a", "a)", "x", "a^b", "a^", "2**a", "a^123456"})
        EXPECT_THROW(parse_rational_function(bad), ParseError) << bad;
    EXPECT_THROW(parse_rational_function("1/(a-a)"), DivisionByZero);
    EXPECT_THROW(parse_polynomial("1/a"), ParseError);
    EXPECT_THROW(parse_rational_value("a"), ParseError);
}

TEST(Parse, Bindings) {
    auto b = parse_bindings("a=1, s=-1/2,t=3");
    EXPECT_EQ(b.at("a"), Rational(1));
    EXPECT_EQ(b.at("s"), Rational(-1, 2));
    EXPECT_EQ(b.at("t"), Rational(3));
    EXPECT_TRUE(parse_bindings("").empty());
    EXPECT_THROW(parse_bindings("q=1"), ParseError);
    EXPECT_THROW(parse_bindings("a"), ParseError);
    EXPECT_THROW(parse_bindings("a=s"), ParseError);
}

TEST(TextProperties, RoundTrip) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        RationalFunction f(tst::random_poly(rng, 4, 3), tst::random_nonzero_poly(rng, 3, 3));
        EXPECT_EQ(parse_rational_function(to_string(f)), f) << to_string(f);
    }
}
