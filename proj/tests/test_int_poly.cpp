#include "salem/int_poly.hpp"

#include <gtest/gtest.h>

using salem::IntPolynomial;
using salem::parse_poly;

TEST(ParsePoly, CommaListIsAscending) {
  EXPECT_EQ(parse_poly("0,1"), (IntPolynomial{0, 1}));
  const auto p = parse_poly("0,6,5,3");
  ASSERT_EQ(p.degree(), 3);
  EXPECT_EQ(p.coeff(1), 6);
  EXPECT_EQ(p.coeff(2), 5);
  EXPECT_EQ(p.coeff(3), 3);
}

TEST(ParsePoly, MonomialForm) {
  const auto p = parse_poly("x^4-x^3-x^2-x+1");
  EXPECT_EQ(p, (IntPolynomial{1, -1, -1, -1, 1}));
  EXPECT_EQ(parse_poly("3*x^3 + 5x^2 + 6x"), parse_poly("0,6,5,3"));
  EXPECT_EQ(parse_poly("-x"), (IntPolynomial{0, -1}));
  EXPECT_EQ(parse_poly("x^2 - 2"), (IntPolynomial{-2, 0, 1}));
}

TEST(ParsePoly, BothSyntaxesRoundTrip) {
  for (const char* text : {"1,-1,-1,-1,1", "0,-2,-1,1", "7", "0,0,0,12"}) {
    const auto p = parse_poly(text);
    EXPECT_EQ(parse_poly(p.to_csv()), p);
    EXPECT_EQ(parse_poly(p.to_string()), p);
  }
  EXPECT_EQ(parse_poly("x^4-x^3-x^2-x+1").to_string(), "x^4-x^3-x^2-x+1");
}

TEST(ParsePoly, Rejections) {
  EXPECT_THROW(parse_poly(""), salem::ParseError);
  EXPECT_THROW(parse_poly("0,0,0"), salem::ParseError);
  EXPECT_THROW(parse_poly("1,2.5"), salem::ParseError);
  EXPECT_THROW(parse_poly("1e3,1"), salem::ParseError);
  EXPECT_THROW(parse_poly("1/2,1"), salem::ParseError);
  EXPECT_THROW(parse_poly("1,,2"), salem::ParseError);
  EXPECT_THROW(parse_poly("x^^2"), salem::ParseError);
  EXPECT_THROW(parse_poly("y^2+1"), salem::ParseError);
}

TEST(IntPolynomial, CanonicalForm) {
  IntPolynomial p{1, 2, 0, 0};
  EXPECT_EQ(p.degree(), 1);
  EXPECT_TRUE(IntPolynomial{}.is_zero());
  EXPECT_EQ(IntPolynomial{}.degree(), -1);
}

TEST(IntPolynomial, Arithmetic) {
  IntPolynomial a{1, 1}, b{-1, 1};
  EXPECT_EQ(a * b, (IntPolynomial{-1, 0, 1}));
  EXPECT_EQ(a + b, (IntPolynomial{0, 2}));
  EXPECT_EQ(a - a, IntPolynomial{});
  EXPECT_EQ((IntPolynomial{5, 3, 2}).derivative(), (IntPolynomial{3, 4}));
  EXPECT_EQ((IntPolynomial{1, 2, 3}).reflected(), (IntPolynomial{1, -2, 3}));
  EXPECT_EQ((IntPolynomial{4, 6}).content(), 2);
  EXPECT_TRUE((IntPolynomial{1, -1, -1, -1, 1}).is_palindromic());
  EXPECT_FALSE((IntPolynomial{1, -1, 1, -2, 1}).is_palindromic());
}

TEST(IntPolynomial, EvaluationAgreesAcrossTypes) {
  const IntPolynomial p{1, -1, -1, -1, 1};
  for (long x = -5; x <= 5; ++x) {
    const mpz_class exact = p.eval(mpz_class(x));
    EXPECT_EQ(mpq_class(exact), p.eval(mpq_class(x)));
    EXPECT_DOUBLE_EQ(exact.get_d(), static_cast<double>(p.eval(static_cast<long double>(x))));
  }
  EXPECT_EQ(p.eval(mpq_class(1, 2)), mpq_class(1, 16) - mpq_class(1, 8) - mpq_class(1, 4) - mpq_class(1, 2) + 1);
}

TEST(IntPolynomial, ExactDivisionAndGcd) {
  const IntPolynomial a{-1, 0, 1}, b{1, 1};
  ASSERT_TRUE(salem::divide_exact(a, b).has_value());
  EXPECT_EQ(*salem::divide_exact(a, b), (IntPolynomial{-1, 1}));
  EXPECT_FALSE(salem::divide_exact(a, IntPolynomial{1, 2}).has_value());
  EXPECT_EQ(salem::gcd(IntPolynomial{-2, 0, 2}, IntPolynomial{3, 3}), (IntPolynomial{1, 1}));
}

TEST(IntPolynomial, SquareFreeDecomposition) {
  // (x - 1)^2 (x + 2)
  const IntPolynomial p = IntPolynomial{-1, 1} * IntPolynomial{-1, 1} * IntPolynomial{2, 1};
  const auto parts = salem::square_free_decomposition(p);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0].first, (IntPolynomial{2, 1}));
  EXPECT_EQ(parts[0].second, 1);
  EXPECT_EQ(parts[1].first, (IntPolynomial{-1, 1}));
  EXPECT_EQ(parts[1].second, 2);
}
