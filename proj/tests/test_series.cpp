#include <gtest/gtest.h>

#include "support.hpp"

using namespace upho;

namespace {

IntSeries s(std::initializer_list<long long> c) { return IntSeries(c); }

// denominator * series, truncated, must equal the numerator.
void expect_convolution_identity(const RationalFunction& f, std::size_t order) {
  const auto c = expand_rational(f, order);
  for (std::size_t k = 0; k <= order; ++k) {
    BigInt acc = 0;
    for (std::size_t j = 0; j <= k; ++j) acc += f.denominator().coeff(j) * c[k - j];
    EXPECT_EQ(acc, f.numerator().coeff(k)) << f.to_string() << " at " << k;
  }
}

}  // namespace

TEST(Series, Geometric) { EXPECT_EQ(expand_rational(parse_rational("1/(1-2x)"), 4), s({1, 2, 4, 8, 16})); }

TEST(Series, GridForm) {
  EXPECT_EQ(expand_rational(parse_rational("(1+x)(1+2x)/(1-x)"), 6), s({1, 4, 6, 6, 6, 6, 6}));
}

TEST(Series, PlanarForm) {
  EXPECT_EQ(expand_rational(parse_rational("1/(1-3x+x^2+x^3)"), 4), s({1, 3, 8, 20, 49}));
}

TEST(Series, Theorem12Form) {
  EXPECT_EQ(expand_rational(parse_rational("(1+x)/((1-2x)(1-3x))"), 5), s({1, 6, 24, 84, 276, 876}));
  EXPECT_EQ(expand_rational(product_form({1}, {2, 3}), 5), s({1, 6, 24, 84, 276, 876}));
}

TEST(Series, ConvolutionIdentity) {
  for (const char* e : {"1/(1-2x)", "(1+x)(1+2x)/(1-x)", "1/(1-3x+x^2+x^3)", "(1+3x)/((1-x)(1-2x))",
                        "(1+x)^3/(1-x)^2", "(2-x)/(1-5x+6x^2)", "1/(1-x)^-2"})
    expect_convolution_identity(parse_rational(e), 12);
}

TEST(Series, BigCoefficients) {
  auto c = expand_rational(parse_rational("1/(1-10x)"), 40);
  EXPECT_EQ(c[40].str(), "1" + std::string(40, '0'));
}

TEST(Series, DenominatorNormalization) {
  RationalFunction f({1}, {-1, 2});
  EXPECT_EQ(f.denominator(), (IntPolynomial{1, -2}));
  EXPECT_EQ(f.numerator(), (IntPolynomial{-1}));
  EXPECT_THROW(RationalFunction({1}, {2, 1}), Error);
  try {
    RationalFunction({1}, {3});
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonUnitConstantTerm);
  }
}

TEST(Series, Rgf) {
  EXPECT_EQ(rgf(chain(6)), s({1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(rgf(monoid_poset(stern_presentation(), 5)), s({1, 3, 7, 15, 31}));
  EXPECT_EQ(rgf(product(chain(4), chain(4), 4)), s({1, 2, 3, 4}));
}

TEST(Series, Match) {
  EXPECT_TRUE(match_rational(rgf(grid_construction({{1, 2}, 6})), parse_rational("(1+x)(1+2x)/(1-x)")));
  EXPECT_TRUE(match_rational(s({1, 2, 4, 8}), parse_rational("1/(1-2x)")));
  EXPECT_FALSE(match_rational(s({1, 3, 7, 15}), parse_rational("1/(1-2x)")));
}

TEST(Series, RoundTrip) {
  for (const char* e : {"1/(1-2x)", "(1+x)/(1-2x)", "(1+x)(1+2x)(1+5x)/((1-x)(1-3x))"}) {
    auto f = parse_rational(e);
    EXPECT_TRUE(match_rational(expand_rational(f, 15), f));
  }
}

TEST(Series, Parser) {
  auto f = parse_rational(" ( 1 + x ) ( 1 + 2 x ) / ( 1 - x ) ");
  EXPECT_EQ(f.numerator(), (IntPolynomial{1, 3, 2}));
  EXPECT_EQ(f.denominator(), (IntPolynomial{1, -1}));
  auto g = parse_rational("1 - 3t + t^2 + t^3");
  EXPECT_EQ(g.numerator(), (IntPolynomial{1, -3, 1, 1}));
  EXPECT_EQ(g.denominator(), (IntPolynomial{1}));
  auto h = parse_rational("(1-2x)^-2");
  EXPECT_EQ(h.denominator(), (IntPolynomial{1, -4, 4}));
  auto k = parse_rational("(1+x)*(1-x)");
  EXPECT_EQ(k.numerator(), (IntPolynomial{1, 0, -1}));
  for (const char* bad : {"", "(1+x", "1/(1-x))", "1+y", "1/0", "x/"}) {
    try {
      parse_rational(bad);
      ADD_FAILURE() << "accepted " << bad;
    } catch (const Error& e) {
      EXPECT_TRUE(e.code() == ErrorCode::ParseError || e.code() == ErrorCode::NonUnitConstantTerm) << bad;
    }
  }
}

TEST(Series, PolynomialArithmetic) {
  IntPolynomial a{1, 1}, b{1, -1};
  EXPECT_EQ(a * b, (IntPolynomial{1, 0, -1}));
  EXPECT_EQ(a + b, (IntPolynomial{2}));
  EXPECT_EQ((a + -a).degree(), -1);
  EXPECT_EQ((IntPolynomial{1, -3, 0, 1}).to_string(), "1 - 3x + x^3");
  EXPECT_EQ(s({1, 1, 1}) * s({1, 2, 4, 8}), s({1, 3, 7}));
}
