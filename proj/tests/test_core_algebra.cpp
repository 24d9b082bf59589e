#include <gtest/gtest.h>

#include <algorithm>

#include "support.hpp"

using namespace mbtest;

namespace {

// Independent drl oracle: degree first, then the reversed exponent vector
// negated, compared lexicographically.
bool drl_greater_oracle(const Term& a, const Term& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

}  // namespace

TEST(Term, Multiply) {
  Ring r = xyz();
  EXPECT_EQ(T(r, "x^2*y") * Term(3), T(r, "x^2*y"));
  EXPECT_EQ(Term({1, 0}) * Term({0, 1}), Term({1, 1}));
  Term a = T(r, "x*y"), b = T(r, "y*z");
  std::vector<Exponent> sum(3);
  for (std::size_t i = 0; i < 3; ++i) sum[i] = a[i] + b[i];
  EXPECT_EQ(a * b, Term(sum));
  EXPECT_EQ(a * b, T(r, "x*y^2*z"));
  EXPECT_THROW(Term({1, 0}) * Term({1, 0, 0}), RingMismatch);
}

TEST(Term, DivideAndQuotient) {
  Ring r = xyz();
  EXPECT_TRUE(divides(Term(3), T(r, "x*y")));
  EXPECT_TRUE(divides(T(r, "x*y"), T(r, "x^2*y^2*z")));
  EXPECT_EQ(quotient(T(r, "x^2*y^2*z"), T(r, "x*y")), T(r, "x*y*z"));
  EXPECT_FALSE(divides(T(r, "z^2"), T(r, "x*y*z")));
  EXPECT_THROW(quotient(T(r, "x*y*z"), T(r, "z^2")), std::domain_error);
}

TEST(Term, Lcm) {
  Ring r = xyz();
  EXPECT_EQ(lcm(T(r, "x*y"), T(r, "x*y")), T(r, "x*y"));
  EXPECT_EQ(lcm(T(r, "x^2"), T(r, "x*y")), T(r, "x^2*y"));
  EXPECT_EQ(lcm(T(r, "x*y"), T(r, "z^2")), T(r, "x*y*z^2"));
}

TEST(Term, MinMaxVariable) {
  Term t{0, 0, 2};
  EXPECT_EQ(min_var(t), 2u);
  EXPECT_EQ(max_var(t), 2u);
  Term u{1, 0, 3};
  EXPECT_EQ(min_var(u), 0u);
  EXPECT_EQ(max_var(u), 2u);
  Ring r = xyz();
  EXPECT_EQ(r.name(min_var(T(r, "x*y^2*z"))), "z");
  EXPECT_THROW(min_var(Term(3)), std::domain_error);
}

TEST(Term, DrlExamples) {
  Term x0{1, 0}, x1{0, 1};
  EXPECT_EQ(cmp_drl(x0, x0), std::strong_ordering::equal);
  EXPECT_EQ(cmp_drl(x1, x0), std::strong_ordering::greater);

  auto sorted = terms_of_degree(3, 2);
  std::vector<Term> expected{{0, 0, 2}, {0, 1, 1}, {0, 2, 0}, {1, 0, 1}, {1, 1, 0}, {2, 0, 0}};
  EXPECT_EQ(sorted, expected);
  auto oracle = sorted;
  std::sort(oracle.begin(), oracle.end(), drl_greater_oracle);
  EXPECT_EQ(sorted, oracle);
}

TEST(Term, OrdersAreTotalAndMultiplicative) {
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 3;
    Term a = random_term(rng, n, std::uniform_int_distribution<int>(0, 4)(rng));
    Term b = random_term(rng, n, std::uniform_int_distribution<int>(0, 4)(rng));
    Term c = random_term(rng, n, std::uniform_int_distribution<int>(0, 4)(rng));
    for (TermOrder o : {TermOrder::DegRevLex, TermOrder::Lex}) {
      EXPECT_EQ(compare(o, a, b) == 0, a == b);
      EXPECT_EQ(compare(o, a, b) > 0, compare(o, b, a) < 0);
      if (compare(o, a, b) > 0 && compare(o, b, c) > 0) EXPECT_TRUE(compare(o, a, c) > 0);
      if (compare(o, a, b) > 0) EXPECT_TRUE(compare(o, a * c, b * c) > 0);
    }
    EXPECT_EQ(cmp_drl(a, b) > 0, drl_greater_oracle(a, b));
  }
}

TEST(Polynomial, Arithmetic) {
  Ring r = xyz();
  auto p = P(r, "x^2 - y*z");
  EXPECT_EQ(p + RationalPolynomial(), p);
  EXPECT_EQ(P(r, "x*y + y*z").times(T(r, "z")), P(r, "x*y*z + y*z^2"));
  EXPECT_EQ(p + P(r, "y*z"), P(r, "x^2"));
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ(p.scaled(Rational(1, 2)), P(r, "1/2*x^2 - 1/2*y*z"));
}

TEST(Polynomial, RingAxiomsOnRandomInputs) {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = random_homogeneous(rng, 3, 2), b = random_homogeneous(rng, 3, 2), c = random_homogeneous(rng, 3, 1);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_TRUE((a + (-a)).is_zero());
    EXPECT_EQ(a * b, b * a);
  }
}

TEST(Polynomial, StoredDescendingWithoutZeros) {
  Ring r = xyz();
  auto p = P(r, "z^2 + x^2 + 0*y^2 + x*y - x*y");
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p.leading_term(), T(r, "x^2"));
  EXPECT_EQ(p.support(), (std::vector<Term>{T(r, "x^2"), T(r, "z^2")}));
}

TEST(Polynomial, Evaluate) {
  Ring c = Ring::numbered("c", 2);
  auto p = P(c, "c1^2 - 3*c2 + 1/2");
  std::vector<Rational> pt{2, Rational(1, 3)};
  EXPECT_EQ(evaluate(p, pt), Rational(7, 2));
}

TEST(Format, ParsePrintRoundTrip) {
  Ring r = xyz();
  for (const char* s : {"x^2*y - 3/4*y*z^2 + z^3", "0", "-x", "5", "x*y*z - 2"}) {
    auto p = P(r, s);
    EXPECT_EQ(format(p, r), s);
    EXPECT_EQ(P(r, format(p, r)), p);
  }
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    auto p = random_homogeneous(rng, 3, 3) + random_homogeneous(rng, 3, 1);
    EXPECT_EQ(P(r, format(p, r)), p);
  }
}

TEST(Format, Grammar) {
  Ring r = xyz();
  EXPECT_EQ(P(r, " 2 x^2 y  -  y z "), P(r, "2*x^2*y - y*z"));
  EXPECT_EQ(P(r, "x y x"), P(r, "x^2*y"));
  EXPECT_THROW(P(r, "x + w"), ParseError);
  try {
    P(r, "x + 2*q");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 7u);
  }
}
