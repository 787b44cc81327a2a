#include <gtest/gtest.h>

#include "generators.hpp"
#include "tlhat/ring.hpp"

using namespace tlhat;
using tlhat::testing::Gen;

namespace {

const mpq_class kPoints[] = {mpq_class(2), mpq_class(3, 7), mpq_class(-5, 2), mpq_class(11)};

// Evaluation at points where every denominator involved is nonzero.
bool agrees_at_points(const RingElem& a, const std::function<mpq_class(const mpq_class&)>& f) {
  for (const auto& p : kPoints) {
    try {
      if (a.eval(p) != f(p)) return false;
    } catch (const DivisionByZero&) {
    }
  }
  return true;
}

}  // namespace

TEST(Ring, NamedConstants) {
  const RingElem v = RingElem::v(), q = RingElem::q();
  EXPECT_EQ(q, v * v);
  EXPECT_EQ(RingElem::z(), -(1 + q) / v);
  EXPECT_EQ(RingElem::delta(), q / ((1 + q) * (1 + q)));
  EXPECT_EQ(RingElem::z().pow(2) * RingElem::delta(), RingElem(1));
  EXPECT_EQ(RingElem::constant("q"), q);
}

TEST(Ring, CanonicalForm) {
  const RingElem v = RingElem::v();
  // (v^2 - 1)/(v - 1) reduces to v + 1.
  EXPECT_EQ((v * v - 1) / (v - 1), v + 1);
  EXPECT_EQ(RingElem(Poly(std::vector<mpz_class>{2, 2}), Poly(std::vector<mpz_class>{4})), (1 + v) / 2);
  // Denominator sign is normalized.
  EXPECT_EQ(RingElem(Poly(1), Poly(-1)), RingElem(-1));
  EXPECT_TRUE(RingElem(Poly(1), Poly(std::vector<mpz_class>{0, -3})).den().lead() > 0);
}

TEST(Ring, Printing) {
  const RingElem v = RingElem::v(), q = RingElem::q();
  EXPECT_EQ((2 * q).to_string(), "2*v^2");
  EXPECT_EQ((q - 1).to_string(), "-1+v^2");
  EXPECT_EQ(RingElem::z().to_string(), "(-1-v^2)/(v)");
  EXPECT_EQ(RingElem(0).to_string(), "0");
  EXPECT_EQ(v.to_string(), "v");
}

TEST(Ring, DivisionByZeroThrows) {
  EXPECT_THROW(RingElem(1) / RingElem(0), DivisionByZero);
  EXPECT_THROW(RingElem(0).inverse(), DivisionByZero);
  EXPECT_FALSE(RingElem(3).checked_div(RingElem(0)).has_value());
}

TEST(Ring, LargeCoefficientsStayExact) {
  RingElem x = 1 + RingElem::v();
  const RingElem p = x.pow(80);
  EXPECT_EQ(p / x.pow(79), x);
  EXPECT_EQ(p.num()[40], mpz_class("107507208733336176461620"));
}

TEST(RingProperty, FieldAxioms) {
  Gen g(20261016);
  for (int i = 0; i < 300; ++i) {
    const RingElem a = g.scalar(), b = g.scalar(), c = g.scalar();
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, RingElem(0));
    if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), RingElem(1));
  }
}

TEST(RingProperty, CanonicalFormIsUnique) {
  Gen g(7);
  for (int i = 0; i < 200; ++i) {
    const RingElem a = g.scalar(), k = g.nonzero_scalar();
    // (a k)/k must land on the same representative as a.
    const RingElem b = (a * k) / k;
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.hash(), b.hash());
    EXPECT_EQ(Poly::gcd(a.num(), a.den()).degree(), 0);
  }
}

TEST(RingProperty, MatchesEvaluationOracle) {
  Gen g(99);
  for (int i = 0; i < 200; ++i) {
    const RingElem a = g.scalar(), b = g.scalar();
    EXPECT_TRUE(agrees_at_points(a * b, [&](const mpq_class& p) { return mpq_class(a.eval(p) * b.eval(p)); }));
    EXPECT_TRUE(agrees_at_points(a + b, [&](const mpq_class& p) { return mpq_class(a.eval(p) + b.eval(p)); }));
  }
}

TEST(RingProperty, PowerLaws) {
  Gen g(3);
  for (int i = 0; i < 50; ++i) {
    const RingElem a = g.nonzero_scalar();
    const int m = g.integer(-4, 4), n = g.integer(-4, 4);
    EXPECT_EQ(a.pow(m) * a.pow(n), a.pow(m + n));
  }
}
