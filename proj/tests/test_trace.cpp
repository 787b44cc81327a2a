#include <gtest/gtest.h>

#include <algorithm>

#include "generators.hpp"
#include "tlhat/maps.hpp"
#include "tlhat/trace.hpp"

using namespace tlhat;
using tlhat::testing::Gen;

namespace {

const RingElem q = RingElem::q(), v = RingElem::v(), z = RingElem::z();

RingElem oracle_tau(int n, const Element& a);

// tau_{n+1}(b g_n c) = tau_n(b c) / v and tau_{n+1}(x) = z tau_n(x) for x in TL_{n-1}.
RingElem oracle_tau_heap(int n, const Heap& h) {
  if (n == 0) return 1;
  const auto w = h.letters();
  const auto top = std::find(w.begin(), w.end(), static_cast<Letter>(n));
  const System lower = System::finite(n - 1);
  if (top == w.end()) return z * oracle_tau(n - 1, word_product(lower, w));
  std::vector<Letter> bc(w.begin(), top);
  bc.insert(bc.end(), top + 1, w.end());
  return oracle_tau(n - 1, word_product(lower, bc)) / v;
}

RingElem oracle_tau(int n, const Element& a) {
  RingElem out;
  const Element x = convert_basis(a, Basis::g);
  for (const auto& [h, c] : x.terms()) out += c * oracle_tau_heap(n, h);
  return out;
}

}  // namespace

TEST(Jones, HandValues) {
  EXPECT_EQ(jones_tau(generator(System::finite(1), 1)), v.inverse());
  EXPECT_EQ(jones_tau(generator(System::finite(1), 1, Basis::T)), RingElem(1));
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(jones_tau(Element::one(System::finite(n))), z.pow(n)) << n;
  EXPECT_EQ(z, -(1 + q) / v);
}

TEST(Jones, MatchesRecursiveOracle) {
  for (int n = 1; n <= 4; ++n) {
    for (const Heap& h : enumerate_fc(System::finite(n), -1))
      EXPECT_EQ(jones_tau_g(n, h), oracle_tau_heap(n, h)) << n << " " << h.to_string(System::finite(n));
  }
}

TEST(Jones, TraceProperty) {
  Gen g(41);
  const System sys = System::finite(4);
  for (int i = 0; i < 50; ++i) {
    const Element a = g.element(sys, 5, 2), b = g.element(sys, 5, 2);
    EXPECT_EQ(jones_tau(a * b), jones_tau(b * a));
  }
}

TEST(AffineTrace, HandValues) {
  const System sys = System::affine_of(2);
  EXPECT_EQ(rho(3, Element::one(sys)), (1 + q) * (1 + q) / q);
  EXPECT_EQ(rho(3, generator(sys, 0)), -(1 + q) / q);
  EXPECT_EQ(rho(1, Element::one(System::affine_of(0))), RingElem(1));
}

TEST(AffineTrace, FactorsThroughE) {
  for (int n = 2; n <= 3; ++n) {
    for (const Heap& h : enumerate_fc(System::affine_of(n), 5)) {
      const Element x = Element::basis_element(System::affine_of(n), h);
      EXPECT_EQ(rho(n + 1, x), oracle_tau(n, apply_E(n, x))) << h.to_string(System::affine_of(n));
    }
  }
}

TEST(AffineTrace, MarkovAxioms) {
  const Verification v = check_affine_markov_axioms(3, 100, 5, 6, 6);
  EXPECT_TRUE(v.ok()) << v.failures.front();
}

TEST(AffineTrace, TraceProperty) {
  EXPECT_TRUE(check_trace_property(3, 100, 7).ok());
  EXPECT_TRUE(check_trace_property(4, 100, 8).ok());
}

TEST(AffineTrace, TInverse) {
  const System sys = System::affine_of(2);
  for (Letter s : sys.letters()) {
    const Element t = generator(sys, s, Basis::T);
    EXPECT_EQ(convert_basis(t * T_inverse(sys, s), Basis::g), Element::one(sys));
  }
}
