#include <gtest/gtest.h>

#include "generators.hpp"
#include "tlhat/maps.hpp"
#include "tlhat/verify.hpp"

using namespace tlhat;
using tlhat::testing::Gen;

TEST(Maps, FOnGenerators) {
  for (int n = 2; n <= 4; ++n) {
    const System small = System::affine_of(n - 1), big = System::affine_of(n);
    for (Letter s = 1; s < n; ++s) EXPECT_EQ(apply_F(n, generator(small, s)), generator(big, s));
    // t_{a_n} -> g_{s_n} g_{a_{n+1}} g_{s_n}^{-1}
    const Element expected = generator(big, n) * generator(big, 0) * generator_inverse(big, n);
    EXPECT_EQ(apply_F(n, generator(small, 0)), expected) << n;
  }
}

TEST(Maps, EOnGenerators) {
  for (int n = 2; n <= 4; ++n) {
    const System big = System::affine_of(n), fin = System::finite(n);
    for (Letter s = 1; s <= n; ++s) EXPECT_EQ(apply_E(n, generator(big, s)), generator(fin, s));
    // g_a -> g_1 ... g_{n-1} g_n g_{n-1}^{-1} ... g_1^{-1}
    Element expected = Element::one(fin);
    for (Letter s = 1; s <= n; ++s) expected = expected * generator(fin, s);
    for (Letter s = n - 1; s >= 1; --s) expected = expected * generator_inverse(fin, s);
    EXPECT_EQ(apply_E(n, generator(big, 0)), expected) << n;
  }
}

TEST(Maps, CommutingDiagram) {
  for (int n = 2; n <= 4; ++n) {
    const Verification v = check_commuting_diagram(n, 50, 100 + n);
    EXPECT_TRUE(v.ok()) << v.failures.front();
    EXPECT_TRUE(check_E_incl(n).ok()) << n;
  }
}

TEST(MapsProperty, Homomorphisms) {
  Gen g(43);
  for (int n = 2; n <= 3; ++n) {
    const System small = System::affine_of(n - 1), big = System::affine_of(n);
    for (int i = 0; i < 25; ++i) {
      const Element x = g.element(small, 4, 2), y = g.element(small, 4, 2);
      EXPECT_EQ(apply_F(n, x * y), apply_F(n, x) * apply_F(n, y));
      const Element a = g.element(big, 4, 2), b = g.element(big, 4, 2);
      EXPECT_EQ(apply_E(n, a * b), apply_E(n, a) * apply_E(n, b));
      EXPECT_EQ(apply_psi(a * b, 1), apply_psi(a, 1) * apply_psi(b, 1));
      EXPECT_EQ(apply_psi(apply_psi(a, 1), -1), a);
      EXPECT_EQ(apply_psi(a, n + 1), a);
    }
  }
}

TEST(MapsProperty, InclusionIsHomomorphism) {
  Gen g(47);
  const System fin = System::finite(3);
  for (int i = 0; i < 30; ++i) {
    const Element x = g.element(fin, 5, 2), y = g.element(fin, 5, 2);
    EXPECT_EQ(incl(x * y), incl(x) * incl(y));
    EXPECT_EQ(apply_E(3, incl(x)), x);
  }
}

TEST(MapsProperty, ConjugationByCoxeterElement) {
  Gen g(53);
  for (int n = 2; n <= 3; ++n) {
    for (int i = 0; i < 8; ++i) {
      const Element x = g.element(System::affine_of(n - 1), 4, 2);
      for (int d = 1; d <= n + 1; ++d) {
        const Verification v = check_conjugation_convention(n, x, d);
        EXPECT_TRUE(v.ok()) << v.failures.front();
      }
    }
  }
}
