#include <gtest/gtest.h>

#include "generators.hpp"
#include "tlhat/algebra.hpp"
#include "tlhat/verify.hpp"

using namespace tlhat;
using tlhat::testing::Gen;

namespace {

const RingElem q = RingElem::q();

Element g(const System& sys, const std::string& w) { return word_product(sys, parse_word(sys, w)); }
Element basis(const System& sys, const std::string& w) { return Element::basis_element(sys, heap_of(sys, parse_word(sys, w))); }

}  // namespace

TEST(Algebra, QuadraticRelation) {
  const System sys = System::affine_of(2);
  for (Letter s : sys.letters()) {
    const Element gs = generator(sys, s);
    EXPECT_EQ(gs * gs, gs * (q - 1) + Element::one(sys) * q);
  }
}

TEST(Algebra, FiveTermExpansion) {
  const System sys = System::affine_of(2);
  // g_s1 g_s2 g_s1 = -(1 + g_s1 + g_s2 + g_s1s2 + g_s2s1)
  Element expected = Element::one(sys) + basis(sys, "s1") + basis(sys, "s2") + basis(sys, "s1 s2") + basis(sys, "s2 s1");
  EXPECT_EQ(g(sys, "s1 s2 s1"), expected * RingElem(-1));
  // The same relation around the affine node.
  Element around_a = Element::one(sys) + basis(sys, "s1") + basis(sys, "a") + basis(sys, "s1 a") + basis(sys, "a s1");
  EXPECT_EQ(g(sys, "s1 a s1"), around_a * RingElem(-1));
}

TEST(Algebra, RelationsVanish) {
  for (int n = 2; n <= 4; ++n) {
    const Verification a = check_relations(System::affine_of(n));
    EXPECT_TRUE(a.ok()) << a.failures.front();
    const Verification f = check_relations(System::finite(n));
    EXPECT_TRUE(f.ok()) << f.failures.front();
  }
}

TEST(Algebra, GeneratorInverse) {
  const System sys = System::affine_of(3);
  for (Letter s : sys.letters()) {
    const Element expected = (generator(sys, s) - Element::one(sys) * (q - 1)) * q.inverse();
    EXPECT_EQ(generator_inverse(sys, s), expected);
    EXPECT_EQ(generator(sys, s) * generator_inverse(sys, s), Element::one(sys));
  }
}

TEST(Algebra, InverseOfBasisElement) {
  const System sys = System::affine_of(2);
  for (const Heap& h : enumerate_fc(sys, 5)) {
    const Element x = Element::basis_element(sys, h);
    EXPECT_EQ(x * inverse_of_basis_element(x), Element::one(sys)) << h.to_string(sys);
  }
}

TEST(Algebra, FGenerator) {
  const System sys = System::finite(3);
  for (Letter s : sys.letters()) {
    const Element expected = (Element::one(sys) + generator(sys, s)) * (1 + q).inverse();
    EXPECT_EQ(convert_basis(generator(sys, s, Basis::f), Basis::g), expected);
  }
}

TEST(Algebra, TBasisScaling) {
  const System sys = System::affine_of(2);
  const Element t = convert_basis(basis(sys, "s2 s1 a"), Basis::T);
  ASSERT_EQ(t.terms().size(), 1u);
  EXPECT_EQ(t.terms().begin()->second, RingElem::v().pow(-3));
}

TEST(Algebra, BasisMismatchIsRejected) {
  const System sys = System::finite(2);
  EXPECT_THROW(Element::one(sys) + Element::one(sys, Basis::T), UsageError);
  EXPECT_THROW(Element::one(sys) + Element::one(System::finite(3)), UsageError);
}

TEST(AlgebraProperty, Associativity) {
  for (const System sys : {System::affine_of(2), System::affine_of(3), System::finite(4)}) {
    const Verification v = check_associativity(sys, 60, 5, 42);
    EXPECT_TRUE(v.ok()) << v.failures.front();
  }
  Gen gen(17);
  const System sys = System::affine_of(2);
  for (int i = 0; i < 30; ++i) {
    const Element a = gen.element(sys, 4, 2), b = gen.element(sys, 4, 2), c = gen.element(sys, 4, 2);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
  }
}

TEST(AlgebraProperty, WordProductMatchesGenerators) {
  Gen gen(23);
  const System sys = System::affine_of(3);
  for (int i = 0; i < 100; ++i) {
    const auto w = gen.word(sys, gen.integer(0, 6));
    Element direct = Element::one(sys);
    for (Letter s : w) direct = direct * generator(sys, s);
    EXPECT_EQ(word_product(sys, w), direct) << word_to_string(sys, w);
  }
}

TEST(AlgebraProperty, BasisConversionRoundTrip) {
  Gen gen(29);
  for (const System sys : {System::affine_of(2), System::finite(3)}) {
    for (int i = 0; i < 40; ++i) {
      const Element a = gen.element(sys, 5, 3);
      EXPECT_EQ(convert_basis(convert_basis(a, Basis::T), Basis::g), a);
      EXPECT_EQ(convert_basis(convert_basis(a, Basis::f), Basis::g), a);
    }
  }
}

TEST(AlgebraProperty, FIndependentOfLinearExtension) {
  EXPECT_TRUE(check_f_independence(System::affine_of(2), 6, 4, 3).ok());
  EXPECT_TRUE(check_f_independence(System::affine_of(3), 5, 4, 4).ok());
  EXPECT_TRUE(check_f_independence(System::finite(4), -1, 4, 5).ok());
}

TEST(AlgebraProperty, FBasisRelations) {
  const System sys = System::affine_of(3);
  const RingElem delta = RingElem::delta();
  for (Letter s : sys.letters()) {
    const Element fs = generator(sys, s, Basis::f);
    EXPECT_EQ(fs * fs, fs);
    for (Letter t : sys.letters()) {
      if (!sys.adjacent(s, t)) continue;
      const Element ft = generator(sys, t, Basis::f);
      EXPECT_EQ(fs * ft * fs, fs * delta);
    }
  }
}
