#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "generators.hpp"
#include "tlhat/coxeter.hpp"

using namespace tlhat;
using tlhat::testing::Gen;

namespace {

// Test-side oracle: a word is reduced and fully commutative iff no word in its
// commutation class contains ss, or sts with s and t adjacent.
bool commute(const System& sys, Letter s, Letter t) { return s != t && !sys.adjacent(s, t) && !sys.infinite_bond(); }

std::set<std::vector<Letter>> commutation_class(const System& sys, const std::vector<Letter>& w) {
  std::set<std::vector<Letter>> seen{w};
  std::vector<std::vector<Letter>> todo{w};
  while (!todo.empty()) {
    auto x = todo.back();
    todo.pop_back();
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
      if (!commute(sys, x[i], x[i + 1])) continue;
      auto y = x;
      std::swap(y[i], y[i + 1]);
      if (seen.insert(y).second) todo.push_back(y);
    }
  }
  return seen;
}

bool oracle_fc(const System& sys, const std::vector<Letter>& w) {
  for (const auto& x : commutation_class(sys, w)) {
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
      if (x[i] == x[i + 1]) return false;
      if (i + 2 < x.size() && x[i] == x[i + 2] && sys.adjacent(x[i], x[i + 1]) && !sys.infinite_bond()) return false;
    }
  }
  return true;
}

// Number of FC elements of each length, by brute force over all words.
std::vector<std::size_t> oracle_counts(const System& sys, int max_len) {
  std::vector<std::size_t> counts;
  const auto letters = sys.letters();
  for (int len = 0; len <= max_len; ++len) {
    std::set<std::vector<Letter>> reps;
    std::vector<Letter> w(len, letters[0]);
    std::vector<std::size_t> idx(len, 0);
    while (true) {
      for (int i = 0; i < len; ++i) w[i] = letters[idx[i]];
      if (oracle_fc(sys, w)) reps.insert(*commutation_class(sys, w).begin());
      int p = len - 1;
      while (p >= 0 && ++idx[p] == letters.size()) idx[p--] = 0;
      if (p < 0) break;
    }
    counts.push_back(reps.size());
  }
  return counts;
}

std::vector<std::size_t> library_counts(const System& sys, int max_len) {
  std::vector<std::size_t> counts(max_len + 1, 0);
  for (const Heap& h : enumerate_fc(sys, max_len)) ++counts[h.length()];
  return counts;
}

}  // namespace

TEST(Coxeter, CatalanCounts) {
  // |FC(A_n)| = Catalan(n+1) = binomial(2n+2, n+1)/(n+2).
  for (int n = 1; n <= 6; ++n) {
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), 2 * n + 2, n + 1);
    EXPECT_EQ(mpz_class(static_cast<unsigned long>(enumerate_fc(System::finite(n), -1).size())), binom / (n + 2)) << n;
  }
}

TEST(Coxeter, FiniteCountsMatchBruteForce) {
  for (int n = 1; n <= 3; ++n) EXPECT_EQ(library_counts(System::finite(n), 6), oracle_counts(System::finite(n), 6)) << n;
}

TEST(Coxeter, AffineCountsMatchBruteForce) {
  EXPECT_EQ(library_counts(System::affine_of(1), 7), oracle_counts(System::affine_of(1), 7));
  EXPECT_EQ(library_counts(System::affine_of(2), 6), oracle_counts(System::affine_of(2), 6));
  EXPECT_EQ(library_counts(System::affine_of(3), 5), oracle_counts(System::affine_of(3), 5));
}

TEST(Coxeter, CanonicalizeRejectsNonFC) {
  const System sys = System::affine_of(2);
  const auto quad = canonicalize(sys, parse_word(sys, "s1 s2 s2"));
  ASSERT_TRUE(std::holds_alternative<NotFC>(quad));
  EXPECT_EQ(std::get<NotFC>(quad).kind, NotFC::Kind::Quadratic);
  const auto braid = canonicalize(sys, parse_word(sys, "s1 a s1"));
  ASSERT_TRUE(std::holds_alternative<NotFC>(braid));
  EXPECT_EQ(std::get<NotFC>(braid).kind, NotFC::Kind::Braid);
  EXPECT_THROW(heap_of(sys, parse_word(sys, "a a")), UsageError);
  EXPECT_THROW(parse_word(sys, "s3"), UsageError);
}

TEST(Coxeter, AffineLetterName) {
  for (int n = 1; n <= 4; ++n) {
    const System sys = System::affine_of(n);
    EXPECT_EQ(sys.letter_name(0), "a");
    EXPECT_EQ(sys.parse_letter("a"), 0);
  }
}

TEST(Coxeter, InfiniteBondInRankOne) {
  const System sys = System::affine_of(1);
  // s1 a s1 is reduced and FC when the bond is infinite.
  EXPECT_EQ(heap_of(sys, parse_word(sys, "s1 a s1")).length(), 3u);
}

TEST(CoxeterProperty, HeapIsCommutationInvariant) {
  Gen g(11);
  for (const System sys : {System::finite(4), System::affine_of(3)}) {
    for (const Heap& h : enumerate_fc(sys, 6)) {
      auto w = h.letters();
      for (int k = 0; k < 5; ++k) {
        std::shuffle(w.begin(), w.end(), g.engine());
        const auto r = canonicalize(sys, w);
        // Only words in the commutation class of h give h.
        const bool same_class = commutation_class(sys, h.letters()).count(w) != 0;
        EXPECT_EQ(std::holds_alternative<Heap>(r) && std::get<Heap>(r) == h, same_class);
      }
    }
  }
}

TEST(CoxeterProperty, CanonicalizeAgreesWithOracle) {
  Gen g(5);
  for (const System sys : {System::finite(3), System::affine_of(2), System::affine_of(3)}) {
    for (int i = 0; i < 400; ++i) {
      const auto w = g.word(sys, g.integer(0, 7));
      EXPECT_EQ(std::holds_alternative<Heap>(canonicalize(sys, w)), oracle_fc(sys, w)) << word_to_string(sys, w);
    }
  }
}

TEST(CoxeterProperty, DescentsAndSymmetries) {
  const System sys = System::affine_of(3);
  for (const Heap& h : enumerate_fc(sys, 6)) {
    const auto w = h.letters();
    for (Letter s : right_descents(sys, h)) {
      auto x = w;
      x.push_back(s);
      EXPECT_FALSE(oracle_fc(sys, x));
    }
    for (Letter s : left_descents(sys, h)) {
      auto x = w;
      x.insert(x.begin(), s);
      EXPECT_FALSE(oracle_fc(sys, x));
    }
    auto rev = w;
    std::reverse(rev.begin(), rev.end());
    EXPECT_EQ(reverse(sys, h), heap_of(sys, rev));
    EXPECT_EQ(rotate_psi(sys, rotate_psi(sys, h, 1), -1), h);
    EXPECT_EQ(rotate_psi(sys, h, sys.rank + 1), h);
  }
}
