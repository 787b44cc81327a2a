#include <gtest/gtest.h>

#include <map>

#include "generators.hpp"
#include "tlhat/diagram.hpp"
#include "tlhat/verify.hpp"

using namespace tlhat;
using tlhat::testing::Gen;

namespace {

// Test-side matchings: partner[p] over top points 0..N-1 and bottom points N..2N-1.
using Matching = std::vector<int>;

Matching cup_cap(int N, int i) {
  Matching m(2 * N);
  for (int j = 0; j < N; ++j) m[j] = N + j, m[N + j] = j;
  m[i - 1] = i, m[i] = i - 1, m[N + i - 1] = N + i, m[N + i] = N + i - 1;
  return m;
}

// a on top of b; returns the product matching and the number of closed loops.
std::pair<Matching, int> stack(const Matching& a, const Matching& b) {
  const int N = static_cast<int>(a.size()) / 2;
  Matching out(2 * N, -1);
  std::vector<bool> middle_seen(N, false);
  // Result point r: top points are a's tops, bottom points are b's bottoms.
  auto walk = [&](int r) {
    bool in_a = r < N;
    int p = r;  // current point in the current diagram's numbering
    while (true) {
      const int x = in_a ? a[p] : b[p];
      if (in_a && x < N) return x;
      if (!in_a && x >= N) return x;
      // Cross the middle row.
      const int m = in_a ? x - N : x;
      middle_seen[m] = true;
      in_a = !in_a;
      p = in_a ? N + m : m;
    }
  };
  for (int r = 0; r < 2 * N; ++r) {
    if (out[r] != -1) continue;
    const int s = walk(r);
    out[r] = s, out[s] = r;
  }
  int loops = 0;
  for (int m = 0; m < N; ++m) {
    if (middle_seen[m]) continue;
    ++loops;
    int p = m;  // b top point m
    do {
      middle_seen[p] = true;
      const int up = a[N + p] - N;  // through a, back to the middle row
      middle_seen[up] = true;
      p = b[up];
    } while (p != m);
  }
  return {out, loops};
}

std::pair<Matching, int> word_matching(int N, const std::vector<Letter>& w) {
  Matching m(2 * N);
  for (int j = 0; j < N; ++j) m[j] = N + j, m[N + j] = j;
  int loops = 0;
  for (Letter s : w) {
    auto [next, l] = stack(m, cup_cap(N, s));
    m = next;
    loops += l;
  }
  return {m, loops};
}

}  // namespace

TEST(DiagramOracle, LibraryProductMatchesTestComposer) {
  Gen g(31);
  for (int N = 2; N <= 6; ++N) {
    const auto all = all_planar_diagrams(N);
    for (int i = 0; i < 200; ++i) {
      const Diagram& a = all[g.integer(0, static_cast<int>(all.size()) - 1)];
      const Diagram& b = all[g.integer(0, static_cast<int>(all.size()) - 1)];
      Matching ma(2 * N), mb(2 * N);
      for (int p = 0; p < 2 * N; ++p) ma[p] = a.partner(p), mb[p] = b.partner(p);
      const auto [m, loops] = stack(ma, mb);
      const DiagramProduct lib = diagram_multiply(a, b);
      EXPECT_EQ(lib.loops, loops);
      for (int p = 0; p < 2 * N; ++p) EXPECT_EQ(lib.diagram.partner(p), m[p]);
    }
  }
}

TEST(DiagramOracle, PlanarCountsAreCatalan) {
  const std::size_t catalan[] = {1, 1, 2, 5, 14, 42, 132, 429};
  for (int N = 1; N <= 7; ++N) {
    const auto all = all_planar_diagrams(N);
    EXPECT_EQ(all.size(), catalan[N]);
    for (const auto& d : all) EXPECT_TRUE(d.valid() && d.is_planar());
  }
}

TEST(DiagramOracle, TemperleyLiebRelations) {
  for (int N = 3; N <= 6; ++N) {
    for (int i = 1; i < N; ++i) {
      const auto [sq, loops] = stack(cup_cap(N, i), cup_cap(N, i));
      EXPECT_EQ(sq, cup_cap(N, i));
      EXPECT_EQ(loops, 1);
      if (i + 1 < N) {
        const auto [x, l1] = stack(cup_cap(N, i), cup_cap(N, i + 1));
        const auto [y, l2] = stack(x, cup_cap(N, i));
        EXPECT_EQ(y, cup_cap(N, i));
        EXPECT_EQ(l1 + l2, 0);
      }
    }
  }
}

// f_u f_w against e_u e_w = z^loops e_x with f_w = z^{-l(w)} e_w, for every pair of heaps of TL_n.
TEST(DiagramOracle, FBasisStructureConstants) {
  const RingElem z = RingElem::z();
  for (int n = 1; n <= 4; ++n) {
    const System sys = System::finite(n);
    const int N = n + 1;
    const auto heaps = enumerate_fc(sys, -1);
    std::map<Matching, Heap> heap_of_matching;
    for (const Heap& h : heaps) heap_of_matching.emplace(word_matching(N, h.letters()).first, h);
    ASSERT_EQ(heap_of_matching.size(), heaps.size());
    for (const Heap& u : heaps) {
      const Element fu = Element::basis_element(sys, u, Basis::f);
      for (const Heap& w : heaps) {
        const auto [m, loops] = stack(word_matching(N, u.letters()).first, word_matching(N, w.letters()).first);
        const Heap& x = heap_of_matching.at(m);
        const long e = loops + static_cast<long>(x.length()) - static_cast<long>(u.length()) - static_cast<long>(w.length());
        const Element expected = Element::basis_element(sys, x, Basis::f) * z.pow(e);
        EXPECT_EQ(convert_basis(fu * Element::basis_element(sys, w, Basis::f), Basis::f), expected)
            << u.to_string(sys) << " * " << w.to_string(sys);
      }
    }
  }
}

TEST(DiagramOracle, LibraryStructureConstantCheck) {
  for (int n = 1; n <= 4; ++n) EXPECT_TRUE(check_structure_constants(n).ok()) << n;
}
