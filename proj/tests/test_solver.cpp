#include <gtest/gtest.h>

#include "tlhat/maps.hpp"
#include "tlhat/solver.hpp"
#include "tlhat/trace.hpp"

using namespace tlhat;

TEST(Solver, MarkovElementsSpanRankThree) {
  const TraceRelationSolver s(3, 6);
  const TraceRelationReport r = s.report();
  EXPECT_TRUE(r.spanned());
  EXPECT_TRUE(r.unspanned.empty());
  EXPECT_LE(r.commutator_rank, r.total_rank);
  EXPECT_LE(r.total_rank, r.ambient);
  EXPECT_GT(r.markov_count, 0u);
}

TEST(Solver, ExpressionsAgreeWithRho) {
  const TraceRelationSolver s(3, 5);
  const System sys = System::affine_of(2);
  for (const Heap& w : enumerate_fc(sys, 5)) {
    const auto terms = s.express(w);
    ASSERT_TRUE(terms.has_value()) << w.to_string(sys);
    RingElem val;
    for (const auto& t : *terms) val += t.coeff * rho(3, realize(3, t.element));
    EXPECT_EQ(val, rho_g(3, w)) << w.to_string(sys);
  }
}

TEST(Solver, CommutatorsLieInTheSpan) {
  const TraceRelationSolver s(3, 4);
  const System sys = System::affine_of(2);
  const Element x = word_product(sys, {1, 0}), y = word_product(sys, {2});
  EXPECT_TRUE(s.in_commutator_span(x * y - y * x));
  EXPECT_FALSE(s.in_commutator_span(Element::one(sys)));
}

TEST(Solver, RankFourEvidence) {
  EXPECT_TRUE(TraceRelationSolver(4, 3).report().spanned());
}
