#pragma once

// Linear algebra on trace relations in TL-hat_{n1}: inside the span W of heaps
// of length <= L + 2, the commutators [g_s, g_y] with l(y) <= L + 1 and the
// Markov elements lying in W. A heap of length <= L is "spanned" when it is a
// commutator combination plus Markov elements, so every trace is fixed on it
// by its values on Markov elements.

#include <memory>

#include "tlhat/markov.hpp"

namespace tlhat {

struct TraceRelationReport {
  int n1 = 3;
  int L = 0;
  std::size_t ambient = 0;
  std::size_t commutator_rank = 0;
  std::size_t total_rank = 0;
  std::size_t markov_count = 0;
  std::vector<Heap> unspanned;

  bool spanned() const { return unspanned.empty(); }
};

class TraceRelationSolver {
 public:
  TraceRelationSolver(int n1, int L);
  ~TraceRelationSolver();
  TraceRelationSolver(TraceRelationSolver&&) noexcept;
  TraceRelationSolver& operator=(TraceRelationSolver&&) noexcept;

  const TraceRelationReport& report() const;
  const std::vector<MarkovElement>& markov() const;

  /// Markov terms with g_w - sum coeff M in the commutator span; nullopt if
  /// w is outside W or not spanned.
  std::optional<std::vector<MarkovTerm>> express(const Heap& w) const;
  /// True if x lies in W and in the span of the commutators.
  bool in_commutator_span(const Element& x) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

TraceRelationReport trace_relation_solver(int n1, int L);

}  // namespace tlhat
