#pragma once

// Seeded random elements for property checks: uniform FC heaps drawn from
// enumerate_fc and coefficients from the palette {1, -1, q, 1/(1+q)}.

#include <random>

#include "tlhat/algebra.hpp"

namespace tlhat {

class RandomSource {
 public:
  explicit RandomSource(unsigned long long seed) : rng_(seed) {}

  const Heap& heap(const System& sys, int max_len);
  RingElem coefficient();
  /// Sum of `terms` random heaps (repeats merge) with palette coefficients.
  Element element(const System& sys, int max_len, int terms = 1);
  std::size_t index(std::size_t bound);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
  std::map<std::pair<System, int>, std::vector<Heap>> pools_;
};

}  // namespace tlhat
