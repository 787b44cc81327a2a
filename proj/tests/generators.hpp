#pragma once

// Seeded generators for the property tests.

#include <random>
#include <vector>

#include "tlhat/algebra.hpp"

namespace tlhat::testing {

class Gen {
 public:
  explicit Gen(unsigned long long seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Poly poly(int max_degree, int bound) {
    std::vector<mpz_class> c;
    const int deg = integer(0, max_degree);
    for (int i = 0; i <= deg; ++i) c.emplace_back(integer(-bound, bound));
    return Poly(std::move(c));
  }

  RingElem scalar(int max_degree = 3, int bound = 5) {
    Poly den = poly(max_degree, bound);
    while (den.is_zero()) den = poly(max_degree, bound);
    return RingElem(poly(max_degree, bound), den);
  }

  RingElem nonzero_scalar() {
    RingElem c = scalar();
    while (c.is_zero()) c = scalar();
    return c;
  }

  /// Uniform word of the given length over the letters of sys (not necessarily reduced).
  std::vector<Letter> word(const System& sys, int length) {
    const auto letters = sys.letters();
    std::vector<Letter> w;
    for (int i = 0; i < length; ++i) w.push_back(letters[integer(0, static_cast<int>(letters.size()) - 1)]);
    return w;
  }

  /// Random combination of products of generators.
  Element element(const System& sys, int max_len, int terms) {
    Element out(sys);
    for (int t = 0; t < terms; ++t) out += word_product(sys, word(sys, integer(0, max_len))) * scalar(1, 3);
    return out;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace tlhat::testing
