#include "tlhat/random.hpp"

namespace tlhat {

std::size_t RandomSource::index(std::size_t bound) {
  return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng_);
}

const Heap& RandomSource::heap(const System& sys, int max_len) {
  auto& pool = pools_[{sys, max_len}];
  if (pool.empty()) pool = enumerate_fc(sys, max_len);
  return pool[index(pool.size())];
}

RingElem RandomSource::coefficient() {
  switch (index(4)) {
    case 0: return 1;
    case 1: return -1;
    case 2: return RingElem::q();
    default: return (RingElem::q() + 1).inverse();
  }
}

Element RandomSource::element(const System& sys, int max_len, int terms) {
  Element e(sys);
  for (int i = 0; i < terms; ++i) {
    const Heap& h = heap(sys, max_len);
    e.add_term(h, coefficient());
  }
  return e;
}

}  // namespace tlhat
