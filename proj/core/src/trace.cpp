#include "tlhat/trace.hpp"

#include <algorithm>
#include <mutex>

#include "tlhat/maps.hpp"
#include "tlhat/random.hpp"

namespace tlhat {

namespace {

struct TraceCache {
  std::mutex mu;
  std::map<std::pair<int, Heap>, RingElem> values;

  template <class F>
  RingElem get(int n, const Heap& w, F compute) {
    {
      std::lock_guard lock(mu);
      auto it = values.find({n, w});
      if (it != values.end()) return it->second;
    }
    RingElem val = compute();
    std::lock_guard lock(mu);
    return values.try_emplace({n, w}, std::move(val)).first->second;
  }
};

TraceCache& tau_cache() {
  static TraceCache c;
  return c;
}
TraceCache& rho_cache() {
  static TraceCache c;
  return c;
}

}  // namespace

RingElem jones_tau_g(int n, const Heap& w) {
  if (n == 0) {
    if (!w.empty()) throw UsageError("rank 0 has no generators");
    return 1;
  }
  if (w.empty()) return RingElem::z().pow(n);
  return tau_cache().get(n, w, [&]() -> RingElem {
    auto letters = w.letters();
    const auto top = std::find(letters.begin(), letters.end(), n);
    const System lower = System::finite(n - 1);
    if (top == letters.end()) return RingElem::z() * jones_tau_g(n - 1, heap_of(lower, letters));
    if (std::find(top + 1, letters.end(), n) != letters.end())
      throw std::logic_error("FC heap of type A with a repeated top generator");
    // g_w = g_u g_{s_n} g_v and tau_{n+1}(g_u g_{s_n} g_v) = v^{-1} tau_n(g_u g_v).
    std::vector<Letter> uv(letters.begin(), top);
    uv.insert(uv.end(), top + 1, letters.end());
    return jones_tau(word_product(lower, uv)) / RingElem::v();
  });
}

RingElem jones_tau(const Element& a) {
  if (a.system().affine) throw UsageError("jones_tau acts on finite systems; use rho for affine ones");
  Element g = a.basis() == Basis::g ? a : convert_basis(a, Basis::g);
  RingElem acc;
  for (const auto& [h, c] : g.terms()) acc += c * jones_tau_g(g.system().rank, h);
  return acc;
}

RingElem rho_g(int n1, const Heap& w) {
  if (n1 < 1) throw UsageError("rho_n needs n >= 1");
  if (n1 == 1) {
    if (!w.empty()) throw UsageError("TL-hat_1 has no generators");
    return 1;
  }
  return rho_cache().get(n1, w, [&] {
    return jones_tau(apply_E(n1 - 1, Element::basis_element(System::affine_of(n1 - 1), w)));
  });
}

RingElem rho(int n1, const Element& a) {
  if (n1 < 1) throw UsageError("rho_n needs n >= 1");
  if (a.system() != System::affine_of(n1 - 1))
    throw UsageError("rho_" + std::to_string(n1) + " expects an element of " + System::affine_of(n1 - 1).name());
  Element g = a.basis() == Basis::g ? a : convert_basis(a, Basis::g);
  RingElem acc;
  for (const auto& [h, c] : g.terms()) acc += c * rho_g(n1, h);
  return acc;
}

Element T_inverse(const System& sys, Letter s) {
  const RingElem q = RingElem::q(), v = RingElem::v();
  Element r = generator(sys, s, Basis::T) * q.pow(-2);
  r.add_term(Heap{}, -(q - 1) / (q * v));
  return r;
}

Verification check_affine_markov_axioms(int nmax, int samples, unsigned long long seed, int max_len,
                                        int psi_max_len) {
  Verification rec("affine Markov axioms");
  RandomSource rs(seed);
  const RingElem z = RingElem::z();
  for (int n = 1; n <= nmax; ++n) {
    const System small = System::affine_of(n - 1), big = System::affine_of(n);
    const Element t = generator(big, n, Basis::T);
    const Element tinv = T_inverse(big, n);
    for (int i = 0; i < samples; ++i) {
      Element h = n == 1 ? Element::scalar(small, rs.coefficient()) : rs.element(small, max_len);
      const RingElem base = rho(n, h);
      const Element fh = apply_F(n, h);
      const std::string tag = "n=" + std::to_string(n) + " sample " + std::to_string(i);
      rec.expect(rho(n + 1, multiply(fh, t)) == base, tag + ": rho(F(h) T) != rho(h)");
      rec.expect(rho(n + 1, multiply(fh, tinv)) == base, tag + ": rho(F(h) T^-1) != rho(h)");
      rec.expect(rho(n + 1, fh) == z * base, tag + ": rho(F(h)) != z rho(h)");
    }
    for (const Heap& w : enumerate_fc(big, psi_max_len)) {
      const RingElem val = rho_g(n + 1, w);
      for (int d = 1; d <= n; ++d)
        rec.expect(rho_g(n + 1, rotate_psi(big, w, d)) == val,
                   "psi-invariance fails at n=" + std::to_string(n) + " on " + w.to_string(big));
    }
  }
  return rec;
}

Verification check_trace_property(int n1, int samples, unsigned long long seed, int max_len) {
  Verification rec("trace property rho_" + std::to_string(n1));
  RandomSource rs(seed);
  const System sys = System::affine_of(n1 - 1);
  for (int i = 0; i < samples; ++i) {
    Element x = rs.element(sys, max_len), y = rs.element(sys, max_len);
    rec.expect(rho(n1, multiply(x, y)) == rho(n1, multiply(y, x)), "sample " + std::to_string(i));
  }
  return rec;
}

}  // namespace tlhat
