#include "tlhat/verify.hpp"

#include <functional>
#include <map>
#include <random>

#include "tlhat/diagram.hpp"
#include "tlhat/maps.hpp"
#include "tlhat/markov.hpp"
#include "tlhat/random.hpp"
#include "tlhat/solver.hpp"
#include "tlhat/trace.hpp"

namespace tlhat {

Verification check_relations(const System& sys) {
  Verification rec("relations " + sys.name());
  const RingElem q = RingElem::q(), v = RingElem::v();
  const auto letters = sys.letters();
  const Element one = Element::one(sys);
  for (Letter s : letters) {
    const Element g = generator(sys, s), t = generator(sys, s, Basis::T), f = generator(sys, s, Basis::f);
    const std::string name = sys.letter_name(s);
    rec.expect((multiply(g, g) - g * (q - 1) - one * q).is_zero(), "g_" + name + "^2 = (q-1) g + q");
    rec.expect((multiply(t, t) - t * (v * (q - 1)) - Element::one(sys, Basis::T) * (q * q)).is_zero(), "T_" + name + "^2 = v(q-1) T + q^2");
    rec.expect(multiply(f, f) == f, "f_" + name + "^2 = f_" + name);
    rec.expect(multiply(one, g) == g && multiply(g, one) == g, "unit laws at " + name);
  }
  for (Letter s : letters) {
    for (Letter u : letters) {
      if (s == u || sys.infinite_bond()) continue;
      const Element gs = generator(sys, s), gu = generator(sys, u);
      const std::string pair = sys.letter_name(s) + "," + sys.letter_name(u);
      if (!sys.adjacent(s, u)) {
        rec.expect(multiply(gs, gu) == multiply(gu, gs), "commutation " + pair);
        continue;
      }
      const Element gsu = multiply(gs, gu);
      Element V = multiply(gsu, gs) + gsu + multiply(gu, gs) + gs + gu + one;
      rec.expect(V.is_zero(), "V(" + pair + ") = 0");
      const Element fs = generator(sys, s, Basis::f), fu = generator(sys, u, Basis::f);
      rec.expect(multiply(multiply(fs, fu), fs) == fs * RingElem::delta(), "f_s f_t f_s = delta f_s at " + pair);
    }
  }
  return rec;
}

Verification check_catalan(int nmax) {
  Verification rec("Catalan counts");
  mpz_class cat = 1;  // Catalan(1)
  for (int n = 1; n <= nmax; ++n) {
    // Catalan(n+1) = Catalan(n) * 2(2n+1) / (n+2)
    cat = cat * 2 * (2 * n + 1) / (n + 2);
    const auto count = enumerate_fc(System::finite(n), -1).size();
    rec.expect(mpz_class(static_cast<unsigned long>(count)) == cat,
               "n=" + std::to_string(n) + ": " + std::to_string(count) + " FC elements, Catalan " + cat.get_str());
  }
  return rec;
}

Verification check_associativity(const System& sys, int samples, int max_len, unsigned long long seed) {
  Verification rec("associativity " + sys.name());
  RandomSource rs(seed);
  for (int i = 0; i < samples; ++i) {
    const Element a = Element::basis_element(sys, rs.heap(sys, max_len));
    const Element b = Element::basis_element(sys, rs.heap(sys, max_len));
    const Element c = Element::basis_element(sys, rs.heap(sys, max_len));
    rec.expect(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)), "triple " + std::to_string(i));
  }
  return rec;
}

Verification check_f_independence(const System& sys, int max_len, int extensions, unsigned long long seed) {
  Verification rec("f_w independent of the linear extension " + sys.name());
  std::mt19937_64 rng(seed);
  for (const Heap& h : enumerate_fc(sys, max_len)) {
    if (h.length() < 2) continue;
    const Element& ref = f_in_g(sys, h);
    std::vector<Letter> w = h.letters();
    for (int e = 0; e < extensions; ++e) {
      // Random adjacent swaps of commuting letters give another linear extension.
      for (std::size_t step = 0; step < 4 * w.size(); ++step) {
        const std::size_t p = std::uniform_int_distribution<std::size_t>(0, w.size() - 2)(rng);
        if (w[p] != w[p + 1] && !sys.adjacent(w[p], w[p + 1]) && !sys.infinite_bond())
          std::swap(w[p], w[p + 1]);
      }
      rec.expect(f_along_word(sys, w) == ref, "f along " + word_to_string(sys, w) + " vs f[" + h.to_string(sys) + "]");
    }
  }
  return rec;
}

Verification check_E_incl(int n) {
  Verification rec("E_n(incl(x)) = x n=" + std::to_string(n));
  const System sys = System::finite(n);
  for (const Heap& h : enumerate_fc(sys, -1)) {
    const Element x = Element::basis_element(sys, h);
    rec.expect(apply_E(n, incl(x)) == x, "g[" + h.to_string(sys) + "]");
  }
  return rec;
}

namespace {

using Suite = std::function<std::vector<Verification>(const SuiteConfig&)>;

int pick(int value, int fallback) { return value > 0 ? value : fallback; }

std::vector<Verification> suite_relations(const SuiteConfig& cfg) {
  std::vector<Verification> out;
  for (int n = 1; n <= pick(cfg.n, 4); ++n) {
    out.push_back(check_relations(System::affine_of(n)));
    out.push_back(check_relations(System::finite(n)));
  }
  return out;
}

std::vector<Verification> suite_basis(const SuiteConfig& cfg) {
  const int len = pick(cfg.max_len, 5);
  return {check_catalan(pick(cfg.n, 5)),
          check_associativity(System::affine_of(2), cfg.samples, len, cfg.seed),
          check_associativity(System::affine_of(3), cfg.samples, len, cfg.seed + 1),
          check_f_independence(System::affine_of(2), len + 1, 3, cfg.seed),
          check_f_independence(System::finite(4), -1, 3, cfg.seed)};
}

std::vector<Verification> suite_oracle(const SuiteConfig& cfg) {
  std::vector<Verification> out;
  for (int n = 1; n <= pick(cfg.n, 4); ++n) out.push_back(check_structure_constants(n));
  return out;
}

std::vector<Verification> suite_diagram(const SuiteConfig& cfg) {
  Verification rec("planar diagrams");
  for (int n = 1; n <= pick(cfg.n, 4); ++n) {
    const auto all = all_planar_diagrams(n + 1);
    const auto heaps = enumerate_fc(System::finite(n), -1);
    rec.expect(all.size() == heaps.size(), "diagram count equals FC count at n=" + std::to_string(n));
    for (const auto& d : all) rec.expect(d.valid() && d.is_planar(), "planar matching " + d.to_string());
    for (const auto& h : heaps) {
      const auto wd = word_diagram(n + 1, h.letters());
      rec.expect(wd.loops == 0 && wd.diagram.is_planar(), "word diagram of " + h.to_string(System::finite(n)));
    }
  }
  return {rec};
}

std::vector<Verification> suite_jones(const SuiteConfig& cfg) {
  std::vector<Verification> out;
  for (int n = 1; n <= pick(cfg.n, 4); ++n) out.push_back(check_oracle_trace(n));
  Verification rec("jones trace values");
  for (int n = 1; n <= 5; ++n)
    rec.expect(jones_tau(Element::one(System::finite(n))) == RingElem::z().pow(n), "tau(1) = z^n at n=" + std::to_string(n));
  rec.expect(jones_tau(generator(System::finite(1), 1, Basis::T)) == RingElem(1), "tau_2(T_s1) = 1");
  out.push_back(rec);
  return out;
}

std::vector<Verification> suite_affine(const SuiteConfig& cfg) {
  const int nmax = pick(cfg.n, 3), len = pick(cfg.max_len, 6);
  std::vector<Verification> out{check_affine_markov_axioms(nmax, cfg.samples, cfg.seed, len, len)};
  for (int n1 = 3; n1 <= nmax + 1; ++n1) out.push_back(check_trace_property(n1, cfg.samples, cfg.seed + n1, 5));
  return out;
}

std::vector<Verification> suite_maps(const SuiteConfig& cfg) {
  std::vector<Verification> out;
  RandomSource rs(cfg.seed);
  for (int n = 2; n <= pick(cfg.n, 4); ++n) {
    out.push_back(check_commuting_diagram(n, 50, cfg.seed + n));
    out.push_back(check_E_incl(n));
    if (n > 3) continue;
    Verification conj("conjugation convention n=" + std::to_string(n));
    for (int i = 0; i < 5; ++i) {
      const Element x = rs.element(System::affine_of(n - 1), 4, 2);
      for (int d = 1; d <= n; ++d) conj.merge(check_conjugation_convention(n, x, d));
    }
    out.push_back(conj);
  }
  return out;
}

std::vector<Verification> suite_lemmas(const SuiteConfig& cfg) {
  const int kmax = pick(cfg.max_len, 4);
  std::vector<Verification> out;
  for (int n1 = 3; n1 <= pick(cfg.n, 3) + 1; ++n1) {
    Verification rec("power decompositions n1=" + std::to_string(n1));
    for (int k = 1; k <= kmax; ++k) {
      rec.merge(lemma_513_decompose(n1, k, Side::Left).check);
      rec.merge(lemma_513_decompose(n1, k, Side::Right).check);
      const Lemma515 lem = lemma_515_decompose(n1, k);
      rec.merge(lem.check);
      int tops = 0;
      for (const auto& t : lem.terms) tops += t.type == 1 && t.exponent == k;
      rec.expect(tops == 1, "exactly one type-1 term of exponent " + std::to_string(k));
    }
    out.push_back(rec);
  }
  Verification cor("g_n F(P^h) g_n expansions n1=3");
  for (int h = 1; h <= kmax; ++h) {
    const Corollary516 c = corollary_516_expand(3, h);
    cor.merge(c.check);
    const System big = System::affine_of(2);
    RingElem lhs;
    for (const auto& [j, cj] : c.c) lhs += rho(3, multiply(apply_F(2, cj), power(cox_element(2), j)));
    for (const auto& m : c.markov) lhs += m.coeff * rho(3, realize(3, m.element));
    const Element target = multiply(multiply(generator(big, 2), apply_F(2, power(P_pre(3), h))), generator(big, 2));
    cor.expect(lhs == rho(3, target), "rho_3 value of the expansion at h=" + std::to_string(h));
  }
  out.push_back(cor);
  return out;
}

std::vector<Verification> suite_markov(const SuiteConfig& cfg) {
  const int len = pick(cfg.max_len, 8);
  std::vector<Verification> out;
  for (int n1 = 3; n1 <= 4; ++n1) {
    Verification rec("normal forms n1=" + std::to_string(n1));
    const System big = System::affine_of(n1 - 1);
    for (const Heap& w : enumerate_fc(big, len + 2)) {
      const auto r = classify_affine(w, n1);
      if (auto* f = std::get_if<Falsification>(&r)) {
        rec.expect(false, f->what);
        continue;
      }
      const AffineNormalForm nf = std::holds_alternative<Form1>(r) ? AffineNormalForm(std::get<Form1>(r))
                                                                    : AffineNormalForm(std::get<Form2>(r));
      rec.expect(expand_normal_form(n1, nf) == Element::basis_element(big, w), "re-expansion of " + w.to_string(big));
      if (auto m = is_markov(w, n1))
        rec.expect(realize(n1, *m) == Element::basis_element(big, w), "Markov factorization of " + w.to_string(big));
    }
    out.push_back(rec);
  }

  const System sys = System::affine_of(2);
  auto rho3 = [](const Element& x) { return rho(3, x); };
  auto sound = [&](Verification& rec, const Element& a, const std::string& what) {
    const MarkovCombination mc = reduce_trace_to_markov(a);
    rec.expect(mc.residual.empty(), what + ": empty residual");
    rec.expect(mc.evaluate(rho3) == rho(3, a), what + ": rho_3 value");
  };
  Verification heaps("trace reduction on heaps of TL-hat_3");
  for (const Heap& w : enumerate_fc(sys, len)) sound(heaps, Element::basis_element(sys, w), "g[" + w.to_string(sys) + "]");
  for (int k = 1; k <= 4; ++k) sound(heaps, power(cox_element(2), k), "cox^" + std::to_string(k));
  out.push_back(heaps);

  Verification random("trace reduction on random elements");
  RandomSource rs(cfg.seed);
  for (int i = 0; i < 50; ++i) {
    const Element a = rs.element(sys, len, 3);
    sound(random, a, "sample " + std::to_string(i));
    const RingElem base = reduce_trace_to_markov(a).evaluate(rho3);
    random.expect(reduce_trace_to_markov(apply_psi(a, 1)).evaluate(rho3) == base, "psi-compatibility, sample " + std::to_string(i));
  }
  out.push_back(random);
  return out;
}

std::vector<Verification> suite_solver(const SuiteConfig& cfg) {
  const int L = pick(cfg.max_len, 6);
  Verification rec("trace relation solver");
  const TraceRelationSolver s3(3, L);
  rec.expect(s3.report().spanned(), "Markov elements span every heap of length <= " + std::to_string(L) + " in TL-hat_3");
  const System sys = System::affine_of(2);
  for (const Heap& w : enumerate_fc(sys, L)) {
    auto terms = s3.express(w);
    if (!terms) continue;
    RingElem val;
    for (const auto& t : *terms) val += t.coeff * rho(3, realize(3, t.element));
    rec.expect(val == rho_g(3, w), "rho_3 of the solver expression for " + w.to_string(sys));
    const MarkovCombination mc = reduce_trace_to_markov(Element::basis_element(sys, w));
    Element diff = Element::basis_element(sys, w);
    for (const auto& t : mc.terms) diff -= realize(3, t.element) * t.coeff;
    rec.expect(s3.in_commutator_span(diff), "reduction of " + w.to_string(sys) + " differs by commutators");
  }
  if (cfg.n <= 0 || cfg.n >= 3) {
    const int L4 = std::min(L, 4);
    rec.expect(TraceRelationSolver(4, L4).report().spanned(), "Markov elements span TL-hat_4 up to length " + std::to_string(L4));
  }
  return {rec};
}

const std::map<std::string, Suite>& registry() {
  static const std::map<std::string, Suite> r{
      {"relations", suite_relations}, {"basis", suite_basis}, {"oracle", suite_oracle}, {"diagram", suite_diagram},
      {"jones", suite_jones},         {"affine", suite_affine}, {"maps", suite_maps},     {"lemmas", suite_lemmas},
      {"markov", suite_markov},       {"solver", suite_solver}};
  return r;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : registry()) out.push_back(name);
  return out;
}

bool is_suite(const std::string& name) { return registry().count(name) != 0; }

std::vector<Verification> run_suite(const std::string& name, const SuiteConfig& cfg) {
  auto it = registry().find(name);
  if (it == registry().end()) throw UsageError("unknown suite '" + name + "'");
  return it->second(cfg);
}

}  // namespace tlhat
