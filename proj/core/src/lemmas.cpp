#include "tlhat/maps.hpp"
#include "tlhat/markov.hpp"

namespace tlhat {

namespace {

struct Ctx {
  int n1, n;
  System big, src;
  Element cox, gn, P, B, C;

  explicit Ctx(int n1_)
      : n1(n1_),
        n(n1_ - 1),
        big(System::affine_of(n1_ - 1)),
        src(preimage_system(n1_)),
        cox(cox_element(n1_ - 1)),
        gn(generator(big, n1_ - 1)),
        P(P_pre(n1_)),
        B(generator_inverse(src, 0)),
        C(generator_inverse(src, n1_ - 2)) {}

  Element F(const Element& x) const { return apply_F(n, x); }
  Element cox_pow(int k) const { return power(cox, k); }
  // cox^j F(y) = F(shift(y, j)) cox^j
  Element shift(const Element& y, int j) const { return rot_pre(y, -j); }
};

Element mul(const Element& a, const Element& b) { return multiply(a, b); }

Element sum_power_terms(const Ctx& c, const std::map<int, Element>& coeffs) {
  Element acc(c.big);
  for (const auto& [i, f] : coeffs) acc += mul(c.F(f), c.cox_pow(i));
  return acc;
}

void add_into(std::map<int, Element>& m, int key, const Element& x) {
  auto [it, inserted] = m.try_emplace(key, x);
  if (!inserted) it->second += x;
}

}  // namespace

// ---------------------------------------------------------------- g_n against powers of cox

Element Lemma513::assemble() const {
  const Ctx c(n1);
  Element acc = sum_power_terms(c, coeffs);
  const Element Pk = power(c.P, k);
  const Element last = side == Side::Left ? mul(mul(c.F(Pk), c.gn), c.F(tail_pre))
                                          : mul(mul(c.F(tail_pre), c.gn), c.F(Pk));
  acc += last * A;
  return acc;
}

Lemma513 lemma_513_decompose(int n1, int k, Side side) {
  if (k < 1) throw UsageError("the power k must be positive");
  const Ctx c(n1);
  const RingElem q = RingElem::q(), qm1 = q - 1;
  Lemma513 out;
  out.n1 = n1;
  out.k = k;
  out.side = side;
  out.A = q.pow(k);
  Element run = Element::one(c.src);
  for (int m = 0; m <= k; ++m) {
    if (m > 0) {
      if (side == Side::Left)
        run = mul(rot_pre(c.B, k - m), run);  // R_m: increasing rotation exponents
      else
        run = mul(run, c.shift(c.C, k - m));  // L_m: decreasing rotation exponents
    }
    if (m == k) break;
    const Element Pm = power(c.P, m);
    Element coeff = side == Side::Left ? mul(Pm, c.shift(run, k - m)) : mul(run, c.shift(Pm, k - m));
    coeff *= qm1 * q.pow(m);
    out.coeffs.emplace(k - m, std::move(coeff));
  }
  out.tail_pre = run;
  out.check = Verification("power decomposition k=" + std::to_string(k) +
                           (side == Side::Left ? " left" : " right") + " n1=" + std::to_string(n1));
  const Element target = side == Side::Left ? mul(c.gn, c.cox_pow(k)) : mul(c.cox_pow(k), c.gn);
  out.check.expect(out.assemble() == target, "assembled decomposition differs from the product");
  return out;
}

// ---------------------------------------------------------------- cox^k in typed terms

Element lemma_515_top_h(int n1, int k) {
  const Ctx c(n1);
  Element h = Element::one(c.src);
  for (int i = 0; i < k; ++i) h = mul(h, rot_pre(c.B, i));
  return h;
}

Element Lemma515::assemble() const {
  const Ctx c(n1);
  Element acc(c.big);
  for (const auto& t : terms) {
    const Element Pe = c.F(power(c.P, t.exponent));
    Element x = t.type == 1 ? mul(mul(mul(c.gn, Pe), c.gn), c.F(t.coeff_pre)) : mul(mul(Pe, c.gn), c.F(t.coeff_pre));
    acc += x * t.scalar;
  }
  return acc;
}

Lemma515 lemma_515_decompose(int n1, int k) {
  if (k < 1) throw UsageError("the power k must be positive");
  const Ctx c(n1);
  const RingElem q = RingElem::q(), qm1 = q - 1;
  // (type, exponent) -> merged preimage; the top type-1 term is kept apart.
  std::map<std::pair<int, int>, Element> merged;
  Element top = c.B;
  RingElem top_scalar = 1;
  // F(y) cox = cox F(rot_pre(y, 1)), so B . rot(y, 1) is the new right factor.
  auto next = [&](const Element& y) { return mul(c.B, rot_pre(y, 1)); };
  for (int step = 1; step < k; ++step) {
    std::map<std::pair<int, int>, Element> grown;
    auto add = [&](int type, int e, const Element& x) {
      auto [it, inserted] = grown.try_emplace({type, e}, x);
      if (!inserted) it->second += x;
    };
    auto expand = [&](int type, int e, const Element& h, const RingElem& s) {
      const Element moved = next(mul(power(c.P, e), h));
      if (type == 1) {
        if (s.is_zero()) return;
        add(1, 1, moved * (qm1 * qm1 * s));
        add(2, 1, moved * (qm1 * q * s));
      } else {
        add(1, 1, moved * (qm1 * s));
      }
    };
    for (const auto& [key, h] : merged) {
      const auto [type, e] = key;
      add(type, e + 1, next(h) * q);
      expand(type, e, h, 1);
    }
    expand(1, step, top, top_scalar);
    top = next(top);
    top_scalar *= q;
    merged = std::move(grown);
  }
  Lemma515 out;
  out.n1 = n1;
  out.k = k;
  for (auto& [key, h] : merged)
    if (!h.is_zero()) out.terms.push_back({key.first, key.second, std::move(h), RingElem(1)});
  out.terms.push_back({1, k, top, top_scalar});
  out.check = Verification("typed decomposition of cox^" + std::to_string(k) + " n1=" + std::to_string(n1));
  out.check.expect(out.assemble() == c.cox_pow(k), "assembled decomposition differs from cox^k");
  out.check.expect(top == lemma_515_top_h(n1, k), "top coefficient differs from the closed form");
  return out;
}

// ---------------------------------------------------------------- g_n F(P^h) g_n

Element Corollary516::assemble() const {
  const Ctx ctx(n1);
  Element acc = sum_power_terms(ctx, c);
  for (const auto& t : markov) acc += realize(n1, t.element) * t.coeff;
  return acc;
}

namespace {

Corollary516 corollary_rec(const Ctx& ctx, int h, std::map<int, Corollary516>& memo) {
  if (auto it = memo.find(h); it != memo.end()) return it->second;
  const Lemma515 lem = lemma_515_decompose(ctx.n1, h);
  const RingElem scale = RingElem::q().pow(-(h - 1));
  // Inverse of the top coefficient: reversed product of rotations of t_a.
  Element h_inv = Element::one(ctx.src);
  for (int i = 0; i < h; ++i) h_inv = mul(rot_pre(generator(ctx.src, 0), i), h_inv);

  Corollary516 out;
  out.n1 = ctx.n1;
  out.h = h;
  add_into(out.c, h, ctx.shift(h_inv, h) * scale);
  for (const auto& t : lem.terms) {
    if (t.type == 1 && t.exponent == h) continue;
    const RingElem s = -(scale * t.scalar);
    const Element right = mul(t.coeff_pre, h_inv);
    if (t.type == 2) {
      out.markov.push_back({s, MarkovElement{power(ctx.P, t.exponent), 1, right}});
      continue;
    }
    const Corollary516 sub = corollary_rec(ctx, t.exponent, memo);
    for (const auto& [j, cj] : sub.c) add_into(out.c, j, mul(cj, ctx.shift(right, j)) * s);
    for (const auto& m : sub.markov)
      out.markov.push_back({m.coeff * s, MarkovElement{m.element.a_pre, m.element.epsilon, mul(m.element.b_pre, right)}});
  }
  out.markov = normalize_terms(out.markov);
  memo.emplace(h, out);
  return out;
}

}  // namespace

Corollary516 corollary_516_expand(int n1, int h) {
  if (h < 1) throw UsageError("the exponent h must be positive");
  const Ctx ctx(n1);
  std::map<int, Corollary516> memo;
  Corollary516 out = corollary_rec(ctx, h, memo);
  out.check = Verification("expansion of g_n F(P^" + std::to_string(h) + ") g_n n1=" + std::to_string(n1));
  const Element target = mul(mul(ctx.gn, ctx.F(power(ctx.P, h))), ctx.gn);
  out.check.expect(out.assemble() == target, "assembled expansion differs from the product");
  return out;
}

}  // namespace tlhat
