#include "tlhat/algebra.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <tuple>
#include <unordered_map>

namespace tlhat {

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::g: return "g";
    case Basis::T: return "T";
    case Basis::f: return "f";
  }
  return "?";
}

Basis parse_basis(const std::string& s) {
  if (s == "g") return Basis::g;
  if (s == "T") return Basis::T;
  if (s == "f") return Basis::f;
  throw UsageError("unknown basis '" + s + "' (expected g, T or f)");
}

// ---------------------------------------------------------------- Element

Element::Element(System sys, Basis basis, Terms terms) : sys_(sys), basis_(basis), terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
}

Element Element::scalar(System sys, const RingElem& c, Basis basis) {
  Element e(sys, basis);
  e.add_term(Heap{}, c);
  return e;
}

Element Element::basis_element(System sys, const Heap& h, Basis basis) {
  Element e(sys, basis);
  e.add_term(h, 1);
  return e;
}

RingElem Element::coeff(const Heap& h) const {
  auto it = terms_.find(h);
  return it == terms_.end() ? RingElem() : it->second;
}

bool Element::is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

std::size_t Element::max_length() const { return terms_.empty() ? 0 : terms_.rbegin()->first.length(); }

void Element::add_term(const Heap& h, const RingElem& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(h, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Element& Element::add_scaled(const Element& b, const RingElem& c) {
  if (sys_ != b.sys_) throw UsageError("system mismatch: " + sys_.name() + " vs " + b.sys_.name());
  if (basis_ != b.basis_) throw UsageError("basis mismatch: " + basis_name(basis_) + " vs " + basis_name(b.basis_));
  if (c.is_zero()) return *this;
  for (const auto& [h, x] : b.terms_) add_term(h, c.is_one() ? x : x * c);
  return *this;
}

Element Element::operator-() const {
  Element r = *this;
  for (auto& [h, c] : r.terms_) c = -c;
  return r;
}

Element& Element::operator*=(const RingElem& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [h, x] : terms_) x *= c;
  return *this;
}

Element operator*(const Element& a, const Element& b) { return multiply(a, b); }

bool operator==(const Element& a, const Element& b) {
  if (a.sys_ != b.sys_) return false;
  if (a.basis_ == b.basis_) return a.terms_ == b.terms_;
  return convert_basis(a, Basis::g).terms_ == convert_basis(b, Basis::g).terms_;
}

Element add_scale(const Element& a, const Element& b, const RingElem& c) {
  Element r = a;
  r.add_scaled(b, c);
  return r;
}

// ---------------------------------------------------------------- product cache

namespace {

struct LetterKey {
  System sys;
  Heap heap;
  Letter s;
  bool operator==(const LetterKey&) const = default;
};

struct LetterKeyHash {
  std::size_t operator()(const LetterKey& k) const {
    return k.heap.hash() * 131 + static_cast<std::size_t>(k.s) * 17 + k.sys.rank * 2 + k.sys.affine;
  }
};

std::atomic<bool> g_cache_on{true};
std::mutex g_prod_mutex;
std::unordered_map<LetterKey, std::shared_ptr<const Terms>, LetterKeyHash> g_prod_cache;

void accumulate(Terms& out, const Heap& h, const RingElem& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = out.try_emplace(h, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) out.erase(it);
  }
}

Terms times_letter(const System& sys, const Terms& x, Letter s) {
  Terms out;
  for (const auto& [h, c] : x) {
    auto prod = mul_letter(sys, h, s);
    for (const auto& [h2, c2] : *prod) accumulate(out, h2, c2.is_one() ? c : c * c2);
  }
  return out;
}

void add_into(Terms& out, const Terms& x) {
  for (const auto& [h, c] : x) accumulate(out, h, c);
}

Terms compute_mul_letter(const System& sys, const Heap& h, Letter s) {
  auto res = append_classify(sys, h, s);
  Terms out;
  if (auto* e = std::get_if<Extends>(&res)) {
    out.emplace(std::move(e->heap), 1);
  } else if (auto* qd = std::get_if<QuadraticAt>(&res)) {
    const RingElem q = RingElem::q();
    out.emplace(h, q - 1);
    out.emplace(std::move(qd->reduced), q);
  } else {
    auto& br = std::get<BraidSplit>(res);
    // g_s g_t g_s = -(g_s g_t + g_t g_s + g_s + g_t + 1)
    Terms p{{br.prefix, RingElem(1)}};
    Terms ps = times_letter(sys, p, s);
    Terms pt = times_letter(sys, p, br.t);
    Terms acc = p;
    add_into(acc, ps);
    add_into(acc, pt);
    add_into(acc, times_letter(sys, ps, br.t));
    add_into(acc, times_letter(sys, pt, s));
    for (Letter c : br.suffix) acc = times_letter(sys, acc, c);
    for (auto& [k, c] : acc) c = -c;
    out = std::move(acc);
  }
  return out;
}

}  // namespace

void set_product_cache_enabled(bool on) { g_cache_on = on; }
bool product_cache_enabled() { return g_cache_on; }

std::shared_ptr<const Terms> mul_letter(const System& sys, const Heap& h, Letter s) {
  if (!sys.valid(s)) throw UsageError("letter index " + std::to_string(s) + " not in " + sys.name());
  if (!g_cache_on) return std::make_shared<const Terms>(compute_mul_letter(sys, h, s));
  LetterKey key{sys, h, s};
  {
    std::lock_guard lock(g_prod_mutex);
    auto it = g_prod_cache.find(key);
    if (it != g_prod_cache.end()) return it->second;
  }
  auto val = std::make_shared<const Terms>(compute_mul_letter(sys, h, s));
  std::lock_guard lock(g_prod_mutex);
  return g_prod_cache.try_emplace(std::move(key), std::move(val)).first->second;
}

// ---------------------------------------------------------------- products

namespace {

Element as_g(const Element& a) { return a.basis() == Basis::g ? a : convert_basis(a, Basis::g); }

}  // namespace

Element times_word(const Element& a, const std::vector<Letter>& w) {
  Element g = as_g(a);
  Terms x = g.terms();
  for (Letter s : w) x = times_letter(a.system(), x, s);
  return Element(a.system(), Basis::g, std::move(x));
}

Element word_product(const System& sys, const std::vector<Letter>& w) { return times_word(Element::one(sys), w); }

Element multiply(const Element& a, const Element& b) {
  if (a.system() != b.system())
    throw UsageError("system mismatch: " + a.system().name() + " vs " + b.system().name());
  const System& sys = a.system();
  Element ag = as_g(a), bg = as_g(b);
  Terms out;
  for (const auto& [hb, cb] : bg.terms()) {
    Terms x = ag.terms();
    for (Letter s : hb.word()) x = times_letter(sys, x, s);
    for (const auto& [h, c] : x) accumulate(out, h, cb.is_one() ? c : c * cb);
  }
  Element r(sys, Basis::g, std::move(out));
  if (a.basis() == b.basis() && a.basis() != Basis::g) return convert_basis(r, a.basis());
  return r;
}

Element generator(const System& sys, Letter s, Basis basis) {
  if (!sys.valid(s)) throw UsageError("letter index " + std::to_string(s) + " not in " + sys.name());
  return Element::basis_element(sys, heap_of(sys, {s}), basis);
}

Element generator_inverse(const System& sys, Letter s) {
  const RingElem q = RingElem::q();
  Element r = generator(sys, s) * q.inverse();
  r.add_term(Heap{}, (RingElem(1) - q) / q);
  return r;
}

Element inverse_of_basis_element(const Element& atom) {
  if (atom.size() != 1) throw UsageError("only single basis elements are inverted");
  if (atom.basis() == Basis::f) throw UsageError("f basis elements are idempotent products and not invertible");
  const auto& [h, c] = *atom.terms().begin();
  const System& sys = atom.system();
  Element r = Element::one(sys);
  auto w = h.letters();
  for (auto it = w.rbegin(); it != w.rend(); ++it) r = multiply(r, generator_inverse(sys, *it));
  RingElem scale = c.inverse();
  if (atom.basis() == Basis::T) scale *= RingElem::v().pow(-static_cast<long>(h.length()));
  r *= scale;
  return atom.basis() == Basis::T ? convert_basis(r, Basis::T) : r;
}

Element power(const Element& a, long k) {
  if (k < 0) return power(inverse_of_basis_element(a), -k);
  Element r = Element::one(a.system(), a.basis());
  Element base = a;
  while (k > 0) {
    if (k & 1) r = multiply(r, base);
    k >>= 1;
    if (k) base = multiply(base, base);
  }
  return r;
}

// ---------------------------------------------------------------- bases

namespace {

std::mutex g_f_mutex;
std::map<std::pair<System, Heap>, Element> g_f_cache;

}  // namespace

Element f_along_word(const System& sys, const std::vector<Letter>& w) {
  const RingElem inv = (RingElem::q() + 1).inverse();
  Terms x{{Heap{}, RingElem(1)}};
  for (Letter s : w) {
    Terms y = times_letter(sys, x, s);
    add_into(y, x);
    for (auto& [h, c] : y) c *= inv;
    x = std::move(y);
  }
  return Element(sys, Basis::g, std::move(x));
}

const Element& f_in_g(const System& sys, const Heap& h) {
  auto key = std::make_pair(sys, h);
  {
    std::lock_guard lock(g_f_mutex);
    auto it = g_f_cache.find(key);
    if (it != g_f_cache.end()) return it->second;
  }
  Element val = f_along_word(sys, h.letters());
  std::lock_guard lock(g_f_mutex);
  return g_f_cache.try_emplace(std::move(key), std::move(val)).first->second;
}

Element convert_basis(const Element& a, Basis target) {
  if (a.basis() == target) return a;
  const System& sys = a.system();
  if (a.basis() != Basis::g) {
    Element g(sys, Basis::g);
    if (a.basis() == Basis::T) {
      const RingElem v = RingElem::v();
      for (const auto& [h, c] : a.terms()) g.add_term(h, c * v.pow(static_cast<long>(h.length())));
    } else {
      for (const auto& [h, c] : a.terms()) g.add_scaled(f_in_g(sys, h), c);
    }
    return target == Basis::g ? g : convert_basis(g, target);
  }
  if (target == Basis::T) {
    Element t(sys, Basis::T);
    const RingElem v = RingElem::v();
    for (const auto& [h, c] : a.terms()) t.add_term(h, c * v.pow(-static_cast<long>(h.length())));
    return t;
  }
  // g -> f: f_w = (q+1)^{-l(w)} g_w + shorter terms; peel off the longest heap.
  Element rest = a;
  Element f(sys, Basis::f);
  const RingElem q1 = RingElem::q() + 1;
  while (!rest.is_zero()) {
    const auto& [h, c] = *rest.terms().rbegin();
    Heap top = h;
    RingElem d = c * q1.pow(static_cast<long>(top.length()));
    f.add_term(top, d);
    rest.add_scaled(f_in_g(sys, top), -d);
  }
  return f;
}

Verification check_T_mult_rule(const System& sys, Letter s, const Heap& w) {
  auto desc = left_descents(sys, w);
  if (std::find(desc.begin(), desc.end(), s) == desc.end())
    throw UsageError(sys.letter_name(s) + " is not a left descent of " + w.to_string(sys));
  Verification rec{"T multiplication rule"};
  auto sw_word = w.letters();
  {
    // Remove the leftmost s from a reduced word that starts with s.
    Heap rw = reverse(sys, w);
    auto res = append_classify(sys, rw, s);
    sw_word = reverse(sys, std::get<QuadraticAt>(res).reduced).letters();
  }
  Heap sw = heap_of(sys, sw_word);
  Element lhs = multiply(generator(sys, s, Basis::T), Element::basis_element(sys, w, Basis::T));
  const RingElem v = RingElem::v(), q = RingElem::q();
  Element rhs = Element::basis_element(sys, w, Basis::T) * (v * (q - 1));
  rhs.add_scaled(Element::basis_element(sys, sw, Basis::T), q * q);
  rec.expect(lhs == rhs, "T_s T_w mismatch for s = " + sys.letter_name(s) + ", w = " + w.to_string(sys));
  return rec;
}

void clear_caches() {
  {
    std::lock_guard lock(g_prod_mutex);
    g_prod_cache.clear();
  }
  std::lock_guard lock(g_f_mutex);
  g_f_cache.clear();
}

std::vector<ProductCacheEntry> product_cache_entries() {
  std::vector<ProductCacheEntry> out;
  {
    std::lock_guard lock(g_prod_mutex);
    for (const auto& [k, v] : g_prod_cache) out.push_back({k.sys, k.heap, k.s, *v});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::tie(a.sys, a.heap, a.s) < std::tie(b.sys, b.heap, b.s);
  });
  return out;
}

void seed_product_cache(const System& sys, const Heap& h, Letter s, Terms product) {
  std::lock_guard lock(g_prod_mutex);
  g_prod_cache.try_emplace(LetterKey{sys, h, s}, std::make_shared<const Terms>(std::move(product)));
}

}  // namespace tlhat
