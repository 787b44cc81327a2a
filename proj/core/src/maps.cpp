#include "tlhat/maps.hpp"

#include <functional>
#include <mutex>
#include <random>

namespace tlhat {

namespace {

struct ImageCache {
  std::mutex mu;
  std::map<std::pair<int, Heap>, Element> heaps;
  std::map<std::pair<int, Letter>, Element> letters;
};

ImageCache& F_cache() {
  static ImageCache c;
  return c;
}
ImageCache& E_cache() {
  static ImageCache c;
  return c;
}

using LetterImage = std::function<const Element&(Letter)>;

// Image of g_h under a homomorphism, built along the canonical word; every
// prefix of a canonical word is itself canonical.
Element image_of_heap(ImageCache& cache, int n, const System& source, const System& target, const Heap& h,
                      const LetterImage& letter_image) {
  if (h.empty()) return Element::one(target);
  if (h.length() == 1) return letter_image(h[0]);
  {
    std::lock_guard lock(cache.mu);
    auto it = cache.heaps.find({n, h});
    if (it != cache.heaps.end()) return it->second;
  }
  auto w = h.letters();
  const Letter last = w.back();
  w.pop_back();
  Element prefix = image_of_heap(cache, n, source, target, heap_of(source, w), letter_image);
  Element val = multiply(prefix, letter_image(last));
  std::lock_guard lock(cache.mu);
  return cache.heaps.try_emplace({n, h}, std::move(val)).first->second;
}

Element apply_hom(ImageCache& cache, int n, const System& source, const System& target, const Element& a,
                  const LetterImage& letter_image) {
  if (a.system() != source)
    throw UsageError("expected an element of " + source.name() + ", got " + a.system().name());
  Element g = a.basis() == Basis::g ? a : convert_basis(a, Basis::g);
  Element out(target);
  for (const auto& [h, c] : g.terms()) out.add_scaled(image_of_heap(cache, n, source, target, h, letter_image), c);
  return out;
}

const Element& cached_letter(ImageCache& cache, int n, Letter s, const std::function<Element()>& make) {
  {
    std::lock_guard lock(cache.mu);
    auto it = cache.letters.find({n, s});
    if (it != cache.letters.end()) return it->second;
  }
  Element val = make();
  std::lock_guard lock(cache.mu);
  return cache.letters.try_emplace({n, s}, std::move(val)).first->second;
}

Element relabel(const Element& a, const System& target) {
  Element out(target, a.basis());
  for (const auto& [h, c] : a.terms()) out.add_term(heap_of(target, h.letters()), c);
  return out;
}

}  // namespace

const Element& F_letter(int n, Letter s) {
  if (n < 2) throw UsageError("F_1 has no letters to map");
  const System target = System::affine_of(n);
  if (!System::affine_of(n - 1).valid(s)) throw UsageError("letter not in the source of F_" + std::to_string(n));
  return cached_letter(F_cache(), n, s, [&] {
    if (s != 0) return generator(target, s);
    return multiply(multiply(generator(target, n), generator(target, 0)), generator_inverse(target, n));
  });
}

Element apply_F(int n, const Element& a) {
  if (n < 1) throw UsageError("F_n needs n >= 1");
  const System source = System::affine_of(n - 1), target = System::affine_of(n);
  if (n == 1) {
    if (a.system() != source) throw UsageError("F_1 acts on scalars of affine rank 0");
    Element g = a.basis() == Basis::g ? a : convert_basis(a, Basis::g);
    return Element::scalar(target, g.coeff(Heap{}));
  }
  return apply_hom(F_cache(), n, source, target, a, [n](Letter s) -> const Element& { return F_letter(n, s); });
}

const Element& E_letter(int n, Letter s) {
  const System target = System::finite(n);
  if (!System::affine_of(n).valid(s)) throw UsageError("letter not in the source of E_" + std::to_string(n));
  return cached_letter(E_cache(), n, s, [&] {
    if (s != 0) return generator(target, s);
    Element r = Element::one(target);
    for (Letter i = 1; i <= n; ++i) r = multiply(r, generator(target, i));
    for (Letter i = n - 1; i >= 1; --i) r = multiply(r, generator_inverse(target, i));
    return r;
  });
}

Element apply_E(int n, const Element& a) {
  if (n < 1) throw UsageError("E_n needs n >= 1");
  return apply_hom(E_cache(), n, System::affine_of(n), System::finite(n), a,
                   [n](Letter s) -> const Element& { return E_letter(n, s); });
}

Element incl(const Element& a) {
  if (a.system().affine) throw UsageError("incl expects a finite system");
  return relabel(a, System::affine_of(a.system().rank));
}

Element incl_finite(const Element& a) {
  if (a.system().affine) throw UsageError("incl expects a finite system");
  return relabel(a, System::finite(a.system().rank + 1));
}

Element apply_psi(const Element& a, int d) {
  const System& sys = a.system();
  if (!sys.affine) throw UsageError("the Dynkin rotation is defined on affine systems only");
  Element out(sys, a.basis());
  for (const auto& [h, c] : a.terms()) out.add_term(rotate_psi(sys, h, d), c);
  return out;
}

std::vector<Letter> cox_word(int n) {
  std::vector<Letter> w;
  for (Letter i = n; i >= 1; --i) w.push_back(i);
  w.push_back(0);
  return w;
}

Element cox_element(int n) {
  const System sys = System::affine_of(n);
  return Element::basis_element(sys, heap_of(sys, cox_word(n)));
}

Verification check_commuting_diagram(int n, int samples, unsigned seed) {
  if (n < 2) throw UsageError("the commuting diagram needs n >= 2");
  Verification rec("commuting diagram n=" + std::to_string(n));
  const System source = System::affine_of(n - 1);
  auto both = [&](const Element& x) {
    Element left = apply_E(n, apply_F(n, x));
    Element right = incl_finite(apply_E(n - 1, x));
    return left == right;
  };
  for (Letter s : source.letters()) rec.expect(both(generator(source, s)), "generator " + source.letter_name(s));
  std::mt19937 rng(seed);
  auto letters = source.letters();
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  std::uniform_int_distribution<int> len(1, 5);
  for (int i = 0; i < samples; ++i) {
    std::vector<Letter> w(len(rng));
    for (auto& s : w) s = letters[pick(rng)];
    rec.expect(both(word_product(source, w)), "product " + word_to_string(source, w));
  }
  return rec;
}

Verification check_conjugation_convention(int n, const Element& x, int d) {
  if (d < 0) throw UsageError("conjugation power must be nonnegative");
  Verification rec("conjugation n=" + std::to_string(n) + " d=" + std::to_string(d));
  Element c = power(cox_element(n), d);
  Element lhs = multiply(c, apply_F(n, x));
  Element rotated = n >= 2 ? apply_psi(x, -d) : x;
  Element rhs = multiply(apply_F(n, rotated), c);
  rec.expect(lhs == rhs, "cox^d F(x) != F(psi^-d x) cox^d");
  return rec;
}

}  // namespace tlhat
