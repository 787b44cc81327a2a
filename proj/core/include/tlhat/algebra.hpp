#pragma once

// The algebras TL_n(q) (finite systems) and the affine TL-hat_{n+1}(q)
// (affine systems), spanned by FC heaps. The working basis is g; T and f
// are views reached by convert_basis.

#include <map>
#include <memory>
#include <string>

#include "tlhat/coxeter.hpp"
#include "tlhat/report.hpp"
#include "tlhat/ring.hpp"

namespace tlhat {

enum class Basis { g, T, f };

std::string basis_name(Basis b);
Basis parse_basis(const std::string& s);

using Terms = std::map<Heap, RingElem>;

class Element {
 public:
  Element() = default;
  explicit Element(System sys, Basis basis = Basis::g) : sys_(sys), basis_(basis) {}
  Element(System sys, Basis basis, Terms terms);

  static Element zero(System sys, Basis basis = Basis::g) { return Element(sys, basis); }
  static Element one(System sys, Basis basis = Basis::g) { return scalar(sys, 1, basis); }
  static Element scalar(System sys, const RingElem& c, Basis basis = Basis::g);
  static Element basis_element(System sys, const Heap& h, Basis basis = Basis::g);

  const System& system() const { return sys_; }
  Basis basis() const { return basis_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  RingElem coeff(const Heap& h) const;
  /// Scalar value if the element is a multiple of the identity.
  bool is_scalar() const;
  std::size_t max_length() const;

  /// this += c * b (same system and basis).
  Element& add_scaled(const Element& b, const RingElem& c);
  void add_term(const Heap& h, const RingElem& c);

  Element operator-() const;
  Element& operator+=(const Element& b) { return add_scaled(b, 1); }
  Element& operator-=(const Element& b) { return add_scaled(b, -1); }
  Element& operator*=(const RingElem& c);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const RingElem& c) { return a *= c; }
  friend Element operator*(const RingElem& c, Element a) { return a *= c; }
  friend Element operator*(const Element& a, const Element& b);

  /// Mathematical equality (bases are reconciled first).
  friend bool operator==(const Element& a, const Element& b);

 private:
  System sys_;
  Basis basis_ = Basis::g;
  Terms terms_;
};

/// a + c*b; throws UsageError on system or basis mismatch.
Element add_scale(const Element& a, const Element& b, const RingElem& c);

/// Product by rewriting. Returned in the common basis of the inputs, else g.
Element multiply(const Element& a, const Element& b);

/// g_h * g_s in the g basis.
std::shared_ptr<const Terms> mul_letter(const System& sys, const Heap& h, Letter s);
/// a * g_{w_1} * ... * g_{w_k} for an arbitrary (possibly non-reduced) word.
Element times_word(const Element& a, const std::vector<Letter>& w);
Element word_product(const System& sys, const std::vector<Letter>& w);

Element generator(const System& sys, Letter s, Basis basis = Basis::g);
Element generator_inverse(const System& sys, Letter s);
/// Inverse of g_w (or T_w) as a product of generator inverses.
Element inverse_of_basis_element(const Element& atom);
Element power(const Element& a, long k);

Element convert_basis(const Element& a, Basis target);
/// f_w expanded in the g basis.
const Element& f_in_g(const System& sys, const Heap& h);
/// f_w built along an arbitrary linear extension of the heap.
Element f_along_word(const System& sys, const std::vector<Letter>& w);

/// T_s T_w = v(q-1) T_w + q^2 T_{sw} for s a left descent of w.
Verification check_T_mult_rule(const System& sys, Letter s, const Heap& w);

/// Memo cache of heap-times-letter products; results are identical either way.
void set_product_cache_enabled(bool on);
bool product_cache_enabled();
void clear_caches();

struct ProductCacheEntry {
  System sys;
  Heap heap;
  Letter s;
  Terms product;
};
/// Snapshot of the heap-times-letter cache, sorted by (system, heap, letter).
std::vector<ProductCacheEntry> product_cache_entries();
/// Inserts a precomputed product; existing entries are kept.
void seed_product_cache(const System& sys, const Heap& h, Letter s, Terms product);

}  // namespace tlhat
