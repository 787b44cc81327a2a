#pragma once

// Markov elements A g_{s_n}^e B of TL-hat_{n+1} (A, B in the image of F_n),
// the two normal forms of affine FC heaps, the power decompositions around
// cox = g_{s_n ... s_1 a}, and the trace reduction to Markov elements.
//
// Throughout, n1 = n + 1 names the algebra TL-hat_{n1} (affine rank n) and
// preimages live in TL-hat_n (affine rank n - 1).

#include <optional>
#include <variant>

#include "tlhat/algebra.hpp"

namespace tlhat {

struct Falsification {
  std::string what;
};

/// A g_{s_n}^epsilon B with A = F(a_pre), B = F(b_pre).
struct MarkovElement {
  Element a_pre;
  int epsilon = 0;
  Element b_pre;
};

Element realize(int n1, const MarkovElement& m);

struct MarkovTerm {
  RingElem coeff;
  MarkovElement element;
};

struct AuditStep {
  enum class Kind { AlgebraIdentity, CyclicMove };
  Kind kind;
  std::string text;
};

/// F(c) cox^k, not yet rewritten in Markov terms.
struct PowerResidual {
  Element c_pre;
  int k = 0;
};

struct MarkovCombination {
  int n1 = 3;
  std::vector<MarkovTerm> terms;
  std::vector<PowerResidual> residual;
  std::vector<AuditStep> audit;

  /// Sum of coeff * trace(M) for a trace given on TL-hat_{n1}.
  template <class Trace>
  RingElem evaluate(Trace&& tr) const {
    RingElem acc;
    for (const auto& t : terms) acc += t.coeff * tr(realize(n1, t.element));
    return acc;
  }
};

// ---------------------------------------------------------------- words and preimages

/// Source system of F_n for the algebra TL-hat_{n1}.
System preimage_system(int n1);
/// P = t_{s_{n-1}} ... t_{s_1} t_a in TL-hat_n, so that F(P) = g_{s_{n-1} ... s_1} F(t_a).
Element P_pre(int n1);
/// Rotation of a preimage by d (the Dynkin rotation of TL-hat_n).
Element rot_pre(const Element& x, int d);

// ---------------------------------------------------------------- Markov detection and normal forms

/// Factorization of g_w as a Markov element when one is visible in the heap
/// or found by the k = 0 normal-form search.
std::optional<MarkovElement> is_markov(const Heap& w, int n1);

/// c cox^k g_{s_n ... s_i}; i = n+1 is the empty run.
struct Form1 {
  Element c_pre;
  int k = 0;
  int i = 0;
};
/// g_{s_{i0} ... s_1 a} cox^k d g_{s_n ... s_i}.
struct Form2 {
  int i0 = 0;
  int k = 0;
  Element d_pre;
  int i = 0;
};
using AffineNormalForm = std::variant<Form1, Form2>;

std::variant<Form1, Form2, Falsification> classify_affine(const Heap& w, int n1);
Element expand_normal_form(int n1, const AffineNormalForm& form);
std::string describe(int n1, const AffineNormalForm& form);

/// Preimage x with F(x) = y when y lies in the image of F_n up to the given
/// source length; nullopt otherwise.
std::optional<Element> F_preimage(int n1, const Element& y, int max_source_len);

// ---------------------------------------------------------------- decompositions

enum class Side { Left, Right };

/// Left:  g_n cox^k = sum_{i=1}^{k} F(f_i) cox^i + A F(P^k) g_n F(tail)
/// Right: cox^k g_n = sum_{i=1}^{k} F(h_i) cox^i + A F(tail) g_n F(P^k)
/// with f_k = h_k = q - 1 and A = q^k.
struct Lemma513 {
  int n1 = 3;
  int k = 1;
  Side side = Side::Left;
  std::map<int, Element> coeffs;
  RingElem A;
  Element tail_pre;
  Verification check;

  Element assemble() const;
};
Lemma513 lemma_513_decompose(int n1, int k, Side side);

/// Type 1: scalar g_n F(P^j) g_n F(h); type 2: scalar F(P^i) g_n F(f).
struct TypedTerm {
  int type = 1;
  int exponent = 0;
  Element coeff_pre;
  RingElem scalar;
};
struct Lemma515 {
  int n1 = 3;
  int k = 1;
  std::vector<TypedTerm> terms;
  Verification check;

  Element assemble() const;
};
Lemma515 lemma_515_decompose(int n1, int k);
/// prod_{i=0}^{k-1} of the rotation by i of t_a^{-1}, in increasing i.
Element lemma_515_top_h(int n1, int k);

/// g_n F(P^h) g_n = sum_j F(c_j) cox^j + sum of Markov terms.
struct Corollary516 {
  int n1 = 3;
  int h = 1;
  std::map<int, Element> c;
  std::vector<MarkovTerm> markov;
  Verification check;

  Element assemble() const;
};
Corollary516 corollary_516_expand(int n1, int h);

// ---------------------------------------------------------------- trace reduction

/// Rewrites the trace of an element of TL-hat_3 as a combination of traces of
/// Markov elements, valid for every trace. Other ranks raise UsageError.
MarkovCombination reduce_trace_to_markov(const Element& a);

/// Merge terms with equal (A, epsilon, B) after expanding A and B in the basis.
std::vector<MarkovTerm> normalize_terms(const std::vector<MarkovTerm>& terms);

}  // namespace tlhat
