#pragma once

// Tower maps between the algebras:
//   F_n : TL-hat_n  -> TL-hat_{n+1}   (affine rank n-1 -> affine rank n)
//   E_n : TL-hat_{n+1} -> TL_n        (affine rank n   -> finite rank n)
//   incl: TL_n -> TL-hat_{n+1} and TL_{n-1} -> TL_n
//   psi : the Dynkin rotation of TL-hat_{n+1}

#include "tlhat/algebra.hpp"

namespace tlhat {

/// F_n on an element of affine rank n-1. F_1 sends scalars to scalars.
Element apply_F(int n, const Element& a);
/// Image of a single source letter under F_n.
const Element& F_letter(int n, Letter s);

/// E_n on an element of affine rank n.
Element apply_E(int n, const Element& a);
const Element& E_letter(int n, Letter s);

/// Finite rank n into affine rank n (same labels).
Element incl(const Element& a);
/// Finite rank n-1 into finite rank n.
Element incl_finite(const Element& a);

/// Dynkin rotation by d on an affine element (coefficients unchanged).
Element apply_psi(const Element& a, int d);

/// g_{s_n ... s_1 a} in affine rank n.
Element cox_element(int n);
std::vector<Letter> cox_word(int n);

/// E_n o F_n = incl o E_{n-1} on all generators of TL-hat_n and on random
/// products of them.
Verification check_commuting_diagram(int n, int samples, unsigned seed);

/// cox^d F_n(x) = F_n(psi_n^{-d} x) cox^d, with psi_n^{-1} acting on
/// TL-hat_n as s_1 -> a_n -> s_{n-1} -> ... -> s_1.
Verification check_conjugation_convention(int n, const Element& x, int d);

}  // namespace tlhat
