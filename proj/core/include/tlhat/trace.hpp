#pragma once

// The Jones trace tau_{n+1} on TL_n and the affine trace
// rho_{n+1} = tau_{n+1} o E_n on TL-hat_{n+1}.

#include "tlhat/algebra.hpp"

namespace tlhat {

/// tau_{n+1}(a) for a in TL_n (finite rank n).
RingElem jones_tau(const Element& a);
/// tau_{n+1}(g_w).
RingElem jones_tau_g(int n, const Heap& w);

/// rho_{n1}(a) for a in TL-hat_{n1} (affine rank n1-1); rho_1 is the identity on K.
RingElem rho(int n1, const Element& a);
RingElem rho_g(int n1, const Heap& w);

/// T_s^{-1} = q^{-2} T_s - (q-1)/(q v), in the T basis.
Element T_inverse(const System& sys, Letter s);

/// rho_{n+1}(F_n(h) T_{s_n}^{+-1}) = rho_n(h), rho_{n+1}(F_n(h)) = z rho_n(h),
/// and psi-invariance of rho_{n+1} on all heaps up to psi_max_len.
Verification check_affine_markov_axioms(int nmax, int samples, unsigned long long seed, int max_len = 6,
                                        int psi_max_len = 6);
/// rho_{n1}(xy) = rho_{n1}(yx) on random pairs.
Verification check_trace_property(int n1, int samples, unsigned long long seed, int max_len = 5);

}  // namespace tlhat
