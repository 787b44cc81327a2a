#pragma once

// Named verification suites shared by the command line and the tests.

#include <string>
#include <vector>

#include "tlhat/coxeter.hpp"
#include "tlhat/report.hpp"

namespace tlhat {

struct SuiteConfig {
  /// Largest rank n covered (suite-specific default when <= 0).
  int n = 0;
  /// Length bound for enumerations and random words (suite-specific default when <= 0).
  int max_len = 0;
  unsigned long long seed = 1;
  int samples = 100;
};

std::vector<std::string> suite_names();
bool is_suite(const std::string& name);
/// Throws UsageError for an unknown suite.
std::vector<Verification> run_suite(const std::string& name, const SuiteConfig& cfg);

// Building blocks, also used directly by the tests.

/// Quadratic, commutation and V relations in g, their T forms, and the f-basis
/// consequences f_s^2 = f_s, f_s f_t f_s = delta f_s.
Verification check_relations(const System& sys);
/// |FC(A_n)| against the Catalan numbers for n = 1..nmax.
Verification check_catalan(int nmax);
/// (ab)c = a(bc) on random basis triples.
Verification check_associativity(const System& sys, int samples, int max_len, unsigned long long seed);
/// f_w computed along random linear extensions of each heap agrees with the cached f_w.
Verification check_f_independence(const System& sys, int max_len, int extensions, unsigned long long seed);
/// E_n(incl(g_w)) = g_w on every heap of TL_n.
Verification check_E_incl(int n);

}  // namespace tlhat
