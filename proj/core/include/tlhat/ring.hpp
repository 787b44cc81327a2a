#pragma once

// Exact coefficient field K = Q(v), with q = v^2.

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace tlhat {

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero in coefficient field") {}
};

/// Dense integer polynomial in v, ascending degree, no trailing zeros.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<mpz_class> coeffs);
  Poly(long c);  // NOLINT: implicit from integer constants

  static Poly monomial(mpz_class c, std::size_t degree);

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const mpz_class& lead() const { return c_.back(); }
  const std::vector<mpz_class>& coeffs() const { return c_; }
  const mpz_class& operator[](std::size_t i) const { return c_[i]; }

  mpz_class content() const;
  Poly primitive() const;  // divided by content, sign of lead kept

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const mpz_class& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const mpz_class& s) { return a *= s; }

  friend bool operator==(const Poly&, const Poly&) = default;

  /// Exact division; throws std::logic_error if b does not divide *this over Z[v].
  Poly exact_div(const Poly& b) const;
  Poly exact_div(const mpz_class& s) const;

  /// Primitive gcd over Q[v] (positive leading coefficient). gcd(0,0) = 0.
  static Poly gcd(const Poly& a, const Poly& b);

  mpq_class eval(const mpq_class& v) const;
  std::size_t hash() const;

 private:
  void trim();
  std::vector<mpz_class> c_;
};

/// Element of Q(v) in canonical form: gcd(num, den) = 1, combined content 1,
/// positive leading coefficient of den. Structural equality is equality in K.
class RingElem {
 public:
  RingElem() : num_(), den_(1) {}
  RingElem(long c) : num_(c), den_(1) {}  // NOLINT
  RingElem(Poly num, Poly den);
  explicit RingElem(Poly num) : num_(std::move(num)), den_(1) {}

  static RingElem v();
  static RingElem q();
  /// q / (1+q)^2
  static RingElem delta();
  /// -(1+q)/v, the loop value and the Jones trace multiplier.
  static RingElem z();
  /// Named constant lookup ("q", "v", "delta", "z").
  static RingElem constant(const std::string& name);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  RingElem operator-() const;
  RingElem& operator+=(const RingElem& o);
  RingElem& operator-=(const RingElem& o);
  RingElem& operator*=(const RingElem& o);
  RingElem& operator/=(const RingElem& o);
  friend RingElem operator+(RingElem a, const RingElem& b) { return a += b; }
  friend RingElem operator-(RingElem a, const RingElem& b) { return a -= b; }
  friend RingElem operator*(RingElem a, const RingElem& b) { return a *= b; }
  friend RingElem operator/(RingElem a, const RingElem& b) { return a /= b; }

  RingElem inverse() const;
  RingElem pow(long e) const;
  std::optional<RingElem> checked_div(const RingElem& b) const;

  friend bool operator==(const RingElem&, const RingElem&) = default;

  /// Value at a rational point; throws DivisionByZero if den vanishes there.
  mpq_class eval(const mpq_class& v) const;

  /// Human-readable, parseable form such as "(-1-v^2)/(v)".
  std::string to_string() const;
  /// Coefficient-list form "[c0,c1,...]/[d0,d1,...]".
  std::string to_coeff_string() const;
  std::size_t hash() const { return num_.hash() * 31 + den_.hash(); }

 private:
  void canonicalize();
  Poly num_;
  Poly den_;
};

std::ostream& operator<<(std::ostream& os, const RingElem& r);
std::string poly_to_string(const Poly& p);

}  // namespace tlhat

template <>
struct std::hash<tlhat::RingElem> {
  std::size_t operator()(const tlhat::RingElem& r) const { return r.hash(); }
};
