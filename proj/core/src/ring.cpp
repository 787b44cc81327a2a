#include "tlhat/ring.hpp"

#include <algorithm>
#include <sstream>

namespace tlhat {

// ---------------------------------------------------------------- Poly

Poly::Poly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(long c) {
  if (c != 0) c_.emplace_back(c);
}

Poly Poly::monomial(mpz_class c, std::size_t degree) {
  if (c == 0) return {};
  std::vector<mpz_class> cs(degree + 1);
  cs[degree] = std::move(c);
  return Poly(std::move(cs));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpz_class Poly::content() const {
  mpz_class g = 0;
  for (const auto& c : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Poly Poly::primitive() const {
  if (is_zero()) return {};
  mpz_class g = content();
  if (g == 1) return *this;
  return exact_div(g);
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const mpz_class& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      mpz_addmul(r[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
  }
  return Poly(std::move(r));
}

Poly Poly::exact_div(const mpz_class& s) const {
  Poly r = *this;
  for (auto& c : r.c_) {
    if (!mpz_divisible_p(c.get_mpz_t(), s.get_mpz_t()))
      throw std::logic_error("Poly::exact_div: scalar does not divide");
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), s.get_mpz_t());
  }
  return r;
}

Poly Poly::exact_div(const Poly& b) const {
  if (b.is_zero()) throw DivisionByZero();
  if (is_zero()) return {};
  if (b.c_.size() == 1) return exact_div(b.c_[0]);
  if (degree() < b.degree()) throw std::logic_error("Poly::exact_div: degree too small");
  std::vector<mpz_class> rem = c_;
  std::vector<mpz_class> quo(c_.size() - b.c_.size() + 1);
  const mpz_class& lb = b.lead();
  for (int i = static_cast<int>(quo.size()) - 1; i >= 0; --i) {
    mpz_class& top = rem[i + b.degree()];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t()))
      throw std::logic_error("Poly::exact_div: not divisible");
    mpz_divexact(quo[i].get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      mpz_submul(rem[i + j].get_mpz_t(), quo[i].get_mpz_t(), b.c_[j].get_mpz_t());
  }
  for (const auto& c : rem)
    if (c != 0) throw std::logic_error("Poly::exact_div: nonzero remainder");
  return Poly(std::move(quo));
}

namespace {

// Pseudo-remainder of a by b, made primitive.
Poly prem_primitive(Poly a, const Poly& b) {
  const int db = b.degree();
  std::vector<mpz_class> r = a.coeffs();
  const mpz_class& lb = b.lead();
  while (static_cast<int>(r.size()) - 1 >= db) {
    mpz_class lr = r.back();
    const std::size_t shift = r.size() - 1 - db;
    for (auto& c : r) c *= lb;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j)
      mpz_submul(r[shift + j].get_mpz_t(), lr.get_mpz_t(), b.coeffs()[j].get_mpz_t());
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  return Poly(std::move(r)).primitive();
}

}  // namespace

Poly Poly::gcd(const Poly& a0, const Poly& b0) {
  if (a0.is_zero() && b0.is_zero()) return {};
  Poly a = a0.primitive();
  Poly b = b0.primitive();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    if (b.degree() == 0) return Poly(1);
    Poly r = prem_primitive(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.lead() < 0) a = -a;
  return a;
}

mpq_class Poly::eval(const mpq_class& v) const {
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + mpq_class(*it);
  return acc;
}

std::size_t Poly::hash() const {
  std::size_t h = c_.size();
  for (const auto& c : c_) h = h * 1000003u ^ static_cast<std::size_t>(mpz_get_si(c.get_mpz_t()));
  return h;
}

std::string poly_to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    const mpz_class& c = p[i];
    if (c == 0) continue;
    mpz_class a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? "-" : "+");
    }
    first = false;
    if (i == 0) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << "*";
    os << "v";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

// ---------------------------------------------------------------- RingElem

RingElem::RingElem(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero();
  canonicalize();
}

void RingElem::canonicalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (den_.degree() > 0) {
    // Strip common powers of v before the general gcd.
    std::size_t vn = 0, vd = 0;
    while (num_[vn] == 0) ++vn;
    while (den_[vd] == 0) ++vd;
    const std::size_t common = std::min(vn, vd);
    if (common > 0) {
      num_ = Poly(std::vector<mpz_class>(num_.coeffs().begin() + common, num_.coeffs().end()));
      den_ = Poly(std::vector<mpz_class>(den_.coeffs().begin() + common, den_.coeffs().end()));
    }
    if (den_.degree() > 0 && num_.degree() >= 0) {
      Poly g = Poly::gcd(num_, den_);
      if (g.degree() > 0) {
        num_ = num_.exact_div(g);
        den_ = den_.exact_div(g);
      }
    }
  }
  mpz_class c = num_.content();
  mpz_class d = den_.content();
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
  if (den_.lead() < 0) g = -g;
  if (g != 1) {
    num_ = num_.exact_div(g);
    den_ = den_.exact_div(g);
  }
}

RingElem RingElem::v() { return RingElem(Poly::monomial(1, 1)); }
RingElem RingElem::q() { return RingElem(Poly::monomial(1, 2)); }

RingElem RingElem::delta() {
  Poly one_plus_q(std::vector<mpz_class>{1, 0, 1});
  return RingElem(Poly::monomial(1, 2), one_plus_q * one_plus_q);
}

RingElem RingElem::z() {
  return RingElem(Poly(std::vector<mpz_class>{-1, 0, -1}), Poly::monomial(1, 1));
}

RingElem RingElem::constant(const std::string& name) {
  if (name == "q") return q();
  if (name == "v") return v();
  if (name == "delta") return delta();
  if (name == "z") return z();
  throw std::invalid_argument("unknown constant '" + name + "'");
}

RingElem RingElem::operator-() const {
  RingElem r = *this;
  r.num_ = -r.num_;
  return r;
}

RingElem& RingElem::operator+=(const RingElem& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    canonicalize();
    return *this;
  }
  if (o.den_.is_one()) {
    num_ += o.num_ * den_;
    return *this;  // already coprime: gcd(a + b*d, d) = gcd(a, d)
  }
  if (den_.is_one()) {
    num_ = num_ * o.den_ + o.num_;
    den_ = o.den_;
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  canonicalize();
  return *this;
}

RingElem& RingElem::operator-=(const RingElem& o) { return *this += -o; }

RingElem& RingElem::operator*=(const RingElem& o) {
  if (is_zero() || o.is_zero()) return *this = RingElem();
  if (o.is_one()) return *this;
  if (den_.is_one() && o.den_.is_one()) {
    num_ = num_ * o.num_;
    return *this;
  }
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  canonicalize();
  return *this;
}

RingElem RingElem::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return RingElem(den_, num_);
}

RingElem& RingElem::operator/=(const RingElem& o) { return *this *= o.inverse(); }

std::optional<RingElem> RingElem::checked_div(const RingElem& b) const {
  if (b.is_zero()) return std::nullopt;
  return *this / b;
}

RingElem RingElem::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  RingElem r = 1, base = *this;
  while (e > 0) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return r;
}

mpq_class RingElem::eval(const mpq_class& v) const {
  mpq_class d = den_.eval(v);
  if (d == 0) throw DivisionByZero();
  mpq_class r = num_.eval(v) / d;
  r.canonicalize();
  return r;
}

std::string RingElem::to_string() const {
  if (den_.is_one()) return poly_to_string(num_);
  return "(" + poly_to_string(num_) + ")/(" + poly_to_string(den_) + ")";
}

std::string RingElem::to_coeff_string() const {
  auto list = [](const Poly& p) {
    std::string s = "[";
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
      if (i) s += ",";
      s += p[i].get_str();
    }
    return s + "]";
  };
  return list(num_) + "/" + list(den_);
}

std::ostream& operator<<(std::ostream& os, const RingElem& r) { return os << r.to_string(); }

}  // namespace tlhat
