#include "tlhat/expr.hpp"

#include <cctype>

#include "tlhat/maps.hpp"
#include "tlhat/trace.hpp"

namespace tlhat {

ParseError::ParseError(const std::string& what, std::size_t position)
    : UsageError(what + " at position " + std::to_string(position)), position_(position) {}

bool operator==(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.args.size() != b.args.size()) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (!(*a.args[i] == *b.args[i])) return false;
  return a.scalar == b.scalar && a.basis == b.basis && a.word == b.word && a.exponent == b.exponent &&
         a.map == b.map && a.signs == b.signs;
}

namespace {

ExprPtr make(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

ExprPtr scalar_node(RingElem c) {
  Expr e;
  e.kind = Expr::Kind::Scalar;
  e.scalar = std::move(c);
  return make(std::move(e));
}

bool is_scalar(const ExprPtr& e) { return e->kind == Expr::Kind::Scalar; }

System inner_system(const std::string& map, const System& sys, std::size_t pos) {
  if (map == "F") {
    if (!sys.affine || sys.rank < 1) throw ParseError("F needs an affine system of rank >= 1", pos);
    return System::affine_of(sys.rank - 1);
  }
  if (map == "E") {
    if (sys.affine) throw ParseError("E maps into a finite system", pos);
    return System::affine_of(sys.rank);
  }
  if (map == "incl") {
    if (!sys.affine) throw ParseError("incl maps into an affine system", pos);
    return System::finite(sys.rank);
  }
  if (!sys.affine) throw ParseError("psi acts on affine systems", pos);
  return sys;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  ExprPtr parse(const System& sys) {
    ExprPtr e = expr(sys);
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, i_); }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool peek(char c) {
    skip();
    return i_ < s_.size() && s_[i_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++i_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string identifier() {
    skip();
    const std::size_t start = i_;
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
    return s_.substr(start, i_ - start);
  }

  long integer_exponent() {
    skip();
    bool neg = accept('-');
    skip();
    if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_]))) fail("expected an integer exponent");
    long v = 0;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      v = v * 10 + (s_[i_++] - '0');
      if (v > 1000000) fail("exponent too large");
    }
    return neg ? -v : v;
  }

  ExprPtr expr(const System& sys) {
    Expr sum;
    sum.kind = Expr::Kind::Sum;
    int sign = accept('-') ? -1 : 1;
    for (;;) {
      sum.args.push_back(term(sys));
      sum.signs.push_back(sign);
      if (accept('+')) {
        sign = 1;
      } else if (accept('-')) {
        sign = -1;
      } else {
        break;
      }
    }
    if (sum.args.size() == 1 && sum.signs[0] == 1) return sum.args[0];
    bool all_scalar = true;
    for (const auto& a : sum.args) all_scalar = all_scalar && is_scalar(a);
    if (all_scalar) {
      RingElem acc;
      for (std::size_t k = 0; k < sum.args.size(); ++k) acc += sum.args[k]->scalar * RingElem(sum.signs[k]);
      return scalar_node(acc);
    }
    return make(std::move(sum));
  }

  ExprPtr term(const System& sys) {
    ExprPtr acc = factor(sys);
    bool chain = false;  // acc is a product built in this term
    for (;;) {
      if (accept('*')) {
        ExprPtr rhs = factor(sys);
        if (is_scalar(acc) && is_scalar(rhs)) {
          acc = scalar_node(acc->scalar * rhs->scalar);
          chain = false;
        } else if (chain) {
          Expr p = *acc;
          p.args.push_back(rhs);
          acc = make(std::move(p));
        } else {
          Expr p;
          p.kind = Expr::Kind::Product;
          p.args = {acc, rhs};
          acc = make(std::move(p));
          chain = true;
        }
      } else if (peek('/')) {
        const std::size_t at = i_;
        ++i_;
        ExprPtr rhs = factor(sys);
        if (!is_scalar(rhs)) throw ParseError("division by a non-scalar", at);
        if (rhs->scalar.is_zero()) throw ParseError("division by zero", at);
        if (is_scalar(acc)) {
          acc = scalar_node(acc->scalar / rhs->scalar);
        } else {
          Expr q;
          q.kind = Expr::Kind::Quotient;
          q.args = {acc};
          q.scalar = rhs->scalar;
          acc = make(std::move(q));
        }
        chain = false;
      } else {
        return acc;
      }
    }
  }

  ExprPtr factor(const System& sys) {
    ExprPtr base = primary(sys);
    if (!accept('^')) return base;
    const std::size_t at = i_;
    const long k = integer_exponent();
    if (is_scalar(base)) {
      if (k < 0 && base->scalar.is_zero()) throw ParseError("division by zero", at);
      return scalar_node(base->scalar.pow(k));
    }
    if (k < 0) {
      if (base->kind != Expr::Kind::Atom) throw ParseError("only atoms can be inverted", at);
      if (base->basis == Basis::f) throw ParseError("f atoms are not invertible", at);
    }
    Expr p;
    p.kind = Expr::Kind::Power;
    p.exponent = k;
    p.args = {base};
    return make(std::move(p));
  }

  ExprPtr primary(const System& sys) {
    skip();
    if (i_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[i_];
    if (c == '(') {
      ++i_;
      ExprPtr e = expr(sys);
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      return scalar_node(RingElem(Poly(std::vector<mpz_class>{mpz_class(s_.substr(start, i_ - start))})));
    }
    const std::size_t start = i_;
    const std::string id = identifier();
    if (id.empty()) fail("unexpected '" + std::string(1, c) + "'");
    if (id == "q") return scalar_node(RingElem::q());
    if (id == "v") return scalar_node(RingElem::v());
    if ((id == "g" || id == "T" || id == "f") && peek('[')) return atom(id, sys);
    if (id == "F" || id == "E" || id == "incl" || id == "psi") {
      Expr m;
      m.kind = Expr::Kind::Map;
      m.map = id;
      if (id == "psi" && accept('^')) m.exponent = integer_exponent();
      const System inner = inner_system(id, sys, start);
      expect('(');
      m.args = {expr(inner)};
      expect(')');
      return make(std::move(m));
    }
    i_ = start;
    fail("unknown identifier '" + id + "'");
  }

  ExprPtr atom(const std::string& id, const System& sys) {
    expect('[');
    const std::size_t start = i_;
    const std::size_t close = s_.find(']', i_);
    if (close == std::string::npos) fail("missing ']'");
    Expr a;
    a.kind = Expr::Kind::Atom;
    a.basis = parse_basis(id);
    try {
      a.word = parse_word(sys, s_.substr(start, close - start));
    } catch (const std::exception& e) {
      throw ParseError(e.what(), start);
    }
    if (a.word.empty()) throw ParseError("empty word in atom", start);
    if (a.basis == Basis::f && !std::holds_alternative<Heap>(canonicalize(sys, a.word)))
      throw ParseError("f atoms need a fully commutative reduced word", start);
    i_ = close + 1;
    return make(std::move(a));
  }

  const std::string& s_;
  std::size_t i_ = 0;
};

std::string scalar_text(const RingElem& c) {
  const std::string s = c.to_string();
  bool plain = s == "v";
  if (!plain) {
    plain = !s.empty();
    for (char ch : s) plain = plain && std::isdigit(static_cast<unsigned char>(ch));
  }
  return plain ? s : "(" + s + ")";
}

std::string print_in(const Expr& e, const System& sys);

std::string wrap_if(const Expr& e, const System& sys, std::initializer_list<Expr::Kind> kinds) {
  for (auto k : kinds)
    if (e.kind == k) return "(" + print_in(e, sys) + ")";
  return print_in(e, sys);
}

std::string print_in(const Expr& e, const System& sys) {
  using K = Expr::Kind;
  switch (e.kind) {
    case K::Scalar:
      return scalar_text(e.scalar);
    case K::Atom:
      return basis_name(e.basis) + "[" + word_to_string(sys, e.word) + "]";
    case K::Power:
      return wrap_if(*e.args[0], sys, {K::Power, K::Product, K::Quotient, K::Sum}) + "^" + std::to_string(e.exponent);
    case K::Product: {
      std::string out;
      for (const auto& a : e.args) {
        if (!out.empty()) out += " * ";
        out += wrap_if(*a, sys, {K::Product, K::Quotient, K::Sum});
      }
      return out;
    }
    case K::Quotient:
      return wrap_if(*e.args[0], sys, {K::Sum}) + " / (" + e.scalar.to_string() + ")";
    case K::Sum: {
      std::string out;
      for (std::size_t k = 0; k < e.args.size(); ++k) {
        const std::string t = wrap_if(*e.args[k], sys, {K::Sum});
        if (k == 0)
          out = e.signs[k] < 0 ? "-" + t : t;
        else
          out += (e.signs[k] < 0 ? " - " : " + ") + t;
      }
      return out;
    }
    case K::Map: {
      std::string head = e.map;
      if (e.map == "psi" && e.exponent != 1) head += "^" + std::to_string(e.exponent);
      return head + "(" + print_in(*e.args[0], inner_system(e.map, sys, 0)) + ")";
    }
  }
  return {};
}

Element atom_inverse(const System& sys, const Expr& a) {
  Element r = Element::one(sys, a.basis);
  for (Letter s : a.word) {
    Element inv = a.basis == Basis::T ? T_inverse(sys, s) : generator_inverse(sys, s);
    r = multiply(inv, r);
  }
  return r;
}

}  // namespace

ExprPtr parse_expr(const std::string& text, const System& sys) { return Parser(text).parse(sys); }

std::string print_expr(const Expr& e, const System& sys) { return print_in(e, sys); }

Element evaluate(const Expr& e, const System& sys) {
  using K = Expr::Kind;
  switch (e.kind) {
    case K::Scalar:
      return Element::scalar(sys, e.scalar);
    case K::Atom: {
      if (e.basis == Basis::f) return Element::basis_element(sys, heap_of(sys, e.word), Basis::f);
      Element g = word_product(sys, e.word);
      if (e.basis == Basis::g) return g;
      return convert_basis(g * RingElem::v().pow(static_cast<long>(e.word.size())), Basis::T);
    }
    case K::Power: {
      const Expr& base = *e.args[0];
      if (e.exponent >= 0) return power(evaluate(base, sys), e.exponent);
      return power(atom_inverse(sys, base), -e.exponent);
    }
    case K::Product: {
      Element acc = evaluate(*e.args[0], sys);
      for (std::size_t k = 1; k < e.args.size(); ++k) acc = multiply(acc, evaluate(*e.args[k], sys));
      return acc;
    }
    case K::Quotient:
      return evaluate(*e.args[0], sys) * e.scalar.inverse();
    case K::Sum: {
      Element acc = evaluate(*e.args[0], sys) * RingElem(e.signs[0]);
      for (std::size_t k = 1; k < e.args.size(); ++k)
        acc = add_scale(acc, evaluate(*e.args[k], sys), RingElem(e.signs[k]));
      return acc;
    }
    case K::Map: {
      const Element x = evaluate(*e.args[0], inner_system(e.map, sys, 0));
      if (e.map == "F") return apply_F(sys.rank, x);
      if (e.map == "E") return apply_E(sys.rank, x);
      if (e.map == "incl") return incl(x);
      return apply_psi(x, static_cast<int>(e.exponent));
    }
  }
  throw UsageError("malformed expression");
}

Element parse_element(const std::string& text, const System& sys) { return evaluate(*parse_expr(text, sys), sys); }

namespace {

// No '+' or '-' outside parentheses, except a leading sign.
bool single_term(const std::string& s) {
  int depth = 0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] == '(') ++depth;
    if (s[k] == ')') --depth;
    if (depth == 0 && k > 0 && (s[k] == '+' || s[k] == '-')) return false;
  }
  return true;
}

}  // namespace

std::string element_to_expr(const Element& a) {
  const System& sys = a.system();
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& [h, c] : a.terms()) {
    const std::string atom = h.empty() ? "" : basis_name(a.basis()) + "[" + h.to_string(sys) + "]";
    bool negative = false;
    std::string coeff = c.to_string();
    if (coeff[0] == '-' && single_term(coeff)) {
      negative = true;
      coeff = (-c).to_string();
    }
    if (!single_term(coeff)) coeff = "(" + coeff + ")";
    std::string t = atom.empty() ? coeff : coeff == "1" ? atom : coeff + " * " + atom;
    if (out.empty())
      out = negative ? "-" + t : t;
    else
      out += (negative ? " - " : " + ") + t;
  }
  return out;
}

}  // namespace tlhat
