#pragma once

// Surface language for algebra elements.
//
//   expr    := ['-'] term (('+' | '-') term)*
//   term    := factor (('*' | '/') factor)*
//   factor  := primary ['^' int]
//   primary := scalar | atom | map '(' expr ')' | '(' expr ')'
//   atom    := ('g' | 'T' | 'f') '[' letter+ ']'
//   map     := 'F' | 'E' | 'incl' | 'psi' ['^' int]
//   scalar  := integer | 'q' | 'v'
//
// Subexpressions built only from scalars fold into a single scalar node, so a
// printed scalar such as (-1-v^2)/(v) parses back to the same node. Division
// requires a scalar divisor; negative powers need a g or T atom or a scalar.
// F, E and incl change the system: inside F the system is the affine one of
// rank one less, inside E the affine one of the same rank, inside incl the
// finite one of the same rank.

#include <memory>

#include "tlhat/algebra.hpp"

namespace tlhat {

class ParseError : public UsageError {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { Scalar, Atom, Power, Product, Quotient, Sum, Map };

  Kind kind = Kind::Scalar;
  RingElem scalar;              // Scalar; divisor of a Quotient
  Basis basis = Basis::g;       // Atom
  std::vector<Letter> word;     // Atom
  long exponent = 1;            // Power; rotation of psi
  std::string map;              // Map: F, E, incl or psi
  std::vector<ExprPtr> args;    // Power, Product, Quotient, Sum, Map
  std::vector<int> signs;       // Sum: +1 or -1 per argument

  friend bool operator==(const Expr& a, const Expr& b);
};

ExprPtr parse_expr(const std::string& text, const System& sys);
std::string print_expr(const Expr& e, const System& sys);
Element evaluate(const Expr& e, const System& sys);

/// parse then evaluate.
Element parse_element(const std::string& text, const System& sys);
/// Expression text for an element: a sum of coefficient times atom.
std::string element_to_expr(const Element& a);

}  // namespace tlhat
