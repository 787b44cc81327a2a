#pragma once

// Planar (non-crossing) pair diagrams on N = n+1 top and N bottom points,
// an independent model of TL_n with loop value z. Points 0..N-1 are the top
// row and N..2N-1 the bottom row, both read left to right.

#include <map>
#include <vector>

#include "tlhat/algebra.hpp"

namespace tlhat {

class Diagram {
 public:
  static Diagram identity(int strands);
  /// Cup-cap joining strands i-1 and i (1 <= i < strands).
  static Diagram e(int strands, int i);

  int strands() const { return n_; }
  int partner(int p) const { return match_[p]; }
  bool is_planar() const;
  bool valid() const;
  std::string to_string() const;

  friend bool operator==(const Diagram&, const Diagram&) = default;
  friend auto operator<=>(const Diagram&, const Diagram&) = default;

  explicit Diagram(std::vector<int> match);

 private:
  int n_ = 0;
  std::vector<int> match_;
};

struct DiagramProduct {
  Diagram diagram;
  int loops;
};

/// d1 stacked on top of d2.
DiagramProduct diagram_multiply(const Diagram& d1, const Diagram& d2);

/// Closed loops after joining top i to bottom i.
int closure_loops(const Diagram& d);
/// z^{loops - 1}, so that the identity on N strands gives z^{N-1}.
RingElem oracle_trace(const Diagram& d);

/// All planar matchings on N + N points, generated directly.
std::vector<Diagram> all_planar_diagrams(int strands);

using DiagramVector = std::map<Diagram, RingElem>;

DiagramVector diagram_vector_multiply(const DiagramVector& a, const DiagramVector& b);
RingElem oracle_trace(const DiagramVector& a);

/// Diagram of a word e_{w_1} ... e_{w_k}, with the loop count of the product.
DiagramProduct word_diagram(int strands, const std::vector<Letter>& w);

/// f_w -> z^{-l(w)} e_w on elements of TL_n (any basis; converted to f).
DiagramVector map_f_to_diagrams(const Element& a);

/// map(x y) = map(x) map(y) for every pair of g-basis elements of TL_n.
Verification check_structure_constants(int n);
/// jones_tau(g_w) = oracle_trace(map(g_w)) for every basis heap of TL_n.
Verification check_oracle_trace(int n);

}  // namespace tlhat
