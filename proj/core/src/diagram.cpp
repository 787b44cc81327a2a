#include "tlhat/diagram.hpp"

#include <algorithm>
#include <sstream>

#include "tlhat/trace.hpp"

namespace tlhat {

Diagram::Diagram(std::vector<int> match) : n_(static_cast<int>(match.size()) / 2), match_(std::move(match)) {}

Diagram Diagram::identity(int strands) {
  std::vector<int> m(2 * strands);
  for (int i = 0; i < strands; ++i) {
    m[i] = strands + i;
    m[strands + i] = i;
  }
  return Diagram(std::move(m));
}

Diagram Diagram::e(int strands, int i) {
  if (i < 1 || i >= strands) throw UsageError("e_i needs 1 <= i < strands");
  Diagram d = identity(strands);
  auto& m = d.match_;
  m[i - 1] = i;
  m[i] = i - 1;
  m[strands + i - 1] = strands + i;
  m[strands + i] = strands + i - 1;
  return d;
}

bool Diagram::valid() const {
  if (match_.size() != static_cast<std::size_t>(2 * n_)) return false;
  for (int p = 0; p < 2 * n_; ++p) {
    const int r = match_[p];
    if (r < 0 || r >= 2 * n_ || r == p || match_[r] != p) return false;
  }
  return true;
}

bool Diagram::is_planar() const {
  // Around the boundary: top row left to right, then bottom row right to left.
  auto pos = [&](int p) { return p < n_ ? p : 3 * n_ - 1 - p; };
  for (int p = 0; p < 2 * n_; ++p) {
    for (int r = 0; r < 2 * n_; ++r) {
      int a = pos(p), b = pos(match_[p]), c = pos(r), d = pos(match_[r]);
      if (a > b) std::swap(a, b);
      if (c > d) std::swap(c, d);
      if (a < c && c < b && b < d) return false;
    }
  }
  return true;
}

std::string Diagram::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int p = 0; p < 2 * n_; ++p) {
    if (match_[p] < p) continue;
    if (!first) os << " ";
    first = false;
    auto name = [&](int x) { return (x < n_ ? "t" : "b") + std::to_string(x < n_ ? x : x - n_); };
    os << name(p) << "-" << name(match_[p]);
  }
  os << "}";
  return os.str();
}

DiagramProduct diagram_multiply(const Diagram& d1, const Diagram& d2) {
  const int n = d1.strands();
  if (d2.strands() != n) throw UsageError("diagram size mismatch");
  // Glue points: d1 uses 0..2n-1, d2 uses 2n..4n-1; d1 bottom j meets d2 top j.
  auto arc = [&](int p) { return p < 2 * n ? d1.partner(p) : 2 * n + d2.partner(p - 2 * n); };
  auto glue = [&](int p) { return p < 2 * n ? 2 * n + (p - n) : n + (p - 2 * n); };
  auto is_middle = [&](int p) { return (p >= n && p < 2 * n) || (p >= 2 * n && p < 3 * n); };
  auto outer_index = [&](int p) { return p < n ? p : p - 2 * n; };  // to product labels

  std::vector<int> m(2 * n, -1);
  std::vector<char> seen(4 * n, 0);
  for (int k = 0; k < 2 * n; ++k) {
    const int p0 = k < n ? k : 2 * n + k;  // d1 top k, or d2 bottom (k-n)
    if (m[k] != -1) continue;
    int p = p0;
    seen[p] = 1;
    int r = arc(p);
    seen[r] = 1;
    while (is_middle(r)) {
      p = glue(r);
      seen[p] = 1;
      r = arc(p);
      seen[r] = 1;
    }
    const int a = outer_index(p0), b = outer_index(r);
    m[a] = b;
    m[b] = a;
  }
  int loops = 0;
  for (int p = n; p < 2 * n; ++p) {
    if (seen[p]) continue;
    ++loops;
    int x = p;
    do {
      seen[x] = 1;
      const int y = arc(x);
      seen[y] = 1;
      x = glue(y);
    } while (x != p);
  }
  return {Diagram(std::move(m)), loops};
}

int closure_loops(const Diagram& d) {
  const int n = d.strands();
  std::vector<char> seen(2 * n, 0);
  int loops = 0;
  for (int p = 0; p < 2 * n; ++p) {
    if (seen[p]) continue;
    ++loops;
    int x = p;
    do {
      seen[x] = 1;
      const int y = d.partner(x);
      seen[y] = 1;
      x = y < n ? y + n : y - n;  // closure strand joins top i and bottom i
    } while (!seen[x]);
  }
  return loops;
}

RingElem oracle_trace(const Diagram& d) { return RingElem::z().pow(closure_loops(d) - 1); }

namespace {

using Arcs = std::vector<std::pair<int, int>>;

// Non-crossing perfect matchings of boundary positions lo..hi-1.
std::vector<Arcs> matchings(int lo, int hi) {
  if (lo >= hi) return {Arcs{}};
  std::vector<Arcs> out;
  for (int j = lo + 1; j < hi; j += 2) {
    auto inner = matchings(lo + 1, j);
    auto outer = matchings(j + 1, hi);
    for (const auto& a : inner) {
      for (const auto& b : outer) {
        Arcs arcs{{lo, j}};
        arcs.insert(arcs.end(), a.begin(), a.end());
        arcs.insert(arcs.end(), b.begin(), b.end());
        out.push_back(std::move(arcs));
      }
    }
  }
  return out;
}

}  // namespace

std::vector<Diagram> all_planar_diagrams(int strands) {
  const int n = strands;
  // Boundary position to point label: top row left to right, bottom row back.
  auto label = [&](int pos) { return pos < n ? pos : 3 * n - 1 - pos; };
  std::vector<Diagram> out;
  for (const auto& arcs : matchings(0, 2 * n)) {
    std::vector<int> match(2 * n);
    for (auto [x, y] : arcs) {
      match[label(x)] = label(y);
      match[label(y)] = label(x);
    }
    out.emplace_back(std::move(match));
  }
  std::sort(out.begin(), out.end());
  return out;
}

DiagramVector diagram_vector_multiply(const DiagramVector& a, const DiagramVector& b) {
  DiagramVector out;
  const RingElem z = RingElem::z();
  for (const auto& [da, ca] : a) {
    for (const auto& [db, cb] : b) {
      auto [d, loops] = diagram_multiply(da, db);
      RingElem c = ca * cb;
      if (loops) c *= z.pow(loops);
      auto [it, inserted] = out.try_emplace(d, c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

RingElem oracle_trace(const DiagramVector& a) {
  RingElem acc;
  for (const auto& [d, c] : a) acc += c * oracle_trace(d);
  return acc;
}

DiagramProduct word_diagram(int strands, const std::vector<Letter>& w) {
  Diagram d = Diagram::identity(strands);
  int loops = 0;
  for (Letter s : w) {
    auto p = diagram_multiply(d, Diagram::e(strands, s));
    d = std::move(p.diagram);
    loops += p.loops;
  }
  return {d, loops};
}

DiagramVector map_f_to_diagrams(const Element& a) {
  if (a.system().affine) throw UsageError("the diagram oracle models finite systems only");
  const int strands = a.system().rank + 1;
  Element f = convert_basis(a, Basis::f);
  DiagramVector out;
  const RingElem z = RingElem::z();
  for (const auto& [h, c] : f.terms()) {
    auto [d, loops] = word_diagram(strands, h.letters());
    RingElem coeff = c * z.pow(loops - static_cast<long>(h.length()));
    auto [it, inserted] = out.try_emplace(d, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return out;
}

Verification check_structure_constants(int n) {
  Verification rec("diagram structure constants n=" + std::to_string(n));
  const System sys = System::finite(n);
  const auto heaps = enumerate_fc(sys, -1);
  std::vector<DiagramVector> images;
  for (const auto& h : heaps) images.push_back(map_f_to_diagrams(Element::basis_element(sys, h)));
  for (std::size_t i = 0; i < heaps.size(); ++i) {
    for (std::size_t j = 0; j < heaps.size(); ++j) {
      Element prod = multiply(Element::basis_element(sys, heaps[i]), Element::basis_element(sys, heaps[j]));
      rec.expect(map_f_to_diagrams(prod) == diagram_vector_multiply(images[i], images[j]),
                 "g[" + heaps[i].to_string(sys) + "] * g[" + heaps[j].to_string(sys) + "]");
    }
  }
  return rec;
}

Verification check_oracle_trace(int n) {
  Verification rec("diagram closure trace n=" + std::to_string(n));
  const System sys = System::finite(n);
  for (const auto& h : enumerate_fc(sys, -1)) {
    Element x = Element::basis_element(sys, h);
    rec.expect(jones_tau(x) == oracle_trace(map_f_to_diagrams(x)), "g[" + h.to_string(sys) + "]");
  }
  return rec;
}

}  // namespace tlhat
