#include <algorithm>
#include <mutex>
#include <sstream>

#include "echelon.hpp"
#include "tlhat/maps.hpp"
#include "tlhat/markov.hpp"

namespace tlhat {

System preimage_system(int n1) {
  if (n1 < 3) throw UsageError("Markov elements are defined for TL-hat_{n+1} with n >= 2");
  return System::affine_of(n1 - 2);
}

Element P_pre(int n1) {
  const System src = preimage_system(n1);
  std::vector<Letter> w;
  for (Letter i = n1 - 2; i >= 1; --i) w.push_back(i);
  w.push_back(0);
  return word_product(src, w);
}

Element rot_pre(const Element& x, int d) { return d == 0 ? x : apply_psi(x, d); }

Element realize(int n1, const MarkovElement& m) {
  const int n = n1 - 1;
  Element r = apply_F(n, m.a_pre);
  if (m.epsilon) r = multiply(r, generator(System::affine_of(n), n));
  return multiply(r, apply_F(n, m.b_pre));
}

// ---------------------------------------------------------------- structural detection

namespace {

// reach[i][j]: position i lies below position j in the heap order.
std::vector<std::vector<char>> heap_order(const System& sys, const Heap& w) {
  const std::size_t l = w.length();
  std::vector<std::vector<char>> reach(l, std::vector<char>(l, 0));
  for (std::size_t j = 0; j < l; ++j) {
    for (std::size_t i = j; i-- > 0;) {
      if (w[i] == w[j] || sys.adjacent(w[i], w[j])) {
        reach[i][j] = 1;
      } else {
        for (std::size_t k = i + 1; k < j && !reach[i][j]; ++k) reach[i][j] = reach[i][k] && reach[k][j];
      }
    }
  }
  return reach;
}

std::vector<Letter> pick(const Heap& w, const std::vector<char>& keep) {
  std::vector<Letter> out;
  for (std::size_t i = 0; i < w.length(); ++i)
    if (keep[i]) out.push_back(w[i]);
  return out;
}

std::optional<MarkovElement> structural_markov(const Heap& w, int n1) {
  const int n = n1 - 1;
  const System sys = System::affine_of(n), src = preimage_system(n1);
  std::vector<std::size_t> tops, affs;
  for (std::size_t i = 0; i < w.length(); ++i) {
    if (w[i] == n) tops.push_back(i);
    if (w[i] == 0) affs.push_back(i);
  }
  if (tops.size() + affs.size() > 2 || tops.size() > 1 || affs.size() > 1) return std::nullopt;
  const Element ta = generator(src, 0);
  const Element ta_inv = generator_inverse(src, 0);
  if (tops.empty() && affs.empty()) return MarkovElement{word_product(src, w.letters()), 0, Element::one(src)};

  auto reach = heap_order(sys, w);
  const std::size_t p = tops.empty() ? affs[0] : tops[0];
  std::vector<char> below(w.length()), above(w.length());
  for (std::size_t i = 0; i < w.length(); ++i) {
    above[i] = i > p && reach[p][i];
    below[i] = i != p && !above[i];
  }
  if (!tops.empty() && !affs.empty()) {
    const std::size_t pa = affs[0];
    if (pa < p || !reach[p][pa]) return std::nullopt;
    for (std::size_t k = p + 1; k < pa; ++k)
      if (reach[p][k] && reach[k][pa]) return std::nullopt;
    above[pa] = 0;
    // g_n g_a = F(t_a) g_n
    return MarkovElement{multiply(word_product(src, pick(w, below)), ta), 1, word_product(src, pick(w, above))};
  }
  Element u = word_product(src, pick(w, below)), v = word_product(src, pick(w, above));
  if (!tops.empty()) return MarkovElement{u, 1, v};
  // g_a = F(t_a) g_n F(t_a)^{-1}
  return MarkovElement{multiply(u, ta), 1, multiply(ta_inv, v)};
}

// ---------------------------------------------------------------- image of F

struct ImageEchelon {
  int built_len = -1;
  detail::Echelon<Heap, Heap> ech;
};

std::mutex g_img_mutex;
std::map<int, ImageEchelon> g_img;

}  // namespace

std::optional<Element> F_preimage(int n1, const Element& y, int max_source_len) {
  const System src = preimage_system(n1), big = System::affine_of(n1 - 1);
  if (y.system() != big) throw UsageError("F_preimage expects an element of " + big.name());
  Element yg = convert_basis(y, Basis::g);
  std::lock_guard lock(g_img_mutex);
  auto& img = g_img[n1];
  if (img.built_len < max_source_len) {
    for (const Heap& u : enumerate_fc(src, max_source_len)) {
      if (static_cast<int>(u.length()) <= img.built_len) continue;
      Element fu = apply_F(n1 - 1, Element::basis_element(src, u));
      img.ech.insert(fu.terms(), {{u, RingElem(1)}});
    }
    img.built_len = max_source_len;
  }
  auto row = img.ech.reduce(yg.terms());
  if (!row.vec.empty()) return std::nullopt;
  // y - sum c_u F(t_u) = 0 with the tracked combination negated.
  Element x(src);
  for (const auto& [u, c] : row.track) x.add_term(u, -c);
  return x;
}

// ---------------------------------------------------------------- normal forms

namespace {

Element run_element(const System& big, int i) {
  std::vector<Letter> w;
  for (Letter j = big.rank; j >= i; --j) w.push_back(j);
  return word_product(big, w);
}

std::vector<Letter> run_word(int n, int i) {
  std::vector<Letter> w;
  for (Letter j = n; j >= i; --j) w.push_back(j);
  return w;
}

std::vector<Letter> head_word(int i0) {
  std::vector<Letter> w;
  for (Letter j = i0; j >= 1; --j) w.push_back(j);
  w.push_back(0);
  return w;
}

// Echelon of rows H F(t_u) R over source heaps u, one per (k, i0, i) shape.
struct ShapeKey {
  int n1, k, i0, i;
  auto operator<=>(const ShapeKey&) const = default;
};

Element cox_power(int n, int k) {
  std::vector<Letter> w;
  const auto cox = cox_word(n);
  for (int j = 0; j < k; ++j) w.insert(w.end(), cox.begin(), cox.end());
  return word_product(System::affine_of(n), w);
}

std::mutex g_shape_mutex;
std::map<ShapeKey, ImageEchelon> g_shapes;

// c with g_w = H F(c) R: H = 1, R = cox^k g_{s_n ... s_i} for i0 < 0,
// otherwise H = g_{s_i0 ... s_1 a} cox^k, R = g_{s_n ... s_i}.
std::optional<Element> solve_shape(const ShapeKey& key, const Heap& w) {
  const int n = key.n1 - 1;
  const System big = System::affine_of(n), src = preimage_system(key.n1);
  const int shape_len = (key.i0 >= 0 ? key.i0 + 1 : 0) + (n + 1) * key.k + (n + 1 - key.i);
  const int len = std::max(0, static_cast<int>(w.length()) - shape_len) + 1;
  std::lock_guard lock(g_shape_mutex);
  auto& img = g_shapes[key];
  if (img.built_len < len) {
    const Element run = word_product(big, run_word(n, key.i));
    Element h = Element::one(big), r = multiply(cox_power(n, key.k), run);
    if (key.i0 >= 0) {
      h = multiply(word_product(big, head_word(key.i0)), cox_power(n, key.k));
      r = run;
    }
    for (const Heap& u : enumerate_fc(src, len)) {
      if (static_cast<int>(u.length()) <= img.built_len) continue;
      Element row = multiply(multiply(h, apply_F(n, Element::basis_element(src, u))), r);
      img.ech.insert(row.terms(), {{u, RingElem(1)}});
    }
    img.built_len = len;
  }
  auto row = img.ech.reduce({{w, RingElem(1)}});
  if (!row.vec.empty()) return std::nullopt;
  Element x(src);
  for (const auto& [u, c] : row.track) x.add_term(u, -c);
  return x;
}

}  // namespace

Element expand_normal_form(int n1, const AffineNormalForm& form) {
  const int n = n1 - 1;
  const System big = System::affine_of(n);
  const Element cox_k = power(cox_element(n), std::visit([](const auto& f) { return f.k; }, form));
  if (auto* f1 = std::get_if<Form1>(&form))
    return multiply(multiply(apply_F(n, f1->c_pre), cox_k), run_element(big, f1->i));
  const auto& f2 = std::get<Form2>(form);
  Element r = multiply(word_product(big, head_word(f2.i0)), cox_k);
  return multiply(multiply(r, apply_F(n, f2.d_pre)), run_element(big, f2.i));
}

std::variant<Form1, Form2, Falsification> classify_affine(const Heap& w, int n1) {
  const int n = n1 - 1;
  for (int k = w.count(0); k >= 0; --k) {
    for (int i = n + 1; i >= 1; --i)
      if (auto c = solve_shape({n1, k, -1, i}, w)) return Form1{*c, k, i};
    for (int i0 = 0; i0 <= n - 1; ++i0)
      for (int i = n + 1; i >= 1; --i)
        if (auto d = solve_shape({n1, k, i0, i}, w)) return Form2{i0, k, *d, i};
  }
  return Falsification{"no normal form found for " + w.to_string(System::affine_of(n))};
}

std::string describe(int n1, const AffineNormalForm& form) {
  std::ostringstream os;
  const System src = preimage_system(n1);
  auto pre = [&](const Element& x) {
    std::string s;
    for (const auto& [h, c] : x.terms()) {
      if (!s.empty()) s += " + ";
      s += "(" + c.to_string() + ")*t[" + h.to_string(src) + "]";
    }
    return s.empty() ? std::string("0") : s;
  };
  if (auto* f1 = std::get_if<Form1>(&form)) {
    os << "Form1(c = " << pre(f1->c_pre) << ", k = " << f1->k << ", i = " << f1->i << ")";
  } else {
    const auto& f2 = std::get<Form2>(form);
    os << "Form2(i0 = " << f2.i0 << ", k = " << f2.k << ", d = " << pre(f2.d_pre) << ", i = " << f2.i << ")";
  }
  return os.str();
}

std::optional<MarkovElement> is_markov(const Heap& w, int n1) {
  if (auto m = structural_markov(w, n1)) return m;
  const int n = n1 - 1;
  const System src = preimage_system(n1);
  for (int i = n + 1; i >= 1; --i) {
    if (auto c = solve_shape({n1, 0, -1, i}, w)) {
      if (i == n + 1) return MarkovElement{*c, 0, Element::one(src)};
      return MarkovElement{*c, 1, word_product(src, run_word(n - 1, i))};
    }
  }
  // g_{s_i0 ... s_1} g_a = F(t_{s_i0 ... s_1} t_a) g_n F(t_a^{-1})
  for (int i0 = 0; i0 <= n - 1; ++i0) {
    if (auto d = solve_shape({n1, 0, i0, n + 1}, w)) {
      std::vector<Letter> head(head_word(i0));
      Element a = word_product(src, head);
      return MarkovElement{a, 1, multiply(generator_inverse(src, 0), *d)};
    }
  }
  return std::nullopt;
}

std::vector<MarkovTerm> normalize_terms(const std::vector<MarkovTerm>& terms) {
  std::map<std::tuple<Heap, int, Heap>, RingElem> acc;
  std::optional<System> src;
  for (const auto& t : terms) {
    src = t.element.a_pre.system();
    Element a = convert_basis(t.element.a_pre, Basis::g), b = convert_basis(t.element.b_pre, Basis::g);
    for (const auto& [ha, ca] : a.terms()) {
      for (const auto& [hb, cb] : b.terms()) {
        RingElem c = t.coeff * ca * cb;
        auto [it, inserted] = acc.try_emplace({ha, t.element.epsilon, hb}, c);
        if (!inserted) it->second += c;
      }
    }
  }
  std::vector<MarkovTerm> out;
  for (const auto& [key, c] : acc) {
    if (c.is_zero()) continue;
    const auto& [ha, eps, hb] = key;
    out.push_back({c, MarkovElement{Element::basis_element(*src, ha), eps, Element::basis_element(*src, hb)}});
  }
  return out;
}

}  // namespace tlhat
