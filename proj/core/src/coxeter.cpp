#include "tlhat/coxeter.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace tlhat {

// ---------------------------------------------------------------- System

std::vector<Letter> System::letters() const {
  std::vector<Letter> out;
  if (rank == 0) return out;
  for (Letter s = affine ? 0 : 1; s <= rank; ++s) out.push_back(s);
  return out;
}

bool System::valid(Letter s) const { return rank > 0 && s >= (affine ? 0 : 1) && s <= rank; }

bool System::adjacent(Letter s, Letter t) const {
  if (s == t) return false;
  if (!affine) return s - t == 1 || t - s == 1;
  if (rank == 0) return false;
  const int m = rank + 1;
  const int d = ((s - t) % m + m) % m;
  return d == 1 || d == rank;
}

std::string System::letter_name(Letter s) const {
  if (affine && s == 0) return "a";
  return "s" + std::to_string(s);
}

Letter System::parse_letter(const std::string& tok) const {
  Letter s = -1;
  if (tok == "a") {
    if (!affine) throw UsageError("letter 'a' is not in the finite system " + name());
    s = 0;
  } else if (tok.size() >= 2 && tok[0] == 's' &&
             std::all_of(tok.begin() + 1, tok.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    s = std::stoi(tok.substr(1));
    if (s == 0) s = -1;
  }
  if (s < 0 || !valid(s)) throw UsageError("unknown letter '" + tok + "' for system " + name());
  return s;
}

std::string System::name() const {
  return (affine ? "affine A" : "A") + std::to_string(rank);
}

// ---------------------------------------------------------------- Heap

std::vector<std::vector<Letter>> Heap::layers() const {
  std::vector<std::vector<Letter>> out;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (layer_[i] >= out.size()) out.resize(layer_[i] + 1);
    out[layer_[i]].push_back(word_[i]);
  }
  return out;
}

int Heap::count(Letter s) const {
  return static_cast<int>(std::count(word_.begin(), word_.end(), s));
}

std::string Heap::to_string(const System& sys) const { return word_to_string(sys, letters()); }

std::size_t Heap::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto c : word_) h = (h ^ c) * 1099511628211ull;
  return h;
}

class HeapBuilder {
 public:
  // Insert s as a new maximal element; the caller guarantees the result is FC.
  static Heap push(const System& sys, const Heap& h, Letter s) {
    int lay = 0;
    for (std::size_t i = 0; i < h.word_.size(); ++i) {
      if (h.word_[i] == s || sys.adjacent(h.word_[i], s)) lay = std::max(lay, h.layer_[i] + 1);
    }
    std::size_t pos = h.word_.size();
    for (std::size_t i = 0; i < h.word_.size(); ++i) {
      if (h.layer_[i] > lay || (h.layer_[i] == lay && h.word_[i] > s)) {
        pos = i;
        break;
      }
    }
    Heap r;
    r.word_.reserve(h.word_.size() + 1);
    r.layer_.reserve(h.word_.size() + 1);
    r.word_.assign(h.word_.begin(), h.word_.begin() + pos);
    r.layer_.assign(h.layer_.begin(), h.layer_.begin() + pos);
    r.word_.push_back(static_cast<std::uint8_t>(s));
    r.layer_.push_back(static_cast<std::uint16_t>(lay));
    r.word_.insert(r.word_.end(), h.word_.begin() + pos, h.word_.end());
    r.layer_.insert(r.layer_.end(), h.layer_.begin() + pos, h.layer_.end());
    return r;
  }

  // Keep the positions flagged in keep; they must form an order ideal.
  static Heap restrict(const Heap& h, const std::vector<bool>& keep) {
    Heap r;
    for (std::size_t i = 0; i < h.word_.size(); ++i) {
      if (keep[i]) {
        r.word_.push_back(h.word_[i]);
        r.layer_.push_back(h.layer_[i]);
      }
    }
    return r;
  }

  // Relabel through f, keeping layers, and re-sort within each layer.
  template <class F>
  static Heap relabel(const Heap& h, F f) {
    std::vector<std::pair<std::uint16_t, std::uint8_t>> items;
    for (std::size_t i = 0; i < h.word_.size(); ++i)
      items.emplace_back(h.layer_[i], static_cast<std::uint8_t>(f(h.word_[i])));
    std::sort(items.begin(), items.end());
    Heap r;
    for (auto [l, s] : items) {
      r.layer_.push_back(l);
      r.word_.push_back(s);
    }
    return r;
  }
};

AppendResult append_classify(const System& sys, const Heap& h, Letter s) {
  const auto& w = h.word();
  std::size_t p = w.size();
  for (std::size_t i = w.size(); i-- > 0;) {
    if (w[i] == s) {
      p = i;
      break;
    }
  }
  if (p == w.size()) return Extends{HeapBuilder::push(sys, h, s)};

  int between = 0;
  std::size_t r = 0;
  for (std::size_t i = p + 1; i < w.size(); ++i) {
    if (sys.adjacent(w[i], s)) {
      if (between == 0) r = i;
      ++between;
    }
  }
  if (between >= 2 || (between == 1 && sys.infinite_bond())) return Extends{HeapBuilder::push(sys, h, s)};
  if (between == 0) {
    std::vector<bool> keep(w.size(), true);
    keep[p] = false;
    return QuadraticAt{HeapBuilder::restrict(h, keep)};
  }
  std::vector<bool> keep(w.size(), false);
  for (std::size_t i = 0; i < r; ++i) keep[i] = i != p;
  std::vector<Letter> suffix(w.begin() + r + 1, w.end());
  return BraidSplit{HeapBuilder::restrict(h, keep), w[r], std::move(suffix)};
}

std::variant<Heap, NotFC> canonicalize(const System& sys, const std::vector<Letter>& letters) {
  for (Letter s : letters)
    if (!sys.valid(s)) throw UsageError("letter index " + std::to_string(s) + " not in " + sys.name());
  Heap h;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    auto res = append_classify(sys, h, letters[i]);
    if (auto* e = std::get_if<Extends>(&res)) {
      h = std::move(e->heap);
    } else if (std::holds_alternative<QuadraticAt>(res)) {
      return NotFC{i, NotFC::Kind::Quadratic};
    } else {
      return NotFC{i, NotFC::Kind::Braid};
    }
  }
  return h;
}

Heap heap_of(const System& sys, const std::vector<Letter>& letters) {
  auto res = canonicalize(sys, letters);
  if (auto* nf = std::get_if<NotFC>(&res)) {
    throw UsageError("word '" + word_to_string(sys, letters) + "' is not reduced and fully commutative (" +
                     (nf->kind == NotFC::Kind::Quadratic ? "repeated letter" : "braid") + " at position " +
                     std::to_string(nf->position) + ")");
  }
  return std::get<Heap>(std::move(res));
}

std::vector<Letter> right_descents(const System& sys, const Heap& h) {
  std::vector<Letter> out;
  for (Letter s : sys.letters())
    if (std::holds_alternative<QuadraticAt>(append_classify(sys, h, s))) out.push_back(s);
  return out;
}

Heap reverse(const System& sys, const Heap& h) {
  auto w = h.letters();
  std::reverse(w.begin(), w.end());
  return heap_of(sys, w);
}

std::vector<Letter> left_descents(const System& sys, const Heap& h) {
  return right_descents(sys, reverse(sys, h));
}

Letter rotate_letter(const System& sys, Letter s, int d) {
  if (!sys.affine) throw UsageError("the Dynkin rotation is defined on affine systems only");
  const int m = sys.rank + 1;
  return ((s + d) % m + m) % m;
}

Heap rotate_psi(const System& sys, const Heap& h, int d) {
  if (!sys.affine) throw UsageError("the Dynkin rotation is defined on affine systems only");
  return HeapBuilder::relabel(h, [&](Letter s) { return rotate_letter(sys, s, d); });
}

std::vector<Heap> enumerate_fc(const System& sys, int max_len) {
  if (max_len < 0 && sys.affine) throw UsageError("affine systems need a finite length bound");
  std::vector<Heap> out{Heap{}};
  std::vector<Heap> frontier{Heap{}};
  for (int len = 1; (max_len < 0 || len <= max_len) && !frontier.empty(); ++len) {
    std::set<Heap> next;
    for (const auto& h : frontier) {
      for (Letter s : sys.letters()) {
        auto res = append_classify(sys, h, s);
        if (auto* e = std::get_if<Extends>(&res)) next.insert(std::move(e->heap));
      }
    }
    frontier.assign(next.begin(), next.end());
    out.insert(out.end(), frontier.begin(), frontier.end());
  }
  return out;
}

std::vector<Letter> parse_word(const System& sys, const std::string& text) {
  std::istringstream is(text);
  std::vector<Letter> out;
  std::string tok;
  while (is >> tok) out.push_back(sys.parse_letter(tok));
  return out;
}

std::string word_to_string(const System& sys, const std::vector<Letter>& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += sys.letter_name(w[i]);
  }
  return s;
}

}  // namespace tlhat
