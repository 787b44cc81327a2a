#pragma once

// Words in the Coxeter systems A_n and affine A_n, with fully commutative
// elements stored as canonical Cartier-Foata heaps.

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace tlhat {

using Letter = int;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A_n (finite, letters 1..n) or affine A_n (letters 0..n, 0 is the affine letter).
struct System {
  int rank = 1;
  bool affine = false;

  static System finite(int n) { return {n, false}; }
  static System affine_of(int n) { return {n, true}; }

  int num_letters() const { return affine && rank > 0 ? rank + 1 : rank; }
  std::vector<Letter> letters() const;
  bool valid(Letter s) const;
  /// Labels joined by an edge of the Dynkin diagram.
  bool adjacent(Letter s, Letter t) const;
  /// Affine rank 1: the two letters generate an infinite dihedral group.
  bool infinite_bond() const { return affine && rank == 1; }

  std::string letter_name(Letter s) const;
  Letter parse_letter(const std::string& tok) const;
  std::string name() const;

  friend bool operator==(const System&, const System&) = default;
  friend auto operator<=>(const System&, const System&) = default;
};

/// Canonical heap of a fully commutative element. The canonical word lists
/// the Cartier-Foata layers in order, each layer sorted by label.
class Heap {
 public:
  Heap() = default;

  std::size_t length() const { return word_.size(); }
  bool empty() const { return word_.empty(); }
  const std::vector<std::uint8_t>& word() const { return word_; }
  Letter operator[](std::size_t i) const { return word_[i]; }
  /// Layer index (from 0) of each position of word().
  const std::vector<std::uint16_t>& layer_of() const { return layer_; }
  std::vector<std::vector<Letter>> layers() const;
  std::vector<Letter> letters() const { return {word_.begin(), word_.end()}; }
  int count(Letter s) const;

  std::string to_string(const System& sys) const;

  friend bool operator==(const Heap& a, const Heap& b) { return a.word_ == b.word_; }
  /// Shortlex order: shorter heaps first.
  friend std::strong_ordering operator<=>(const Heap& a, const Heap& b) {
    if (a.word_.size() != b.word_.size()) return a.word_.size() <=> b.word_.size();
    return a.word_ <=> b.word_;
  }

  std::size_t hash() const;

 private:
  friend class HeapBuilder;
  std::vector<std::uint8_t> word_;
  std::vector<std::uint16_t> layer_;
};

struct Extends {
  Heap heap;
};
struct QuadraticAt {
  Heap reduced;
};
/// h * s = prefix * (s t s) * suffix, read as a product of generators.
struct BraidSplit {
  Heap prefix;
  Letter t;
  std::vector<Letter> suffix;
};
using AppendResult = std::variant<Extends, QuadraticAt, BraidSplit>;

struct NotFC {
  enum class Kind { Quadratic, Braid };
  std::size_t position;  // index of the offending letter in the input
  Kind kind;
};

AppendResult append_classify(const System& sys, const Heap& h, Letter s);

/// Throws UsageError on letters outside the system.
std::variant<Heap, NotFC> canonicalize(const System& sys, const std::vector<Letter>& letters);
/// As canonicalize, but throws UsageError when the word is not reduced and FC.
Heap heap_of(const System& sys, const std::vector<Letter>& letters);

std::vector<Letter> right_descents(const System& sys, const Heap& h);
std::vector<Letter> left_descents(const System& sys, const Heap& h);

/// Reverse word (the anti-automorphism w -> w^{-1}).
Heap reverse(const System& sys, const Heap& h);

/// Dynkin rotation i -> i + d mod (n+1). Affine systems only.
Letter rotate_letter(const System& sys, Letter s, int d);
Heap rotate_psi(const System& sys, const Heap& h, int d);

/// All FC heaps of length <= max_len in shortlex order; max_len < 0 means
/// saturate (finite systems only).
std::vector<Heap> enumerate_fc(const System& sys, int max_len);

/// Whitespace-separated letter list such as "s2 s1 a".
std::vector<Letter> parse_word(const System& sys, const std::string& text);
std::string word_to_string(const System& sys, const std::vector<Letter>& w);

}  // namespace tlhat

template <>
struct std::hash<tlhat::Heap> {
  std::size_t operator()(const tlhat::Heap& h) const { return h.hash(); }
};
