#include <algorithm>
#include <mutex>
#include <set>

#include "echelon.hpp"
#include "tlhat/maps.hpp"
#include "tlhat/markov.hpp"

namespace tlhat {

namespace {

constexpr int kN1 = 3;

// Trace of a heap as Markov terms plus unresolved cyclic classes.
struct Reduced {
  std::vector<MarkovTerm> markov;
  std::map<int, RingElem> stuck;

  void add(const Reduced& o, const RingElem& c) {
    for (const auto& t : o.markov) markov.push_back({t.coeff * c, t.element});
    for (const auto& [id, x] : o.stuck) {
      auto [it, inserted] = stuck.try_emplace(id, x * c);
      if (!inserted) {
        it->second += x * c;
        if (it->second.is_zero()) stuck.erase(it);
      }
    }
  }
};

struct Entry {
  Reduced value;
  std::vector<AuditStep> steps;
  std::vector<Heap> deps;
};

struct StuckClass {
  std::size_t level;
  std::vector<Heap> members;
};

struct State {
  System sys = System::affine_of(kN1 - 1);
  System src = preimage_system(kN1);
  std::map<Heap, Entry> memo;
  std::vector<StuckClass> classes;
  std::map<int, std::vector<MarkovTerm>> solved;
  // Witness equations: rows over class ids, tracked by witness index.
  detail::Echelon<int, int> ech;
  std::vector<std::vector<MarkovTerm>> rhs;
  int witness_len = -1;
};

State& state() {
  static State s;
  return s;
}
std::mutex g_reduce_mutex;

std::string heap_name(const State& st, const Heap& h) { return h.empty() ? "1" : h.to_string(st.sys); }

Heap drop_at(const State& st, const Heap& h, std::size_t pos) {
  std::vector<Letter> w = h.letters();
  w.erase(w.begin() + static_cast<std::ptrdiff_t>(pos));
  return heap_of(st.sys, w);
}

// Cyclic moves of h: a minimal letter moved to the end, a maximal letter to the front.
std::vector<std::pair<Terms, std::string>> cyclic_moves(const State& st, const Heap& h) {
  std::vector<std::pair<Terms, std::string>> out;
  const auto w = h.letters();
  for (Letter s : left_descents(st.sys, h)) {
    const std::size_t pos = std::find(w.begin(), w.end(), s) - w.begin();
    out.push_back({*mul_letter(st.sys, drop_at(st, h, pos), s), st.sys.letter_name(s) + " to the end"});
  }
  for (Letter s : right_descents(st.sys, h)) {
    const std::size_t pos = std::find(w.rbegin(), w.rend(), s).base() - w.begin() - 1;
    Element moved = multiply(generator(st.sys, s), Element::basis_element(st.sys, drop_at(st, h, pos)));
    out.push_back({moved.terms(), st.sys.letter_name(s) + " to the front"});
  }
  return out;
}

const Entry& reduce_heap(State& st, const Heap& w);

Entry reduce_terms(State& st, const Terms& terms) {
  Entry e;
  for (const auto& [h, c] : terms) {
    e.value.add(reduce_heap(st, h).value, c);
    e.deps.push_back(h);
  }
  return e;
}

const Entry& reduce_heap(State& st, const Heap& w) {
  if (auto it = st.memo.find(w); it != st.memo.end()) return it->second;
  if (auto m = is_markov(w, kN1)) {
    Entry e;
    e.value.markov.push_back({RingElem(1), *m});
    e.steps.push_back({AuditStep::Kind::AlgebraIdentity, "g[" + heap_name(st, w) + "] is a Markov element"});
    return st.memo.emplace(w, std::move(e)).first->second;
  }
  // Breadth-first search of the same-length cyclic class.
  std::vector<Heap> cls{w};
  std::set<Heap> seen{w};
  std::optional<Entry> exit;
  for (std::size_t i = 0; i < cls.size() && !exit; ++i) {
    const Heap cur = cls[i];
    if (i > 0) {
      if (auto m = is_markov(cur, kN1)) {
        exit = Entry{};
        exit->value.markov.push_back({RingElem(1), *m});
        exit->steps.push_back({AuditStep::Kind::CyclicMove, "g[" + heap_name(st, w) + "] ~ g[" + heap_name(st, cur) + "]"});
        exit->steps.push_back({AuditStep::Kind::AlgebraIdentity, "g[" + heap_name(st, cur) + "] is a Markov element"});
        break;
      }
    }
    for (auto& [terms, how] : cyclic_moves(st, cur)) {
      const bool same = terms.size() == 1 && terms.begin()->first.length() == w.length();
      if (same) {
        if (seen.insert(terms.begin()->first).second) cls.push_back(terms.begin()->first);
        continue;
      }
      exit = reduce_terms(st, terms);
      exit->steps.insert(exit->steps.begin(),
                         {AuditStep::Kind::CyclicMove, "g[" + heap_name(st, w) + "] ~ g[" + heap_name(st, cur) + "], " + how + " shortens it"});
      break;
    }
  }
  Entry e;
  if (exit) {
    e = std::move(*exit);
  } else {
    const int id = static_cast<int>(st.classes.size());
    st.classes.push_back({w.length(), cls});
    e.value.stuck[id] = RingElem(1);
    e.steps.push_back({AuditStep::Kind::CyclicMove, "cyclic class of g[" + heap_name(st, w) + "] (" +
                                                        std::to_string(cls.size()) + " heaps) has no exit; class " +
                                                        std::to_string(id)});
  }
  for (const Heap& h : cls) {
    if (h == w || st.memo.count(h)) continue;
    Entry alias;
    alias.value = e.value;
    alias.steps.push_back({AuditStep::Kind::CyclicMove, "g[" + heap_name(st, h) + "] ~ g[" + heap_name(st, w) + "]"});
    alias.deps.push_back(w);
    st.memo.emplace(h, std::move(alias));
  }
  return st.memo.insert_or_assign(w, std::move(e)).first->second;
}

// Adds witness equations from Markov elements F(t_x) g_n^e F(t_y) with l(x) + l(y) <= len.
void grow_witnesses(State& st, int len) {
  const auto heaps = enumerate_fc(st.src, len);
  for (const Heap& x : heaps) {
    for (const Heap& y : heaps) {
      const int total = static_cast<int>(x.length() + y.length());
      if (total > len || total <= st.witness_len) continue;
      for (int eps = 0; eps <= 1; ++eps) {
        if (eps == 0 && !y.empty()) continue;
        MarkovElement m{Element::basis_element(st.src, x), eps, Element::basis_element(st.src, y)};
        Entry e = reduce_terms(st, convert_basis(realize(kN1, m), Basis::g).terms());
        if (e.value.stuck.empty()) continue;
        // sum stuck = M - markov part
        std::vector<MarkovTerm> r{{RingElem(1), m}};
        for (const auto& t : e.value.markov) r.push_back({-t.coeff, t.element});
        const int idx = static_cast<int>(st.rhs.size());
        st.rhs.push_back(std::move(r));
        st.ech.insert({e.value.stuck.begin(), e.value.stuck.end()}, {{idx, RingElem(1)}});
      }
    }
  }
  st.witness_len = std::max(st.witness_len, len);
}

std::optional<std::vector<MarkovTerm>> solve_class(State& st, int id) {
  if (auto it = st.solved.find(id); it != st.solved.end()) return it->second;
  const int level = static_cast<int>(st.classes[id].level);
  for (int len = std::max(st.witness_len, 1); len <= level + 4; ++len) {
    if (len > st.witness_len) grow_witnesses(st, len);
    auto row = st.ech.reduce({{id, RingElem(1)}});
    if (!row.vec.empty()) continue;
    std::vector<MarkovTerm> out;
    for (const auto& [idx, lam] : row.track)
      for (const auto& t : st.rhs[idx]) out.push_back({-lam * t.coeff, t.element});
    out = normalize_terms(out);
    st.solved.emplace(id, out);
    return out;
  }
  return std::nullopt;
}

void collect_audit(const State& st, const Heap& h, std::set<Heap>& seen, std::vector<AuditStep>& out) {
  if (!seen.insert(h).second) return;
  const Entry& e = st.memo.at(h);
  out.insert(out.end(), e.steps.begin(), e.steps.end());
  for (const Heap& d : e.deps) collect_audit(st, d, seen, out);
}

}  // namespace

MarkovCombination reduce_trace_to_markov(const Element& a) {
  const System expect = System::affine_of(kN1 - 1);
  if (a.system() != expect) throw UsageError("unsupported rank: the trace reduction is implemented for " + expect.name());
  std::lock_guard lock(g_reduce_mutex);
  State& st = state();
  const Element ag = convert_basis(a, Basis::g);
  Entry total = reduce_terms(st, ag.terms());

  MarkovCombination out;
  out.n1 = kN1;
  out.terms = total.value.markov;
  std::set<Heap> seen;
  for (const auto& [h, c] : ag.terms()) collect_audit(st, h, seen, out.audit);
  for (const auto& [id, c] : total.value.stuck) {
    const std::string name = heap_name(st, st.classes[id].members.front());
    if (auto sol = solve_class(st, id)) {
      for (const auto& t : *sol) out.terms.push_back({t.coeff * c, t.element});
      out.audit.push_back({AuditStep::Kind::AlgebraIdentity,
                           "class " + std::to_string(id) + " of g[" + name + "] solved from Markov witness equations"});
    } else {
      throw std::runtime_error("cyclic class of g[" + name + "] is not determined by the witness equations");
    }
  }
  out.terms = normalize_terms(out.terms);
  return out;
}

}  // namespace tlhat
