#include "tlhat/solver.hpp"

#include <set>

#include "echelon.hpp"
#include "tlhat/maps.hpp"

namespace tlhat {

struct TraceRelationSolver::Impl {
  System sys;
  std::size_t max_len;
  detail::Echelon<Heap, int> commutators;
  detail::Echelon<Heap, int> full;
  std::vector<MarkovElement> markov;
  TraceRelationReport report;

  bool inside(const Terms& t) const {
    for (const auto& [h, c] : t)
      if (h.length() > max_len) return false;
    return true;
  }
};

TraceRelationSolver::TraceRelationSolver(int n1, int L) : impl_(std::make_unique<Impl>()) {
  if (L < 0) throw UsageError("the length bound must be non-negative");
  auto& im = *impl_;
  im.sys = System::affine_of(n1 - 1);
  im.max_len = static_cast<std::size_t>(L) + 2;
  const System src = preimage_system(n1);
  const auto heaps = enumerate_fc(im.sys, static_cast<int>(im.max_len));

  for (const Heap& y : heaps) {
    if (y.length() > static_cast<std::size_t>(L) + 1) continue;
    const Element gy = Element::basis_element(im.sys, y);
    for (Letter s : im.sys.letters()) {
      const Element gs = generator(im.sys, s);
      Element c = multiply(gs, gy) - multiply(gy, gs);
      if (c.is_zero() || !im.inside(c.terms())) continue;
      im.commutators.insert(c.terms(), {});
      im.full.insert(c.terms(), {});
    }
  }
  im.report.commutator_rank = im.commutators.rank();

  auto add_markov = [&](MarkovElement m) {
    Element x = convert_basis(realize(n1, m), Basis::g);
    if (x.is_zero() || !im.inside(x.terms())) return;
    const int idx = static_cast<int>(im.markov.size());
    if (im.full.insert(x.terms(), {{idx, RingElem(1)}})) im.markov.push_back(std::move(m));
  };
  for (const Heap& w : heaps)
    if (auto m = is_markov(w, n1)) add_markov(std::move(*m));
  const auto src_heaps = enumerate_fc(src, static_cast<int>(im.max_len));
  for (const Heap& x : src_heaps) {
    for (const Heap& y : src_heaps) {
      if (x.length() + y.length() > im.max_len) continue;
      add_markov({Element::basis_element(src, x), 1, Element::basis_element(src, y)});
      if (y.empty()) add_markov({Element::basis_element(src, x), 0, Element::one(src)});
    }
  }

  im.report.n1 = n1;
  im.report.L = L;
  im.report.ambient = heaps.size();
  im.report.total_rank = im.full.rank();
  im.report.markov_count = im.markov.size();
  for (const Heap& w : heaps) {
    if (w.length() > static_cast<std::size_t>(L)) continue;
    if (!im.full.reduce({{w, RingElem(1)}}).vec.empty()) im.report.unspanned.push_back(w);
  }
}

TraceRelationSolver::~TraceRelationSolver() = default;
TraceRelationSolver::TraceRelationSolver(TraceRelationSolver&&) noexcept = default;
TraceRelationSolver& TraceRelationSolver::operator=(TraceRelationSolver&&) noexcept = default;

const TraceRelationReport& TraceRelationSolver::report() const { return impl_->report; }
const std::vector<MarkovElement>& TraceRelationSolver::markov() const { return impl_->markov; }

std::optional<std::vector<MarkovTerm>> TraceRelationSolver::express(const Heap& w) const {
  if (w.length() > impl_->max_len) return std::nullopt;
  auto row = impl_->full.reduce({{w, RingElem(1)}});
  if (!row.vec.empty()) return std::nullopt;
  std::vector<MarkovTerm> out;
  for (const auto& [idx, c] : row.track) out.push_back({-c, impl_->markov[idx]});
  return out;
}

bool TraceRelationSolver::in_commutator_span(const Element& x) const {
  if (x.system() != impl_->sys) return false;
  Element g = convert_basis(x, Basis::g);
  if (!impl_->inside(g.terms())) return false;
  return impl_->commutators.reduce(g.terms()).vec.empty();
}

TraceRelationReport trace_relation_solver(int n1, int L) { return TraceRelationSolver(n1, L).report(); }

}  // namespace tlhat
