#pragma once

// Semi-echelon row reduction over K with a tracked combination per row.
// Rows are sparse vectors keyed by an ordered type; the pivot of a row is its
// largest key.

#include <map>
#include <optional>

#include "tlhat/ring.hpp"

namespace tlhat::detail {

template <class Key, class Tag>
class Echelon {
 public:
  using Vec = std::map<Key, RingElem>;
  using Track = std::map<Tag, RingElem>;

  struct Row {
    Vec vec;
    Track track;
  };

  /// Adds a row; returns true if it raised the rank.
  bool insert(Vec vec, Track track) {
    Row row{std::move(vec), std::move(track)};
    reduce(row);
    if (row.vec.empty()) return false;
    const RingElem inv = row.vec.rbegin()->second.inverse();
    scale(row, inv);
    const Key lead = row.vec.rbegin()->first;
    pivots_.emplace(lead, std::move(row));
    return true;
  }

  /// Reduces as far as the pivots allow; the result is zero iff vec is in the span.
  Row reduce(Vec vec) const {
    Row row{std::move(vec), {}};
    reduce(row);
    return row;
  }

  std::size_t rank() const { return pivots_.size(); }
  bool has_pivot(const Key& k) const { return pivots_.count(k) != 0; }

 private:
  static void scale(Row& row, const RingElem& c) {
    for (auto& [k, x] : row.vec) x *= c;
    for (auto& [k, x] : row.track) x *= c;
  }

  template <class M>
  static void axpy(M& dst, const M& src, const RingElem& c) {
    for (const auto& [k, x] : src) {
      auto [it, inserted] = dst.try_emplace(k, x * c);
      if (!inserted) {
        it->second += x * c;
        if (it->second.is_zero()) dst.erase(it);
      }
    }
  }

  // Eliminate pivot keys from the top down until the leading key has no pivot.
  void reduce(Row& row) const {
    auto cursor = row.vec.end();
    while (cursor != row.vec.begin()) {
      auto it = std::prev(cursor);
      auto p = pivots_.find(it->first);
      if (p == pivots_.end()) {
        cursor = it;
        continue;
      }
      const Key key = it->first;
      const RingElem c = -it->second;
      axpy(row.vec, p->second.vec, c);
      axpy(row.track, p->second.track, c);
      cursor = row.vec.lower_bound(key);
    }
  }

  std::map<Key, Row> pivots_;
};

}  // namespace tlhat::detail
