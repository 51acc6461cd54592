#ifndef CLPA_LINEAR_HPP_
#define CLPA_LINEAR_HPP_

#include <cstddef>
#include <iterator>
#include <map>
#include <vector>

#include "clpa/scalar.hpp"

namespace clpa {

  /// Row echelon form over a field for sparse vectors indexed by Key.
  ///
  /// Rows are added one at a time; add() reports whether the new row was
  /// independent of the rows added before it.
  template <typename Key>
  class SparseEchelon {
   public:
    using Row = std::map<Key, Scalar>;

    bool add(Row row) {
      reduce(row);
      if (row.empty()) {
        return false;
      }
      auto const inv = row.begin()->second.inverse();
      for (auto& [k, c] : row) {
        c *= inv;
      }
      auto const lead = row.begin()->first;
      _pivots.emplace(lead, std::move(row));
      return true;
    }

    // Is `row` in the span of the rows added so far?
    [[nodiscard]] bool in_span(Row row) const {
      reduce(row);
      return row.empty();
    }

    [[nodiscard]] std::size_t rank() const noexcept {
      return _pivots.size();
    }

   private:
    void reduce(Row& row) const {
      auto it = row.begin();
      while (it != row.end()) {
        auto p = _pivots.find(it->first);
        if (p == _pivots.end()) {
          ++it;
          continue;
        }
        auto const factor = it->second;
        auto const key    = it->first;
        for (auto const& [k, c] : p->second) {
          auto [slot, inserted] = row.try_emplace(k, -(factor * c));
          if (!inserted) {
            slot->second -= factor * c;
          }
        }
        // The pivot key is now zero; restart after it, earlier keys are final.
        row.erase(key);
        for (auto jt = row.begin(); jt != row.end();) {
          jt = jt->second.is_zero() ? row.erase(jt) : std::next(jt);
        }
        it = row.upper_bound(key);
      }
    }

    std::map<Key, Row> _pivots;
  };

  /// The rank of a family of sparse vectors.
  template <typename Key>
  [[nodiscard]] std::size_t rank(std::vector<std::map<Key, Scalar>> const& rows) {
    SparseEchelon<Key> e;
    for (auto const& r : rows) {
      e.add(r);
    }
    return e.rank();
  }

}  // namespace clpa

#endif  // CLPA_LINEAR_HPP_
