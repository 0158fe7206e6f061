#ifndef CORRCHAN_ORDERING_HPP
#define CORRCHAN_ORDERING_HPP

#include <string>
#include <vector>

namespace corrchan {

/// Sequence of commutator/anticommutator selectors over {+1, -1, 0}, stored
/// earliest time first. The string form follows the printed product order,
/// latest first, so parse("+-") gives entries {-1, +1}.
struct OrderingSequence {
  std::vector<int> entries;  // earliest first

  static OrderingSequence parse(const std::string& latest_first);
  std::string str() const;  // latest first

  int size() const { return static_cast<int>(entries.size()); }
  int theta() const;  // count of non-zero entries
};

/// True iff the latest-time leading non-zero selector is "-": the trace of a
/// leading commutator vanishes for any bath state, so the correlation is
/// identically zero.
bool vanishing_correlation(const OrderingSequence& eta);

}  // namespace corrchan

#endif
