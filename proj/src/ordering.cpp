#include "corrchan/ordering.hpp"

#include <algorithm>
#include <stdexcept>

namespace corrchan {

OrderingSequence OrderingSequence::parse(const std::string& latest_first) {
  if (latest_first.empty())
    throw std::invalid_argument("ordering sequence must be nonempty");
  OrderingSequence seq;
  seq.entries.reserve(latest_first.size());
  for (auto it = latest_first.rbegin(); it != latest_first.rend(); ++it) {
    switch (*it) {
      case '+': seq.entries.push_back(+1); break;
      case '-': seq.entries.push_back(-1); break;
      case '0': seq.entries.push_back(0); break;
      default:
        throw std::invalid_argument(std::string("bad ordering character: ") + *it);
    }
  }
  return seq;
}

std::string OrderingSequence::str() const {
  std::string s;
  s.reserve(entries.size());
  for (auto it = entries.rbegin(); it != entries.rend(); ++it)
    s.push_back(*it > 0 ? '+' : (*it < 0 ? '-' : '0'));
  return s;
}

int OrderingSequence::theta() const {
  return static_cast<int>(
      std::count_if(entries.begin(), entries.end(), [](int e) { return e != 0; }));
}

bool vanishing_correlation(const OrderingSequence& eta) {
  for (auto it = eta.entries.rbegin(); it != eta.entries.rend(); ++it) {
    if (*it == 0) continue;
    return *it < 0;
  }
  return false;  // all-identity sequence traces to 1
}

}  // namespace corrchan
