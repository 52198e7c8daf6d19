#include "ccvd/hitting_set.hpp"

#include <algorithm>

namespace ccvd {

HittingSetInstance::HittingSetInstance(int universe_size, int d, int k,
                                       std::vector<std::vector<int>> sets)
    : universe_size(universe_size), d(d), k(k), sets(std::move(sets)) {
  if (universe_size < 0) throw InputError("universe size must be nonnegative");
  if (d < 1) throw InputError("d must be at least 1");
  if (k < 0) throw InputError("k must be nonnegative");
  for (auto& set : this->sets) {
    if (set.empty()) throw InputError("hitting set instance contains an empty set");
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    if (static_cast<int>(set.size()) > d)
      throw InputError("set size exceeds d");
    for (int e : set)
      if (e < 0 || e >= universe_size) throw InputError("element id out of range");
  }
  std::sort(this->sets.begin(), this->sets.end());
  this->sets.erase(std::unique(this->sets.begin(), this->sets.end()),
                   this->sets.end());
}

}  // namespace ccvd
