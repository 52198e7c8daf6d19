#pragma once

#include <vector>

#include "ccvd/types.hpp"

namespace ccvd {

/// d-Hitting Set instance: family of nonempty element sets of size <= d over
/// universe 0..universe_size-1, budget k. Construction canonicalizes: each set
/// sorted, family sorted, duplicates removed.
struct HittingSetInstance {
  int universe_size = 0;
  int d = 0;
  int k = 0;
  std::vector<std::vector<int>> sets;

  HittingSetInstance() = default;
  HittingSetInstance(int universe_size, int d, int k,
                     std::vector<std::vector<int>> sets);
};

}  // namespace ccvd
