#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "yaogame/rng.hpp"
#include "yaogame/types.hpp"

namespace test_helpers {

// Random point on the probability simplex via normalized exponentials.
inline yaogame::MixedStrategy random_strategy(const yaogame::Labels& labels,
                                              yaogame::Xoshiro256StarStar& rng) {
  std::vector<double> mass(labels.size());
  for (double& w : mass) w = -std::log(rng.next_open_double());
  return yaogame::MixedStrategy::normalized(labels, std::move(mass));
}

// Instance-size scheme shared with the acceptance suite: seed k in 0..199
// covers 1x1 (k=0) through 20x20 (k=199).
inline std::pair<std::size_t, std::size_t> instance_dims(std::uint64_t k) {
  return {(k % 20) + 1, ((k / 10) % 20) + 1};
}

}  // namespace test_helpers
