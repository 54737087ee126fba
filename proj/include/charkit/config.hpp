#pragma once

#include <cstddef>
#include <cstdint>

namespace charkit {

/// Resource limits and the seed shared by every computation on a group.
struct Config {
  /// Groups with more elements than this are never enumerated.
  std::size_t element_cap = 5000;
  /// Subgroup census (and everything built on it) is refused above this order.
  std::size_t subgroup_cap = 200;
  /// Seed for the random class-matrix combinations of the table algorithm.
  std::uint64_t seed = 1;
};

}  // namespace charkit
