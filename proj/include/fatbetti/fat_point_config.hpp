#pragma once

#include "fatbetti/ring.hpp"

#include <vector>

namespace fatbetti {

/// Fat points (P_0, a_0), ..., (P_r, a_r) in P^n.
///
/// With `coordinates` empty the points are the coordinate points
/// P_i = [0:..:1:..:0] (1 in position i); otherwise each entry holds the
/// homogeneous coordinates of one point.
struct FatPointConfig {
  int n = 2;
  std::vector<int> multiplicities;
  std::vector<std::vector<long long>> coordinates;
  ScalarField field{};

  static FatPointConfig coordinate_points(int n, std::vector<int> multiplicities,
                                          ScalarField field = {});

  bool coordinate_placement() const { return coordinates.empty(); }
  int num_points() const { return static_cast<int>(multiplicities.size()); }
  int max_multiplicity() const { return multiplicities.empty() ? 0 : multiplicities.front(); }
  RingDescriptor ring() const { return RingDescriptor(n + 1, field); }

  /// Throws std::invalid_argument on an empty point list, non-positive or
  /// increasing multiplicities, too many coordinate points, malformed or
  /// coincident explicit points.
  void validate() const;
};

}  // namespace fatbetti
