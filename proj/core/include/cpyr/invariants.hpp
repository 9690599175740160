#pragma once

#include <string>
#include <vector>

#include "cpyr/image.hpp"
#include "cpyr/pyramid.hpp"

namespace cpyr {

struct InvariantResult {
  std::string name;
  bool passed = true;
  std::size_t checked = 0;  // number of items examined
  std::string detail;       // first failure
};

/// Runs the structural invariants on every level of `pyr`: map validity,
/// cached vs recomputed orientations, closed boundary orientations, loop
/// propositions, containment work bound and pixel conservation. With an image,
/// region statistics are checked as well.
std::vector<InvariantResult> check_invariants(const Pyramid& pyr, const Image* image = nullptr);

}  // namespace cpyr
