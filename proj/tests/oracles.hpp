// Test-only oracles, independent of the library's search paths.
#ifndef AMALGAM_TESTS_ORACLES_HPP
#define AMALGAM_TESTS_ORACLES_HPP

#include <vector>

#include "amalgam/module.hpp"

namespace amalgam::oracles {

/// Brute-force enumeration of all R-linear maps M -> N: backtracking over
/// images in element order, pruning with the linearity constraints already
/// determined by the partial assignment. No generating sequences involved.
/// Returns the sorted list of map vectors.
std::vector<std::vector<Elem>> brute_force_module_homs(const ModulePtr& m,
                                                       const ModulePtr& n);

}  // namespace amalgam::oracles

#endif
