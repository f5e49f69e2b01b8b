#pragma once

#include <vector>

#include "pattern_engine.hpp"
#include "patterns.hpp"

namespace tightpath::detail {

// Windows and cyclic constraints for a k-edge tight path, zigzag or stack.
FillPlan pattern_plan(PatternKind kind, int k, int r);

// Block-wise cyclic constraints of a good path of `length` vertices.
std::vector<std::vector<int>> good_path_groups(int length, int r);

}  // namespace tightpath::detail
