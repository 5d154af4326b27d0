#pragma once

#include "certidom/graph.hpp"

namespace certidom {

/// Exact independence number via branch and bound seeded with a greedy
/// lower bound.
int max_independent_set_size(const Graph& g);

}  // namespace certidom
