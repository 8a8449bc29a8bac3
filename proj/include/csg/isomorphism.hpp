#pragma once

#include "csg/graph.hpp"

namespace csg {

// Exact isomorphism test by individualization + color refinement with a
// full adjacency verification of the final mapping. Handles strongly
// regular graphs at the sizes the generators use (a few dozen nodes).
bool are_isomorphic(const Graph& a, const Graph& b);

// Exact backtracking over vertex mappings (degree-pruned). Independent of
// the refinement machinery; meant for cross-checks on small graphs.
bool brute_force_isomorphic(const Graph& a, const Graph& b);

}  // namespace csg
