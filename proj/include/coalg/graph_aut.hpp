#pragma once

#include <vector>

#include "coalg/binary_system.hpp"
#include "coalg/caps.hpp"

namespace coalg {

// Every vertex bijection preserving each labeled relation in both
// directions, sorted lexicographically by image list. Exhaustive: the
// search backtracks over a color refinement of the vertices and throws
// SearchCapExceeded when the node budget runs out or when refinement finds
// no structure to prune with on a large graph.
std::vector<Perm> automorphisms(const BinarySystem& s, const Caps& caps = {});

}  // namespace coalg
