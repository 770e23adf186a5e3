// svg.hpp
// Deterministic SVG renderings: a tiling strip, the partition tower, and
// the Bratteli diagram. Byte-stable for identical input.

#pragma once

#include "fibchain/cutproject.hpp"
#include "fibchain/partition.hpp"

#include <string>
#include <vector>

namespace fib {

std::string svg_tiling(const std::vector<Tile>& tiles);

// Levels 0..n stacked vertically, L/S color-coded.
std::string svg_tower(int levels);

std::string svg_bratteli(int levels);

}  // namespace fib
