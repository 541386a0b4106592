#pragma once

#include <cstdint>
#include <vector>

#include "fris/model.hpp"

namespace fris {

// The grades 0.1 through 0.9.
std::vector<FuzzyValue> default_value_grid();

struct PullbackSpec {
  // Number of classes the compression must recover.
  std::size_t image_size = 4;
  // Number of objects in the generated system.
  std::size_t size = 8;
  std::size_t relation_count = 3;
  // Grades to draw from; empty means default_value_grid().
  std::vector<FuzzyValue> grid;
  std::uint64_t seed = 1;
};

// Generates a system with a known compression: a random seed system on
// image_size objects is redrawn until no two of its objects share a full
// row signature, then pulled back through a random surjection. Every
// relation is constant on class products by construction and compressing
// the result recovers exactly image_size classes with the seed matrices.
// Deterministic in the seed.
RelationSystem gen_pullback(const PullbackSpec& spec);

// Uniformly random grades from the grid, no structure guaranteed.
RelationSystem gen_random(std::size_t size, std::size_t relation_count,
                          const std::vector<FuzzyValue>& grid, std::uint64_t seed);

}  // namespace fris
