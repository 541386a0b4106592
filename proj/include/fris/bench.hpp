#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fris/dynamics.hpp"

namespace fris {

// One edit measured incrementally and from scratch. The partition counts
// tally per-relation partition computations, regardless of their size;
// the milliseconds carry the actual cost. equivalent_result records
// whether both paths produced the same compression.
struct BenchRow {
  std::string edit_kind;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t t = 0;
  double incr_ms = 0.0;
  double scratch_ms = 0.0;
  std::uint64_t incr_partitions = 0;
  std::uint64_t scratch_partitions = 0;
  bool equivalent_result = true;
};

struct BenchConfig {
  std::uint64_t seed = 1;
  std::size_t instances = 3;
  // Objects in each generated system.
  std::size_t size = 60;
  std::size_t relation_count = 8;
  // Relations or objects touched per edit.
  std::size_t edit_size = 2;
  std::size_t image_size = 12;
};

// For each instance: one add-relations, remove-relations, add-objects and
// remove-objects edit on freshly generated pullback systems, timed against
// the reference recompression of the edited system. Deterministic in the
// seed except for the timing columns.
std::vector<BenchRow> run_bench(const BenchConfig& config = {});

std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace fris
