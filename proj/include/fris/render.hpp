#pragma once

#include <string>
#include <vector>

#include "fris/homomorphism.hpp"
#include "fris/model.hpp"
#include "fris/partitioning.hpp"

namespace fris {

// Plain-text rendering for the command line. Blocks print as
// "{x1, x3}", mappings as "y1 <- {x1, x7}", matrices with padded
// label headers.
std::string render_block(const std::vector<std::string>& labels, const Block& block);
std::string render_partition(const std::vector<std::string>& labels,
                             const Partition& partition);
// One line per object: its block in each relation's partition and in the
// combined one, blocks numbered from 1.
std::string render_partition_grid(const RelationSystem& sys,
                                  const PartitionCache& cache);
std::string render_mapping(const QuotientMap& map);
std::string render_relation(const std::vector<std::string>& labels,
                            const FuzzyRelation& relation);
std::string render_compressed(const CompressedSystem& compressed);

}  // namespace fris
