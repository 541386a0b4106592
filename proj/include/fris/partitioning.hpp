#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fris/model.hpp"

namespace fris {

// row: objects are grouped by equal relation rows.
// strict: rows and columns must both agree, which guarantees every
// resulting quotient is consistent with the relation.
enum class Mode { row, strict };

Mode parse_mode(std::string_view text);
std::string to_string(Mode mode);

// Partition of the universe grouping objects with identical rows under eq.
// With an epsilon the closeness relation is closed transitively (union-
// find), since "within epsilon" alone is not an equivalence.
Partition row_partition(const FuzzyRelation& r, const ValueEq& eq = {});

// Like row_partition but objects must agree in rows and columns.
Partition strict_partition(const FuzzyRelation& r, const ValueEq& eq = {});

// Coarsest partition refining both arguments; throws on size mismatch.
Partition meet(const Partition& p, const Partition& q);

// Per-relation partitions in family order plus their meet.
struct PartitionCache {
  Mode mode = Mode::row;
  std::vector<Partition> per_relation;
  Partition combined;
};

// Computes every per-relation partition and their meet. An empty family
// yields the trivial one-block partition: no relation distinguishes
// anything.
PartitionCache system_partition(const RelationSystem& sys, Mode mode = Mode::row,
                                const ValueEq& eq = {});

// Number of per-relation partition computations performed so far in this
// process. Each row_partition / strict_partition call counts once; meets
// are not counted. Used to compare incremental updates with recompression.
std::uint64_t partition_computations();
void reset_partition_computations();

namespace detail {
// Accounts one per-relation partition computation performed outside of
// row_partition / strict_partition. The reference recompression keeps its
// own scan loops but must still be costed like everyone else.
void record_partition_computation();
}  // namespace detail

}  // namespace fris
