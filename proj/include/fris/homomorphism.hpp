#pragma once

#include <string>
#include <vector>

#include "fris/model.hpp"
#include "fris/partitioning.hpp"

namespace fris {

// Surjection from a source universe onto the image universe induced by a
// partition: all members of block k map to image object k.
struct QuotientMap {
  std::vector<std::string> source_labels;
  std::vector<std::string> image_labels;
  // assignment[i] = image index of source object i.
  std::vector<std::size_t> assignment;
  Partition partition;

  std::size_t image_size() const { return image_labels.size(); }
};

// Builds the quotient map of a partition. Image labels are
// prefix + "1", ..., prefix + "N" in canonical block order.
QuotientMap quotient_map(const std::vector<std::string>& universe,
                         const Partition& partition,
                         const std::string& prefix = "y");

// Witness that a relation is not constant on a product of two classes:
// R(u, v) differs from R(s, t) although u, s share a class and v, t share
// a class.
struct ConsistencyViolation {
  std::string relation;
  std::size_t block_a = 0;
  std::size_t block_b = 0;
  ObjectId u, v, s, t;
  FuzzyValue value_uv, value_st;
};

struct ConsistencyReport {
  std::string relation;
  bool consistent = true;
  // One witness per offending block pair: the first cell of the product in
  // ascending scan order versus the first cell that differs from it.
  std::vector<ConsistencyViolation> violations;
};

// Checks that the relation is constant on every product of two map
// classes, i.e. that the map is a homomorphism for this relation.
ConsistencyReport consistency_report(const QuotientMap& f, const FuzzyRelation& r,
                                     const ValueEq& eq = {});

bool is_consistent(const QuotientMap& f, const FuzzyRelation& r,
                   const ValueEq& eq = {});

// Image relation: entry (a, b) is the largest grade the relation takes on
// preimage(a) x preimage(b). Taking suprema makes images compose: the
// image under g then h equals the image under their composition.
FuzzyRelation image_relation(const QuotientMap& f, const FuzzyRelation& r);

// Inverse image: entry (u, v) = t(f(u), f(v)).
FuzzyRelation inverse_image_relation(const QuotientMap& f, const FuzzyRelation& t);

// Result of compressing a system: the image system, the map that produced
// it, the partitions used, and one consistency report per relation.
struct CompressedSystem {
  RelationSystem image;
  QuotientMap map;
  PartitionCache cache;
  std::vector<ConsistencyReport> consistency;
};

// Compresses a system through the quotient of its combined partition.
// In strict mode the quotient is consistent with every relation by
// construction; in row mode the reports say which relations survive
// exactly.
CompressedSystem compress(const RelationSystem& sys, Mode mode = Mode::row,
                          const std::string& prefix = "y", const ValueEq& eq = {});

}  // namespace fris
