#pragma once

#include <string>
#include <vector>

#include "fris/homomorphism.hpp"
#include "fris/model.hpp"
#include "fris/partitioning.hpp"

namespace fris {

// Entry-wise minimum of a non-empty family of relations over one universe.
FuzzyRelation meet_relation(const std::vector<FuzzyRelation>& relations);

// What a relation subfamily must preserve to count as a reduct:
//   partition    - the subfamily induces the same combined partition as
//                  the full family (default; this is what compression
//                  results depend on),
//   meet_matrix  - the entry-wise minimum of the subfamily equals the
//                  entry-wise minimum of the full family.
enum class ReductCriterion { partition, meet_matrix };

ReductCriterion parse_criterion(std::string_view text);
std::string to_string(ReductCriterion criterion);

// True iff dropping the named relation leaves the criterion value
// unchanged. A single-relation family has nothing superfluous.
bool is_superfluous(const RelationSystem& sys, std::string_view name,
                    ReductCriterion criterion = ReductCriterion::partition,
                    Mode mode = Mode::row, const ValueEq& eq = {});

struct ReductResult {
  // Each reduct lists relation names in family order. Reducts are sorted
  // by size, then lexicographically by position in the family.
  std::vector<std::vector<std::string>> reducts;
  // Intersection of all listed reducts, in family order.
  std::vector<std::string> core;
};

// exhaustive finds every minimal preserving subfamily. greedy drops
// relations front to back while the criterion survives; it returns a
// single preserving subfamily that need not have minimum size.
enum class ReductSearch { exhaustive, greedy };

ReductResult reducts(const RelationSystem& sys,
                     ReductCriterion criterion = ReductCriterion::partition,
                     ReductSearch search = ReductSearch::exhaustive,
                     Mode mode = Mode::row, const ValueEq& eq = {});

// Maps a reduct of the image system back to source relation names.
// Compression keeps relation names, so this validates that each name
// exists in the source family and returns them in family order.
std::vector<std::string> lift_reduct(const CompressedSystem& compressed,
                                     const std::vector<std::string>& image_names);

}  // namespace fris
