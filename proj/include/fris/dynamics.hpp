#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fris/homomorphism.hpp"
#include "fris/model.hpp"
#include "fris/partitioning.hpp"

namespace fris {

// A source system together with its compression, kept in sync across
// edits. The per-relation partitions inside compressed.cache are the
// working capital of every incremental update.
struct CompressionState {
  RelationSystem source;
  CompressedSystem compressed;
  Mode mode = Mode::row;
  std::string image_prefix = "y";
  // True when the last edit had to rebuild the compression from scratch
  // instead of updating it incrementally.
  bool fell_back_to_scratch = false;

  const Partition& combined() const { return compressed.cache.combined; }
};

CompressionState make_state(const RelationSystem& sys, Mode mode = Mode::row,
                            const std::string& image_prefix = "y");

// Appends relations. Only the new relations' partitions are computed; the
// cached ones are reused, so this is always exact and never falls back.
CompressionState add_relations(const CompressionState& state,
                               const std::vector<FuzzyRelation>& new_relations,
                               const std::optional<std::string>& image_prefix = {});

// Drops the named relations. No partition is recomputed at all: the
// remaining cached partitions are re-met. Removing every relation is an
// error.
CompressionState remove_relations(const CompressionState& state,
                                  const std::vector<std::string>& names,
                                  const std::optional<std::string>& image_prefix = {});

// New objects appended to the universe, with the grades that tie them to
// the old objects and to each other.
struct ObjectExtension {
  std::vector<std::string> new_labels;

  struct RelationParts {
    std::string name;
    // Grades from each old object to each new one: n x t.
    Matrix old_to_new;
    // Full rows of the new objects over the extended universe: t x (n+t).
    Matrix new_rows;
  };

  // One entry per relation of the family being extended.
  std::vector<RelationParts> parts;
};

struct AddObjectsResult {
  CompressionState state;
  // Stage 1: the cached classes refined by the new columns, plus the new
  // objects grouped among themselves.
  Partition delta;
  QuotientMap stage1_map;
  std::vector<FuzzyRelation> stage1_image;
  // Stage 2: recompression of the stage 1 image.
  QuotientMap stage2_map;
  std::vector<FuzzyRelation> stage2_image;
  bool fell_back = false;
};

// Extends the universe. The composed two-stage quotient is adopted only
// if it is consistent with every extended relation; otherwise the state
// is rebuilt from scratch and the result says so.
AddObjectsResult add_objects(const CompressionState& state,
                             const ObjectExtension& extension,
                             const std::optional<std::string>& image_prefix = {},
                             const std::string& stage1_prefix = "z",
                             const std::string& stage2_prefix = "w");

struct RemoveObjectsResult {
  CompressionState state;
  // Classes of the deleted objects (source indices before deletion),
  // grouped by the class they shared.
  std::vector<Block> deleted_classes;
  // Image objects whose class was deleted entirely, in image order.
  std::vector<std::string> dropped_image_objects;
  std::vector<std::string> kept_image_objects;
  // The old image restricted to the kept objects, labels unchanged.
  std::vector<FuzzyRelation> retained_image;
  // Regrouping of the retained image objects; trivial when deletion left
  // all their rows distinct.
  QuotientMap recompression_map;
  bool recompression_trivial = true;
  bool fell_back = false;
};

// Deletes the labelled objects. The retained image is reused only if the
// cached consistency reports show the old quotient was consistent with
// every relation; otherwise the state is rebuilt from scratch. Deleting
// every object is an error; deleting none returns the state unchanged.
RemoveObjectsResult remove_objects(const CompressionState& state,
                                   const std::vector<std::string>& labels,
                                   const std::optional<std::string>& image_prefix = {});

// Reference recompression, implemented independently of compress() and
// of the incremental updates: per-relation partitions by pairwise row
// scans, the combined partition by a direct scan over all relations at
// once, images by exhaustive max loops and consistency by scanning every
// class product. Each per-relation partition counts as one partition
// computation, like in compress().
CompressedSystem scratch_oracle(const RelationSystem& sys, Mode mode = Mode::row,
                                const std::string& prefix = "y");

// True iff both compressions name the same source objects in the same
// order, carry the same relation families, induce the same classes and
// assign every class pair the same image grade. Image labels may differ.
bool equivalent(const CompressedSystem& a, const CompressedSystem& b);

}  // namespace fris
