#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fris/dynamics.hpp"
#include "fris/model.hpp"

namespace fris {

// Document type tags. All three formats share {"format", "version"}.
inline constexpr const char* kSystemFormat = "fris-system";
inline constexpr const char* kStateFormat = "fris-state";
inline constexpr const char* kEditFormat = "fris-edit";
inline constexpr const char* kFormatVersion = "1";

struct LoadOptions {
  // Maximum number of fraction digits accepted in grade strings.
  int max_scale = FuzzyValue::kDefaultScale;
};

RelationSystem load_system(const std::string& path, const LoadOptions& options = {});
RelationSystem read_system(std::istream& in, const std::string& origin,
                           const LoadOptions& options = {});
std::string system_to_string(const RelationSystem& sys,
                             const std::string& comment = "");
void save_system(const RelationSystem& sys, const std::string& path,
                 const std::string& comment = "");

// States are persisted with their partition cache. Loading re-derives the
// quotient map from the stored blocks and verifies everything that is
// derivable: the combined partition must be the meet of the per-relation
// ones, each per-relation partition must match its relation, image labels
// must follow the prefix scheme, the stored assignment and image matrices
// must match their recomputed values and the consistency flags must match
// recomputed reports.
CompressionState load_state(const std::string& path, const LoadOptions& options = {});
CompressionState read_state(std::istream& in, const std::string& origin,
                            const LoadOptions& options = {});
std::string state_to_string(const CompressionState& state);
void save_state(const CompressionState& state, const std::string& path);

enum class EditKind { add_relations, remove_relations, add_objects, remove_objects };

EditKind parse_edit_kind(std::string_view text);
std::string to_string(EditKind kind);

// One edit request. Only the fields for its kind are meaningful:
// relations for add-relations, names for remove-relations and
// remove-objects, extension for add-objects.
struct EditDocument {
  EditKind kind = EditKind::add_relations;
  std::vector<FuzzyRelation> relations;
  std::vector<std::string> names;
  ObjectExtension extension;
};

EditDocument load_edit(const std::string& path, const LoadOptions& options = {});
EditDocument read_edit(std::istream& in, const std::string& origin,
                       const LoadOptions& options = {});
std::string edit_to_string(const EditDocument& edit);
void save_edit(const EditDocument& edit, const std::string& path);

}  // namespace fris
