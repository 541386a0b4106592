#include "fris/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace fris {
namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& origin, const std::string& where,
                       const std::string& why) {
  std::string context = origin;
  if (!where.empty()) {
    if (!context.empty()) context += ": ";
    context += where;
  }
  throw ParseError(why, context);
}

json parse_stream(std::istream& in, const std::string& origin) {
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    fail(origin, "", e.what());
  }
}

const json& need(const json& j, const char* key, const std::string& origin,
                 const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) {
    fail(origin, where, std::string("missing field \"") + key + "\"");
  }
  return *it;
}

std::string need_string(const json& j, const char* key, const std::string& origin,
                        const std::string& where) {
  const json& v = need(j, key, origin, where);
  if (!v.is_string()) {
    fail(origin, where, std::string("field \"") + key + "\" must be a string");
  }
  return v.get<std::string>();
}

void check_header(const json& j, const char* format, const std::string& origin) {
  if (!j.is_object()) fail(origin, "", "document must be a JSON object");
  std::string got = need_string(j, "format", origin, "");
  if (got != format) {
    fail(origin, "format",
         "expected \"" + std::string(format) + "\", got \"" + got + "\"");
  }
  std::string version = need_string(j, "version", origin, "");
  if (version != kFormatVersion) {
    fail(origin, "version", "unsupported version \"" + version + "\"");
  }
}

FuzzyValue parse_cell(const json& cell, int max_scale, const std::string& origin,
                      const std::string& where) {
  if (!cell.is_string()) {
    fail(origin, where, "grades must be decimal strings like \"0.7\"");
  }
  try {
    return FuzzyValue::parse(cell.get<std::string>(), max_scale);
  } catch (const Error& e) {
    fail(origin, where, e.what());
  }
}

Matrix parse_matrix(const json& rows, int max_scale, const std::string& origin,
                    const std::string& where) {
  if (!rows.is_array()) fail(origin, where, "must be an array of rows");
  Matrix out;
  out.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const json& row = rows[i];
    std::string row_where = where + "[" + std::to_string(i) + "]";
    if (!row.is_array()) fail(origin, row_where, "must be an array of grades");
    std::vector<FuzzyValue> values;
    values.reserve(row.size());
    for (std::size_t c = 0; c < row.size(); ++c) {
      values.push_back(parse_cell(row[c], max_scale, origin,
                                  row_where + "[" + std::to_string(c) + "]"));
    }
    out.push_back(std::move(values));
  }
  return out;
}

std::vector<std::string> parse_labels(const json& arr, const std::string& origin,
                                      const std::string& where) {
  if (!arr.is_array()) fail(origin, where, "must be an array of strings");
  std::vector<std::string> out;
  out.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_string()) {
      fail(origin, where + "[" + std::to_string(i) + "]", "must be a string");
    }
    out.push_back(arr[i].get<std::string>());
  }
  return out;
}

std::vector<FuzzyRelation> parse_relations(const json& arr, int max_scale,
                                           const std::string& origin,
                                           const std::string& where) {
  if (!arr.is_array()) fail(origin, where, "must be an array of relations");
  std::vector<FuzzyRelation> out;
  out.reserve(arr.size());
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const json& rel = arr[k];
    std::string rel_where = where + "[" + std::to_string(k) + "]";
    if (!rel.is_object()) fail(origin, rel_where, "must be an object");
    FuzzyRelation r;
    r.name = need_string(rel, "name", origin, rel_where);
    std::string tagged = where + "[" + r.name + "]";
    r.rows = parse_matrix(need(rel, "rows", origin, tagged), max_scale, origin,
                          tagged + ".rows");
    out.push_back(std::move(r));
  }
  return out;
}

RelationSystem parse_system_body(const json& j, int max_scale,
                                 const std::string& origin,
                                 const std::string& where) {
  RelationSystem sys;
  std::string prefix = where.empty() ? "" : where + ".";
  sys.universe =
      parse_labels(need(j, "universe", origin, where), origin, prefix + "universe");
  sys.relations = parse_relations(need(j, "relations", origin, where), max_scale,
                                  origin, prefix + "relations");
  auto violations = validate_system(sys);
  if (!violations.empty()) {
    std::ostringstream msg;
    msg << "invalid relation system:";
    for (const auto& v : violations) msg << "\n  " << v.location << ": " << v.message;
    fail(origin, where, msg.str());
  }
  return sys;
}

json matrix_to_json(const Matrix& rows) {
  json out = json::array();
  for (const auto& row : rows) {
    json jrow = json::array();
    for (const auto& v : row) jrow.push_back(v.str());
    out.push_back(std::move(jrow));
  }
  return out;
}

json relations_to_json(const std::vector<FuzzyRelation>& relations) {
  json out = json::array();
  for (const auto& r : relations) {
    out.push_back(json{{"name", r.name}, {"rows", matrix_to_json(r.rows)}});
  }
  return out;
}

json system_body_to_json(const RelationSystem& sys) {
  json body;
  body["universe"] = sys.universe;
  body["relations"] = relations_to_json(sys.relations);
  return body;
}

json blocks_to_json(const std::vector<std::string>& labels, const Partition& p) {
  json out = json::array();
  for (const auto& block : p.blocks()) {
    json jblock = json::array();
    for (std::size_t m : block) jblock.push_back(labels[m]);
    out.push_back(std::move(jblock));
  }
  return out;
}

Partition parse_partition(const json& arr, const RelationSystem& sys,
                          const std::string& origin, const std::string& where) {
  if (!arr.is_array()) fail(origin, where, "must be an array of blocks");
  std::vector<Block> blocks;
  blocks.reserve(arr.size());
  for (std::size_t b = 0; b < arr.size(); ++b) {
    auto labels =
        parse_labels(arr[b], origin, where + "[" + std::to_string(b) + "]");
    Block block;
    block.reserve(labels.size());
    for (const auto& label : labels) {
      try {
        block.push_back(sys.object_index(label));
      } catch (const Error& e) {
        fail(origin, where + "[" + std::to_string(b) + "]", e.what());
      }
    }
    blocks.push_back(std::move(block));
  }
  try {
    return Partition::from_blocks(sys.size(), std::move(blocks));
  } catch (const Error& e) {
    fail(origin, where, e.what());
  }
}

// A stored per-relation partition is accepted only if it really is the
// row (or strict) partition of its relation: members of a block must
// carry identical rows (and columns) and representatives of different
// blocks must not.
void verify_relation_partition(const Partition& p, const FuzzyRelation& r,
                               bool strict, const std::string& origin,
                               const std::string& where) {
  std::size_t n = r.row_count();
  auto same = [&](std::size_t a, std::size_t b) {
    for (std::size_t z = 0; z < n; ++z) {
      if (r.at(a, z) != r.at(b, z)) return false;
    }
    if (strict) {
      for (std::size_t z = 0; z < n; ++z) {
        if (r.at(z, a) != r.at(z, b)) return false;
      }
    }
    return true;
  };
  for (const auto& block : p.blocks()) {
    for (std::size_t m : block) {
      if (!same(block.front(), m)) {
        fail(origin, where,
             "stored partition for \"" + r.name + "\" groups differing objects");
      }
    }
  }
  for (std::size_t a = 0; a < p.block_count(); ++a) {
    for (std::size_t b = a + 1; b < p.block_count(); ++b) {
      if (same(p.blocks()[a].front(), p.blocks()[b].front())) {
        fail(origin, where,
             "stored partition for \"" + r.name + "\" separates equal objects");
      }
    }
  }
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file: " + path);
  return in;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write file: " + path);
  out << text;
  if (!out) throw Error("failed while writing file: " + path);
}

}  // namespace

RelationSystem read_system(std::istream& in, const std::string& origin,
                           const LoadOptions& options) {
  json j = parse_stream(in, origin);
  check_header(j, kSystemFormat, origin);
  return parse_system_body(j, options.max_scale, origin, "");
}

RelationSystem load_system(const std::string& path, const LoadOptions& options) {
  auto in = open_input(path);
  return read_system(in, path, options);
}

std::string system_to_string(const RelationSystem& sys, const std::string& comment) {
  require_valid(sys);
  json j;
  j["format"] = kSystemFormat;
  j["version"] = kFormatVersion;
  if (!comment.empty()) j["comment"] = comment;
  json body = system_body_to_json(sys);
  j["universe"] = std::move(body["universe"]);
  j["relations"] = std::move(body["relations"]);
  return j.dump(2) + "\n";
}

void save_system(const RelationSystem& sys, const std::string& path,
                 const std::string& comment) {
  write_file(path, system_to_string(sys, comment));
}

CompressionState read_state(std::istream& in, const std::string& origin,
                            const LoadOptions& options) {
  json j = parse_stream(in, origin);
  check_header(j, kStateFormat, origin);

  CompressionState state;
  state.mode = parse_mode(need_string(j, "mode", origin, ""));
  state.image_prefix = need_string(j, "image_prefix", origin, "");
  const json& fell = need(j, "fell_back_to_scratch", origin, "");
  if (!fell.is_boolean()) {
    fail(origin, "fell_back_to_scratch", "must be a boolean");
  }
  state.fell_back_to_scratch = fell.get<bool>();
  state.source = parse_system_body(need(j, "source", origin, ""),
                                   options.max_scale, origin, "source");

  const json& parts = need(j, "partitions", origin, "");
  if (!parts.is_object()) fail(origin, "partitions", "must be an object");
  const json& per_rel = need(parts, "per_relation", origin, "partitions");
  if (!per_rel.is_array()) {
    fail(origin, "partitions.per_relation", "must be an array");
  }
  if (per_rel.size() != state.source.relations.size()) {
    fail(origin, "partitions.per_relation",
         "expected one partition per relation");
  }
  bool strict = state.mode == Mode::strict;
  PartitionCache cache;
  cache.mode = state.mode;
  for (std::size_t k = 0; k < per_rel.size(); ++k) {
    std::string where = "partitions.per_relation[" + std::to_string(k) + "]";
    if (!per_rel[k].is_object()) fail(origin, where, "must be an object");
    std::string name = need_string(per_rel[k], "name", origin, where);
    if (name != state.source.relations[k].name) {
      fail(origin, where,
           "expected relation \"" + state.source.relations[k].name +
               "\", got \"" + name + "\"");
    }
    Partition p = parse_partition(need(per_rel[k], "blocks", origin, where),
                                  state.source, origin, where + ".blocks");
    verify_relation_partition(p, state.source.relations[k], strict, origin,
                              where + ".blocks");
    cache.per_relation.push_back(std::move(p));
  }
  cache.combined = parse_partition(need(parts, "combined", origin, "partitions"),
                                   state.source, origin, "partitions.combined");
  Partition remet = Partition::one_block(state.source.size());
  for (const auto& p : cache.per_relation) remet = meet(remet, p);
  if (remet != cache.combined) {
    fail(origin, "partitions.combined",
         "stored combined partition is not the meet of the per-relation ones");
  }

  QuotientMap map = quotient_map(state.source.universe, cache.combined,
                                 state.image_prefix);

  const json& image = need(j, "image", origin, "");
  RelationSystem stored_image = parse_system_body(image, options.max_scale,
                                                  origin, "image");
  if (stored_image.universe != map.image_labels) {
    fail(origin, "image.universe",
         "image labels must be \"" + state.image_prefix +
             "1\"... in class order");
  }
  if (stored_image.relations.size() != state.source.relations.size()) {
    fail(origin, "image.relations", "expected one image per relation");
  }
  for (std::size_t k = 0; k < stored_image.relations.size(); ++k) {
    if (stored_image.relations[k].name != state.source.relations[k].name) {
      fail(origin, "image.relations[" + std::to_string(k) + "]",
           "image relations must keep source names and order");
    }
    FuzzyRelation expected = image_relation(map, state.source.relations[k]);
    if (stored_image.relations[k].rows != expected.rows) {
      fail(origin, "image.relations[" + stored_image.relations[k].name + "]",
           "stored image does not match the value recomputed from the source");
    }
  }

  const json& assignment = need(j, "assignment", origin, "");
  if (!assignment.is_object()) fail(origin, "assignment", "must be an object");
  if (assignment.size() != state.source.size()) {
    fail(origin, "assignment", "expected one entry per source object");
  }
  for (std::size_t i = 0; i < state.source.size(); ++i) {
    const std::string& label = state.source.universe[i];
    auto it = assignment.find(label);
    if (it == assignment.end()) {
      fail(origin, "assignment", "missing entry for \"" + label + "\"");
    }
    if (!it->is_string() ||
        it->get<std::string>() != map.image_labels[map.assignment[i]]) {
      fail(origin, "assignment." + label,
           "does not match the stored partitions");
    }
  }

  const json& consistency = need(j, "consistency", origin, "");
  if (!consistency.is_array() ||
      consistency.size() != state.source.relations.size()) {
    fail(origin, "consistency", "expected one entry per relation");
  }
  std::vector<ConsistencyReport> reports;
  reports.reserve(state.source.relations.size());
  for (std::size_t k = 0; k < consistency.size(); ++k) {
    std::string where = "consistency[" + std::to_string(k) + "]";
    if (!consistency[k].is_object()) fail(origin, where, "must be an object");
    std::string name = need_string(consistency[k], "name", origin, where);
    if (name != state.source.relations[k].name) {
      fail(origin, where, "must follow the relation family order");
    }
    const json& flag = need(consistency[k], "consistent", origin, where);
    if (!flag.is_boolean()) fail(origin, where + ".consistent", "must be a boolean");
    ConsistencyReport report = consistency_report(map, state.source.relations[k]);
    if (report.consistent != flag.get<bool>()) {
      fail(origin, where + ".consistent",
           "stored flag contradicts the recomputed report for \"" + name + "\"");
    }
    reports.push_back(std::move(report));
  }

  state.compressed.cache = std::move(cache);
  state.compressed.map = std::move(map);
  state.compressed.image = std::move(stored_image);
  state.compressed.consistency = std::move(reports);
  return state;
}

CompressionState load_state(const std::string& path, const LoadOptions& options) {
  auto in = open_input(path);
  return read_state(in, path, options);
}

std::string state_to_string(const CompressionState& state) {
  json j;
  j["format"] = kStateFormat;
  j["version"] = kFormatVersion;
  j["mode"] = to_string(state.mode);
  j["image_prefix"] = state.image_prefix;
  j["fell_back_to_scratch"] = state.fell_back_to_scratch;
  j["source"] = system_body_to_json(state.source);

  json per_rel = json::array();
  for (std::size_t k = 0; k < state.source.relations.size(); ++k) {
    per_rel.push_back(
        json{{"name", state.source.relations[k].name},
             {"blocks", blocks_to_json(state.source.universe,
                                       state.compressed.cache.per_relation[k])}});
  }
  j["partitions"] = json{
      {"per_relation", std::move(per_rel)},
      {"combined",
       blocks_to_json(state.source.universe, state.compressed.cache.combined)}};

  json assignment = json::object();
  const QuotientMap& map = state.compressed.map;
  for (std::size_t i = 0; i < map.source_labels.size(); ++i) {
    assignment[map.source_labels[i]] = map.image_labels[map.assignment[i]];
  }
  j["assignment"] = std::move(assignment);
  j["image"] = system_body_to_json(state.compressed.image);

  json consistency = json::array();
  for (const auto& report : state.compressed.consistency) {
    consistency.push_back(
        json{{"name", report.relation}, {"consistent", report.consistent}});
  }
  j["consistency"] = std::move(consistency);
  return j.dump(2) + "\n";
}

void save_state(const CompressionState& state, const std::string& path) {
  write_file(path, state_to_string(state));
}

EditKind parse_edit_kind(std::string_view text) {
  if (text == "add-relations") return EditKind::add_relations;
  if (text == "remove-relations") return EditKind::remove_relations;
  if (text == "add-objects") return EditKind::add_objects;
  if (text == "remove-objects") return EditKind::remove_objects;
  throw Error("unknown edit kind \"" + std::string(text) + "\"");
}

std::string to_string(EditKind kind) {
  switch (kind) {
    case EditKind::add_relations:
      return "add-relations";
    case EditKind::remove_relations:
      return "remove-relations";
    case EditKind::add_objects:
      return "add-objects";
    case EditKind::remove_objects:
      return "remove-objects";
  }
  throw Error("invalid edit kind");
}

EditDocument read_edit(std::istream& in, const std::string& origin,
                       const LoadOptions& options) {
  json j = parse_stream(in, origin);
  check_header(j, kEditFormat, origin);
  EditDocument edit;
  std::string kind = need_string(j, "kind", origin, "");
  try {
    edit.kind = parse_edit_kind(kind);
  } catch (const Error& e) {
    fail(origin, "kind", e.what());
  }
  switch (edit.kind) {
    case EditKind::add_relations:
      edit.relations = parse_relations(need(j, "relations", origin, ""),
                                       options.max_scale, origin, "relations");
      break;
    case EditKind::remove_relations:
    case EditKind::remove_objects:
      edit.names = parse_labels(need(j, "names", origin, ""), origin, "names");
      break;
    case EditKind::add_objects: {
      edit.extension.new_labels =
          parse_labels(need(j, "new_objects", origin, ""), origin, "new_objects");
      const json& parts = need(j, "parts", origin, "");
      if (!parts.is_array()) fail(origin, "parts", "must be an array");
      for (std::size_t k = 0; k < parts.size(); ++k) {
        std::string where = "parts[" + std::to_string(k) + "]";
        if (!parts[k].is_object()) fail(origin, where, "must be an object");
        ObjectExtension::RelationParts p;
        p.name = need_string(parts[k], "name", origin, where);
        std::string tagged = "parts[" + p.name + "]";
        p.old_to_new = parse_matrix(need(parts[k], "old_to_new", origin, tagged),
                                    options.max_scale, origin,
                                    tagged + ".old_to_new");
        p.new_rows = parse_matrix(need(parts[k], "new_rows", origin, tagged),
                                  options.max_scale, origin, tagged + ".new_rows");
        edit.extension.parts.push_back(std::move(p));
      }
      break;
    }
  }
  return edit;
}

EditDocument load_edit(const std::string& path, const LoadOptions& options) {
  auto in = open_input(path);
  return read_edit(in, path, options);
}

std::string edit_to_string(const EditDocument& edit) {
  json j;
  j["format"] = kEditFormat;
  j["version"] = kFormatVersion;
  j["kind"] = to_string(edit.kind);
  switch (edit.kind) {
    case EditKind::add_relations:
      j["relations"] = relations_to_json(edit.relations);
      break;
    case EditKind::remove_relations:
    case EditKind::remove_objects:
      j["names"] = edit.names;
      break;
    case EditKind::add_objects: {
      j["new_objects"] = edit.extension.new_labels;
      json parts = json::array();
      for (const auto& p : edit.extension.parts) {
        parts.push_back(json{{"name", p.name},
                             {"old_to_new", matrix_to_json(p.old_to_new)},
                             {"new_rows", matrix_to_json(p.new_rows)}});
      }
      j["parts"] = std::move(parts);
      break;
    }
  }
  return j.dump(2) + "\n";
}

void save_edit(const EditDocument& edit, const std::string& path) {
  write_file(path, edit_to_string(edit));
}

}  // namespace fris
