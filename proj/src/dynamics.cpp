#include "fris/dynamics.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fris {
namespace {

using Signature = std::vector<std::int64_t>;

void append_row(Signature& sig, const FuzzyRelation& r, std::size_t i) {
  for (std::size_t j = 0; j < r.rows[i].size(); ++j) {
    sig.push_back(r.at(i, j).units());
  }
}

void append_col(Signature& sig, const FuzzyRelation& r, std::size_t i) {
  for (std::size_t j = 0; j < r.rows.size(); ++j) {
    sig.push_back(r.at(j, i).units());
  }
}

// Groups objects by the signature of their block's least member. Used to
// turn a refinement whose blocks are known to be signature-uniform into
// the exact signature partition without a full scan being recomputed.
Partition merge_blocks_by_signature(const Partition& refinement,
                                    const std::vector<Signature>& rep_signature) {
  std::vector<std::size_t> block_key(refinement.block_count());
  std::vector<std::size_t> firsts;
  for (std::size_t b = 0; b < refinement.block_count(); ++b) {
    block_key[b] = firsts.size();
    for (std::size_t k = 0; k < firsts.size(); ++k) {
      if (rep_signature[firsts[k]] == rep_signature[b]) {
        block_key[b] = k;
        break;
      }
    }
    if (block_key[b] == firsts.size()) firsts.push_back(b);
  }
  std::size_t n = refinement.universe_size();
  std::vector<std::size_t> keys(n);
  for (std::size_t i = 0; i < n; ++i) {
    keys[i] = block_key[refinement.block_index_of(i)];
  }
  return Partition::from_keys(keys);
}

std::vector<ConsistencyReport> all_reports(const QuotientMap& map,
                                           const std::vector<FuzzyRelation>& rels) {
  std::vector<ConsistencyReport> out;
  out.reserve(rels.size());
  for (const auto& r : rels) out.push_back(consistency_report(map, r));
  return out;
}

bool all_consistent(const std::vector<ConsistencyReport>& reports) {
  for (const auto& rep : reports) {
    if (!rep.consistent) return false;
  }
  return true;
}

CompressedSystem assemble(const RelationSystem& source, PartitionCache cache,
                          QuotientMap map) {
  CompressedSystem out;
  out.cache = std::move(cache);
  out.map = std::move(map);
  out.image.universe = out.map.image_labels;
  out.image.relations.reserve(source.relations.size());
  for (const auto& r : source.relations) {
    out.image.relations.push_back(image_relation(out.map, r));
  }
  out.consistency = all_reports(out.map, source.relations);
  return out;
}

}  // namespace

CompressionState make_state(const RelationSystem& sys, Mode mode,
                            const std::string& image_prefix) {
  CompressionState state;
  state.source = sys;
  state.mode = mode;
  state.image_prefix = image_prefix;
  state.compressed = compress(sys, mode, image_prefix);
  state.fell_back_to_scratch = false;
  return state;
}

CompressionState add_relations(const CompressionState& state,
                               const std::vector<FuzzyRelation>& new_relations,
                               const std::optional<std::string>& image_prefix) {
  std::string prefix = image_prefix.value_or(state.image_prefix);
  std::size_t n = state.source.size();

  std::set<std::string> names;
  for (const auto& r : state.source.relations) names.insert(r.name);
  for (const auto& r : new_relations) {
    if (r.name.empty()) throw Error("new relation has an empty name");
    if (!names.insert(r.name).second) {
      throw Error("relation \"" + r.name + "\" already exists");
    }
    if (!r.square_of(n)) {
      throw Error("relation \"" + r.name + "\" is not a " + std::to_string(n) +
                  "x" + std::to_string(n) + " matrix");
    }
  }

  CompressionState next;
  next.source = state.source;
  next.mode = state.mode;
  next.image_prefix = prefix;
  next.fell_back_to_scratch = false;

  PartitionCache cache = state.compressed.cache;
  for (const auto& r : new_relations) {
    next.source.relations.push_back(r);
    Partition p = state.mode == Mode::row ? row_partition(r) : strict_partition(r);
    cache.combined = meet(cache.combined, p);
    cache.per_relation.push_back(std::move(p));
  }
  QuotientMap map = quotient_map(next.source.universe, cache.combined, prefix);
  next.compressed = assemble(next.source, std::move(cache), std::move(map));
  return next;
}

CompressionState remove_relations(const CompressionState& state,
                                  const std::vector<std::string>& names,
                                  const std::optional<std::string>& image_prefix) {
  std::string prefix = image_prefix.value_or(state.image_prefix);

  std::set<std::size_t> drop;
  for (const auto& name : names) {
    if (!drop.insert(state.source.relation_index(name)).second) {
      throw Error("relation \"" + name + "\" named twice");
    }
  }
  if (drop.size() == state.source.relations.size()) {
    throw Error("cannot remove every relation");
  }

  CompressionState next;
  next.mode = state.mode;
  next.image_prefix = prefix;
  next.fell_back_to_scratch = false;
  next.source.universe = state.source.universe;

  PartitionCache cache;
  cache.mode = state.mode;
  cache.combined = Partition::one_block(state.source.size());
  for (std::size_t k = 0; k < state.source.relations.size(); ++k) {
    if (drop.count(k)) continue;
    next.source.relations.push_back(state.source.relations[k]);
    cache.combined = meet(cache.combined, state.compressed.cache.per_relation[k]);
    cache.per_relation.push_back(state.compressed.cache.per_relation[k]);
  }
  QuotientMap map = quotient_map(next.source.universe, cache.combined, prefix);
  next.compressed = assemble(next.source, std::move(cache), std::move(map));
  return next;
}

AddObjectsResult add_objects(const CompressionState& state,
                             const ObjectExtension& extension,
                             const std::optional<std::string>& image_prefix,
                             const std::string& stage1_prefix,
                             const std::string& stage2_prefix) {
  const RelationSystem& src = state.source;
  std::size_t n = src.size();
  std::size_t t = extension.new_labels.size();
  std::size_t m = src.relations.size();
  bool strict = state.mode == Mode::strict;
  std::string prefix = image_prefix.value_or(state.image_prefix);

  if (t == 0) {
    if (!extension.parts.empty()) {
      throw Error("extension adds no objects but carries relation parts");
    }
    AddObjectsResult out;
    out.state = state;
    out.state.image_prefix = prefix;
    if (prefix != state.image_prefix) {
      QuotientMap map = quotient_map(src.universe, state.combined(), prefix);
      out.state.compressed = assemble(src, state.compressed.cache, std::move(map));
    }
    out.delta = state.combined();
    out.stage1_map = quotient_map(src.universe, out.delta, stage1_prefix);
    for (const auto& r : src.relations) {
      out.stage1_image.push_back(image_relation(out.stage1_map, r));
    }
    out.stage2_map = quotient_map(out.stage1_map.image_labels,
                                  Partition::singletons(out.delta.block_count()),
                                  stage2_prefix);
    out.stage2_image = out.stage1_image;
    out.fell_back = false;
    return out;
  }

  std::set<std::string> labels(src.universe.begin(), src.universe.end());
  for (const auto& label : extension.new_labels) {
    if (label.empty()) throw Error("new object has an empty label");
    if (!labels.insert(label).second) {
      throw Error("object \"" + label + "\" already exists");
    }
  }
  std::vector<const ObjectExtension::RelationParts*> part_of(m, nullptr);
  for (const auto& p : extension.parts) {
    std::size_t k = src.relation_index(p.name);
    if (part_of[k]) throw Error("duplicate parts for relation \"" + p.name + "\"");
    part_of[k] = &p;
  }
  for (std::size_t k = 0; k < m; ++k) {
    if (!part_of[k]) {
      throw Error("missing parts for relation \"" + src.relations[k].name + "\"");
    }
    const auto& p = *part_of[k];
    if (p.old_to_new.size() != n) {
      throw Error("parts for \"" + p.name + "\": expected " + std::to_string(n) +
                  " rows toward the new objects");
    }
    for (const auto& row : p.old_to_new) {
      if (row.size() != t) {
        throw Error("parts for \"" + p.name + "\": each old row needs " +
                    std::to_string(t) + " entries");
      }
    }
    if (p.new_rows.size() != t) {
      throw Error("parts for \"" + p.name + "\": expected " + std::to_string(t) +
                  " new rows");
    }
    for (const auto& row : p.new_rows) {
      if (row.size() != n + t) {
        throw Error("parts for \"" + p.name + "\": each new row needs " +
                    std::to_string(n + t) + " entries");
      }
    }
  }

  RelationSystem extended;
  extended.universe = src.universe;
  extended.universe.insert(extended.universe.end(), extension.new_labels.begin(),
                           extension.new_labels.end());
  extended.relations.reserve(m);
  for (std::size_t k = 0; k < m; ++k) {
    const auto& p = *part_of[k];
    FuzzyRelation r;
    r.name = src.relations[k].name;
    r.rows.reserve(n + t);
    for (std::size_t i = 0; i < n; ++i) {
      auto row = src.relations[k].rows[i];
      row.insert(row.end(), p.old_to_new[i].begin(), p.old_to_new[i].end());
      r.rows.push_back(std::move(row));
    }
    for (std::size_t j = 0; j < t; ++j) r.rows.push_back(p.new_rows[j]);
    extended.relations.push_back(std::move(r));
  }

  // Stage 1 classes per relation: old objects keep their cached class,
  // split by what the new columns (and, in strict mode, the new rows) say
  // about them; new objects group among themselves by their full rows.
  // Old and new objects never share a stage 1 class; stage 2 merges them
  // when their image rows agree.
  std::vector<Partition> delta_rel(m);
  for (std::size_t k = 0; k < m; ++k) {
    const Partition& cached = state.compressed.cache.per_relation[k];
    const FuzzyRelation& er = extended.relations[k];
    std::vector<Signature> key(n + t);
    for (std::size_t i = 0; i < n; ++i) {
      Signature sig{0, static_cast<std::int64_t>(cached.block_index_of(i))};
      for (std::size_t j = n; j < n + t; ++j) sig.push_back(er.at(i, j).units());
      if (strict) {
        for (std::size_t j = n; j < n + t; ++j) sig.push_back(er.at(j, i).units());
      }
      key[i] = std::move(sig);
    }
    for (std::size_t j = 0; j < t; ++j) {
      Signature sig{1};
      append_row(sig, er, n + j);
      if (strict) append_col(sig, er, n + j);
      key[n + j] = std::move(sig);
    }
    delta_rel[k] = Partition::from_keys(key);
  }
  Partition delta = Partition::one_block(n + t);
  for (const auto& p : delta_rel) delta = meet(delta, p);

  AddObjectsResult out;
  out.delta = delta;
  out.stage1_map = quotient_map(extended.universe, delta, stage1_prefix);
  out.stage1_image.reserve(m);
  for (const auto& r : extended.relations) {
    out.stage1_image.push_back(image_relation(out.stage1_map, r));
  }

  std::size_t q = delta.block_count();
  std::vector<Signature> skey(q);
  for (std::size_t a = 0; a < q; ++a) {
    Signature sig;
    for (const auto& s : out.stage1_image) append_row(sig, s, a);
    if (strict) {
      for (const auto& s : out.stage1_image) append_col(sig, s, a);
    }
    skey[a] = std::move(sig);
  }
  Partition hpart = Partition::from_keys(skey);
  out.stage2_map = quotient_map(out.stage1_map.image_labels, hpart, stage2_prefix);
  out.stage2_image.reserve(m);
  for (const auto& s : out.stage1_image) {
    out.stage2_image.push_back(image_relation(out.stage2_map, s));
  }

  std::vector<std::size_t> ckey(n + t);
  for (std::size_t u = 0; u < n + t; ++u) {
    ckey[u] = out.stage2_map.assignment[out.stage1_map.assignment[u]];
  }
  Partition composed = Partition::from_keys(ckey);
  QuotientMap final_map = quotient_map(extended.universe, composed, prefix);

  // The composed quotient is adopted only if every extended relation is
  // constant on all of its class products.
  std::vector<ConsistencyReport> reports = all_reports(final_map, extended.relations);
  bool exact = all_consistent(reports);

  PartitionCache cache;
  if (exact) {
    cache.mode = state.mode;
    cache.per_relation.reserve(m);
    cache.combined = Partition::one_block(n + t);
    for (std::size_t k = 0; k < m; ++k) {
      // Stage 1 classes are uniform in the extended relation, so grouping
      // them by a representative's signature restores the exact partition.
      const FuzzyRelation& er = extended.relations[k];
      std::vector<Signature> reps(delta_rel[k].block_count());
      for (std::size_t b = 0; b < reps.size(); ++b) {
        std::size_t rep = delta_rel[k].blocks()[b].front();
        append_row(reps[b], er, rep);
        if (strict) append_col(reps[b], er, rep);
      }
      Partition p = merge_blocks_by_signature(delta_rel[k], reps);
      cache.combined = meet(cache.combined, p);
      cache.per_relation.push_back(std::move(p));
    }
    if (cache.combined != composed) exact = false;
  }

  out.state.source = std::move(extended);
  out.state.mode = state.mode;
  out.state.image_prefix = prefix;
  if (exact) {
    out.state.compressed.cache = std::move(cache);
    out.state.compressed.map = std::move(final_map);
    out.state.compressed.image.universe = out.state.compressed.map.image_labels;
    for (const auto& r : out.state.source.relations) {
      out.state.compressed.image.relations.push_back(
          image_relation(out.state.compressed.map, r));
    }
    out.state.compressed.consistency = std::move(reports);
    out.state.fell_back_to_scratch = false;
    out.fell_back = false;
  } else {
    out.state.compressed = compress(out.state.source, state.mode, prefix);
    out.state.fell_back_to_scratch = true;
    out.fell_back = true;
  }
  return out;
}

RemoveObjectsResult remove_objects(const CompressionState& state,
                                   const std::vector<std::string>& labels,
                                   const std::optional<std::string>& image_prefix) {
  const RelationSystem& src = state.source;
  std::size_t n = src.size();
  std::size_t m = src.relations.size();
  bool strict = state.mode == Mode::strict;
  std::string prefix = image_prefix.value_or(state.image_prefix);

  if (labels.empty()) {
    RemoveObjectsResult out;
    out.state = state;
    out.state.image_prefix = prefix;
    if (prefix != state.image_prefix) {
      QuotientMap map = quotient_map(src.universe, state.combined(), prefix);
      out.state.compressed = assemble(src, state.compressed.cache, std::move(map));
    }
    out.kept_image_objects = state.compressed.map.image_labels;
    out.retained_image = state.compressed.image.relations;
    out.recompression_map =
        quotient_map(out.kept_image_objects,
                     Partition::singletons(out.kept_image_objects.size()), prefix);
    out.recompression_trivial = true;
    out.fell_back = false;
    return out;
  }

  std::vector<bool> deleted(n, false);
  for (const auto& label : labels) {
    std::size_t i = src.object_index(label);
    if (deleted[i]) throw Error("object \"" + label + "\" named twice");
    deleted[i] = true;
  }
  std::size_t d = labels.size();
  if (d == n) throw Error("cannot delete every object");

  RemoveObjectsResult out;

  const Partition& comb = state.combined();
  std::map<std::size_t, Block> star;
  for (std::size_t i = 0; i < n; ++i) {
    if (deleted[i]) star[comb.block_index_of(i)].push_back(i);
  }
  for (auto& [block, members] : star) {
    out.deleted_classes.push_back(std::move(members));
  }

  std::vector<std::size_t> kept_ids;
  for (std::size_t b = 0; b < comb.block_count(); ++b) {
    bool all_deleted = true;
    for (std::size_t u : comb.blocks()[b]) {
      if (!deleted[u]) {
        all_deleted = false;
        break;
      }
    }
    if (all_deleted) {
      out.dropped_image_objects.push_back(state.compressed.map.image_labels[b]);
    } else {
      out.kept_image_objects.push_back(state.compressed.map.image_labels[b]);
      kept_ids.push_back(b);
    }
  }
  std::vector<std::size_t> kept_pos(comb.block_count(), SIZE_MAX);
  for (std::size_t a = 0; a < kept_ids.size(); ++a) kept_pos[kept_ids[a]] = a;

  std::size_t kk = kept_ids.size();
  out.retained_image.reserve(m);
  for (const auto& ir : state.compressed.image.relations) {
    FuzzyRelation r;
    r.name = ir.name;
    r.rows.assign(kk, std::vector<FuzzyValue>(kk, FuzzyValue::zero()));
    for (std::size_t a = 0; a < kk; ++a) {
      for (std::size_t b = 0; b < kk; ++b) {
        r.rows[a][b] = ir.at(kept_ids[a], kept_ids[b]);
      }
    }
    out.retained_image.push_back(std::move(r));
  }

  // Deletion can make retained image rows collide, so the retained image
  // is regrouped the same way compression groups a system.
  std::vector<Signature> skey(kk);
  for (std::size_t a = 0; a < kk; ++a) {
    Signature sig;
    for (const auto& s : out.retained_image) append_row(sig, s, a);
    if (strict) {
      for (const auto& s : out.retained_image) append_col(sig, s, a);
    }
    skey[a] = std::move(sig);
  }
  Partition regroup = Partition::from_keys(skey);
  out.recompression_trivial = regroup.block_count() == kk;
  out.recompression_map = quotient_map(out.kept_image_objects, regroup, prefix);

  std::vector<std::size_t> new_index(n, SIZE_MAX);
  RelationSystem restricted;
  for (std::size_t i = 0; i < n; ++i) {
    if (!deleted[i]) {
      new_index[i] = restricted.universe.size();
      restricted.universe.push_back(src.universe[i]);
    }
  }
  std::size_t nn = restricted.universe.size();
  restricted.relations.reserve(m);
  for (const auto& sr : src.relations) {
    FuzzyRelation r;
    r.name = sr.name;
    r.rows.assign(nn, std::vector<FuzzyValue>(nn, FuzzyValue::zero()));
    for (std::size_t i = 0; i < n; ++i) {
      if (deleted[i]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (deleted[j]) continue;
        r.rows[new_index[i]][new_index[j]] = sr.at(i, j);
      }
    }
    restricted.relations.push_back(std::move(r));
  }

  // The retained image stays valid only when the old quotient was
  // consistent with every relation; restriction cannot be trusted when a
  // deleted member carried the class maximum somewhere.
  bool exact = all_consistent(state.compressed.consistency);

  PartitionCache cache;
  Partition composed;
  if (exact) {
    cache.mode = state.mode;
    cache.per_relation.reserve(m);
    cache.combined = Partition::one_block(nn);
    for (std::size_t k = 0; k < m; ++k) {
      const Partition& old = state.compressed.cache.per_relation[k];
      std::vector<Block> blocks;
      for (const auto& block : old.blocks()) {
        Block survivors;
        for (std::size_t u : block) {
          if (!deleted[u]) survivors.push_back(new_index[u]);
        }
        if (!survivors.empty()) blocks.push_back(std::move(survivors));
      }
      Partition cut = Partition::from_blocks(nn, std::move(blocks));
      // Restricted classes stay uniform in the restricted relation, so
      // classes that now look alike merge exactly by signature.
      const FuzzyRelation& rr = restricted.relations[k];
      std::vector<Signature> reps(cut.block_count());
      for (std::size_t b = 0; b < reps.size(); ++b) {
        std::size_t rep = cut.blocks()[b].front();
        append_row(reps[b], rr, rep);
        if (strict) append_col(reps[b], rr, rep);
      }
      Partition p = merge_blocks_by_signature(cut, reps);
      cache.combined = meet(cache.combined, p);
      cache.per_relation.push_back(std::move(p));
    }
    std::vector<std::size_t> ckey(nn);
    for (std::size_t i = 0; i < n; ++i) {
      if (deleted[i]) continue;
      std::size_t image = state.compressed.map.assignment[i];
      ckey[new_index[i]] = regroup.block_index_of(kept_pos[image]);
    }
    composed = Partition::from_keys(ckey);
    if (cache.combined != composed) exact = false;
  }

  out.state.source = std::move(restricted);
  out.state.mode = state.mode;
  out.state.image_prefix = prefix;
  if (exact) {
    QuotientMap map = quotient_map(out.state.source.universe, cache.combined, prefix);
    out.state.compressed = assemble(out.state.source, std::move(cache), std::move(map));
    out.state.fell_back_to_scratch = false;
    out.fell_back = false;
  } else {
    out.state.compressed = compress(out.state.source, state.mode, prefix);
    out.state.fell_back_to_scratch = true;
    out.fell_back = true;
  }
  return out;
}

CompressedSystem scratch_oracle(const RelationSystem& sys, Mode mode,
                                const std::string& prefix) {
  require_valid(sys);
  std::size_t n = sys.size();
  bool strict = mode == Mode::strict;

  CompressedSystem out;
  out.cache.mode = mode;

  auto rows_equal = [&](const FuzzyRelation& r, std::size_t a, std::size_t b) {
    for (std::size_t z = 0; z < n; ++z) {
      if (r.at(a, z) != r.at(b, z)) return false;
    }
    return true;
  };
  auto cols_equal = [&](const FuzzyRelation& r, std::size_t a, std::size_t b) {
    for (std::size_t z = 0; z < n; ++z) {
      if (r.at(z, a) != r.at(z, b)) return false;
    }
    return true;
  };

  for (const auto& r : sys.relations) {
    detail::record_partition_computation();
    std::vector<std::size_t> key(n, SIZE_MAX);
    std::vector<std::size_t> reps;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < reps.size(); ++k) {
        if (rows_equal(r, i, reps[k]) && (!strict || cols_equal(r, i, reps[k]))) {
          key[i] = k;
          break;
        }
      }
      if (key[i] == SIZE_MAX) {
        key[i] = reps.size();
        reps.push_back(i);
      }
    }
    out.cache.per_relation.push_back(Partition::from_keys(key));
  }

  {
    std::vector<std::size_t> key(n, SIZE_MAX);
    std::vector<std::size_t> reps;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < reps.size(); ++k) {
        bool same = true;
        for (const auto& r : sys.relations) {
          if (!rows_equal(r, i, reps[k]) || (strict && !cols_equal(r, i, reps[k]))) {
            same = false;
            break;
          }
        }
        if (same) {
          key[i] = k;
          break;
        }
      }
      if (key[i] == SIZE_MAX) {
        key[i] = reps.size();
        reps.push_back(i);
      }
    }
    out.cache.combined = Partition::from_keys(key);
  }

  out.map = quotient_map(sys.universe, out.cache.combined, prefix);
  std::size_t q = out.map.image_size();

  for (const auto& r : sys.relations) {
    FuzzyRelation image;
    image.name = r.name;
    image.rows.assign(q, std::vector<FuzzyValue>(q, FuzzyValue::zero()));
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) {
        std::size_t a = out.map.assignment[u];
        std::size_t b = out.map.assignment[v];
        if (r.at(u, v) > image.rows[a][b]) image.rows[a][b] = r.at(u, v);
      }
    }
    out.image.relations.push_back(std::move(image));
  }
  out.image.universe = out.map.image_labels;

  const auto& blocks = out.cache.combined.blocks();
  for (const auto& r : sys.relations) {
    ConsistencyReport report;
    report.relation = r.name;
    for (std::size_t a = 0; a < blocks.size(); ++a) {
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        std::size_t u0 = blocks[a].front();
        std::size_t v0 = blocks[b].front();
        FuzzyValue ref = r.at(u0, v0);
        bool bad = false;
        for (std::size_t u : blocks[a]) {
          for (std::size_t v : blocks[b]) {
            if (r.at(u, v) != ref) {
              report.violations.push_back(
                  {r.name, a, b, ObjectId{sys.universe[u0], u0},
                   ObjectId{sys.universe[v0], v0}, ObjectId{sys.universe[u], u},
                   ObjectId{sys.universe[v], v}, ref, r.at(u, v)});
              bad = true;
              break;
            }
          }
          if (bad) break;
        }
      }
    }
    report.consistent = report.violations.empty();
    out.consistency.push_back(std::move(report));
  }
  return out;
}

bool equivalent(const CompressedSystem& a, const CompressedSystem& b) {
  if (a.map.source_labels != b.map.source_labels) return false;
  if (a.image.relations.size() != b.image.relations.size()) return false;
  for (std::size_t k = 0; k < a.image.relations.size(); ++k) {
    if (a.image.relations[k].name != b.image.relations[k].name) return false;
  }
  if (a.map.partition != b.map.partition) return false;
  for (std::size_t k = 0; k < a.image.relations.size(); ++k) {
    if (a.image.relations[k].rows != b.image.relations[k].rows) return false;
  }
  return true;
}

}  // namespace fris
