#include "fris/homomorphism.hpp"

namespace fris {

QuotientMap quotient_map(const std::vector<std::string>& universe,
                         const Partition& partition, const std::string& prefix) {
  if (universe.size() != partition.universe_size()) {
    throw Error("partition covers " + std::to_string(partition.universe_size()) +
                " objects but the universe has " + std::to_string(universe.size()));
  }
  QuotientMap f;
  f.source_labels = universe;
  f.partition = partition;
  f.assignment.resize(universe.size());
  f.image_labels.reserve(partition.block_count());
  for (std::size_t b = 0; b < partition.block_count(); ++b) {
    f.image_labels.push_back(prefix + std::to_string(b + 1));
    for (std::size_t m : partition.blocks()[b]) f.assignment[m] = b;
  }
  return f;
}

ConsistencyReport consistency_report(const QuotientMap& f, const FuzzyRelation& r,
                                     const ValueEq& eq) {
  std::size_t n = f.source_labels.size();
  if (!r.square_of(n)) {
    throw Error("relation \"" + r.name + "\" does not match the map's universe");
  }
  ConsistencyReport report;
  report.relation = r.name;
  const auto& blocks = f.partition.blocks();
  for (std::size_t a = 0; a < blocks.size(); ++a) {
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      std::size_t u0 = blocks[a].front();
      std::size_t v0 = blocks[b].front();
      FuzzyValue first = r.at(u0, v0);
      bool bad = false;
      for (std::size_t u : blocks[a]) {
        for (std::size_t v : blocks[b]) {
          if (!eq(r.at(u, v), first)) {
            report.violations.push_back(
                {r.name, a, b, ObjectId{f.source_labels[u0], u0},
                 ObjectId{f.source_labels[v0], v0}, ObjectId{f.source_labels[u], u},
                 ObjectId{f.source_labels[v], v}, first, r.at(u, v)});
            bad = true;
            break;
          }
        }
        if (bad) break;
      }
    }
  }
  report.consistent = report.violations.empty();
  return report;
}

bool is_consistent(const QuotientMap& f, const FuzzyRelation& r, const ValueEq& eq) {
  return consistency_report(f, r, eq).consistent;
}

FuzzyRelation image_relation(const QuotientMap& f, const FuzzyRelation& r) {
  std::size_t n = f.source_labels.size();
  if (!r.square_of(n)) {
    throw Error("relation \"" + r.name + "\" does not match the map's universe");
  }
  std::size_t m = f.image_size();
  FuzzyRelation out;
  out.name = r.name;
  out.rows.assign(m, std::vector<FuzzyValue>(m, FuzzyValue::zero()));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      auto& cell = out.rows[f.assignment[u]][f.assignment[v]];
      cell = FuzzyValue::max(cell, r.at(u, v));
    }
  }
  return out;
}

FuzzyRelation inverse_image_relation(const QuotientMap& f, const FuzzyRelation& t) {
  std::size_t m = f.image_size();
  if (!t.square_of(m)) {
    throw Error("relation \"" + t.name + "\" does not match the map's image");
  }
  std::size_t n = f.source_labels.size();
  FuzzyRelation out;
  out.name = t.name;
  out.rows.assign(n, std::vector<FuzzyValue>(n, FuzzyValue::zero()));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      out.rows[u][v] = t.at(f.assignment[u], f.assignment[v]);
    }
  }
  return out;
}

CompressedSystem compress(const RelationSystem& sys, Mode mode,
                          const std::string& prefix, const ValueEq& eq) {
  require_valid(sys);
  CompressedSystem out;
  out.cache = system_partition(sys, mode, eq);
  out.map = quotient_map(sys.universe, out.cache.combined, prefix);
  out.image.universe = out.map.image_labels;
  out.image.relations.reserve(sys.relations.size());
  out.consistency.reserve(sys.relations.size());
  for (const auto& r : sys.relations) {
    out.image.relations.push_back(image_relation(out.map, r));
    out.consistency.push_back(consistency_report(out.map, r, eq));
  }
  return out;
}

}  // namespace fris
