#include "fris/reduction.hpp"

#include <algorithm>

namespace fris {
namespace {

bool matrices_equal(const FuzzyRelation& a, const FuzzyRelation& b,
                    const ValueEq& eq) {
  if (a.rows.size() != b.rows.size()) return false;
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    if (a.rows[i].size() != b.rows[i].size()) return false;
    for (std::size_t j = 0; j < a.rows[i].size(); ++j) {
      if (!eq(a.rows[i][j], b.rows[i][j])) return false;
    }
  }
  return true;
}

// Shared context for subset checks: per-relation partitions are computed
// once, never per subset.
struct CriterionContext {
  const RelationSystem& sys;
  ReductCriterion criterion;
  ValueEq eq;
  std::vector<Partition> per_relation;
  Partition full_combined;
  FuzzyRelation full_meet;

  CriterionContext(const RelationSystem& s, ReductCriterion c, Mode mode,
                   const ValueEq& e)
      : sys(s), criterion(c), eq(e) {
    require_valid(s);
    if (s.relations.empty()) {
      throw Error("reduct search needs at least one relation");
    }
    if (criterion == ReductCriterion::partition) {
      per_relation.reserve(s.relations.size());
      full_combined = Partition::one_block(s.size());
      for (const auto& r : s.relations) {
        Partition p = mode == Mode::row ? row_partition(r, eq)
                                        : strict_partition(r, eq);
        full_combined = meet(full_combined, p);
        per_relation.push_back(std::move(p));
      }
    } else {
      full_meet = meet_relation(s.relations);
    }
  }

  bool preserves(const std::vector<std::size_t>& subset) const {
    if (subset.empty()) return false;
    if (criterion == ReductCriterion::partition) {
      Partition combined = Partition::one_block(sys.size());
      for (std::size_t k : subset) combined = meet(combined, per_relation[k]);
      return combined == full_combined;
    }
    std::vector<FuzzyRelation> chosen;
    chosen.reserve(subset.size());
    for (std::size_t k : subset) chosen.push_back(sys.relations[k]);
    return matrices_equal(meet_relation(chosen), full_meet, eq);
  }
};

std::vector<std::string> names_of(const RelationSystem& sys,
                                  const std::vector<std::size_t>& subset) {
  std::vector<std::string> out;
  out.reserve(subset.size());
  for (std::size_t k : subset) out.push_back(sys.relations[k].name);
  return out;
}

bool contains_as_subset(const std::vector<std::size_t>& found,
                        const std::vector<std::size_t>& candidate) {
  // Both are ascending index lists.
  return std::includes(candidate.begin(), candidate.end(), found.begin(),
                       found.end());
}

}  // namespace

FuzzyRelation meet_relation(const std::vector<FuzzyRelation>& relations) {
  if (relations.empty()) {
    throw Error("meet of an empty relation family");
  }
  FuzzyRelation out = relations.front();
  out.name = "meet";
  for (std::size_t k = 1; k < relations.size(); ++k) {
    const auto& r = relations[k];
    if (r.rows.size() != out.rows.size()) {
      throw Error("relation \"" + r.name + "\" has mismatched shape");
    }
    for (std::size_t i = 0; i < out.rows.size(); ++i) {
      if (r.rows[i].size() != out.rows[i].size()) {
        throw Error("relation \"" + r.name + "\" has mismatched shape");
      }
      for (std::size_t j = 0; j < out.rows[i].size(); ++j) {
        out.rows[i][j] = FuzzyValue::min(out.rows[i][j], r.rows[i][j]);
      }
    }
  }
  return out;
}

ReductCriterion parse_criterion(std::string_view text) {
  if (text == "partition") return ReductCriterion::partition;
  if (text == "meet") return ReductCriterion::meet_matrix;
  throw Error("unknown criterion \"" + std::string(text) +
              "\" (expected partition or meet)");
}

std::string to_string(ReductCriterion criterion) {
  return criterion == ReductCriterion::partition ? "partition" : "meet";
}

bool is_superfluous(const RelationSystem& sys, std::string_view name,
                    ReductCriterion criterion, Mode mode, const ValueEq& eq) {
  std::size_t drop = sys.relation_index(name);
  if (sys.relations.size() == 1) return false;
  CriterionContext ctx(sys, criterion, mode, eq);
  std::vector<std::size_t> rest;
  rest.reserve(sys.relations.size() - 1);
  for (std::size_t k = 0; k < sys.relations.size(); ++k) {
    if (k != drop) rest.push_back(k);
  }
  return ctx.preserves(rest);
}

ReductResult reducts(const RelationSystem& sys, ReductCriterion criterion,
                     ReductSearch search, Mode mode, const ValueEq& eq) {
  CriterionContext ctx(sys, criterion, mode, eq);
  std::size_t m = sys.relations.size();
  ReductResult result;
  std::vector<std::vector<std::size_t>> found;

  if (search == ReductSearch::greedy) {
    std::vector<std::size_t> keep(m);
    for (std::size_t k = 0; k < m; ++k) keep[k] = k;
    bool changed = true;
    while (changed && keep.size() > 1) {
      changed = false;
      for (std::size_t pos = 0; pos < keep.size(); ++pos) {
        std::vector<std::size_t> trial = keep;
        trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(pos));
        if (ctx.preserves(trial)) {
          keep = std::move(trial);
          changed = true;
          break;
        }
      }
    }
    found.push_back(std::move(keep));
  } else {
    // Size-ascending scan. Skipping supersets of found reducts keeps only
    // minimal ones; minimal reducts of different sizes can coexist.
    std::vector<std::size_t> subset;
    for (std::size_t size = 1; size <= m; ++size) {
      subset.assign(size, 0);
      for (std::size_t k = 0; k < size; ++k) subset[k] = k;
      while (true) {
        bool dominated = false;
        for (const auto& f : found) {
          if (contains_as_subset(f, subset)) {
            dominated = true;
            break;
          }
        }
        if (!dominated && ctx.preserves(subset)) {
          found.push_back(subset);
        }
        // Next combination of the given size in lexicographic order.
        std::size_t k = size;
        while (k > 0 && subset[k - 1] == m - size + k - 1) --k;
        if (k == 0) break;
        ++subset[k - 1];
        for (std::size_t j = k; j < size; ++j) subset[j] = subset[j - 1] + 1;
      }
    }
  }

  for (const auto& f : found) result.reducts.push_back(names_of(sys, f));
  std::vector<std::size_t> core_indices = found.front();
  for (const auto& f : found) {
    std::vector<std::size_t> next;
    std::set_intersection(core_indices.begin(), core_indices.end(), f.begin(),
                          f.end(), std::back_inserter(next));
    core_indices = std::move(next);
  }
  result.core = names_of(sys, core_indices);
  return result;
}

std::vector<std::string> lift_reduct(const CompressedSystem& compressed,
                                     const std::vector<std::string>& image_names) {
  std::vector<std::size_t> indices;
  indices.reserve(image_names.size());
  for (const auto& name : image_names) {
    indices.push_back(compressed.image.relation_index(name));
  }
  std::sort(indices.begin(), indices.end());
  if (std::adjacent_find(indices.begin(), indices.end()) != indices.end()) {
    throw Error("duplicate relation name in reduct");
  }
  std::vector<std::string> out;
  out.reserve(indices.size());
  for (std::size_t k : indices) {
    out.push_back(compressed.image.relations[k].name);
  }
  return out;
}

}  // namespace fris
