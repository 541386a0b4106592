#include "fris/bench.hpp"

#include <chrono>
#include <cstdio>

#include "fris/generator.hpp"

namespace fris {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

RelationSystem first_objects(const RelationSystem& sys, std::size_t n) {
  RelationSystem out;
  out.universe.assign(sys.universe.begin(),
                      sys.universe.begin() + static_cast<std::ptrdiff_t>(n));
  for (const auto& r : sys.relations) {
    FuzzyRelation cut;
    cut.name = r.name;
    cut.rows.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      cut.rows.emplace_back(r.rows[i].begin(),
                            r.rows[i].begin() + static_cast<std::ptrdiff_t>(n));
    }
    out.relations.push_back(std::move(cut));
  }
  return out;
}

struct Measured {
  double ms = 0.0;
  std::uint64_t partitions = 0;
};

template <typename F>
Measured measure(F&& work) {
  reset_partition_computations();
  auto start = Clock::now();
  work();
  Measured m;
  m.ms = ms_since(start);
  m.partitions = partition_computations();
  return m;
}

BenchRow row_for(const char* kind, const BenchConfig& config, Measured incr,
                 Measured scratch, bool eq) {
  BenchRow row;
  row.edit_kind = kind;
  row.n = config.size;
  row.m = config.relation_count;
  row.t = config.edit_size;
  row.incr_ms = incr.ms;
  row.scratch_ms = scratch.ms;
  row.incr_partitions = incr.partitions;
  row.scratch_partitions = scratch.partitions;
  row.equivalent_result = eq;
  return row;
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchConfig& config) {
  if (config.edit_size >= config.relation_count) {
    throw Error("edit_size must be smaller than relation_count");
  }
  if (config.edit_size >= config.size) {
    throw Error("edit_size must be smaller than size");
  }
  std::vector<BenchRow> rows;
  for (std::size_t instance = 0; instance < config.instances; ++instance) {
    std::uint64_t seed = config.seed + instance;
    PullbackSpec spec;
    spec.image_size = config.image_size;
    spec.size = config.size;
    spec.relation_count = config.relation_count;
    spec.seed = seed;

    {
      RelationSystem sys = gen_pullback(spec);
      CompressionState state = make_state(sys);
      RelationSystem fresh = gen_random(config.size, config.edit_size,
                                        default_value_grid(), seed + 1'000);
      std::vector<FuzzyRelation> extra;
      std::vector<std::string> extra_names;
      for (std::size_t j = 0; j < fresh.relations.size(); ++j) {
        FuzzyRelation r = fresh.relations[j];
        r.name = "R" + std::to_string(config.relation_count + j + 1);
        extra_names.push_back(r.name);
        extra.push_back(std::move(r));
      }

      CompressionState added;
      Measured incr = measure([&] { added = add_relations(state, extra); });
      CompressedSystem oracle;
      Measured scratch = measure([&] { oracle = scratch_oracle(added.source); });
      rows.push_back(row_for("add_relations", config, incr, scratch,
                             equivalent(added.compressed, oracle)));

      CompressionState removed;
      incr = measure([&] { removed = remove_relations(added, extra_names); });
      scratch = measure([&] { oracle = scratch_oracle(removed.source); });
      rows.push_back(row_for("remove_relations", config, incr, scratch,
                             equivalent(removed.compressed, oracle)));
    }

    {
      PullbackSpec big = spec;
      big.size = config.size + config.edit_size;
      big.seed = seed + 2'000;
      RelationSystem full = gen_pullback(big);
      RelationSystem base = first_objects(full, config.size);
      ObjectExtension ext;
      ext.new_labels.assign(
          full.universe.begin() + static_cast<std::ptrdiff_t>(config.size),
          full.universe.end());
      for (const auto& r : full.relations) {
        ObjectExtension::RelationParts parts;
        parts.name = r.name;
        for (std::size_t i = 0; i < config.size; ++i) {
          parts.old_to_new.emplace_back(
              r.rows[i].begin() + static_cast<std::ptrdiff_t>(config.size),
              r.rows[i].end());
        }
        for (std::size_t j = config.size; j < big.size; ++j) {
          parts.new_rows.push_back(r.rows[j]);
        }
        ext.parts.push_back(std::move(parts));
      }
      CompressionState state = make_state(base);

      AddObjectsResult grown;
      Measured incr = measure([&] { grown = add_objects(state, ext); });
      CompressedSystem oracle;
      Measured scratch =
          measure([&] { oracle = scratch_oracle(grown.state.source); });
      rows.push_back(row_for("add_objects", config, incr, scratch,
                             equivalent(grown.state.compressed, oracle)));
    }

    {
      PullbackSpec small = spec;
      small.seed = seed + 3'000;
      RelationSystem sys = gen_pullback(small);
      CompressionState state = make_state(sys);
      std::vector<std::string> doomed(
          sys.universe.end() - static_cast<std::ptrdiff_t>(config.edit_size),
          sys.universe.end());

      RemoveObjectsResult shrunk;
      Measured incr = measure([&] { shrunk = remove_objects(state, doomed); });
      CompressedSystem oracle;
      Measured scratch =
          measure([&] { oracle = scratch_oracle(shrunk.state.source); });
      rows.push_back(row_for("remove_objects", config, incr, scratch,
                             equivalent(shrunk.state.compressed, oracle)));
    }
  }
  reset_partition_computations();
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::string out =
      "edit_kind,n,m,t,incr_ms,scratch_ms,incr_partitions,scratch_partitions,"
      "equivalent\n";
  char buffer[256];
  for (const auto& row : rows) {
    std::snprintf(buffer, sizeof(buffer), "%s,%zu,%zu,%zu,%.3f,%.3f,%llu,%llu,%s\n",
                  row.edit_kind.c_str(), row.n, row.m, row.t, row.incr_ms,
                  row.scratch_ms,
                  static_cast<unsigned long long>(row.incr_partitions),
                  static_cast<unsigned long long>(row.scratch_partitions),
                  row.equivalent_result ? "true" : "false");
    out += buffer;
  }
  return out;
}

}  // namespace fris
