#include "fris/partitioning.hpp"

#include <atomic>
#include <numeric>
#include <utility>

namespace fris {
namespace {

std::atomic<std::uint64_t> g_partition_computations{0};

void require_square(const FuzzyRelation& r) {
  if (!r.square_of(r.row_count())) {
    throw Error("relation \"" + r.name + "\" is not square");
  }
}

bool rows_close(const FuzzyRelation& r, std::size_t i, std::size_t j,
                const ValueEq& eq) {
  for (std::size_t z = 0; z < r.row_count(); ++z) {
    if (!eq(r.at(i, z), r.at(j, z))) return false;
  }
  return true;
}

bool cols_close(const FuzzyRelation& r, std::size_t i, std::size_t j,
                const ValueEq& eq) {
  for (std::size_t z = 0; z < r.row_count(); ++z) {
    if (!eq(r.at(z, i), r.at(z, j))) return false;
  }
  return true;
}

struct UnionFind {
  std::vector<std::size_t> parent;

  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[b] = a;
  }
};

template <typename Close>
Partition grouped(std::size_t n, const ValueEq& eq, Close close) {
  if (eq.exact()) {
    // Exact equality is transitive, so grouping by a scan against block
    // representatives is enough.
    std::vector<std::size_t> key(n, SIZE_MAX);
    std::vector<std::size_t> reps;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < reps.size(); ++k) {
        if (close(reps[k], i)) {
          key[i] = k;
          break;
        }
      }
      if (key[i] == SIZE_MAX) {
        key[i] = reps.size();
        reps.push_back(i);
      }
    }
    return Partition::from_keys(key);
  }
  // Epsilon closeness is reflexive and symmetric but not transitive; the
  // partition uses its transitive closure.
  UnionFind uf(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (uf.find(i) != uf.find(j) && close(i, j)) uf.unite(i, j);
    }
  }
  std::vector<std::size_t> key(n);
  for (std::size_t i = 0; i < n; ++i) key[i] = uf.find(i);
  return Partition::from_keys(key);
}

}  // namespace

Mode parse_mode(std::string_view text) {
  if (text == "row") return Mode::row;
  if (text == "strict") return Mode::strict;
  throw Error("unknown mode \"" + std::string(text) + "\" (expected row or strict)");
}

std::string to_string(Mode mode) {
  return mode == Mode::row ? "row" : "strict";
}

Partition row_partition(const FuzzyRelation& r, const ValueEq& eq) {
  require_square(r);
  detail::record_partition_computation();
  return grouped(r.row_count(), eq, [&](std::size_t i, std::size_t j) {
    return rows_close(r, i, j, eq);
  });
}

Partition strict_partition(const FuzzyRelation& r, const ValueEq& eq) {
  require_square(r);
  detail::record_partition_computation();
  return grouped(r.row_count(), eq, [&](std::size_t i, std::size_t j) {
    return rows_close(r, i, j, eq) && cols_close(r, i, j, eq);
  });
}

Partition meet(const Partition& p, const Partition& q) {
  if (p.universe_size() != q.universe_size()) {
    throw Error("cannot meet partitions over different universes (" +
                std::to_string(p.universe_size()) + " vs " +
                std::to_string(q.universe_size()) + ")");
  }
  std::size_t n = p.universe_size();
  std::vector<std::pair<std::size_t, std::size_t>> key(n);
  for (std::size_t i = 0; i < n; ++i) {
    key[i] = {p.block_index_of(i), q.block_index_of(i)};
  }
  return Partition::from_keys(key);
}

PartitionCache system_partition(const RelationSystem& sys, Mode mode,
                                const ValueEq& eq) {
  require_valid(sys);
  PartitionCache cache;
  cache.mode = mode;
  cache.per_relation.reserve(sys.relations.size());
  cache.combined = Partition::one_block(sys.size());
  for (const auto& r : sys.relations) {
    Partition p = mode == Mode::row ? row_partition(r, eq) : strict_partition(r, eq);
    cache.combined = meet(cache.combined, p);
    cache.per_relation.push_back(std::move(p));
  }
  return cache;
}

std::uint64_t partition_computations() {
  return g_partition_computations.load(std::memory_order_relaxed);
}

void reset_partition_computations() {
  g_partition_computations.store(0, std::memory_order_relaxed);
}

namespace detail {

void record_partition_computation() {
  g_partition_computations.fetch_add(1, std::memory_order_relaxed);
}

}  // namespace detail

}  // namespace fris
