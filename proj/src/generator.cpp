#include "fris/generator.hpp"

#include <algorithm>
#include <random>

namespace fris {
namespace {

std::vector<std::string> numbered(const char* prefix, std::size_t count) {
  std::vector<std::string> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(prefix + std::to_string(i + 1));
  }
  return out;
}

Matrix random_matrix(std::size_t n, const std::vector<FuzzyValue>& grid,
                     std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, grid.size() - 1);
  Matrix rows(n, std::vector<FuzzyValue>(n));
  for (auto& row : rows) {
    for (auto& cell : row) cell = grid[pick(rng)];
  }
  return rows;
}

// True iff some pair of seed objects carries the same row in every seed
// matrix; such a seed would compress below image_size. Plain scan so that
// generation never touches the partition computation counter.
bool has_duplicate_rows(const std::vector<Matrix>& seeds, std::size_t k) {
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      bool all_equal = true;
      for (const auto& m : seeds) {
        if (m[a] != m[b]) {
          all_equal = false;
          break;
        }
      }
      if (all_equal) return true;
    }
  }
  return false;
}

}  // namespace

std::vector<FuzzyValue> default_value_grid() {
  std::vector<FuzzyValue> grid;
  grid.reserve(9);
  for (int i = 1; i <= 9; ++i) {
    grid.push_back(FuzzyValue::from_units(i * (FuzzyValue::kOne / 10)));
  }
  return grid;
}

RelationSystem gen_pullback(const PullbackSpec& spec) {
  std::size_t k = spec.image_size;
  std::size_t n = spec.size;
  std::size_t m = spec.relation_count;
  if (k < 1) throw Error("image_size must be at least 1");
  if (k > n) throw Error("image_size cannot exceed size");
  if (m < 1) throw Error("relation_count must be at least 1");
  std::vector<FuzzyValue> grid = spec.grid.empty() ? default_value_grid() : spec.grid;

  std::mt19937_64 rng(spec.seed);
  std::vector<Matrix> seeds;
  bool ok = false;
  for (int attempt = 0; attempt < 1000 && !ok; ++attempt) {
    seeds.clear();
    for (std::size_t j = 0; j < m; ++j) seeds.push_back(random_matrix(k, grid, rng));
    ok = !has_duplicate_rows(seeds, k);
  }
  if (!ok) {
    throw Error("could not draw a seed system with distinct rows; "
                "image_size is too large for the value grid");
  }

  // Surjective by construction: the first image_size objects cover every
  // class (in shuffled order), the rest land uniformly.
  std::vector<std::size_t> assignment(n);
  std::vector<std::size_t> perm(k);
  for (std::size_t i = 0; i < k; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::uniform_int_distribution<std::size_t> pick_class(0, k - 1);
  for (std::size_t i = 0; i < n; ++i) {
    assignment[i] = i < k ? perm[i] : pick_class(rng);
  }

  RelationSystem sys;
  sys.universe = numbered("x", n);
  sys.relations.reserve(m);
  auto names = numbered("R", m);
  for (std::size_t j = 0; j < m; ++j) {
    FuzzyRelation r;
    r.name = names[j];
    r.rows.assign(n, std::vector<FuzzyValue>(n));
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) {
        r.rows[u][v] = seeds[j][assignment[u]][assignment[v]];
      }
    }
    sys.relations.push_back(std::move(r));
  }
  return sys;
}

RelationSystem gen_random(std::size_t size, std::size_t relation_count,
                          const std::vector<FuzzyValue>& grid, std::uint64_t seed) {
  if (size < 1) throw Error("size must be at least 1");
  if (relation_count < 1) throw Error("relation_count must be at least 1");
  std::vector<FuzzyValue> values = grid.empty() ? default_value_grid() : grid;
  std::mt19937_64 rng(seed);
  RelationSystem sys;
  sys.universe = numbered("x", size);
  auto names = numbered("R", relation_count);
  for (std::size_t j = 0; j < relation_count; ++j) {
    FuzzyRelation r;
    r.name = names[j];
    r.rows = random_matrix(size, values, rng);
    sys.relations.push_back(std::move(r));
  }
  return sys;
}

}  // namespace fris
