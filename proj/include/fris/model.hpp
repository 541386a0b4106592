#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fris/value.hpp"

namespace fris {

// A universe element: its display label plus its position in the universe.
struct ObjectId {
  std::string label;
  std::size_t index = 0;

  bool operator==(const ObjectId&) const = default;
};

using Matrix = std::vector<std::vector<FuzzyValue>>;

// Named fuzzy relation over an ordered universe. Rows are stored as given;
// shape is validated separately so loaders can report every problem at once.
struct FuzzyRelation {
  std::string name;
  Matrix rows;

  std::size_t row_count() const { return rows.size(); }

  FuzzyValue at(std::size_t i, std::size_t j) const { return rows[i][j]; }

  bool square_of(std::size_t n) const;
};

// Ordered universe plus an ordered family of relations over it.
struct RelationSystem {
  std::vector<std::string> universe;
  std::vector<FuzzyRelation> relations;

  std::size_t size() const { return universe.size(); }

  // Index of the object with the given label; throws if absent.
  std::size_t object_index(std::string_view label) const;

  ObjectId object(std::size_t index) const;

  const FuzzyRelation* find_relation(std::string_view name) const;

  // Index of the named relation in the family; throws if absent.
  std::size_t relation_index(std::string_view name) const;
};

struct Violation {
  std::string location;
  std::string message;
};

// Structural checks: non-empty universe, unique labels, unique relation
// names, every matrix square of universe size. Returns all violations.
std::vector<Violation> validate_system(const RelationSystem& sys);

// Throws Error listing every violation found by validate_system.
void require_valid(const RelationSystem& sys);

using Block = std::vector<std::size_t>;

// Partition of {0, ..., n-1} in canonical form: members of each block
// ascending, blocks ordered by least member. Equality is therefore
// structural equality.
class Partition {
 public:
  Partition() = default;

  static Partition singletons(std::size_t n);
  static Partition one_block(std::size_t n);

  // Canonicalises the given blocks; throws unless they partition 0..n-1.
  static Partition from_blocks(std::size_t n, std::vector<Block> blocks);

  // Objects with equal keys share a block. Canonical by construction:
  // block ids are assigned in first-appearance order over ascending index.
  template <typename Key>
  static Partition from_keys(const std::vector<Key>& keys);

  std::size_t universe_size() const { return member_block_.size(); }
  std::size_t block_count() const { return blocks_.size(); }
  const std::vector<Block>& blocks() const { return blocks_; }

  std::size_t block_index_of(std::size_t member) const;
  const Block& block_containing(std::size_t member) const;

  bool operator==(const Partition&) const = default;

 private:
  std::vector<Block> blocks_;
  std::vector<std::size_t> member_block_;
};

template <typename Key>
Partition Partition::from_keys(const std::vector<Key>& keys) {
  Partition p;
  p.member_block_.resize(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    std::size_t id = p.blocks_.size();
    for (std::size_t b = 0; b < p.blocks_.size(); ++b) {
      if (keys[p.blocks_[b].front()] == keys[i]) {
        id = b;
        break;
      }
    }
    if (id == p.blocks_.size()) p.blocks_.emplace_back();
    p.blocks_[id].push_back(i);
    p.member_block_[i] = id;
  }
  return p;
}

// Block of the partition containing the given object; throws with the
// object's label on a size mismatch.
const Block& block_of(const Partition& p, const ObjectId& id);

}  // namespace fris
