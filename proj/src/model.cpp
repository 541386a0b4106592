#include "fris/model.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace fris {

bool FuzzyRelation::square_of(std::size_t n) const {
  if (rows.size() != n) return false;
  for (const auto& row : rows) {
    if (row.size() != n) return false;
  }
  return true;
}

std::size_t RelationSystem::object_index(std::string_view label) const {
  for (std::size_t i = 0; i < universe.size(); ++i) {
    if (universe[i] == label) return i;
  }
  throw Error("no such object: " + std::string(label));
}

ObjectId RelationSystem::object(std::size_t index) const {
  if (index >= universe.size()) {
    throw Error("object index out of range: " + std::to_string(index));
  }
  return ObjectId{universe[index], index};
}

const FuzzyRelation* RelationSystem::find_relation(std::string_view name) const {
  for (const auto& r : relations) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

std::size_t RelationSystem::relation_index(std::string_view name) const {
  for (std::size_t i = 0; i < relations.size(); ++i) {
    if (relations[i].name == name) return i;
  }
  throw Error("no such relation: " + std::string(name));
}

std::vector<Violation> validate_system(const RelationSystem& sys) {
  std::vector<Violation> out;
  if (sys.universe.empty()) {
    out.push_back({"universe", "universe is empty"});
  }
  std::set<std::string> labels;
  for (std::size_t i = 0; i < sys.universe.size(); ++i) {
    if (sys.universe[i].empty()) {
      out.push_back({"universe[" + std::to_string(i) + "]", "empty label"});
    }
    if (!labels.insert(sys.universe[i]).second) {
      out.push_back({"universe[" + std::to_string(i) + "]",
                     "duplicate label \"" + sys.universe[i] + "\""});
    }
  }
  std::set<std::string> names;
  for (std::size_t k = 0; k < sys.relations.size(); ++k) {
    const auto& r = sys.relations[k];
    std::string loc = "relations[" + (r.name.empty() ? std::to_string(k) : r.name) + "]";
    if (r.name.empty()) {
      out.push_back({loc, "empty relation name"});
    }
    if (!names.insert(r.name).second) {
      out.push_back({loc, "duplicate relation name \"" + r.name + "\""});
    }
    if (r.rows.size() != sys.universe.size()) {
      out.push_back({loc, "expected " + std::to_string(sys.universe.size()) +
                              " rows, got " + std::to_string(r.rows.size())});
      continue;
    }
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
      if (r.rows[i].size() != sys.universe.size()) {
        out.push_back({loc + ".rows[" + std::to_string(i) + "]",
                       "expected " + std::to_string(sys.universe.size()) +
                           " entries, got " + std::to_string(r.rows[i].size())});
      }
    }
  }
  return out;
}

void require_valid(const RelationSystem& sys) {
  auto violations = validate_system(sys);
  if (violations.empty()) return;
  std::ostringstream msg;
  msg << "invalid relation system:";
  for (const auto& v : violations) {
    msg << "\n  " << v.location << ": " << v.message;
  }
  throw Error(msg.str());
}

Partition Partition::singletons(std::size_t n) {
  Partition p;
  p.blocks_.reserve(n);
  p.member_block_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    p.blocks_.push_back({i});
    p.member_block_[i] = i;
  }
  return p;
}

Partition Partition::one_block(std::size_t n) {
  Partition p;
  p.member_block_.assign(n, 0);
  if (n > 0) {
    Block all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    p.blocks_.push_back(std::move(all));
  }
  return p;
}

Partition Partition::from_blocks(std::size_t n, std::vector<Block> blocks) {
  std::vector<std::size_t> member_block(n, SIZE_MAX);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    std::sort(blocks[b].begin(), blocks[b].end());
    if (blocks[b].empty()) throw Error("partition block is empty");
    for (std::size_t m : blocks[b]) {
      if (m >= n) {
        throw Error("partition member out of range: " + std::to_string(m));
      }
      if (member_block[m] != SIZE_MAX) {
        throw Error("partition member repeated: " + std::to_string(m));
      }
      member_block[m] = b;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (member_block[i] == SIZE_MAX) {
      throw Error("partition misses member: " + std::to_string(i));
    }
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const Block& a, const Block& b) { return a.front() < b.front(); });
  Partition p;
  p.blocks_ = std::move(blocks);
  p.member_block_.resize(n);
  for (std::size_t b = 0; b < p.blocks_.size(); ++b) {
    for (std::size_t m : p.blocks_[b]) p.member_block_[m] = b;
  }
  return p;
}

std::size_t Partition::block_index_of(std::size_t member) const {
  if (member >= member_block_.size()) {
    throw Error("partition member out of range: " + std::to_string(member));
  }
  return member_block_[member];
}

const Block& Partition::block_containing(std::size_t member) const {
  return blocks_[block_index_of(member)];
}

const Block& block_of(const Partition& p, const ObjectId& id) {
  if (id.index >= p.universe_size()) {
    throw Error("object \"" + id.label + "\" is outside the partition");
  }
  return p.block_containing(id.index);
}

}  // namespace fris
