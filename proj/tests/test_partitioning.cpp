#include <doctest.h>

#include "fris/partitioning.hpp"
#include "support/demo_data.hpp"

using namespace fris;

TEST_CASE("partitioning: row partitions of the demo relations") {
  auto sys = demo::literal_system();

  CHECK(demo::block_labels(row_partition(sys.relations[0]), sys.universe) ==
        demo::kPartR1);
  CHECK(demo::block_labels(row_partition(sys.relations[1]), sys.universe) ==
        demo::kPartR2);
  CHECK(demo::block_labels(row_partition(sys.relations[2]), sys.universe) ==
        demo::kPartR3Literal);

  auto canon = demo::canon_system();
  CHECK(demo::block_labels(row_partition(canon.relations[2]), canon.universe) ==
        demo::kPartR3Canon);

  auto r4 = demo::make_relation("R4", demo::kR4);
  CHECK(demo::block_labels(row_partition(r4), sys.universe) == demo::kPartR4);
}

TEST_CASE("partitioning: strict partition demands row and column agreement") {
  auto sys = demo::literal_system();
  auto strict = strict_partition(sys.relations[0]);
  CHECK(demo::block_labels(strict, sys.universe) == demo::kStrictR1);

  // every strict block sits inside some row block
  auto row = row_partition(sys.relations[0]);
  for (const auto& blk : strict.blocks()) {
    auto home = row.block_index_of(blk.front());
    for (auto m : blk) CHECK(row.block_index_of(m) == home);
  }
}

TEST_CASE("partitioning: non-square relations are rejected") {
  FuzzyRelation bad{"R", Matrix(2, std::vector<FuzzyValue>(3))};
  CHECK_THROWS_AS(row_partition(bad), Error);
  CHECK_THROWS_AS(strict_partition(bad), Error);
}

TEST_CASE("partitioning: meet is the common refinement") {
  auto sys = demo::literal_system();
  auto p1 = row_partition(sys.relations[0]);
  auto p2 = row_partition(sys.relations[1]);
  auto p3 = row_partition(sys.relations[2]);

  auto combined = meet(meet(p1, p2), p3);
  CHECK(demo::block_labels(combined, sys.universe) == demo::kCombinedLiteral);

  SUBCASE("lattice identities") {
    CHECK(meet(p1, p1) == p1);
    CHECK(meet(p1, p2) == meet(p2, p1));
    CHECK(meet(p1, Partition::one_block(8)) == p1);
    CHECK(meet(p1, Partition::singletons(8)) == Partition::singletons(8));
  }

  SUBCASE("size mismatch throws") {
    CHECK_THROWS_AS(meet(p1, Partition::singletons(5)), Error);
  }
}

TEST_CASE("partitioning: system_partition caches per-relation results and the meet") {
  auto sys = demo::canon_system();
  auto cache = system_partition(sys);

  CHECK(cache.mode == Mode::row);
  REQUIRE(cache.per_relation.size() == 3);
  CHECK(demo::block_labels(cache.per_relation[2], sys.universe) == demo::kPartR3Canon);
  CHECK(demo::block_labels(cache.combined, sys.universe) == demo::kCombinedCanon);
  CHECK(cache.combined ==
        meet(meet(cache.per_relation[0], cache.per_relation[1]), cache.per_relation[2]));

  SUBCASE("strict mode is recorded and applied") {
    auto strict = system_partition(demo::literal_system(), Mode::strict);
    CHECK(strict.mode == Mode::strict);
    CHECK(demo::block_labels(strict.per_relation[0], sys.universe) == demo::kStrictR1);
  }

  SUBCASE("empty family leaves everything indistinguishable") {
    RelationSystem bare;
    bare.universe = {"a", "b"};
    auto empty = system_partition(bare);
    CHECK(empty.per_relation.empty());
    CHECK(empty.combined == Partition::one_block(2));
  }
}

TEST_CASE("partitioning: epsilon closeness is closed transitively") {
  // constant rows 0.50 / 0.51 / 0.52: adjacent rows are within 0.01 of
  // each other but the outer pair is not, so closure decides
  RelationSystem sys;
  sys.universe = {"a", "b", "c"};
  FuzzyRelation r{"R", {}};
  for (const char* v : {"0.50", "0.51", "0.52"}) {
    r.rows.push_back(std::vector<FuzzyValue>(3, FuzzyValue::parse(v)));
  }

  CHECK(row_partition(r).block_count() == 3);

  ValueEq loose{FuzzyValue::parse("0.01")};
  CHECK(row_partition(r, loose) == Partition::one_block(3));

  ValueEq tighter{FuzzyValue::parse("0.005")};
  CHECK(row_partition(r, tighter).block_count() == 3);
}

TEST_CASE("partitioning: computation counter counts per-relation work only") {
  auto sys = demo::literal_system();
  reset_partition_computations();
  CHECK(partition_computations() == 0);

  auto p = row_partition(sys.relations[0]);
  CHECK(partition_computations() == 1);

  strict_partition(sys.relations[0]);
  CHECK(partition_computations() == 2);

  auto q = row_partition(sys.relations[1]);
  meet(p, q);
  meet(q, p);
  CHECK(partition_computations() == 3);

  system_partition(sys);
  CHECK(partition_computations() == 6);
  reset_partition_computations();
  CHECK(partition_computations() == 0);
}

TEST_CASE("partitioning: mode names round-trip") {
  CHECK(parse_mode("row") == Mode::row);
  CHECK(parse_mode("strict") == Mode::strict);
  CHECK(to_string(Mode::row) == "row");
  CHECK(to_string(Mode::strict) == "strict");
  CHECK_THROWS_WITH_AS(parse_mode("loose"),
                       "unknown mode \"loose\" (expected row or strict)", Error);
}
