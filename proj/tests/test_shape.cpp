#include <doctest.h>

#include <set>

#include "hooktab/shape.hpp"
#include "test_util.hpp"

using namespace hooktab;

TEST_CASE("partition parsing accepts weakly decreasing positive parts") {
  Partition p = parse_partition({4, 3, 3, 2});
  CHECK(p.parts() == std::vector<int>{4, 3, 3, 2});
  CHECK(p.rows() == 4);
  CHECK(p.cell_count() == 12);

  CHECK(parse_partition({}).empty());

  CHECK_THROWS_WITH_AS(parse_partition({2, 3}), doctest::Contains("weakly decreasing"), error);
  CHECK_THROWS_AS(parse_partition({3, 0}), error);
  CHECK_THROWS_AS(parse_partition({-1}), error);
}

TEST_CASE("conjugate counts column lengths") {
  CHECK(Partition({4, 3, 3, 2}).conjugate() == Partition({4, 4, 3, 1}));
  CHECK(Partition().conjugate() == Partition());
  CHECK(Partition({1, 1, 1}).conjugate() == Partition({3}));
}

TEST_CASE("conjugate is an involution") {
  for (const Partition& p : testutil::partitions_up_to(8))
    CHECK(p.conjugate().conjugate() == p);
}

TEST_CASE("cells_in_order is column major") {
  std::vector<Cell> expected = {{1, 1}, {2, 1}, {3, 1}, {4, 1}, {1, 2}, {2, 2},
                                {3, 2}, {4, 2}, {1, 3}, {2, 3}, {3, 3}, {1, 4}};
  CHECK(Partition({4, 3, 3, 2}).cells_in_order() == expected);
  CHECK(Partition({1}).cells_in_order() == std::vector<Cell>{{1, 1}});
  CHECK(Partition({2, 1}).cells_in_order() == std::vector<Cell>{{1, 1}, {2, 1}, {1, 2}});
}

TEST_CASE("cells_in_order hits every valid cell exactly once") {
  for (const Partition& p : testutil::partitions_up_to(7)) {
    auto cells = p.cells_in_order();
    CHECK(static_cast<long long>(cells.size()) == p.cell_count());
    std::set<Cell> seen(cells.begin(), cells.end());
    CHECK(static_cast<long long>(seen.size()) == p.cell_count());
    for (Cell c : cells) CHECK(p.contains(c));
  }
}

TEST_CASE("cell statistics") {
  Partition p({4, 3, 3, 2});
  CellStats s = p.stats({1, 1});
  CHECK(s.hook == 7);
  CHECK(s.content == 0);
  CHECK(s.arm == 3);
  CHECK(s.leg == 3);

  Partition single({1});
  CellStats t = single.stats({1, 1});
  CHECK(t.arm == 0);
  CHECK(t.leg == 0);
  CHECK(t.hook == 1);
  CHECK(t.content == 0);

  Partition two({2, 1});
  CHECK(two.stats({1, 1}).hook == 3);
  CHECK(two.stats({1, 1}).content == 0);
  CHECK(two.stats({1, 2}).hook == 1);
  CHECK(two.stats({1, 2}).content == 1);
  CHECK(two.stats({2, 1}).hook == 1);
  CHECK(two.stats({2, 1}).content == -1);

  CHECK_THROWS_AS(two.stats({2, 2}), error);
  CHECK_THROWS_AS(two.stats({0, 1}), error);
}

TEST_CASE("hook = arm + leg + 1 everywhere") {
  for (const Partition& p : testutil::partitions_up_to(8))
    for (Cell c : p.cells_in_order()) {
      CellStats s = p.stats(c);
      CHECK(s.hook == s.arm + s.leg + 1);
      CHECK(s.hook >= 1);
      CHECK(s.arm >= 0);
      CHECK(s.leg >= 0);
    }
}

TEST_CASE("successor and predecessor walk the fixed order") {
  Partition p({4, 3, 3, 2});
  CHECK(p.successor({4, 1}) == Cell{1, 2});
  CHECK(p.predecessor({1, 4}) == Cell{3, 3});
  CHECK(!Partition({1}).successor({1, 1}).has_value());
  CHECK(!p.predecessor({1, 1}).has_value());
  CHECK(!p.successor({1, 4}).has_value());
  CHECK_THROWS_AS(p.successor({9, 9}), error);

  for (const Partition& q : testutil::partitions_up_to(7)) {
    auto cells = q.cells_in_order();
    for (std::size_t k = 0; k < cells.size(); ++k) {
      auto next = q.successor(cells[k]);
      if (k + 1 < cells.size()) {
        REQUIRE(next.has_value());
        CHECK(*next == cells[k + 1]);
        CHECK(q.predecessor(*next) == cells[k]);
      } else {
        CHECK(!next.has_value());
      }
    }
  }
}
