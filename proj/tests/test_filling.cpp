#include <doctest.h>

#include <set>
#include <string>

#include "hooktab/filling.hpp"
#include "hooktab/qcount.hpp"

using namespace hooktab;

namespace {
const std::vector<std::vector<long long>> kRefContent = {{7, 3, 5, -2}, {7, 3, 2}, {5, 4, 2}, {4, 6}};
const std::vector<std::vector<long long>> kRefHook = {{3, 0, -1, 0}, {-1, -1, 1}, {-2, -1, 0}, {0, 0}};
}  // namespace

TEST_CASE("norm sums all entries") {
  Partition shape({4, 3, 3, 2});
  CHECK(Filling(shape, kRefContent).norm() == 46);
  CHECK(Filling(shape, kRefHook).norm() == -2);
  CHECK(Filling(shape, 0).norm() == 0);
  CHECK(Filling().norm() == 0);
}

TEST_CASE("filling construction and access are shape checked") {
  Partition shape({2, 1});
  CHECK_THROWS_AS(Filling(shape, {{1, 2}}), error);
  CHECK_THROWS_AS(Filling(shape, {{1}, {2}}), error);
  Filling f(shape, {{1, 2}, {3}});
  CHECK(f.at({1, 2}) == 2);
  CHECK_THROWS_AS(f.at({2, 2}), error);
}

TEST_CASE("content tabloid validation") {
  Partition shape({4, 3, 3, 2});
  CHECK(check_content(Filling(shape, kRefContent), 7).empty());

  Partition two({2, 1});
  CHECK(check_content(Filling(two, {{1, 0}, {2}}), 2).empty());  // (1,2) has range [0, 2]
  auto v = check_content(Filling(two, {{1, -1}, {2}}), 2);
  REQUIRE(v.size() == 1);
  CHECK(v[0].cell == Cell{1, 2});
}

TEST_CASE("hook tabloid validation") {
  Partition shape({4, 3, 3, 2});
  CHECK(check_hook(Filling(shape, kRefHook)).empty());
  auto v = check_hook(Filling(Partition({2, 1}), {{0, 1}, {0}}));  // leg of (1,2) is 0
  REQUIRE(v.size() == 1);
  CHECK(v[0].cell == Cell{1, 2});
}

TEST_CASE("tableau validation") {
  Partition shape({4, 3, 3, 2});
  Filling good(shape, {{1, 1, 2, 5}, {2, 4, 6}, {4, 5, 7}, {5, 6}});
  CHECK(check_ssyt(good, 7).empty());

  Filling bad_row(Partition({2}), {{2, 1}});
  CHECK(!check_ssyt(bad_row, 3).empty());
  Filling bad_col(Partition({1, 1}), {{2}, {2}});
  CHECK(!check_ssyt(bad_col, 3).empty());
  Filling bad_bound(Partition({1}), {{4}});
  CHECK(!check_ssyt(bad_bound, 3).empty());
}

TEST_CASE("a tableau valid at bound b stays valid at any larger bound") {
  Partition shape({2, 2});
  for_each_ssyt(shape, 3, [&](const Filling& f) {
    CHECK(check_ssyt(f, 3).empty());
    CHECK(check_ssyt(f, 4).empty());
    CHECK(check_ssyt(f, 9).empty());
  });
}

TEST_CASE("plane partition validation") {
  Filling good(Partition({2, 2}), {{2, 1}, {1, 0}});
  CHECK(check_plane_partition(good, 2).empty());
  Filling ragged(Partition({2, 1}), {{1, 1}, {1}});
  CHECK(!check_plane_partition(ragged, 2).empty());
  Filling bad(Partition({2, 2}), {{1, 2}, {1, 0}});
  CHECK(!check_plane_partition(bad, 2).empty());
}

TEST_CASE("box input validation") {
  BoxDims d{2, 2, 2};
  Filling f(box_shape(d), {{-1, 3}, {0, 0}});
  CHECK(check_box_input(f, d).empty());
  Filling low(box_shape(d), {{-2, 3}, {0, 0}});
  CHECK(!check_box_input(low, d).empty());
  CHECK_THROWS_AS(BoxFilling(low, d), error);
}

TEST_CASE("tableau to plane partition deformation") {
  SemistandardTableau t1(Filling(Partition({1}), {{1}}), 2);
  CHECK(ssyt_to_pp(t1).filling().at({1, 1}) == 1);
  SemistandardTableau t2(Filling(Partition({1}), {{2}}), 2);
  CHECK(ssyt_to_pp(t2).filling().at({1, 1}) == 0);

  SemistandardTableau t3(Filling(Partition({2, 2}), {{1, 1}, {2, 2}}), 4);
  PlanePartition p3 = ssyt_to_pp(t3);
  CHECK(p3.filling() == Filling(Partition({2, 2}), {{2, 2}, {2, 2}}));
  CHECK(p3.ceiling() == 2);

  // bound a + b with b = 0 forces entry i in row i and the all-zero output
  SemistandardTableau t4(Filling(Partition({2, 2}), {{1, 1}, {2, 2}}), 2);
  for (Cell c : t4.filling().shape().cells_in_order())
    CHECK(ssyt_to_pp(t4).filling().at(c) == 0);

  CHECK_THROWS_AS(ssyt_to_pp(SemistandardTableau(Filling(Partition({2, 1}), {{1, 1}, {2}}), 3)),
                  error);
}

TEST_CASE("deformation is a bijection for small boxes") {
  for (int a = 1; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 1; c <= 2; ++c) {
        Partition shape(std::vector<int>(a, c));
        std::set<std::string> images;
        long long tableaux = for_each_ssyt(shape, a + b, [&](const Filling& f) {
          SemistandardTableau t(f, a + b);
          PlanePartition p = ssyt_to_pp(t);
          CHECK(check_plane_partition(p.filling(), b).empty());
          CHECK(pp_to_ssyt(p) == t);
          std::string key;
          for (const auto& row : p.filling().rows())
            for (long long e : row) key += std::to_string(e) + ",";
          images.insert(key);
        });
        long long pps = for_each_plane_partition({a, b, c}, [](const Filling&) {});
        CHECK(tableaux == pps);
        CHECK(static_cast<long long>(images.size()) == pps);
      }
}

TEST_CASE("deformation norm identity") {
  const int a = 2, b = 2, c = 2;
  Partition shape({2, 2});
  for_each_ssyt(shape, a + b, [&](const Filling& f) {
    SemistandardTableau t(f, a + b);
    PlanePartition p = ssyt_to_pp(t);
    long long expected = static_cast<long long>(b) * a * c +
                         static_cast<long long>(c) * a * (a + 1) / 2 - f.norm();
    CHECK(p.filling().norm() == expected);
  });
}
