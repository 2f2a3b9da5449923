#include <doctest.h>

#include <random>

#include "minorbit/tableaux.hpp"
#include "minorbit/words.hpp"
#include "oracles.hpp"

using namespace minorbit;

namespace {

PartialTableau from_grid(const oracle::Grid& g, const SkewShape& region) {
  PartialTableau t{region};
  for (auto [b, v] : g) t.set(b, v);
  return t;
}

// Random standard filling of a skew region, by repeatedly filling a random
// cell whose left and upper neighbours are already settled.
PartialTableau random_standard(const SkewShape& region, std::mt19937& rng) {
  PartialTableau t{region};
  for (int v = 1; v <= region.size(); ++v) {
    std::vector<Box> ready;
    for (const Box& b : region.cells()) {
      if (t.filled(b)) continue;
      const Box left{b.row, b.col - 1}, up{b.row - 1, b.col};
      if ((!region.contains(left) || t.filled(left)) && (!region.contains(up) || t.filled(up))) ready.push_back(b);
    }
    t.set(ready[std::uniform_int_distribution<std::size_t>(0, ready.size() - 1)(rng)], v);
  }
  return t;
}

}  // namespace

TEST_CASE("partial tableau storage") {
  PartialTableau t = PartialTableau::from_rows({{1, 0, 3}, {2}});
  CHECK(t.region().outer() == Partition({3, 1}));
  CHECK(t.at({1, 1}) == 1);
  CHECK_FALSE(t.filled({1, 2}));
  CHECK_FALSE(t.entry({1, 2}).has_value());
  CHECK(t.entry({2, 1}) == 2);
  CHECK(t.at({5, 5}) == PartialTableau::kUnfilled);
  CHECK(t.filled_count() == 3);
  CHECK_FALSE(t.complete());
  CHECK_THROWS_AS(t.set({2, 2}, 4), std::out_of_range);
  t.set({1, 2}, 5);
  CHECK(t.complete());
  CHECK(t.to_rows() == std::vector<std::vector<int>>{{1, 5, 3}, {2}});
  t.shift_entries(10);
  CHECK(t.at({2, 1}) == 12);

  PartialTableau skew{SkewShape(Partition({3, 2}), Partition({1}))};
  CHECK(skew.cells().size() == 4);
  CHECK_THROWS_AS(skew.set({1, 1}, 1), std::out_of_range);
}

TEST_CASE("validity predicates") {
  CHECK(is_standard_normalized(PartialTableau::from_rows({{1, 2}, {3, 4}})));
  CHECK_FALSE(is_standard(PartialTableau::from_rows({{1, 3}, {2, 0}})));
  CHECK(is_strict(PartialTableau::from_rows({{1, 3}, {2, 0}})));
  CHECK_FALSE(is_strict(PartialTableau::from_rows({{2, 1}})));
  CHECK_FALSE(is_strict(PartialTableau::from_rows({{1, 3}, {3}})));
  CHECK(is_standard(PartialTableau::from_rows({{2, 7}, {5}})));
  CHECK_FALSE(is_standard_normalized(PartialTableau::from_rows({{2, 7}, {5}})));
}

TEST_CASE("slides match the recursive oracle") {
  std::mt19937 rng(7);
  const std::vector<std::pair<Partition, Partition>> shapes = {
      {Partition({5, 4, 3, 1}), Partition({4, 3, 2})},
      {Partition({6, 6, 6, 6}), Partition({4, 3, 2, 1})},
      {Partition({4, 4, 3}), Partition({2, 1})},
      {Partition({5, 3, 3, 2}), Partition({3, 3, 1})},
  };
  for (const auto& [outer, inner] : shapes) {
    for (int trial = 0; trial < 50; ++trial) {
      // Fill the whole outer shape, then clear the inner part to get holes.
      const SkewShape region(outer);
      PartialTableau t = random_standard(SkewShape(outer, inner), rng);
      PartialTableau full{region};
      for (const Box& b : t.cells()) full.set(b, t.at(b));
      for (const Box& hole : removable_corners(inner)) {
        auto in_region = [&](Box b) { return region.contains(b); };
        oracle::Grid g = oracle::to_grid(full);
        const Box expected_end = oracle::forward_slide(g, hole, in_region);
        const SlideResult got = forward_slide(full, hole);
        CHECK(got.terminal == expected_end);
        CHECK(oracle::to_grid(got.tableau) == g);
        CHECK(got.path.front() == hole);
        CHECK(got.path.back() == got.terminal);
        CHECK(is_strict(got.tableau));
      }
      // Reverse slides into outer corners after clearing them.
      for (const Box& corner : removable_corners(outer)) {
        if (inner.contains(corner)) continue;
        PartialTableau cut = full;
        cut.clear(corner);
        auto in_region = [&](Box b) { return region.contains(b) && !inner.contains(b); };
        oracle::Grid g = oracle::to_grid(cut);
        const Box expected_end = oracle::reverse_slide(g, corner, in_region);
        const SlideResult got = reverse_slide(cut, corner);
        CHECK(got.terminal == expected_end);
        CHECK(oracle::to_grid(got.tableau) == g);
      }
    }
  }
}

TEST_CASE("illegal slides") {
  PartialTableau t = PartialTableau::from_rows({{0, 2}, {3, 4}});
  CHECK_THROWS_AS(forward_slide(t, {1, 2}), std::invalid_argument);  // filled
  CHECK_THROWS_AS(forward_slide(t, {3, 3}), std::invalid_argument);  // outside
  PartialTableau u = PartialTableau::from_rows({{1, 0}, {3, 4}});
  CHECK_THROWS_AS(forward_slide(u, {1, 2}), std::invalid_argument);  // left neighbour filled
  PartialTableau tie = PartialTableau::from_rows({{0, 5}, {5, 6}});
  CHECK_THROWS_AS(forward_slide(tie, {1, 1}), std::logic_error);
}

TEST_CASE("rectify agrees with insertion of the reading word") {
  std::mt19937 rng(11);
  const std::vector<std::pair<Partition, Partition>> shapes = {
      {Partition({4, 3, 3, 1}), Partition({2, 1})},
      {Partition({5, 5, 2}), Partition({3, 1, 1})},
      {Partition({3, 3, 3}), Partition({2, 2})},
  };
  for (const auto& [outer, inner] : shapes) {
    for (int trial = 0; trial < 40; ++trial) {
      const PartialTableau t = random_standard(SkewShape(outer, inner), rng);
      const PartialTableau r = rectify(t);
      CHECK(r.region().inner().empty());
      CHECK(r.to_rows() == oracle::insert_word(reading_word(t)));
    }
  }
}

TEST_CASE("promotion matches the oracle on whole rectangles") {
  for (auto [rows, cols] : std::vector<std::pair<int, int>>{{2, 2}, {2, 4}, {3, 3}, {3, 4}}) {
    const Partition shape = Partition::rectangle(rows, cols);
    for (const auto& g : oracle::all_rect_syt(rows, cols)) {
      const PartialTableau t = from_grid(g, SkewShape(shape));
      const PartialTableau p = promotion(t);
      CHECK(oracle::to_grid(p) == oracle::promote(g, rows, cols));
      CHECK(inverse_promotion(p) == t);
      CHECK(promotion_power(t, rows * cols) == t);
      CHECK(promotion_power(t, -1) == inverse_promotion(t));
      CHECK((rows * cols) % promotion_order(t) == 0);
    }
  }
}

TEST_CASE("promotion examples") {
  const PartialTableau t = PartialTableau::from_rows({{1, 2}, {3, 4}});
  const PartialTableau u = PartialTableau::from_rows({{1, 3}, {2, 4}});
  CHECK(promotion(t) == u);
  CHECK(promotion(u) == t);
  CHECK(promotion_order(t) == 2);
  CHECK(promotion_power(t, 0) == t);
  CHECK(promotion_power(t, 7) == u);
  CHECK(promotion_power(t, -9) == u);
  CHECK_THROWS_AS(promotion(PartialTableau::from_rows({{1, 2}, {3}})), std::invalid_argument);
  CHECK_THROWS_AS(promotion(PartialTableau::from_rows({{2, 1}, {3, 4}})), std::invalid_argument);
}

TEST_CASE("rectangle_of") {
  CHECK(rectangle_of(PartialTableau::from_rows({{1, 2, 3}, {4, 5, 6}})) == Rectangle(2, 3));
  CHECK(rectangle_of(PartialTableau::from_rows({{1, 3}, {2, 4}, {5, 6}})) == Rectangle(2, 3, Orientation::n_cols));
  CHECK_THROWS(rectangle_of(PartialTableau::from_rows({{1, 2}, {3}})));
}

TEST_CASE("dual tableau") {
  const Rectangle rect(4, 6);
  PartialTableau t{SkewShape(Partition({4, 3, 1}), Partition({2}))};
  t.set({1, 3}, 2);
  t.set({1, 4}, 5);
  t.set({2, 1}, 1);
  t.set({3, 1}, 3);
  const PartialTableau d = dual_tableau(t, rect);
  CHECK(d.region().outer() == dual_shape(Partition({2}), rect));
  CHECK(d.region().inner() == dual_shape(Partition({4, 3, 1}), rect));
  CHECK(d.at({4, 4}) == 25 - 2);
  CHECK(d.at({3, 6}) == 25 - 1);
  CHECK_FALSE(d.filled({3, 4}));
  CHECK(dual_tableau(d, rect) == t);

  std::mt19937 rng(3);
  for (int i = 0; i < 20; ++i) {
    const PartialTableau s = random_standard(SkewShape(Partition({4, 4, 4}), {}), rng);
    CHECK(is_standard_normalized(dual_tableau(s, Rectangle(3, 4))));
  }
}

TEST_CASE("transpose and reading word") {
  const PartialTableau t = PartialTableau::from_rows({{1, 2, 5}, {3, 4}});
  const PartialTableau tt = transpose(t);
  CHECK(tt.to_rows() == std::vector<std::vector<int>>{{1, 3}, {2, 4}, {5}});
  CHECK(transpose(tt) == t);
  CHECK(reading_word(t) == std::vector<int>{3, 4, 1, 2, 5});
  CHECK_THROWS(reading_word(PartialTableau::from_rows({{1, 0}})));
}
