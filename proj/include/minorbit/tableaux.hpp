#pragma once

#include <optional>
#include <span>
#include <vector>

#include "minorbit/shapes.hpp"

namespace minorbit {

// Filling of a subset of the cells of a skew region by distinct positive
// integers. Unfilled cells read as kUnfilled.
//
// Storage is a flat row-major array over the region's cells; promotion sweeps
// over millions of rectangular tableaux, so the hot path must not allocate.
class PartialTableau {
 public:
  static constexpr int kUnfilled = 0;

  PartialTableau() = default;
  explicit PartialTableau(SkewShape region);

  // Straight shape from rows of entries; 0 marks an unfilled cell.
  static PartialTableau from_rows(const std::vector<std::vector<int>>& rows);

  const SkewShape& region() const { return region_; }
  bool in_region(Box b) const { return region_.contains(b); }

  // kUnfilled for unfilled cells and for boxes outside the region.
  int at(Box b) const {
    const int idx = index(b);
    return idx < 0 ? kUnfilled : data_[static_cast<std::size_t>(idx)];
  }
  std::optional<int> entry(Box b) const {
    const int v = at(b);
    return v == kUnfilled ? std::nullopt : std::optional<int>(v);
  }
  bool filled(Box b) const { return at(b) != kUnfilled; }
  void set(Box b, int value);
  void clear(Box b) { set(b, kUnfilled); }

  int filled_count() const;
  bool complete() const { return filled_count() == region_.size(); }
  std::vector<Box> cells() const { return region_.cells(); }
  std::vector<Box> filled_cells() const;

  // Entries row by row over the region, kUnfilled for holes.
  std::vector<std::vector<int>> to_rows() const;

  // Add delta to every filled entry.
  void shift_entries(int delta);

  bool operator==(const PartialTableau&) const = default;
  // Lexicographic on region then entries; used for canonical orbit representatives.
  auto operator<=>(const PartialTableau& other) const {
    if (auto c = region_.outer() <=> other.region_.outer(); c != 0) return c;
    if (auto c = region_.inner() <=> other.region_.inner(); c != 0) return c;
    return data_ <=> other.data_;
  }

  std::span<const int> raw() const { return data_; }

 private:
  int index(Box b) const {
    if (b.row < 1 || b.row > static_cast<int>(row_offset_.size())) return -1;
    const auto r = static_cast<std::size_t>(b.row - 1);
    const int lo = region_.inner().row(b.row);
    const int hi = region_.outer().row(b.row);
    if (b.col <= lo || b.col > hi) return -1;
    return row_offset_[r] + (b.col - lo - 1);
  }

  SkewShape region_;
  std::vector<int> row_offset_;
  std::vector<int> data_;
};

// Filled entries strictly increase along rows and down columns wherever two
// filled cells are adjacent, and no entry repeats.
bool is_strict(const PartialTableau& t);
// Complete and strict.
bool is_standard(const PartialTableau& t);
// Standard with entries exactly 1..size.
bool is_standard_normalized(const PartialTableau& t);

struct SlideResult {
  PartialTableau tableau;
  std::vector<Box> path;  // hole positions in order, starting at the hole
  Box terminal;           // == path.back()
};

// Jeu-de-taquin slide of the hole towards the lower right: swap with the
// smaller filled right/below neighbour until neither is filled.
SlideResult forward_slide(const PartialTableau& t, Box hole);
// Mirror image: swap with the larger filled left/above neighbour.
SlideResult reverse_slide(const PartialTableau& t, Box hole);

// In-place variants; return the terminal and optionally record the path.
Box forward_slide_in_place(PartialTableau& t, Box hole, std::vector<Box>* path = nullptr);
Box reverse_slide_in_place(PartialTableau& t, Box hole, std::vector<Box>* path = nullptr);

// Rectify a complete skew tableau by forward-sliding inner corners, always
// taking the lowest inner corner first.
PartialTableau rectify(const PartialTableau& t);

// Promotion on a standard-normalized rectangular tableau.
PartialTableau promotion(const PartialTableau& t);
PartialTableau inverse_promotion(const PartialTableau& t);
// Unchecked in-place versions for enumeration loops.
void promote_in_place(PartialTableau& t);
void inverse_promote_in_place(PartialTableau& t);
// Applies promotion k times; negative k applies the inverse.
PartialTableau promotion_power(const PartialTableau& t, long long k);
// Smallest r >= 1 with promotion^r(t) == t.
int promotion_order(const PartialTableau& t);

// The rectangle a standard-normalized rectangular tableau lives on; throws
// std::invalid_argument otherwise.
Rectangle rectangle_of(const PartialTableau& t);

// T^v: shape mu^v / lambda^v, entries mn + 1 - T[b^v]. Unfilled stays unfilled.
PartialTableau dual_tableau(const PartialTableau& t, const Rectangle& rect);

PartialTableau transpose(const PartialTableau& t);

// Row reading word, bottom row first; requires every cell filled.
std::vector<int> reading_word(const PartialTableau& t);

}  // namespace minorbit
