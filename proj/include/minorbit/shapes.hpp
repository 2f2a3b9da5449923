#pragma once

// Partitions, rectangles, skew shapes and diagonals.
//
// English convention throughout: boxes are (row, col), 1-based, row 1 on top.
// "Above" means a smaller row index.

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace minorbit {

struct Box {
  int row = 1;
  int col = 1;

  auto operator<=>(const Box&) const = default;
};

std::string to_string(Box b);

// Weakly decreasing list of positive row lengths. Trailing zeros are dropped
// on construction; the empty partition has no rows.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> rows);

  static Partition rectangle(int rows, int cols);

  std::span<const int> rows() const { return rows_; }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  int num_cols() const { return rows_.empty() ? 0 : rows_.front(); }
  // 1-based; rows past the end have length 0.
  int row(int i) const;
  int column_length(int j) const;
  int size() const;
  bool empty() const { return rows_.empty(); }
  bool contains(Box b) const;

  // All cells in row-major order.
  std::vector<Box> cells() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> rows_;
};

// Compact digit form ("5431") when every part is <= 9, bracketed list otherwise.
std::string to_string(const Partition& p);
// Accepts both the digit form and the bracketed form "[12,10,3]".
Partition parse_partition(std::string_view text);

enum class Orientation {
  n_rows,  // n rows, m columns
  n_cols,  // m rows, n columns
};

// An m x n rectangle. The slide constructions need m >= n; m < n is only
// reachable through the experimental insertion route.
class Rectangle {
 public:
  Rectangle(int n, int m, Orientation orientation = Orientation::n_rows);

  // n = min(rows, cols); ties resolve to n_rows.
  static Rectangle from_dims(int rows, int cols);

  int n() const { return n_; }
  int m() const { return m_; }
  Orientation orientation() const { return orientation_; }
  int rows() const { return orientation_ == Orientation::n_rows ? n_ : m_; }
  int cols() const { return orientation_ == Orientation::n_rows ? m_ : n_; }
  int cells() const { return n_ * m_; }
  bool experimental() const { return m_ < n_; }
  bool contains(Box b) const;
  Partition shape() const { return Partition::rectangle(rows(), cols()); }
  Rectangle transposed() const;

  bool operator==(const Rectangle&) const = default;

 private:
  int n_;
  int m_;
  Orientation orientation_;
};

std::string to_string(const Rectangle& r);

class SkewShape {
 public:
  SkewShape() = default;
  explicit SkewShape(Partition outer, Partition inner = {});

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  bool contains(Box b) const;
  int size() const { return outer_.size() - inner_.size(); }
  std::vector<Box> cells() const;

  bool operator==(const SkewShape&) const = default;

 private:
  Partition outer_;
  Partition inner_;
};

// n boxes b_1..b_n with b_{i+1} strictly above and strictly right of b_i,
// together with the partitions lambda_plus / lambda_minus they cut out.
class Diagonal {
 public:
  // Validates the strict up-right chain and derives lambda_plus as the
  // smallest partition containing the boxes.
  static Diagonal from_boxes(std::vector<Box> boxes);

  // The diagonal whose lambda_plus is the given partition, if any.
  static std::optional<Diagonal> from_lambda_plus(const Partition& lambda_plus, const Rectangle& rect);

  // lambda_plus = (n, n-1, ..., 1).
  static Diagonal staircase(const Rectangle& rect);

  // For m < n in the n-rows orientation there is no strict chain. This builds
  // the rim consisting of the last box of each of the n rows of lambda_plus,
  // ordered bottom to top; is_strict() reports whether it happens to be a
  // genuine diagonal.
  static Diagonal row_rim(const Partition& lambda_plus);

  const Partition& lambda_plus() const { return lambda_plus_; }
  const Partition& lambda_minus() const { return lambda_minus_; }
  std::span<const Box> boxes() const { return boxes_; }
  int size() const { return static_cast<int>(boxes_.size()); }
  // 1-based.
  Box box(int i) const { return boxes_.at(static_cast<std::size_t>(i - 1)); }
  // 1-based index i with b == box(i).
  std::optional<int> index_of(Box b) const;
  bool is_strict() const;

  bool operator==(const Diagonal&) const = default;

 private:
  Diagonal(Partition plus, Partition minus, std::vector<Box> boxes);

  Partition lambda_plus_;
  Partition lambda_minus_;
  std::vector<Box> boxes_;
};

bool contains(const Partition& inner, const Partition& outer);

// Boxes whose removal leaves a partition, ordered by row.
std::vector<Box> removable_corners(const Partition& p);
// Boxes whose addition leaves a partition, ordered by row.
std::vector<Box> addable_corners(const Partition& p);

// Every diagonal of the rectangle: one box per row when n = rows, one per
// column when n = cols. Deterministic order.
std::vector<Diagonal> enumerate_diagonals(const Rectangle& rect);

// Complement of p in the rectangle rotated by 180 degrees.
Partition dual_shape(const Partition& p, const Rectangle& rect);
Box dual_box(Box b, const Rectangle& rect);
// Diagonal of the dual configuration: lambda_plus' = dual(lambda_minus),
// box'_j = dual(box_{n+1-j}).
Diagonal dual_diagonal(const Diagonal& d, const Rectangle& rect);

Partition transpose(const Partition& p);
inline Box transpose(Box b) { return {b.col, b.row}; }
// Boxes transposed and re-ordered so the result is again bottom-left first.
Diagonal transpose(const Diagonal& d);

}  // namespace minorbit
