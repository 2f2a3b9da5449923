#include "minorbit/shapes.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "minorbit/errors.hpp"

namespace minorbit {

std::string to_string(Box b) {
  return "(" + std::to_string(b.row) + "," + std::to_string(b.col) + ")";
}

Partition::Partition(std::vector<int> rows) : rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back() == 0) rows_.pop_back();
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] < 1) throw std::invalid_argument("partition rows must be positive");
    if (i > 0 && rows_[i] > rows_[i - 1]) throw std::invalid_argument("partition rows must be weakly decreasing");
  }
}

Partition Partition::rectangle(int rows, int cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative rectangle dimension");
  if (rows == 0 || cols == 0) return {};
  return Partition(std::vector<int>(static_cast<std::size_t>(rows), cols));
}

int Partition::row(int i) const {
  if (i < 1 || i > num_rows()) return 0;
  return rows_[static_cast<std::size_t>(i - 1)];
}

int Partition::column_length(int j) const {
  if (j < 1) return 0;
  int len = 0;
  for (int r : rows_) {
    if (r < j) break;
    ++len;
  }
  return len;
}

int Partition::size() const { return std::accumulate(rows_.begin(), rows_.end(), 0); }

bool Partition::contains(Box b) const { return b.row >= 1 && b.col >= 1 && b.col <= row(b.row); }

std::vector<Box> Partition::cells() const {
  std::vector<Box> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int r = 1; r <= num_rows(); ++r)
    for (int c = 1; c <= row(r); ++c) out.push_back({r, c});
  return out;
}

std::string to_string(const Partition& p) {
  const auto rows = p.rows();
  const bool compact = std::all_of(rows.begin(), rows.end(), [](int r) { return r <= 9; });
  std::string out;
  if (compact) {
    for (int r : rows) out += static_cast<char>('0' + r);
    return out;
  }
  out = "[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(rows[i]);
  }
  return out + "]";
}

Partition parse_partition(std::string_view text) {
  std::vector<int> rows;
  if (!text.empty() && text.front() == '[') {
    if (text.back() != ']') throw ParseError("unterminated partition list: " + std::string(text));
    std::string body(text.substr(1, text.size() - 2));
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
      item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
      if (item.empty() || !std::all_of(item.begin(), item.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw ParseError("bad partition part '" + item + "'");
      rows.push_back(std::stoi(item));
    }
  } else {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad partition text: " + std::string(text));
      rows.push_back(c - '0');
    }
  }
  try {
    return Partition(std::move(rows));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("not a partition: ") + e.what());
  }
}

Rectangle::Rectangle(int n, int m, Orientation orientation) : n_(n), m_(m), orientation_(orientation) {
  if (n < 1 || m < 1) throw std::invalid_argument("rectangle dimensions must be positive");
}

Rectangle Rectangle::from_dims(int rows, int cols) {
  if (rows <= cols) return Rectangle(rows, cols, Orientation::n_rows);
  return Rectangle(cols, rows, Orientation::n_cols);
}

bool Rectangle::contains(Box b) const { return b.row >= 1 && b.col >= 1 && b.row <= rows() && b.col <= cols(); }

Rectangle Rectangle::transposed() const {
  return Rectangle(n_, m_, orientation_ == Orientation::n_rows ? Orientation::n_cols : Orientation::n_rows);
}

std::string to_string(const Rectangle& r) { return std::to_string(r.rows()) + "x" + std::to_string(r.cols()); }

SkewShape::SkewShape(Partition outer, Partition inner) : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!minorbit::contains(inner_, outer_)) throw std::invalid_argument("skew shape inner not contained in outer");
}

bool SkewShape::contains(Box b) const { return outer_.contains(b) && !inner_.contains(b); }

std::vector<Box> SkewShape::cells() const {
  std::vector<Box> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int r = 1; r <= outer_.num_rows(); ++r)
    for (int c = inner_.row(r) + 1; c <= outer_.row(r); ++c) out.push_back({r, c});
  return out;
}

Diagonal::Diagonal(Partition plus, Partition minus, std::vector<Box> boxes)
    : lambda_plus_(std::move(plus)), lambda_minus_(std::move(minus)), boxes_(std::move(boxes)) {}

Diagonal Diagonal::from_boxes(std::vector<Box> boxes) {
  if (boxes.empty()) throw std::invalid_argument("diagonal needs at least one box");
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    if (boxes[i].row < 1 || boxes[i].col < 1) throw std::invalid_argument("diagonal box outside the quadrant");
    if (i > 0 && !(boxes[i].row < boxes[i - 1].row && boxes[i].col > boxes[i - 1].col))
      throw std::invalid_argument("diagonal boxes must move strictly up and right");
  }
  // Row r of the smallest containing partition is the column of the box in
  // the lowest row >= r; boxes go bottom to top so that is the last such box.
  const int height = boxes.front().row;
  std::vector<int> plus(static_cast<std::size_t>(height), 0);
  for (const Box& b : boxes)
    for (int r = 1; r <= b.row; ++r) plus[static_cast<std::size_t>(r - 1)] = std::max(plus[static_cast<std::size_t>(r - 1)], b.col);
  std::vector<int> minus = plus;
  for (const Box& b : boxes) {
    if (plus[static_cast<std::size_t>(b.row - 1)] != b.col) throw std::invalid_argument("diagonal box is not a corner of lambda_plus");
    minus[static_cast<std::size_t>(b.row - 1)] -= 1;
  }
  Partition lp(plus);
  Partition lm;
  try {
    lm = Partition(minus);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("boxes do not cut out a skew shape lambda_plus/lambda_minus");
  }
  if (lp.size() - lm.size() != static_cast<int>(boxes.size()))
    throw std::invalid_argument("lambda_plus/lambda_minus must consist of exactly the diagonal boxes");
  return Diagonal(std::move(lp), std::move(lm), std::move(boxes));
}

std::optional<Diagonal> Diagonal::from_lambda_plus(const Partition& lambda_plus, const Rectangle& rect) {
  for (Diagonal& d : enumerate_diagonals(rect))
    if (d.lambda_plus() == lambda_plus) return std::move(d);
  return std::nullopt;
}

Diagonal Diagonal::staircase(const Rectangle& rect) {
  if (rect.experimental()) throw std::invalid_argument("staircase diagonal requires m >= n");
  std::vector<Box> boxes;
  for (int i = 1; i <= rect.n(); ++i) boxes.push_back({rect.n() + 1 - i, i});
  return from_boxes(std::move(boxes));
}

Diagonal Diagonal::row_rim(const Partition& lambda_plus) {
  if (lambda_plus.empty()) throw std::invalid_argument("row rim of the empty partition");
  std::vector<Box> boxes;
  std::vector<int> minus;
  for (int r = lambda_plus.num_rows(); r >= 1; --r) boxes.push_back({r, lambda_plus.row(r)});
  for (int r = 1; r <= lambda_plus.num_rows(); ++r) minus.push_back(lambda_plus.row(r) - 1);
  return Diagonal(lambda_plus, Partition(minus), std::move(boxes));
}

std::optional<int> Diagonal::index_of(Box b) const {
  for (std::size_t i = 0; i < boxes_.size(); ++i)
    if (boxes_[i] == b) return static_cast<int>(i) + 1;
  return std::nullopt;
}

bool Diagonal::is_strict() const {
  for (std::size_t i = 1; i < boxes_.size(); ++i)
    if (!(boxes_[i].row < boxes_[i - 1].row && boxes_[i].col > boxes_[i - 1].col)) return false;
  return true;
}

bool contains(const Partition& inner, const Partition& outer) {
  if (inner.num_rows() > outer.num_rows()) return false;
  for (int r = 1; r <= inner.num_rows(); ++r)
    if (inner.row(r) > outer.row(r)) return false;
  return true;
}

std::vector<Box> removable_corners(const Partition& p) {
  std::vector<Box> out;
  for (int r = 1; r <= p.num_rows(); ++r)
    if (p.row(r) > p.row(r + 1)) out.push_back({r, p.row(r)});
  return out;
}

std::vector<Box> addable_corners(const Partition& p) {
  std::vector<Box> out;
  for (int r = 1; r <= p.num_rows() + 1; ++r)
    if (r == 1 || p.row(r) < p.row(r - 1)) out.push_back({r, p.row(r) + 1});
  return out;
}

namespace {

// All strictly increasing k-subsets of {1..n} in lexicographic order.
std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int next) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = next; v <= n - (k - static_cast<int>(cur.size())) + 1; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

}  // namespace

std::vector<Diagonal> enumerate_diagonals(const Rectangle& rect) {
  const int n = rect.n();
  std::vector<Diagonal> out;
  if (n > rect.rows() || n > rect.cols()) return out;
  for (const auto& rows : combinations(rect.rows(), n)) {
    for (const auto& cols : combinations(rect.cols(), n)) {
      std::vector<Box> boxes;
      // b_1 is lowest and leftmost.
      for (int i = 0; i < n; ++i)
        boxes.push_back({rows[static_cast<std::size_t>(n - 1 - i)], cols[static_cast<std::size_t>(i)]});
      out.push_back(Diagonal::from_boxes(std::move(boxes)));
    }
  }
  return out;
}

Partition dual_shape(const Partition& p, const Rectangle& rect) {
  if (!contains(p, rect.shape())) throw std::invalid_argument("partition " + to_string(p) + " not inside " + to_string(rect));
  std::vector<int> rows;
  for (int r = 1; r <= rect.rows(); ++r) rows.push_back(rect.cols() - p.row(rect.rows() + 1 - r));
  return Partition(std::move(rows));
}

Box dual_box(Box b, const Rectangle& rect) {
  if (!rect.contains(b)) throw std::invalid_argument("box " + to_string(b) + " not inside " + to_string(rect));
  return {rect.rows() + 1 - b.row, rect.cols() + 1 - b.col};
}

Diagonal dual_diagonal(const Diagonal& d, const Rectangle& rect) {
  std::vector<Box> boxes;
  for (int j = 1; j <= d.size(); ++j) boxes.push_back(dual_box(d.box(d.size() + 1 - j), rect));
  if (d.is_strict()) return Diagonal::from_boxes(std::move(boxes));
  throw std::invalid_argument("dual of a non-strict rim is not a diagonal");
}

Partition transpose(const Partition& p) {
  std::vector<int> cols;
  for (int j = 1; j <= p.num_cols(); ++j) cols.push_back(p.column_length(j));
  return Partition(std::move(cols));
}

Diagonal transpose(const Diagonal& d) {
  std::vector<Box> boxes;
  for (int i = d.size(); i >= 1; --i) boxes.push_back(transpose(d.box(i)));
  return Diagonal::from_boxes(std::move(boxes));
}

}  // namespace minorbit
