#include "minorbit/tableaux.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace minorbit {

PartialTableau::PartialTableau(SkewShape region) : region_(std::move(region)) {
  const int rows = region_.outer().num_rows();
  row_offset_.resize(static_cast<std::size_t>(rows));
  int offset = 0;
  for (int r = 1; r <= rows; ++r) {
    row_offset_[static_cast<std::size_t>(r - 1)] = offset;
    offset += region_.outer().row(r) - region_.inner().row(r);
  }
  data_.assign(static_cast<std::size_t>(offset), kUnfilled);
}

PartialTableau PartialTableau::from_rows(const std::vector<std::vector<int>>& rows) {
  std::vector<int> lengths;
  for (const auto& row : rows) lengths.push_back(static_cast<int>(row.size()));
  PartialTableau t{SkewShape(Partition(lengths))};
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) t.set({static_cast<int>(r) + 1, static_cast<int>(c) + 1}, rows[r][c]);
  return t;
}

void PartialTableau::set(Box b, int value) {
  const int idx = index(b);
  if (idx < 0) throw std::out_of_range("box " + to_string(b) + " outside tableau region");
  if (value < 0) throw std::invalid_argument("tableau entries must be positive");
  data_[static_cast<std::size_t>(idx)] = value;
}

int PartialTableau::filled_count() const {
  return static_cast<int>(std::count_if(data_.begin(), data_.end(), [](int v) { return v != kUnfilled; }));
}

std::vector<Box> PartialTableau::filled_cells() const {
  std::vector<Box> out;
  for (const Box& b : region_.cells())
    if (filled(b)) out.push_back(b);
  return out;
}

std::vector<std::vector<int>> PartialTableau::to_rows() const {
  std::vector<std::vector<int>> out;
  for (int r = 1; r <= region_.outer().num_rows(); ++r) {
    std::vector<int> row;
    for (int c = region_.inner().row(r) + 1; c <= region_.outer().row(r); ++c) row.push_back(at({r, c}));
    out.push_back(std::move(row));
  }
  return out;
}

void PartialTableau::shift_entries(int delta) {
  for (int& v : data_)
    if (v != kUnfilled) v += delta;
}

bool is_strict(const PartialTableau& t) {
  std::vector<int> values;
  for (const Box& b : t.cells()) {
    const int v = t.at(b);
    if (v == PartialTableau::kUnfilled) continue;
    values.push_back(v);
    const int right = t.at({b.row, b.col + 1});
    const int below = t.at({b.row + 1, b.col});
    if (right != PartialTableau::kUnfilled && right <= v) return false;
    if (below != PartialTableau::kUnfilled && below <= v) return false;
  }
  std::sort(values.begin(), values.end());
  return std::adjacent_find(values.begin(), values.end()) == values.end();
}

bool is_standard(const PartialTableau& t) { return t.complete() && is_strict(t); }

bool is_standard_normalized(const PartialTableau& t) {
  if (!is_standard(t)) return false;
  auto raw = t.raw();
  const int n = static_cast<int>(raw.size());
  return std::all_of(raw.begin(), raw.end(), [n](int v) { return v >= 1 && v <= n; });
}

namespace {

void require_hole(const PartialTableau& t, Box hole) {
  if (!t.in_region(hole)) throw std::invalid_argument("hole " + to_string(hole) + " outside the region");
  if (t.filled(hole)) throw std::invalid_argument("hole " + to_string(hole) + " is filled");
}

}  // namespace

Box forward_slide_in_place(PartialTableau& t, Box hole, std::vector<Box>* path) {
  require_hole(t, hole);
  if (t.filled({hole.row, hole.col - 1}) || t.filled({hole.row - 1, hole.col}))
    throw std::invalid_argument("forward slide from " + to_string(hole) + ": left/above neighbour is filled");
  if (path) path->assign(1, hole);
  for (;;) {
    const Box right{hole.row, hole.col + 1};
    const Box below{hole.row + 1, hole.col};
    const int rv = t.at(right);
    const int bv = t.at(below);
    if (rv == PartialTableau::kUnfilled && bv == PartialTableau::kUnfilled) break;
    if (rv == bv) throw std::logic_error("slide tie at " + to_string(hole) + ": tableau is not strict");
    Box next;
    if (rv == PartialTableau::kUnfilled) next = below;
    else if (bv == PartialTableau::kUnfilled) next = right;
    else next = rv < bv ? right : below;
    t.set(hole, t.at(next));
    t.clear(next);
    hole = next;
    if (path) path->push_back(hole);
  }
  assert(is_strict(t));
  return hole;
}

Box reverse_slide_in_place(PartialTableau& t, Box hole, std::vector<Box>* path) {
  require_hole(t, hole);
  if (t.filled({hole.row, hole.col + 1}) || t.filled({hole.row + 1, hole.col}))
    throw std::invalid_argument("reverse slide from " + to_string(hole) + ": right/below neighbour is filled");
  if (path) path->assign(1, hole);
  for (;;) {
    const Box left{hole.row, hole.col - 1};
    const Box above{hole.row - 1, hole.col};
    const int lv = t.at(left);
    const int av = t.at(above);
    if (lv == PartialTableau::kUnfilled && av == PartialTableau::kUnfilled) break;
    if (lv == av) throw std::logic_error("slide tie at " + to_string(hole) + ": tableau is not strict");
    Box next;
    if (lv == PartialTableau::kUnfilled) next = above;
    else if (av == PartialTableau::kUnfilled) next = left;
    else next = lv > av ? left : above;
    t.set(hole, t.at(next));
    t.clear(next);
    hole = next;
    if (path) path->push_back(hole);
  }
  assert(is_strict(t));
  return hole;
}

SlideResult forward_slide(const PartialTableau& t, Box hole) {
  SlideResult out{t, {}, hole};
  out.terminal = forward_slide_in_place(out.tableau, hole, &out.path);
  return out;
}

SlideResult reverse_slide(const PartialTableau& t, Box hole) {
  SlideResult out{t, {}, hole};
  out.terminal = reverse_slide_in_place(out.tableau, hole, &out.path);
  return out;
}

PartialTableau rectify(const PartialTableau& t) {
  if (!t.complete()) throw std::invalid_argument("rectify needs a complete tableau");
  PartialTableau cur = t;
  while (!cur.region().inner().empty()) {
    const Box corner = removable_corners(cur.region().inner()).back();
    PartialTableau grown{SkewShape(cur.region().outer(), Partition([&] {
                                     auto rows = std::vector<int>(cur.region().inner().rows().begin(),
                                                                  cur.region().inner().rows().end());
                                     rows[static_cast<std::size_t>(corner.row - 1)] -= 1;
                                     return rows;
                                   }()))};
    for (const Box& b : cur.cells()) grown.set(b, cur.at(b));
    const Box end = forward_slide_in_place(grown, corner);
    auto outer = std::vector<int>(grown.region().outer().rows().begin(), grown.region().outer().rows().end());
    outer[static_cast<std::size_t>(end.row - 1)] -= 1;
    PartialTableau next{SkewShape(Partition(outer), grown.region().inner())};
    for (const Box& b : next.cells()) next.set(b, grown.at(b));
    cur = std::move(next);
  }
  return cur;
}

Rectangle rectangle_of(const PartialTableau& t) {
  const SkewShape& region = t.region();
  const Partition& outer = region.outer();
  if (!region.inner().empty() || outer.empty() || outer.row(outer.num_rows()) != outer.row(1))
    throw std::invalid_argument("tableau is not on a full rectangle");
  return Rectangle::from_dims(outer.num_rows(), outer.num_cols());
}

namespace {

void require_rectangular_standard(const PartialTableau& t) {
  rectangle_of(t);
  if (!is_standard_normalized(t)) throw std::invalid_argument("tableau is not standard with entries 1..mn");
}

}  // namespace

void promote_in_place(PartialTableau& t) {
  const int size = t.region().size();
  const Box origin{1, 1};
  t.clear(origin);
  const Box end = forward_slide_in_place(t, origin);
  t.shift_entries(-1);
  t.set(end, size);
}

void inverse_promote_in_place(PartialTableau& t) {
  const Partition& outer = t.region().outer();
  const Box corner{outer.num_rows(), outer.num_cols()};
  t.clear(corner);
  const Box end = reverse_slide_in_place(t, corner);
  t.shift_entries(1);
  t.set(end, 1);
}

PartialTableau promotion(const PartialTableau& t) {
  require_rectangular_standard(t);
  PartialTableau out = t;
  promote_in_place(out);
  return out;
}

PartialTableau inverse_promotion(const PartialTableau& t) {
  require_rectangular_standard(t);
  PartialTableau out = t;
  inverse_promote_in_place(out);
  return out;
}

int promotion_order(const PartialTableau& t) {
  require_rectangular_standard(t);
  PartialTableau cur = t;
  int order = 0;
  do {
    promote_in_place(cur);
    ++order;
  } while (cur != t);
  return order;
}

PartialTableau promotion_power(const PartialTableau& t, long long k) {
  require_rectangular_standard(t);
  if (k > t.region().size() || -k > t.region().size()) k %= promotion_order(t);
  PartialTableau out = t;
  for (long long i = 0; i < k; ++i) promote_in_place(out);
  for (long long i = 0; i > k; --i) inverse_promote_in_place(out);
  return out;
}

PartialTableau dual_tableau(const PartialTableau& t, const Rectangle& rect) {
  const Partition& outer = t.region().outer();
  const Partition& inner = t.region().inner();
  if (!contains(outer, rect.shape())) throw std::invalid_argument("tableau region not inside " + to_string(rect));
  PartialTableau out{SkewShape(dual_shape(inner, rect), dual_shape(outer, rect))};
  const int top = rect.cells() + 1;
  for (const Box& b : out.cells()) {
    const int v = t.at(dual_box(b, rect));
    if (v != PartialTableau::kUnfilled) out.set(b, top - v);
  }
  return out;
}

PartialTableau transpose(const PartialTableau& t) {
  PartialTableau out{SkewShape(transpose(t.region().outer()), transpose(t.region().inner()))};
  for (const Box& b : t.cells()) out.set(transpose(b), t.at(b));
  return out;
}

std::vector<int> reading_word(const PartialTableau& t) {
  std::vector<int> word;
  const SkewShape& region = t.region();
  for (int r = region.outer().num_rows(); r >= 1; --r) {
    for (int c = region.inner().row(r) + 1; c <= region.outer().row(r); ++c) {
      const int v = t.at({r, c});
      if (v == PartialTableau::kUnfilled) throw std::invalid_argument("reading word of a tableau with unfilled cells");
      word.push_back(v);
    }
  }
  return word;
}

}  // namespace minorbit
