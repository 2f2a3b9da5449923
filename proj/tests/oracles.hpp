#pragma once

// Test-side reference implementations. They share no code with the library
// beyond plain data types: tableaux are std::map<Box, int>, shapes are row
// length vectors.

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "minorbit/shapes.hpp"
#include "minorbit/tableaux.hpp"

namespace oracle {

using minorbit::Box;
using Grid = std::map<Box, int>;  // filled cells only

inline Grid to_grid(const minorbit::PartialTableau& t) {
  Grid g;
  for (const Box& b : t.filled_cells()) g[b] = t.at(b);
  return g;
}

inline int get(const Grid& g, Box b) {
  auto it = g.find(b);
  return it == g.end() ? 0 : it->second;
}

// Forward slide into `hole` restricted to cells for which in_region holds.
// Written recursively: move the smaller neighbour in, then continue from
// where it came from.
template <typename InRegion>
Box forward_slide(Grid& g, Box hole, InRegion in_region) {
  const Box right{hole.row, hole.col + 1};
  const Box below{hole.row + 1, hole.col};
  const bool has_r = in_region(right) && g.count(right);
  const bool has_b = in_region(below) && g.count(below);
  if (!has_r && !has_b) return hole;
  Box from = !has_b || (has_r && g[right] < g[below]) ? right : below;
  g[hole] = g[from];
  g.erase(from);
  return forward_slide(g, from, in_region);
}

template <typename InRegion>
Box reverse_slide(Grid& g, Box hole, InRegion in_region) {
  const Box left{hole.row, hole.col - 1};
  const Box above{hole.row - 1, hole.col};
  const bool has_l = in_region(left) && g.count(left);
  const bool has_a = in_region(above) && g.count(above);
  if (!has_l && !has_a) return hole;
  Box from = !has_a || (has_l && g[left] > g[above]) ? left : above;
  g[hole] = g[from];
  g.erase(from);
  return reverse_slide(g, from, in_region);
}

// Promotion on an r x c rectangle: remove 1, slide, decrement, put rc in the
// vacated cell.
inline Grid promote(Grid g, int rows, int cols) {
  auto inside = [&](Box b) { return b.row >= 1 && b.col >= 1 && b.row <= rows && b.col <= cols; };
  g.erase(Box{1, 1});
  const Box end = forward_slide(g, Box{1, 1}, inside);
  for (auto& [b, v] : g) v -= 1;
  g[end] = rows * cols;
  return g;
}

// Schensted insertion by linear scan.
inline std::vector<std::vector<int>> insert_word(const std::vector<int>& word) {
  std::vector<std::vector<int>> rows;
  for (int x : word) {
    for (std::size_t r = 0;; ++r) {
      if (r == rows.size()) {
        rows.push_back({x});
        break;
      }
      std::size_t j = 0;
      while (j < rows[r].size() && rows[r][j] <= x) ++j;
      if (j == rows[r].size()) {
        rows[r].push_back(x);
        break;
      }
      std::swap(rows[r][j], x);
    }
  }
  return rows;
}

// Number of SYT of shape outer/inner by removing outer corners recursively.
inline unsigned long long count_skew(std::vector<int> outer, const std::vector<int>& inner,
                                     std::map<std::vector<int>, unsigned long long>& memo) {
  auto in = [&](std::size_t r) { return r < inner.size() ? inner[r] : 0; };
  bool empty = true;
  for (std::size_t r = 0; r < outer.size(); ++r)
    if (outer[r] > in(r)) empty = false;
  if (empty) return 1;
  if (auto it = memo.find(outer); it != memo.end()) return it->second;
  unsigned long long total = 0;
  for (std::size_t r = 0; r < outer.size(); ++r) {
    const int below = r + 1 < outer.size() ? outer[r + 1] : 0;
    if (outer[r] > in(r) && outer[r] > below) {
      outer[r] -= 1;
      total += count_skew(outer, inner, memo);
      outer[r] += 1;
    }
  }
  memo[outer] = total;
  return total;
}

inline unsigned long long count_syt(const std::vector<int>& outer, const std::vector<int>& inner = {}) {
  std::map<std::vector<int>, unsigned long long> memo;
  return count_skew(outer, inner, memo);
}

// Every set of n cells of a rows x cols rectangle forming a chain with each
// cell strictly above and strictly right of the previous.
inline std::set<std::vector<Box>> brute_diagonals(int rows, int cols, int n) {
  std::vector<Box> cells;
  for (int r = 1; r <= rows; ++r)
    for (int c = 1; c <= cols; ++c) cells.push_back({r, c});
  std::set<std::vector<Box>> out;
  const std::size_t total = cells.size();
  std::vector<bool> pick(total, false);
  std::fill(pick.end() - n, pick.end(), true);
  do {
    std::vector<Box> chosen;
    for (std::size_t i = 0; i < total; ++i)
      if (pick[i]) chosen.push_back(cells[i]);
    std::sort(chosen.begin(), chosen.end(), [](Box a, Box b) { return a.col < b.col; });
    bool ok = true;
    for (std::size_t i = 1; i < chosen.size(); ++i)
      if (!(chosen[i].col > chosen[i - 1].col && chosen[i].row < chosen[i - 1].row)) ok = false;
    if (ok) out.insert(chosen);
  } while (std::next_permutation(pick.begin(), pick.end()));
  return out;
}

// F(q) = prod_{k<=N} (1 - q^k) / prod_h (1 - q^h) evaluated at a complex q
// slightly inside the unit circle, then rounded.
inline long long f_numeric(int rows, int cols, int r) {
  using C = std::complex<long double>;
  const int N = rows * cols;
  const long double pi = std::acos(-1.0L);
  const long double rho = 1.0L - 1e-9L;
  const C q = std::polar(rho, 2 * pi * r / N);
  C num = 1, den = 1;
  for (int k = 1; k <= N; ++k) num *= (C(1) - std::pow(q, k));
  for (int i = 1; i <= rows; ++i)
    for (int j = 1; j <= cols; ++j) den *= (C(1) - std::pow(q, (cols - j) + (rows - i) + 1));
  return std::llround(static_cast<double>((num / den).real()));
}

inline long double f_real(int rows, int cols, long double q) {
  long double num = 1, den = 1;
  for (int k = 1; k <= rows * cols; ++k) num *= (1 - std::pow(q, k));
  for (int i = 1; i <= rows; ++i)
    for (int j = 1; j <= cols; ++j) den *= (1 - std::pow(q, (cols - j) + (rows - i) + 1));
  return num / den;
}

// All SYT of an r x c rectangle as grids, by filling 1..N into the next
// available cell of some row.
inline void rect_syt(int rows, int cols, std::vector<int>& len, Grid& g, int next, std::vector<Grid>& out) {
  if (next > rows * cols) {
    out.push_back(g);
    return;
  }
  for (int r = 0; r < rows; ++r) {
    if (len[r] == cols || (r > 0 && len[r - 1] <= len[r])) continue;
    len[r] += 1;
    g[{r + 1, len[r]}] = next;
    rect_syt(rows, cols, len, g, next + 1, out);
    g.erase({r + 1, len[r]});
    len[r] -= 1;
  }
}

inline std::vector<Grid> all_rect_syt(int rows, int cols) {
  std::vector<int> len(static_cast<std::size_t>(rows), 0);
  Grid g;
  std::vector<Grid> out;
  rect_syt(rows, cols, len, g, 1, out);
  return out;
}

// Tableaux of the rectangle whose promotion order divides n.
inline std::set<Grid> minimal_orbit(int rows, int cols, int n) {
  std::set<Grid> out;
  for (const Grid& g : all_rect_syt(rows, cols)) {
    Grid cur = g;
    for (int i = 0; i < n; ++i) cur = promote(cur, rows, cols);
    if (cur == g) out.insert(g);
  }
  return out;
}

}  // namespace oracle
