#include "minorbit/orbits.hpp"

#include <algorithm>
#include <stdexcept>

#include "minorbit/errors.hpp"

namespace minorbit {

PartialTableau row_superstandard(const SkewShape& shape) {
  PartialTableau t{shape};
  int next = 1;
  for (const Box& b : shape.cells()) t.set(b, next++);
  return t;
}

ChoiceTableau default_choice(const Diagonal& d) { return row_superstandard(SkewShape(d.lambda_minus())); }

ChoiceTableau default_reverse_choice(const Diagonal& d, const Rectangle& rect) {
  return row_superstandard(SkewShape(rect.shape(), d.lambda_plus()));
}

namespace {

void require_permutation_fits(const Permutation& w, const Diagonal& d) {
  if (w.size() != d.size())
    throw std::invalid_argument("permutation of size " + std::to_string(w.size()) + " for a diagonal of " +
                                std::to_string(d.size()) + " boxes");
}

void require_choice(const ChoiceTableau& u, const SkewShape& shape) {
  if (!(u.region() == shape)) throw std::invalid_argument("choice tableau has the wrong shape");
  if (shape.size() > 0 && !is_standard_normalized(u)) throw std::invalid_argument("choice tableau is not standard");
}

// Cells of the choice tableau's region ordered by entry.
std::vector<Box> cells_by_entry(const ChoiceTableau& u) {
  std::vector<Box> cells = u.cells();
  std::sort(cells.begin(), cells.end(), [&](Box a, Box b) { return u.at(a) < u.at(b); });
  return cells;
}

std::vector<int> diagonal_values(const PartialTableau& t, const Diagonal& d) {
  std::vector<int> out;
  for (const Box& b : d.boxes()) out.push_back(t.at(b));
  return out;
}

bool unfilled_in_region(const PartialTableau& t, Box b) { return t.in_region(b) && !t.filled(b); }

}  // namespace

PartialTableau construct_plus(const Permutation& w, const Diagonal& d, const ChoiceTableau& u, Trace* trace) {
  require_permutation_fits(w, d);
  require_choice(u, SkewShape(d.lambda_minus()));
  const int n = d.size();
  PartialTableau t{SkewShape(d.lambda_plus())};
  for (int i = 1; i <= n; ++i) t.set(d.box(i), w(i));
  if (trace) trace->assign(1, t);

  auto order = cells_by_entry(u);
  std::reverse(order.begin(), order.end());
  for (const Box& b : order) {
    if (unfilled_in_region(t, {b.row, b.col + 1}) || unfilled_in_region(t, {b.row + 1, b.col}))
      throw std::invalid_argument("choice tableau does not encode a corner order");
    const auto before = diagonal_values(t, d);
    const Box end = forward_slide_in_place(t, b);
    if (auto i = d.index_of(end)) t.set(end, before[static_cast<std::size_t>(*i - 1)] + n);
    if (trace) trace->push_back(t);
  }
  if (!t.complete()) throw std::logic_error("forward construction left unfilled boxes");
  return t;
}

PartialTableau construct_plus(const Permutation& w, const Diagonal& d) {
  return construct_plus(w, d, default_choice(d));
}

PartialTableau construct_minus(const Permutation& w, const Diagonal& d, const Rectangle& rect, const ChoiceTableau& v,
                               Trace* trace) {
  require_permutation_fits(w, d);
  if (!contains(d.lambda_plus(), rect.shape())) throw std::invalid_argument("diagonal not inside the rectangle");
  require_choice(v, SkewShape(rect.shape(), d.lambda_plus()));
  const int n = d.size();
  const int top_shift = rect.cells() - n;
  PartialTableau t{SkewShape(rect.shape(), d.lambda_minus())};
  for (int i = 1; i <= n; ++i) t.set(d.box(i), w(i) + top_shift);
  if (trace) trace->assign(1, t);

  for (const Box& b : cells_by_entry(v)) {
    if (unfilled_in_region(t, {b.row, b.col - 1}) || unfilled_in_region(t, {b.row - 1, b.col}))
      throw std::invalid_argument("choice tableau does not encode a corner order");
    const auto before = diagonal_values(t, d);
    const Box end = reverse_slide_in_place(t, b);
    if (auto i = d.index_of(end)) t.set(end, before[static_cast<std::size_t>(*i - 1)] - n);
    if (trace) trace->push_back(t);
  }
  if (!t.complete()) throw std::logic_error("reverse construction left unfilled boxes");
  return t;
}

PartialTableau construct_minus(const Permutation& w, const Diagonal& d, const Rectangle& rect) {
  return construct_minus(w, d, rect, default_reverse_choice(d, rect));
}

namespace {

// Cells of lambda_plus from `plus`, the rest from `minus`. Checks the two
// agree on the rim boxes.
PartialTableau splice(const PartialTableau& plus, const PartialTableau& minus, const Diagonal& d,
                      const Rectangle& rect) {
  for (const Box& b : d.boxes())
    if (plus.at(b) != minus.at(b))
      throw std::logic_error("constructions disagree at diagonal box " + to_string(b) + ": " +
                             std::to_string(plus.at(b)) + " vs " + std::to_string(minus.at(b)));
  PartialTableau t{SkewShape(rect.shape())};
  for (const Box& b : t.cells()) t.set(b, d.lambda_plus().contains(b) ? plus.at(b) : minus.at(b));
  return t;
}

}  // namespace

PartialTableau construct_tw(const Permutation& w, const Rectangle& rect, const std::optional<Diagonal>& d,
                            const std::optional<ChoiceTableau>& choice) {
  if (rect.experimental())
    throw ExperimentalRequired("m < n: T_w is only available through the experimental insertion route");
  if (w.size() != rect.n()) throw std::invalid_argument("permutation size must equal n");
  const Diagonal diag = d ? *d : Diagonal::staircase(rect);
  if (diag.size() != rect.n() || !contains(diag.lambda_plus(), rect.shape()))
    throw std::invalid_argument("diagonal does not belong to " + to_string(rect));
  const PartialTableau plus = choice ? construct_plus(w, diag, *choice) : construct_plus(w, diag);
  PartialTableau t = splice(plus, construct_minus(w, diag, rect), diag, rect);
  if (!is_standard_normalized(t)) throw std::logic_error("T_w is not a standard tableau");
  return t;
}

PartialTableau construct_plus_corner_order(const Permutation& w, const Diagonal& d, const Rectangle& rect,
                                           std::span<const Box> corner_order) {
  require_permutation_fits(w, d);
  if (static_cast<int>(corner_order.size()) != rect.cells())
    throw std::invalid_argument("peeling order must list every box of the rectangle");
  const int n = d.size();
  std::vector<int> remaining(static_cast<std::size_t>(rect.rows()), rect.cols());
  auto row_len = [&](int r) { return r >= 1 && r <= rect.rows() ? remaining[static_cast<std::size_t>(r - 1)] : 0; };

  PartialTableau t{SkewShape(d.lambda_plus())};
  for (const Box& b : corner_order) {
    if (!rect.contains(b) || row_len(b.row) != b.col || row_len(b.row + 1) >= b.col)
      throw std::invalid_argument("box " + to_string(b) + " is not a corner of the remaining shape");
    if (auto i = d.index_of(b)) t.set(b, w(*i));
    if (d.lambda_minus().contains(b)) {
      const auto before = diagonal_values(t, d);
      const Box end = forward_slide_in_place(t, b);
      if (auto i = d.index_of(end)) t.set(end, before[static_cast<std::size_t>(*i - 1)] + n);
    }
    remaining[static_cast<std::size_t>(b.row - 1)] -= 1;
  }
  if (!t.complete()) throw std::logic_error("corner-order construction left unfilled boxes");
  return t;
}

PartialTableau construct_via_insertion(const Permutation& w, const Partition& lambda_plus, int m) {
  if (lambda_plus.num_rows() > w.size())
    throw std::invalid_argument("lambda_plus " + to_string(lambda_plus) + " has more than n rows");
  const PartialTableau p = insertion_tableau(aug_word(w, m));
  if (!contains(lambda_plus, p.region().outer()))
    throw std::invalid_argument("lambda_plus " + to_string(lambda_plus) + " is not inside the insertion tableau");
  PartialTableau out{SkewShape(lambda_plus)};
  for (const Box& b : out.cells()) out.set(b, p.at(b));
  return out;
}

Partition default_insertion_lambda_plus(const Rectangle& rect) {
  if (!rect.experimental()) return Diagonal::staircase(rect).lambda_plus();
  std::vector<int> rows;
  for (int r = 1; r <= rect.n(); ++r) rows.push_back(std::max(1, rect.m() + 1 - r));
  return Partition(rows);
}

Construction construct_tw_via_insertion(const Permutation& w, const Rectangle& rect,
                                        const std::optional<Partition>& lambda_plus) {
  if (rect.rows() != rect.n()) throw std::invalid_argument("the insertion route needs n = number of rows");
  if (w.size() != rect.n()) throw std::invalid_argument("permutation size must equal n");
  const Partition plus_shape = lambda_plus ? *lambda_plus : default_insertion_lambda_plus(rect);
  if (plus_shape.num_rows() != rect.n() || !contains(plus_shape, rect.shape()))
    throw std::invalid_argument("lambda_plus must have exactly n rows inside the rectangle");
  const Diagonal rim = Diagonal::row_rim(plus_shape);

  // A shape that does not fit the insertion tableau leaves T_w undefined for this w.
  auto restrict_to = [&](const Permutation& v, const Partition& shape) {
    try {
      return construct_via_insertion(v, shape, rect.m());
    } catch (const std::invalid_argument& e) {
      throw std::domain_error(std::string("insertion route: ") + e.what());
    }
  };
  const PartialTableau plus = restrict_to(w, plus_shape);
  const PartialTableau minus = dual_tableau(restrict_to(conjugate_by_longest(w), dual_shape(rim.lambda_minus(), rect)), rect);

  Construction out;
  out.lambda_plus = plus_shape;
  out.experimental = rect.experimental() || !rim.is_strict();
  try {
    out.tableau = splice(plus, minus, rim, rect);
  } catch (const std::logic_error& e) {
    throw std::domain_error(std::string("insertion route: ") + e.what());
  }
  if (!is_standard_normalized(out.tableau)) throw std::domain_error("insertion route produced a non-standard tableau");
  out.promotion_order = promotion_order(out.tableau);
  return out;
}

BoxSequenceRun box_sequence(const LetterSequence& sigma, const Diagonal& d, const ChoiceTableau& u, std::size_t count,
                            bool keep_trace) {
  require_choice(u, SkewShape(d.lambda_minus()));
  const int n = d.size();
  PartialTableau cur{SkewShape(d.lambda_plus())};
  for (const Box& b : u.cells()) cur.set(b, u.at(b));

  BoxSequenceRun run;
  run.delta.assign(static_cast<std::size_t>(n), 0);
  run.sigma_prefix = sigma.prefix(count);
  run.boxes.reserve(count);
  if (keep_trace) run.trace.push_back(cur);
  for (int letter : run.sigma_prefix) {
    if (letter < 1 || letter > n) throw std::invalid_argument("sequence letter outside 1..n");
    const Box start = d.box(letter);
    if (cur.filled(start)) throw std::logic_error("diagonal box " + to_string(start) + " occupied at slide start");
    const Box end = reverse_slide_in_place(cur, start);
    run.boxes.push_back(end);
    if (end != start) {
      run.delta[static_cast<std::size_t>(letter - 1)] += 1;
      cur.clear(start);
    }
    if (keep_trace) run.trace.push_back(cur);
  }
  run.stabilized = cur.filled_count() == 0;
  return run;
}

std::size_t stabilization_length(const LetterSequence& sigma, const Diagonal& d) {
  return sigma.head().size() + sigma.cycle().size() * static_cast<std::size_t>(d.lambda_minus().size() + 1);
}

PartialTableau tableau_from_box_sequence(const BoxSequenceRun& run, const Diagonal& d) {
  PartialTableau t{SkewShape(d.lambda_plus())};
  for (std::size_t k = 0; k < run.boxes.size(); ++k)
    if (!t.filled(run.boxes[k])) t.set(run.boxes[k], static_cast<int>(k) + 1);
  if (!t.complete()) throw std::invalid_argument("box sequence too short to determine the tableau");
  return t;
}

std::vector<int> column_sequence(std::span<const int> descents_desc, int n, std::size_t count) {
  std::vector<int> out;
  std::size_t j = 0;
  while (out.size() < count) {
    const int d = j < descents_desc.size() ? descents_desc[j] : 0;
    for (int c = 1; c <= n - d && out.size() < count; ++c) out.push_back(c);
    ++j;
  }
  return out;
}

std::vector<int> delta_closed_form(const Permutation& w, const Partition& lambda_plus, int n) {
  if (w.size() != n) throw std::invalid_argument("permutation size must equal n");
  if (lambda_plus.num_cols() != n) throw std::invalid_argument("closed form needs lambda_plus with n columns");
  const auto d = descents(w);
  std::vector<int> out;
  for (int i = 1; i <= n; ++i) {
    const auto at_least = [&](int bound) { return static_cast<int>(std::count_if(d.begin(), d.end(), [&](int x) { return x >= bound; })); };
    out.push_back(lambda_plus.column_length(i) - at_least(i) + at_least(n + 1 - i) - 1);
  }
  return out;
}

bool compatible(std::span<const Box> a, const Partition& lambda_plus_a, std::span<const Box> b,
                const Partition& lambda_plus_b) {
  const std::size_t len = std::min(a.size(), b.size());
  for (std::size_t k = 0; k < len; ++k)
    if (lambda_plus_a.contains(b[k]) && lambda_plus_b.contains(a[k]) && a[k] != b[k]) return false;
  return true;
}

Permutation invert(const PartialTableau& t, const std::optional<Diagonal>& d) {
  const Rectangle rect = rectangle_of(t);
  if (!is_standard_normalized(t)) throw std::invalid_argument("tableau is not standard with entries 1..mn");
  const Diagonal diag = d ? *d : Diagonal::staircase(rect);
  const int n = rect.n();
  std::vector<int> values;
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int i = 1; i <= n; ++i) {
    int r = t.at(diag.box(i)) % n;
    if (r == 0) r = n;
    if (seen[static_cast<std::size_t>(r)])
      throw NotInMinimalOrbit("not in O_n: diagonal residues mod " + std::to_string(n) + " collide");
    seen[static_cast<std::size_t>(r)] = true;
    values.push_back(r);
  }
  Permutation w(std::move(values));
  if (construct_tw(w, rect, diag) != t) throw NotInMinimalOrbit("not in O_n: T_w differs from the input for w = " + to_string(w));
  return w;
}

}  // namespace minorbit
