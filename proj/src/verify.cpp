#include "minorbit/verify.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "minorbit/errors.hpp"

namespace minorbit {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("64-bit overflow");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("64-bit overflow in polynomial arithmetic");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("64-bit overflow in polynomial arithmetic");
  return out;
}

// prime -> exponent in prod(num) / prod(den)
std::map<int, int> factor_ratio(std::span<const int> num, std::span<const int> den) {
  std::map<int, int> exps;
  auto add = [&](int x, int sign) {
    for (int p = 2; x > 1; ++p) {
      while (x % p == 0) {
        exps[p] += sign;
        x /= p;
      }
    }
  };
  for (int x : num) add(x, 1);
  for (int x : den) add(x, -1);
  return exps;
}

}  // namespace

// --- enumeration -------------------------------------------------------

std::vector<int> hook_lengths(const Partition& shape) {
  std::vector<int> out;
  for (const Box& b : shape.cells())
    out.push_back(shape.row(b.row) - b.col + shape.column_length(b.col) - b.row + 1);
  return out;
}

std::uint64_t syt_count_hooks(const Partition& shape) {
  std::vector<int> num(static_cast<std::size_t>(shape.size()));
  std::iota(num.begin(), num.end(), 1);
  const auto exps = factor_ratio(num, hook_lengths(shape));
  std::uint64_t out = 1;
  for (auto [p, e] : exps) {
    if (e < 0) throw std::logic_error("hook product does not divide N!");
    for (int i = 0; i < e; ++i) out = checked_mul(out, static_cast<std::uint64_t>(p));
  }
  return out;
}

namespace {

struct SytWalker {
  const SkewShape& region;
  const std::function<void(const PartialTableau&)>& fn;
  std::uint64_t cap;
  bool check_cap;
  PartialTableau t;
  std::vector<int> filled_to;  // last filled column per row, starting at the inner boundary
  std::uint64_t produced = 0;
  int total;

  void walk(int next) {
    if (next > total) {
      if (check_cap && produced >= cap) throw CapExceeded("more than " + std::to_string(cap) + " tableaux");
      ++produced;
      fn(t);
      return;
    }
    const int rows = region.outer().num_rows();
    for (int r = 1; r <= rows; ++r) {
      const auto ri = static_cast<std::size_t>(r - 1);
      const int c = filled_to[ri] + 1;
      if (c > region.outer().row(r)) continue;
      if (r > 1 && filled_to[ri - 1] < c) continue;
      t.set({r, c}, next);
      filled_to[ri] = c;
      walk(next + 1);
      filled_to[ri] = c - 1;
      t.clear({r, c});
    }
  }
};

}  // namespace

void for_each_syt(const SkewShape& region, const std::function<void(const PartialTableau&)>& fn,
                  const EnumerationLimits& limits) {
  if (region.size() > limits.max_cells)
    throw CapExceeded(std::to_string(region.size()) + " cells exceeds the cap of " + std::to_string(limits.max_cells));
  bool check_cap = true;
  if (region.inner().empty()) {
    std::uint64_t count = 0;
    try {
      count = syt_count_hooks(region.outer());
    } catch (const std::overflow_error&) {
      throw CapExceeded("SYT count exceeds 64 bits");
    }
    if (count > limits.max_tableaux)
      throw CapExceeded(std::to_string(count) + " tableaux exceeds the cap of " + std::to_string(limits.max_tableaux));
    check_cap = false;
  }
  SytWalker walker{region, fn, limits.max_tableaux, check_cap, PartialTableau{region}, {}, 0, region.size()};
  for (int r = 1; r <= region.outer().num_rows(); ++r) walker.filled_to.push_back(region.inner().row(r));
  walker.walk(1);
}

void for_each_syt(const Partition& shape, const std::function<void(const PartialTableau&)>& fn,
                  const EnumerationLimits& limits) {
  for_each_syt(SkewShape(shape), fn, limits);
}

std::vector<PartialTableau> enumerate_syt(const SkewShape& region, const EnumerationLimits& limits) {
  std::vector<PartialTableau> out;
  for_each_syt(region, [&](const PartialTableau& t) { out.push_back(t); }, limits);
  return out;
}

std::vector<PartialTableau> enumerate_syt(const Partition& shape, const EnumerationLimits& limits) {
  return enumerate_syt(SkewShape(shape), limits);
}

std::vector<PartialTableau> sample_syt(const SkewShape& region, std::size_t k, std::mt19937_64& rng,
                                       const EnumerationLimits& limits) {
  std::vector<PartialTableau> out;
  std::uint64_t seen = 0;
  for_each_syt(
      region,
      [&](const PartialTableau& t) {
        ++seen;
        if (out.size() < k) {
          out.push_back(t);
        } else {
          std::uniform_int_distribution<std::uint64_t> pick(0, seen - 1);
          const auto j = pick(rng);
          if (j < k) out[j] = t;
        }
      },
      limits);
  return out;
}

// --- orbits ---------------------------------------------------------------

std::uint64_t OrbitTable::fixed_count(int r) const {
  std::uint64_t out = 0;
  for (auto [order, count] : order_histogram)
    if (r % order == 0) out += count;
  return out;
}

OrbitTable orbit_table(const Rectangle& rect, const EnumerationLimits& limits) {
  OrbitTable table;
  table.rect = rect;
  const int n = std::min(rect.rows(), rect.cols());
  const int guard = std::max(rect.cells(), 1) * std::max(rect.cells(), 1);
  PartialTableau cur;
  for_each_syt(
      rect.shape(),
      [&](const PartialTableau& t) {
        cur = t;
        int order = 0;
        bool smallest = true;
        do {
          promote_in_place(cur);
          ++order;
          if (order > guard) throw std::logic_error("promotion orbit longer than (mn)^2");
          if (std::lexicographical_compare(cur.raw().begin(), cur.raw().end(), t.raw().begin(), t.raw().end()))
            smallest = false;
        } while (!std::equal(cur.raw().begin(), cur.raw().end(), t.raw().begin()));
        ++table.total;
        ++table.order_histogram[order];
        if (smallest) table.orbits.push_back({t, order});
        if (n % order == 0) table.minimal.push_back(t);
      },
      limits);
  return table;
}

// --- q-polynomials ------------------------------------------------------

namespace {

void trim(QPolynomial& p) {
  while (p.coeffs.size() > 1 && p.coeffs.back() == 0) p.coeffs.pop_back();
  if (p.coeffs.empty()) p.coeffs.push_back(0);
}

// quotient and remainder of a / monic
std::pair<QPolynomial, QPolynomial> long_divide(const QPolynomial& a, const QPolynomial& monic) {
  const int dm = monic.degree();
  if (dm < 0 || monic.coeffs.back() != 1) throw std::invalid_argument("divisor must be monic");
  QPolynomial rem = a;
  trim(rem);
  if (rem.degree() < dm) return {QPolynomial{{0}}, rem};
  QPolynomial quot{std::vector<std::int64_t>(static_cast<std::size_t>(rem.degree() - dm + 1), 0)};
  for (int i = rem.degree() - dm; i >= 0; --i) {
    const std::int64_t c = rem.coeffs[static_cast<std::size_t>(i + dm)];
    quot.coeffs[static_cast<std::size_t>(i)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= dm; ++j) {
      auto& slot = rem.coeffs[static_cast<std::size_t>(i + j)];
      slot = checked_add(slot, -checked_mul(c, monic.coeffs[static_cast<std::size_t>(j)]));
    }
  }
  rem.coeffs.resize(static_cast<std::size_t>(std::max(dm, 1)));
  trim(rem);
  trim(quot);
  return {quot, rem};
}

bool is_zero(const QPolynomial& p) {
  return std::all_of(p.coeffs.begin(), p.coeffs.end(), [](std::int64_t c) { return c == 0; });
}

}  // namespace

std::int64_t QPolynomial::at_one() const {
  std::int64_t out = 0;
  for (auto c : coeffs) out = checked_add(out, c);
  return out;
}

std::string to_string(const QPolynomial& p) {
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const std::int64_t c = p.coeffs[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    const std::int64_t a = c < 0 ? -c : c;
    if (a != 1 || i == 0) out += std::to_string(a);
    if (i >= 1) out += "q";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

QPolynomial q_integer(int k) {
  if (k < 1) throw std::invalid_argument("q-integer needs k >= 1");
  return QPolynomial{std::vector<std::int64_t>(static_cast<std::size_t>(k), 1)};
}

QPolynomial multiply(const QPolynomial& a, const QPolynomial& b) {
  QPolynomial out{std::vector<std::int64_t>(a.coeffs.size() + b.coeffs.size() - 1, 0)};
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j)
      out.coeffs[i + j] = checked_add(out.coeffs[i + j], checked_mul(a.coeffs[i], b.coeffs[j]));
  }
  trim(out);
  return out;
}

std::optional<QPolynomial> divide_exact(const QPolynomial& a, const QPolynomial& monic) {
  auto [quot, rem] = long_divide(a, monic);
  if (!is_zero(rem)) return std::nullopt;
  return quot;
}

QPolynomial remainder(const QPolynomial& a, const QPolynomial& monic) { return long_divide(a, monic).second; }

QPolynomial cyclotomic(int e) {
  if (e < 1) throw std::invalid_argument("cyclotomic index must be positive");
  QPolynomial out{std::vector<std::int64_t>(static_cast<std::size_t>(e) + 1, 0)};
  out.coeffs.front() = -1;
  out.coeffs.back() = 1;
  for (int d : divisors(e)) {
    if (d == e) continue;
    auto q = divide_exact(out, cyclotomic(d));
    if (!q) throw std::logic_error("cyclotomic division left a remainder");
    out = *q;
  }
  return out;
}

QPolynomial f_polynomial(const Rectangle& rect) {
  std::multiset<int> pending;
  for (int h : hook_lengths(rect.shape()))
    if (h > 1) pending.insert(h);
  QPolynomial f{{1}};
  for (int k = 2; k <= rect.cells(); ++k) {
    f = multiply(f, q_integer(k));
    for (auto it = pending.begin(); it != pending.end();) {
      if (auto q = divide_exact(f, q_integer(*it))) {
        f = std::move(*q);
        it = pending.erase(it);
      } else {
        ++it;
      }
    }
  }
  if (!pending.empty()) throw std::logic_error("q-hook division left a remainder");
  return f;
}

std::vector<int> divisors(int x) {
  std::vector<int> out;
  for (int d = 1; d <= x; ++d)
    if (x % d == 0) out.push_back(d);
  return out;
}

namespace {

int root_order(const Rectangle& rect, int r) {
  const int mn = rect.cells();
  if (r < 1 || r > mn) throw std::invalid_argument("r must lie in 1..mn");
  return mn / std::gcd(r, mn);
}

}  // namespace

std::int64_t f_at_root_cyclotomic(const Rectangle& rect, int r) {
  const int e = root_order(rect, r);
  const QPolynomial rem = remainder(f_polynomial(rect), cyclotomic(e));
  if (rem.degree() > 0) throw std::logic_error("F mod cyclotomic(" + std::to_string(e) + ") is not constant");
  return rem.coeffs.front();
}

std::int64_t f_at_root_pairing(const Rectangle& rect, int r) {
  const int e = root_order(rect, r);
  std::vector<int> num_mult, den_mult;
  std::vector<int> num_res, den_res;
  for (int k = 1; k <= rect.cells(); ++k) (k % e == 0 ? num_mult : num_res).push_back(k % e == 0 ? k : k % e);
  for (int h : hook_lengths(rect.shape())) (h % e == 0 ? den_mult : den_res).push_back(h % e == 0 ? h : h % e);
  if (num_mult.size() > den_mult.size()) return 0;
  if (num_mult.size() < den_mult.size()) throw std::logic_error("F has a pole at a root of unity");
  std::sort(num_res.begin(), num_res.end());
  std::sort(den_res.begin(), den_res.end());
  if (num_res != den_res) throw std::logic_error("q-integer residues mod " + std::to_string(e) + " do not pair");
  std::int64_t out = 1;
  for (auto [p, exp] : factor_ratio(num_mult, den_mult)) {
    if (exp < 0) throw std::logic_error("F(zeta^r) is not an integer");
    for (int i = 0; i < exp; ++i) out = checked_mul(out, static_cast<std::int64_t>(p));
  }
  return out;
}

std::int64_t f_at_root(const Rectangle& rect, int r) {
  const std::int64_t a = f_at_root_cyclotomic(rect, r);
  const std::int64_t b = f_at_root_pairing(rect, r);
  if (a != b)
    throw std::logic_error("F(zeta^" + std::to_string(r) + "): cyclotomic reduction gives " + std::to_string(a) +
                           ", residue pairing gives " + std::to_string(b));
  return a;
}

std::vector<CspRow> csp_table(const Rectangle& rect, const OrbitTable& table) {
  std::vector<CspRow> rows;
  for (int r : divisors(rect.cells())) rows.push_back({r, table.fixed_count(r), f_at_root(rect, r)});
  return rows;
}

// --- suites ---------------------------------------------------------------

std::string to_string(Suite s) {
  switch (s) {
    case Suite::bijection: return "bijection";
    case Suite::independence: return "independence";
    case Suite::csp: return "csp";
    case Suite::haiman: return "haiman";
    case Suite::propositions: return "propositions";
    case Suite::all: return "all";
  }
  return "?";
}

std::optional<Suite> parse_suite(std::string_view text) {
  for (Suite s : {Suite::bijection, Suite::independence, Suite::csp, Suite::haiman, Suite::propositions, Suite::all})
    if (to_string(s) == text) return s;
  return std::nullopt;
}

bool Report::passed() const {
  return std::all_of(cases.begin(), cases.end(), [](const Case& c) { return c.passed; });
}

namespace {

std::string rows_text(const PartialTableau& t) {
  std::string out = "[";
  const auto rows = t.to_rows();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r) out += ",";
    out += "[";
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c) out += ",";
      out += rows[r][c] == PartialTableau::kUnfilled ? "_" : std::to_string(rows[r][c]);
    }
    out += "]";
  }
  return out + "]";
}

std::string diagonal_text(const Diagonal& d) {
  return to_string(d.lambda_plus()) + "/" + (d.lambda_minus().empty() ? "0" : to_string(d.lambda_minus()));
}

Case fail(Case c, std::string counterexample) {
  c.passed = false;
  c.counterexample = std::move(counterexample);
  return c;
}

// Runs body, turning an escaping exception into a failed case.
template <typename F>
Case guarded(std::string name, F body) {
  try {
    return body(Case{name, true, {}, {}});
  } catch (const std::exception& e) {
    return fail(Case{name, true, {}, {}}, std::string("exception: ") + e.what());
  }
}

int total_count(const Rectangle& rect) { return static_cast<int>(all_permutations(rect.n()).size()); }

std::vector<int> descents_desc(const Permutation& w) {
  auto d = descents(w);
  std::reverse(d.begin(), d.end());
  return d;
}

std::vector<Box> random_peeling_order(const Rectangle& rect, std::mt19937_64& rng) {
  std::vector<int> remaining(static_cast<std::size_t>(rect.rows()), rect.cols());
  std::vector<Box> order;
  while (static_cast<int>(order.size()) < rect.cells()) {
    std::vector<Box> corners;
    for (int r = 1; r <= rect.rows(); ++r) {
      const int len = remaining[static_cast<std::size_t>(r - 1)];
      const int below = r < rect.rows() ? remaining[static_cast<std::size_t>(r)] : 0;
      if (len > 0 && below < len) corners.push_back({r, len});
    }
    std::uniform_int_distribution<std::size_t> pick(0, corners.size() - 1);
    const Box b = corners[pick(rng)];
    order.push_back(b);
    remaining[static_cast<std::size_t>(b.row - 1)] -= 1;
  }
  return order;
}

}  // namespace

Case check_enumeration_count(const Rectangle& rect, const OrbitTable& table) {
  return guarded("enumeration count = hook formula", [&](Case c) {
    const auto hooks = syt_count_hooks(rect.shape());
    c.detail = std::to_string(table.total) + " tableaux";
    if (table.total != hooks)
      return fail(c, "enumerated " + std::to_string(table.total) + ", hook formula " + std::to_string(hooks));
    return c;
  });
}

Case check_haiman(const OrbitTable& table) {
  return guarded("promotion^(mn) = identity", [&](Case c) {
    const int mn = table.rect.cells();
    for (auto [order, count] : table.order_histogram)
      if (mn % order != 0) return fail(c, std::to_string(count) + " tableaux of promotion order " + std::to_string(order));
    c.detail = std::to_string(table.orbits.size()) + " orbits";
    return c;
  });
}

Case check_small_orbits_empty(const OrbitTable& table) {
  return guarded("O_r empty for r < n", [&](Case c) {
    const int n = std::min(table.rect.rows(), table.rect.cols());
    for (int r = 1; r < n; ++r)
      if (table.fixed_count(r) != 0) return fail(c, "|O_" + std::to_string(r) + "| = " + std::to_string(table.fixed_count(r)));
    return c;
  });
}

Case check_bijection(const OrbitTable& table) {
  return guarded("image of w -> T_w equals O_n", [&](Case c) {
    const Rectangle& rect = table.rect;
    std::vector<PartialTableau> image;
    for (const auto& w : all_permutations(rect.n())) image.push_back(construct_tw(w, rect));
    std::sort(image.begin(), image.end());
    if (std::adjacent_find(image.begin(), image.end()) != image.end()) return fail(c, "two permutations give the same T_w");
    std::vector<PartialTableau> orbit = table.minimal;
    std::sort(orbit.begin(), orbit.end());
    if (image != orbit)
      return fail(c, std::to_string(image.size()) + " constructed vs " + std::to_string(orbit.size()) + " in O_n");
    if (static_cast<int>(orbit.size()) != total_count(rect))
      return fail(c, "|O_n| = " + std::to_string(orbit.size()) + " != n!");
    c.detail = "|O_n| = " + std::to_string(orbit.size());
    return c;
  });
}

Case check_invert_round_trip(const OrbitTable& table) {
  return guarded("invert is a two-sided inverse", [&](Case c) {
    const Rectangle& rect = table.rect;
    for (const auto& w : all_permutations(rect.n()))
      if (invert(construct_tw(w, rect)) != w) return fail(c, "invert(T_w) != w for w = " + to_string(w));
    for (const auto& t : table.minimal)
      if (construct_tw(invert(t), rect) != t) return fail(c, "T_{invert(T)} != T for T = " + rows_text(t));
    return c;
  });
}

Case check_equivariance(const Rectangle& rect) {
  return guarded("promotion(T_w) = T_{w c}", [&](Case c) {
    const Permutation cyc = cycle_c(rect.n());
    for (const auto& w : all_permutations(rect.n())) {
      const PartialTableau t = construct_tw(w, rect);
      if (promotion(t) != construct_tw(right_multiply(w, cyc), rect)) return fail(c, "w = " + to_string(w));
      if (rect.n() % promotion_order(t) != 0) return fail(c, "promotion order of T_w does not divide n, w = " + to_string(w));
    }
    return c;
  });
}

Case check_residues_distinct(const Rectangle& rect) {
  return guarded("diagonal residues recover w", [&](Case c) {
    const int n = rect.n();
    std::set<std::vector<int>> seen;
    for (const auto& d : enumerate_diagonals(rect)) {
      seen.clear();
      for (const auto& w : all_permutations(n)) {
        const PartialTableau t = construct_tw(w, rect);
        std::vector<int> res;
        for (int i = 1; i <= n; ++i) {
          const int v = ((t.at(d.box(i)) - 1) % n) + 1;
          res.push_back(v);
          if (v != w(i)) return fail(c, "w = " + to_string(w) + ", diagonal " + diagonal_text(d) + ", i = " + std::to_string(i));
        }
        if (!seen.insert(res).second) return fail(c, "repeated residue vector, diagonal " + diagonal_text(d));
      }
    }
    return c;
  });
}

Case check_csp(const Rectangle& rect, const OrbitTable& table) {
  return guarded("|O_r| = F(zeta^r) for r | mn", [&](Case c) {
    const QPolynomial f = f_polynomial(rect);
    if (f.at_one() != static_cast<std::int64_t>(table.total))
      return fail(c, "F(1) = " + std::to_string(f.at_one()) + " but " + std::to_string(table.total) + " tableaux");
    for (const auto& row : csp_table(rect, table))
      if (!row.matches())
        return fail(c, "r = " + std::to_string(row.r) + ": |O_r| = " + std::to_string(row.orbit_count) +
                           ", F = " + std::to_string(row.f_value));
    return c;
  });
}

Case check_choice_independence(const Rectangle& rect, std::span<const Diagonal> diagonals, bool all_choices,
                               std::size_t samples, std::mt19937_64& rng, const EnumerationLimits& limits) {
  return guarded("construction independent of choice tableau", [&](Case c) {
    std::size_t checked = 0;
    for (const auto& d : diagonals) {
      const SkewShape minus_region(d.lambda_minus());
      const SkewShape reverse_region(rect.shape(), d.lambda_plus());
      auto forward = all_choices ? enumerate_syt(minus_region, limits) : sample_syt(minus_region, samples, rng, limits);
      auto reverse = all_choices ? enumerate_syt(reverse_region, limits) : sample_syt(reverse_region, samples, rng, limits);
      for (const auto& w : all_permutations(rect.n())) {
        const PartialTableau plus = construct_plus(w, d);
        for (const auto& u : forward) {
          ++checked;
          if (construct_plus(w, d, u) != plus)
            return fail(c, "w = " + to_string(w) + ", diagonal " + diagonal_text(d) + ", U = " + rows_text(u));
        }
        const PartialTableau minus = construct_minus(w, d, rect);
        for (const auto& v : reverse) {
          ++checked;
          if (construct_minus(w, d, rect, v) != minus)
            return fail(c, "reverse, w = " + to_string(w) + ", diagonal " + diagonal_text(d) + ", V = " + rows_text(v));
        }
      }
    }
    c.detail = std::to_string(checked) + " constructions";
    return c;
  });
}

Case check_splice_agreement(const Rectangle& rect, std::span<const Diagonal> diagonals) {
  return guarded("halves agree; T_w independent of diagonal", [&](Case c) {
    for (const auto& w : all_permutations(rect.n())) {
      const PartialTableau ref = construct_tw(w, rect);
      for (const auto& d : diagonals)
        if (construct_tw(w, rect, d) != ref) return fail(c, "w = " + to_string(w) + ", diagonal " + diagonal_text(d));
    }
    return c;
  });
}

Case check_forward_reverse_duality(const Rectangle& rect, std::span<const Diagonal> diagonals) {
  return guarded("reverse construction = dual of forward for w0 w w0", [&](Case c) {
    for (const auto& d : diagonals) {
      const Diagonal dual = dual_diagonal(d, rect);
      for (const auto& w : all_permutations(rect.n()))
        if (construct_minus(w, d, rect) != dual_tableau(construct_plus(conjugate_by_longest(w), dual), rect))
          return fail(c, "w = " + to_string(w) + ", diagonal " + diagonal_text(d));
    }
    return c;
  });
}

Case check_corner_orders(const Rectangle& rect, std::span<const Diagonal> diagonals, std::size_t orders,
                         std::mt19937_64& rng) {
  return guarded("corner-peeling construction = forward construction", [&](Case c) {
    for (std::size_t k = 0; k < orders; ++k) {
      const auto order = random_peeling_order(rect, rng);
      for (const auto& d : diagonals)
        for (const auto& w : all_permutations(rect.n()))
          if (construct_plus_corner_order(w, d, rect, order) != construct_plus(w, d))
            return fail(c, "w = " + to_string(w) + ", diagonal " + diagonal_text(d));
    }
    return c;
  });
}

Case check_box_sequence_reconstruction(const Rectangle& rect, std::span<const Diagonal> diagonals) {
  return guarded("forward construction read off the box sequence of w*", [&](Case c) {
    const int n = rect.n();
    for (const auto& d : diagonals) {
      for (const auto& w : all_permutations(n)) {
        const LetterSequence sigma = w_star(w);
        const auto run = box_sequence(sigma, d, default_choice(d), stabilization_length(sigma, d));
        if (!run.stabilized) return fail(c, "no stabilization, w = " + to_string(w) + ", diagonal " + diagonal_text(d));
        const PartialTableau plus = construct_plus(w, d);
        if (tableau_from_box_sequence(run, d) != plus)
          return fail(c, "w = " + to_string(w) + ", diagonal " + diagonal_text(d));
        for (int i = 1; i <= n; ++i)
          if (plus.at(d.box(i)) != w(i) + n * run.delta[static_cast<std::size_t>(i - 1)])
            return fail(c, "T[b_i] != w(i) + n delta(i), w = " + to_string(w) + ", i = " + std::to_string(i));
      }
    }
    return c;
  });
}

Case check_column_sequence(const Rectangle& rect, std::span<const Diagonal> diagonals, std::size_t choice_cap,
                           std::mt19937_64& rng) {
  return guarded("descent-sequence boxes land in the column sequence", [&](Case c) {
    if (rect.cols() != rect.n()) throw std::invalid_argument("needs n = number of columns");
    const int n = rect.n();
    for (const auto& d : diagonals) {
      const auto choices = sample_syt(SkewShape(d.lambda_minus()), choice_cap, rng);
      for (const auto& w : all_permutations(n)) {
        const LetterSequence sigma = descent_sequence(w);
        const std::size_t len = stabilization_length(sigma, d);
        const auto cols = column_sequence(descents_desc(w), n, len);
        std::optional<std::vector<Box>> first;
        for (const auto& u : choices) {
          const auto run = box_sequence(sigma, d, u, len);
          for (std::size_t k = 0; k < len; ++k)
            if (run.boxes[k].col != cols[k])
              return fail(c, "w = " + to_string(w) + ", diagonal " + diagonal_text(d) + ", k = " + std::to_string(k + 1));
          if (!first) first = run.boxes;
          else if (*first != run.boxes)
            return fail(c, "box sequence depends on U, w = " + to_string(w) + ", diagonal " + diagonal_text(d));
        }
      }
    }
    return c;
  });
}

Case check_delta_closed_form(const Rectangle& rect, std::span<const Diagonal> diagonals) {
  return guarded("delta closed form", [&](Case c) {
    if (rect.cols() != rect.n()) throw std::invalid_argument("needs n = number of columns");
    const int n = rect.n();
    for (const auto& d : diagonals) {
      for (const auto& w : all_permutations(n)) {
        const LetterSequence sigma = descent_sequence(w);
        const auto run = box_sequence(sigma, d, default_choice(d), stabilization_length(sigma, d));
        if (!run.stabilized) return fail(c, "no stabilization, w = " + to_string(w));
        if (run.delta != delta_closed_form(w, d.lambda_plus(), n))
          return fail(c, "w = " + to_string(w) + ", diagonal " + diagonal_text(d));
      }
    }
    return c;
  });
}

Case check_compatibility(const Rectangle& rect, std::span<const Diagonal> diagonals) {
  return guarded("box sequences compatible across diagonals", [&](Case c) {
    const int n = rect.n();
    for (const auto& w : all_permutations(n)) {
      const LetterSequence sigma = descent_sequence(w);
      std::size_t len = 0;
      for (const auto& d : diagonals) len = std::max(len, stabilization_length(sigma, d));
      std::vector<std::vector<Box>> runs;
      for (const auto& d : diagonals) runs.push_back(box_sequence(sigma, d, default_choice(d), len).boxes);
      for (std::size_t a = 0; a < diagonals.size(); ++a)
        for (std::size_t b = a + 1; b < diagonals.size(); ++b)
          if (!compatible(runs[a], diagonals[a].lambda_plus(), runs[b], diagonals[b].lambda_plus()))
            return fail(c, "w = " + to_string(w) + ", diagonals " + diagonal_text(diagonals[a]) + " and " +
                               diagonal_text(diagonals[b]));
    }
    return c;
  });
}

Case check_knuth_equivariance(int n, std::size_t instances, std::mt19937_64& rng) {
  return guarded("box sequences commute with strict Knuth moves", [&](Case c) {
    if (n < 3) {
      c.detail = "no strict Knuth moves for n < 3";
      return c;
    }
    struct Setting {
      Diagonal d;
      std::vector<PartialTableau> choices;
    };
    std::vector<Setting> settings;
    for (int m = n; m <= n + 2; ++m)
      for (auto& d : enumerate_diagonals(Rectangle(n, m)))
        settings.push_back({d, sample_syt(SkewShape(d.lambda_minus()), 6, rng)});

    std::uniform_int_distribution<std::size_t> pick_setting(0, settings.size() - 1);
    std::uniform_int_distribution<int> pick_letter(1, n);
    std::uniform_int_distribution<int> pick_head(0, 2 * n);
    std::size_t done = 0;
    std::size_t attempts = 0;
    while (done < instances) {
      if (++attempts > 200 * instances) throw std::logic_error("could not draw enough instances with a defined move");
      std::vector<int> head(static_cast<std::size_t>(pick_head(rng)));
      for (int& x : head) x = pick_letter(rng);
      std::vector<int> cycle(static_cast<std::size_t>(n));
      std::iota(cycle.begin(), cycle.end(), 1);
      std::shuffle(cycle.begin(), cycle.end(), rng);
      const LetterSequence sigma(head, cycle);

      const std::size_t window = head.size() + static_cast<std::size_t>(n);
      std::uniform_int_distribution<int> pick_k(1, static_cast<int>(window) - 2);
      const int k = pick_k(rng);
      const auto prefix = sigma.prefix(window);
      auto moved = strict_knuth(std::span<const int>(prefix), k);
      if (!moved) continue;
      const LetterSequence hat = sigma.with_prefix(*moved);

      const Setting& s = settings[pick_setting(rng)];
      std::uniform_int_distribution<std::size_t> pick_u(0, s.choices.size() - 1);
      const PartialTableau& u = s.choices[pick_u(rng)];
      const std::size_t len =
          std::max(stabilization_length(sigma, s.d), stabilization_length(hat, s.d)) + window;
      const auto a = box_sequence(sigma, s.d, u, len);
      const auto b = box_sequence(hat, s.d, u, len);
      const auto image = strict_knuth(std::span<const Box>(a.boxes), k);
      const std::string where = "sigma = " + std::to_string(head.size()) + "-term head, k = " + std::to_string(k) +
                                ", diagonal " + diagonal_text(s.d) + ", U = " + rows_text(u);
      if (!image) return fail(c, "kappa_k undefined on the box sequence: " + where);
      if (*image != b.boxes) return fail(c, "box sequence mismatch: " + where);
      if (a.delta != b.delta) return fail(c, "delta changed: " + where);
      ++done;
    }
    c.detail = std::to_string(done) + " instances";
    return c;
  });
}

Case check_insertion_route(const Rectangle& rect) {
  return guarded("insertion route", [&](Case c) {
    if (rect.rows() != rect.n()) throw std::invalid_argument("needs n = number of rows");
    const auto perms = all_permutations(rect.n());
    if (rect.experimental()) {
      // Nothing is proved for m < n; record what the route produces.
      std::map<int, int> orders;
      int undefined = 0;
      for (const auto& w : perms) {
        try {
          ++orders[construct_tw_via_insertion(w, rect).promotion_order];
        } catch (const std::invalid_argument&) {
          ++undefined;
        } catch (const std::domain_error&) {
          ++undefined;
        }
      }
      std::string hist;
      for (auto [o, k] : orders) hist += (hist.empty() ? "" : ", ") + std::to_string(k) + " of order " + std::to_string(o);
      if (undefined > 0) hist += (hist.empty() ? "" : ", ") + std::to_string(undefined) + " undefined";
      c.detail = "experimental: " + hist;
      return c;
    }
    for (const auto& d : enumerate_diagonals(rect))
      for (const auto& w : perms)
        if (construct_via_insertion(w, d.lambda_plus(), rect.m()) != construct_plus(w, d))
          return fail(c, "w = " + to_string(w) + ", diagonal " + diagonal_text(d));
    for (const auto& w : perms) {
      const auto built = construct_tw_via_insertion(w, rect);
      if (built.tableau != construct_tw(w, rect)) return fail(c, "full tableau differs, w = " + to_string(w));
    }
    return c;
  });
}

std::vector<Diagonal> suite_diagonals(const Rectangle& rect, bool all) {
  auto every = enumerate_diagonals(rect);
  if (all || every.size() <= 3) return every;
  std::vector<Diagonal> out{Diagonal::staircase(rect), every.front(), every.back()};
  std::sort(out.begin(), out.end(), [](const Diagonal& a, const Diagonal& b) { return a.lambda_plus() < b.lambda_plus(); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Report run_suite(const Rectangle& rect, Suite suite, const SuiteOptions& options) {
  Report report;
  report.suite = to_string(suite);
  report.rect = rect;
  std::mt19937_64 rng(options.seed);
  auto wants = [&](Suite s) { return suite == Suite::all || suite == s; };

  std::optional<OrbitTable> table;
  auto get_table = [&]() -> const OrbitTable& {
    if (!table) table = orbit_table(rect, options.limits);
    return *table;
  };
  // T_w and the slide constructions live in the n-rows orientation.
  const Rectangle rows_rect(rect.n(), rect.m(), Orientation::n_rows);

  if (wants(Suite::haiman)) {
    report.cases.push_back(check_enumeration_count(rect, get_table()));
    report.cases.push_back(check_haiman(get_table()));
    report.cases.push_back(check_small_orbits_empty(get_table()));
  }
  if (wants(Suite::csp)) report.cases.push_back(check_csp(rect, get_table()));

  if (rect.experimental()) {
    if (wants(Suite::bijection) || wants(Suite::propositions)) report.cases.push_back(check_insertion_route(rows_rect));
    if (wants(Suite::bijection) || wants(Suite::independence) || wants(Suite::propositions))
      report.notes.push_back("m < n: only the experimental insertion route applies; slide constructions skipped");
    return report;
  }

  const auto diagonals = suite_diagonals(rect, options.all_diagonals);
  if (wants(Suite::bijection)) {
    report.cases.push_back(check_bijection(get_table()));
    report.cases.push_back(check_invert_round_trip(get_table()));
    report.cases.push_back(check_equivariance(rect));
    report.cases.push_back(check_residues_distinct(rect));
    for (const auto& t : get_table().minimal) report.notes.push_back("O_n member " + rows_text(t));
  }
  if (wants(Suite::independence)) {
    report.cases.push_back(
        check_choice_independence(rect, diagonals, options.all_choices, options.sampled_choices, rng, options.limits));
    report.cases.push_back(check_splice_agreement(rect, diagonals));
    report.cases.push_back(check_forward_reverse_duality(rect, diagonals));
    report.cases.push_back(check_corner_orders(rect, diagonals, options.corner_orders, rng));
  }
  if (wants(Suite::propositions)) {
    report.cases.push_back(check_box_sequence_reconstruction(rect, diagonals));
    const Rectangle cols_rect = rows_rect.transposed();
    const auto col_diagonals = suite_diagonals(cols_rect, options.all_diagonals);
    report.cases.push_back(
        check_column_sequence(cols_rect, col_diagonals, options.all_choices ? options.limits.max_tableaux : options.sampled_choices, rng));
    report.cases.push_back(check_delta_closed_form(cols_rect, col_diagonals));
    report.cases.push_back(check_compatibility(cols_rect, col_diagonals));
    report.cases.push_back(check_knuth_equivariance(rect.n(), options.knuth_instances, rng));
    report.cases.push_back(check_insertion_route(rows_rect));
  }
  return report;
}

std::string to_text(const Report& report) {
  std::ostringstream out;
  out << "suite " << report.suite << " on " << to_string(report.rect) << "\n";
  for (const auto& c : report.cases) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) out << " (" << c.detail << ")";
    out << "\n";
    if (!c.passed) out << "  counterexample: " << c.counterexample << "\n";
  }
  for (const auto& note : report.notes) out << "note: " << note << "\n";
  std::size_t failed = 0;
  for (const auto& c : report.cases) failed += c.passed ? 0 : 1;
  out << (failed == 0 ? "all " + std::to_string(report.cases.size()) + " checks passed"
                      : std::to_string(failed) + " of " + std::to_string(report.cases.size()) + " checks failed")
      << "\n";
  return out.str();
}

}  // namespace minorbit
