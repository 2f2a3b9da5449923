#include <doctest.h>

#include <cmath>
#include <random>

#include "minorbit/errors.hpp"
#include "minorbit/verify.hpp"
#include "oracles.hpp"

using namespace minorbit;

namespace {

std::vector<Partition> partitions_in(int rows, int cols) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int max_part) -> void {
    out.emplace_back(cur);
    if (static_cast<int>(cur.size()) == rows) return;
    for (int p = 1; p <= max_part; ++p) {
      cur.push_back(p);
      self(self, p);
      cur.pop_back();
    }
  };
  rec(rec, cols);
  return out;
}

std::vector<int> parts(const Partition& p) {
  std::vector<int> out;
  for (int r = 1; r <= p.num_rows(); ++r) out.push_back(p.row(r));
  return out;
}

}  // namespace

TEST_CASE("SYT counts match the corner-removal oracle") {
  EnumerationLimits wide;
  wide.max_tableaux = 100'000'000;
  for (const auto& p : partitions_in(4, 6)) {
    if (p.size() > 16) continue;
    const auto expected = oracle::count_syt(parts(p));
    CHECK(syt_count_hooks(p) == expected);
    std::uint64_t streamed = 0;
    for_each_syt(p, [&](const PartialTableau&) { ++streamed; }, wide);
    CHECK(streamed == expected);
    if (p.size() <= 10) CHECK(enumerate_syt(p).size() == expected);
  }
  CHECK(syt_count_hooks(Partition::rectangle(4, 6)) == oracle::count_syt({6, 6, 6, 6}));
  CHECK(syt_count_hooks(Partition::rectangle(4, 4)) == 24024);
  CHECK(hook_lengths(Partition({2, 1})) == std::vector<int>{3, 1, 1});

  const SkewShape skew(Partition({5, 4, 3}), Partition({2, 1}));
  std::uint64_t n = 0;
  for_each_syt(skew, [&](const PartialTableau& t) {
    CHECK(is_standard_normalized(t));
    ++n;
  });
  CHECK(n == oracle::count_syt({5, 4, 3}, {2, 1}));
  CHECK(enumerate_syt(SkewShape(Partition({4, 3, 2}), Partition({3, 1}))).size() == oracle::count_syt({4, 3, 2}, {3, 1}));
}

TEST_CASE("enumeration caps") {
  CHECK_THROWS_AS(enumerate_syt(Partition::rectangle(4, 6)), CapExceeded);
  EnumerationLimits small;
  small.max_tableaux = 10;
  CHECK_THROWS_AS(enumerate_syt(Partition({3, 2, 1}), small), CapExceeded);
  CHECK_THROWS_AS(enumerate_syt(SkewShape(Partition({4, 3, 2}), Partition({1})), small), CapExceeded);
  std::mt19937_64 rng(1);
  CHECK(sample_syt(SkewShape(Partition({3, 2, 1})), 5, rng).size() == 5);
  CHECK(sample_syt(SkewShape(Partition({3, 2, 1})), 100, rng).size() == 16);
}

TEST_CASE("orbit tables") {
  const OrbitTable t22 = orbit_table(Rectangle(2, 2));
  CHECK(t22.total == 2);
  CHECK(t22.orbits.size() == 1);
  CHECK(t22.order_histogram == std::map<int, std::uint64_t>{{2, 2}});
  CHECK(t22.minimal.size() == 2);

  const OrbitTable t34 = orbit_table(Rectangle(3, 4));
  CHECK(t34.total == 462);
  std::uint64_t sum = 0;
  for (const auto& o : t34.orbits) {
    sum += static_cast<std::uint64_t>(o.size);
    CHECK(12 % o.size == 0);
  }
  CHECK(sum == 462);
  CHECK(t34.fixed_count(12) == 462);
  CHECK(t34.fixed_count(3) == 6);
  CHECK(t34.fixed_count(1) == 0);

  for (auto [rows, cols] : std::vector<std::pair<int, int>>{{2, 3}, {3, 3}, {3, 4}, {2, 5}}) {
    const Rectangle rect = Rectangle::from_dims(rows, cols);
    const OrbitTable table = orbit_table(rect);
    std::set<oracle::Grid> got;
    for (const auto& t : table.minimal) got.insert(oracle::to_grid(t));
    CHECK(got == oracle::minimal_orbit(rows, cols, rect.n()));
  }
}

TEST_CASE("q-polynomials") {
  CHECK(to_string(q_integer(3)) == "q^2 + q + 1");
  CHECK(to_string(QPolynomial{{0, -2, 0, 1}}) == "q^3 - 2q");
  CHECK(to_string(QPolynomial{{-1}}) == "-1");
  CHECK(multiply(q_integer(2), q_integer(2)) == QPolynomial{{1, 2, 1}});
  CHECK(divide_exact(QPolynomial{{1, 2, 1}}, q_integer(2)) == q_integer(2));
  CHECK_FALSE(divide_exact(q_integer(3), q_integer(2)));
  CHECK(remainder(q_integer(3), q_integer(2)) == QPolynomial{{1}});
  CHECK(cyclotomic(1) == QPolynomial{{-1, 1}});
  CHECK(cyclotomic(2) == QPolynomial{{1, 1}});
  CHECK(cyclotomic(4) == QPolynomial{{1, 0, 1}});
  CHECK(cyclotomic(6) == QPolynomial{{1, -1, 1}});
  // q^12 - 1 is the product of the cyclotomic polynomials of the divisors.
  QPolynomial prod{{1}};
  for (int d : divisors(12)) prod = multiply(prod, cyclotomic(d));
  QPolynomial expected{std::vector<std::int64_t>(13, 0)};
  expected.coeffs[0] = -1;
  expected.coeffs[12] = 1;
  CHECK(prod == expected);
  CHECK(divisors(12) == std::vector<int>{1, 2, 3, 4, 6, 12});

  CHECK(f_polynomial(Rectangle(2, 2)) == QPolynomial{{1, 0, 1}});
  CHECK(f_polynomial(Rectangle::from_dims(1, 2)) == QPolynomial{{1}});
  CHECK(f_polynomial(Rectangle(3, 4)).at_one() == 462);
  for (auto [rows, cols] : std::vector<std::pair<int, int>>{{2, 3}, {3, 3}, {3, 4}, {4, 4}}) {
    const QPolynomial f = f_polynomial(Rectangle::from_dims(rows, cols));
    long double v = 0;
    for (int k = f.degree(); k >= 0; --k) v = v * 0.5L + static_cast<long double>(f.coeffs[static_cast<std::size_t>(k)]);
    CHECK(std::fabs(static_cast<double>(v - oracle::f_real(rows, cols, 0.5L))) < 1e-9);
  }
}

TEST_CASE("F at roots of unity against complex evaluation") {
  for (auto [rows, cols] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 3}, {3, 4}, {4, 4}, {4, 5}, {2, 7}}) {
    const Rectangle rect = Rectangle::from_dims(rows, cols);
    for (int r = 1; r <= rows * cols; ++r) {
      CAPTURE(rows);
      CAPTURE(cols);
      CAPTURE(r);
      const auto a = f_at_root_cyclotomic(rect, r);
      const auto b = f_at_root_pairing(rect, r);
      CHECK(a == b);
      CHECK(a == oracle::f_numeric(rows, cols, r));
      CHECK(f_at_root(rect, r) == a);
    }
  }
}

TEST_CASE("CSP tables") {
  const Rectangle rect(3, 4);
  const auto rows = csp_table(rect, orbit_table(rect));
  std::vector<std::tuple<int, std::uint64_t, std::int64_t>> got;
  for (const auto& row : rows) {
    CHECK(row.matches());
    got.emplace_back(row.r, row.orbit_count, row.f_value);
  }
  CHECK(got == std::vector<std::tuple<int, std::uint64_t, std::int64_t>>{
                   {1, 0, 0}, {2, 0, 0}, {3, 6, 6}, {4, 12, 12}, {6, 30, 30}, {12, 462, 462}});
}

TEST_CASE("suites") {
  CHECK(parse_suite("all") == Suite::all);
  CHECK(parse_suite("propositions") == Suite::propositions);
  CHECK_FALSE(parse_suite("everything"));
  CHECK(to_string(Suite::haiman) == "haiman");
  CHECK(suite_diagonals(Rectangle(4, 6), true).size() == 15);
  CHECK(suite_diagonals(Rectangle(4, 6), false).size() <= 3);

  for (auto [rows, cols] : std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {2, 3}, {3, 3}, {3, 4}}) {
    const Report report = run_suite(Rectangle::from_dims(rows, cols), Suite::all);
    CAPTURE(to_text(report));
    CHECK(report.passed());
    CHECK(report.cases.size() >= 10);
  }
  const Report exp = run_suite(Rectangle(3, 2), Suite::all);
  CHECK(exp.passed());
  CHECK_FALSE(exp.notes.empty());

  SuiteOptions opts;
  opts.all_choices = true;
  opts.all_diagonals = true;
  const Report full = run_suite(Rectangle(3, 3), Suite::independence, opts);
  CHECK(full.passed());
  CHECK(to_text(full).find("checks passed") != std::string::npos);
}

TEST_CASE("individual checks report counterexamples") {
  // A doctored table where one minimal tableau is replaced by a non-minimal one.
  OrbitTable table = orbit_table(Rectangle(3, 3));
  table.minimal.front() = table.orbits.back().representative;
  for (const auto& o : table.orbits)
    if (o.size == 9) table.minimal.front() = o.representative;
  const Case c = check_invert_round_trip(table);
  CHECK_FALSE(c.passed);
  CHECK_FALSE(c.counterexample.empty());
}
