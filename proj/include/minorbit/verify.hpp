#pragma once

// Brute-force checks: SYT enumeration, promotion orbit tables, the q-hook
// polynomial and its values at roots of unity, and the verification suites
// behind `minorbit verify`.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "minorbit/orbits.hpp"
#include "minorbit/shapes.hpp"
#include "minorbit/tableaux.hpp"
#include "minorbit/words.hpp"

namespace minorbit {

struct EnumerationLimits {
  int max_cells = 20;
  std::uint64_t max_tableaux = 1'000'000;
};

// Calls fn on every standard filling of the region, entries placed 1, 2, ...
// at the addable cells in row order (so the stream is in lexicographic
// placement order). The tableau passed to fn is reused between calls.
// Throws CapExceeded before starting when the region is over the cell cap or
// its SYT count is over the tableau cap (skew regions are checked as they
// stream).
void for_each_syt(const SkewShape& region, const std::function<void(const PartialTableau&)>& fn,
                  const EnumerationLimits& limits = {});
void for_each_syt(const Partition& shape, const std::function<void(const PartialTableau&)>& fn,
                  const EnumerationLimits& limits = {});
std::vector<PartialTableau> enumerate_syt(const SkewShape& region, const EnumerationLimits& limits = {});
std::vector<PartialTableau> enumerate_syt(const Partition& shape, const EnumerationLimits& limits = {});

// Uniform sample (reservoir) of at most k standard fillings; all of them
// when there are at most k.
std::vector<PartialTableau> sample_syt(const SkewShape& region, std::size_t k, std::mt19937_64& rng,
                                       const EnumerationLimits& limits = {});

// N! / prod hooks. Throws std::overflow_error past 64 bits.
std::uint64_t syt_count_hooks(const Partition& shape);

// Hooks of every cell, row by row.
std::vector<int> hook_lengths(const Partition& shape);

struct Orbit {
  PartialTableau representative;  // lexicographically smallest member
  int size = 0;
};

struct OrbitTable {
  Rectangle rect{1, 1};
  std::vector<Orbit> orbits;
  // promotion order -> number of tableaux with that order
  std::map<int, std::uint64_t> order_histogram;
  std::uint64_t total = 0;
  // Members of O_n in enumeration order.
  std::vector<PartialTableau> minimal;

  // |O_r|: tableaux fixed by the r-th power of promotion.
  std::uint64_t fixed_count(int r) const;
};

OrbitTable orbit_table(const Rectangle& rect, const EnumerationLimits& limits = {});

// Integer coefficients, index = power of q.
struct QPolynomial {
  std::vector<std::int64_t> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  std::int64_t at_one() const;
  bool operator==(const QPolynomial&) const = default;
};

std::string to_string(const QPolynomial& p);

// [k]_q = 1 + q + ... + q^{k-1}.
QPolynomial q_integer(int k);
QPolynomial multiply(const QPolynomial& a, const QPolynomial& b);
// Exact division by a monic polynomial; nullopt when the remainder is nonzero.
std::optional<QPolynomial> divide_exact(const QPolynomial& a, const QPolynomial& monic);
// Remainder of a modulo a monic polynomial.
QPolynomial remainder(const QPolynomial& a, const QPolynomial& monic);
QPolynomial cyclotomic(int e);

// F(q) = [mn]_q! / prod over cells of [hook]_q. Throws std::logic_error if a
// division leaves a remainder, std::overflow_error past 64-bit coefficients.
QPolynomial f_polynomial(const Rectangle& rect);

// F(zeta^r), zeta a primitive mn-th root of unity, 1 <= r <= mn.
// Reduction of F modulo the e-th cyclotomic polynomial, e = mn / gcd(r, mn).
std::int64_t f_at_root_cyclotomic(const Rectangle& rect, int r);
// Pairing of q-integer factors by residue mod e.
std::int64_t f_at_root_pairing(const Rectangle& rect, int r);
// Both of the above; std::logic_error if they disagree.
std::int64_t f_at_root(const Rectangle& rect, int r);

std::vector<int> divisors(int x);

struct CspRow {
  int r = 0;
  std::uint64_t orbit_count = 0;
  std::int64_t f_value = 0;
  bool matches() const { return static_cast<std::int64_t>(orbit_count) == f_value; }
};

std::vector<CspRow> csp_table(const Rectangle& rect, const OrbitTable& table);

// --- suites -------------------------------------------------------------

enum class Suite { bijection, independence, csp, haiman, propositions, all };

std::string to_string(Suite s);
std::optional<Suite> parse_suite(std::string_view text);

struct SuiteOptions {
  bool all_choices = false;
  bool all_diagonals = false;
  std::uint64_t seed = 1;
  EnumerationLimits limits;
  // Choice tableaux per (w, diagonal) when not sweeping all of them.
  std::size_t sampled_choices = 8;
  std::size_t corner_orders = 20;
  std::size_t knuth_instances = 2000;
};

struct Case {
  std::string name;
  bool passed = true;
  std::string counterexample;
  std::string detail;
};

struct Report {
  std::string suite;
  Rectangle rect{1, 1};
  std::vector<Case> cases;
  std::vector<std::string> notes;

  bool passed() const;
};

// Individual batteries; each returns one report entry.
Case check_enumeration_count(const Rectangle& rect, const OrbitTable& table);
Case check_haiman(const OrbitTable& table);
Case check_small_orbits_empty(const OrbitTable& table);
Case check_bijection(const OrbitTable& table);
Case check_invert_round_trip(const OrbitTable& table);
Case check_equivariance(const Rectangle& rect);
Case check_residues_distinct(const Rectangle& rect);
Case check_csp(const Rectangle& rect, const OrbitTable& table);
// construct_plus constant over choice tableaux. Every
// choice tableau when all_choices, else a seeded sample.
Case check_choice_independence(const Rectangle& rect, std::span<const Diagonal> diagonals, bool all_choices,
                               std::size_t samples, std::mt19937_64& rng, const EnumerationLimits& limits = {});
Case check_splice_agreement(const Rectangle& rect, std::span<const Diagonal> diagonals);
Case check_forward_reverse_duality(const Rectangle& rect, std::span<const Diagonal> diagonals);
Case check_corner_orders(const Rectangle& rect, std::span<const Diagonal> diagonals, std::size_t orders,
                         std::mt19937_64& rng);
Case check_box_sequence_reconstruction(const Rectangle& rect, std::span<const Diagonal> diagonals);
// rect must have n = number of columns.
Case check_column_sequence(const Rectangle& rect, std::span<const Diagonal> diagonals, std::size_t choice_cap,
                           std::mt19937_64& rng);
Case check_delta_closed_form(const Rectangle& rect, std::span<const Diagonal> diagonals);
Case check_compatibility(const Rectangle& rect, std::span<const Diagonal> diagonals);
Case check_knuth_equivariance(int n, std::size_t instances, std::mt19937_64& rng);
// rect must have n = number of rows.
Case check_insertion_route(const Rectangle& rect);

// The diagonals a suite sweeps: all of them, or the staircase plus the
// first and last in enumeration order.
std::vector<Diagonal> suite_diagonals(const Rectangle& rect, bool all);

Report run_suite(const Rectangle& rect, Suite suite, const SuiteOptions& options = {});

std::string to_text(const Report& report);

}  // namespace minorbit
