#pragma once

// Constructions of the minimal promotion orbits of rectangular tableaux.
//
// For w in S_n and a diagonal lambda_plus/lambda_minus of an m x n rectangle
// (m >= n), construct_plus fills lambda_plus by slides from the seeds
// b_i <- w(i), construct_minus fills R/lambda_minus by reverse slides from
// b_i <- w(i) + (m-1)n, and T_w splices the two. w -> T_w is a bijection
// from S_n onto the tableaux whose promotion order divides n, with
// promotion(T_w) = T_{w c}.
//
// Orientation: construct_plus/minus, construct_tw, box_sequence and invert
// work in either orientation. column_sequence and delta_closed_form assume n
// is the number of columns; construct_via_insertion assumes n is the number
// of rows. Use the transpose() overloads to move between the two.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "minorbit/shapes.hpp"
#include "minorbit/tableaux.hpp"
#include "minorbit/words.hpp"

namespace minorbit {

// Standard filling of lambda_minus; loop iteration k of the forward
// construction slides the box holding |lambda_minus| + 1 - k.
using ChoiceTableau = PartialTableau;

// Row-superstandard filling of a (skew) shape: 1, 2, ... left to right, top
// to bottom.
PartialTableau row_superstandard(const SkewShape& shape);

// Default choice for construct_plus: row-superstandard on lambda_minus.
ChoiceTableau default_choice(const Diagonal& d);
// Default choice for construct_minus: row-superstandard on R/lambda_plus.
// Iteration k reverse-slides the box holding k.
ChoiceTableau default_reverse_choice(const Diagonal& d, const Rectangle& rect);

// Intermediate tableaux of a construction: frame 0 is the seeded diagonal,
// frame k the state after the k-th slide and refill.
using Trace = std::vector<PartialTableau>;

PartialTableau construct_plus(const Permutation& w, const Diagonal& d, const ChoiceTableau& u,
                              Trace* trace = nullptr);
PartialTableau construct_plus(const Permutation& w, const Diagonal& d);

// Choice tableau here is a standard filling of the skew shape R/lambda_plus.
PartialTableau construct_minus(const Permutation& w, const Diagonal& d, const Rectangle& rect,
                               const ChoiceTableau& v, Trace* trace = nullptr);
PartialTableau construct_minus(const Permutation& w, const Diagonal& d, const Rectangle& rect);

// T_w on the full rectangle. Requires m >= n; throws ExperimentalRequired
// otherwise. The diagonal defaults to the staircase (n, n-1, ..., 1). Throws
// std::logic_error if the two halves disagree on the diagonal. A choice
// tableau, when given, drives the forward half.
PartialTableau construct_tw(const Permutation& w, const Rectangle& rect, const std::optional<Diagonal>& d = {},
                            const std::optional<ChoiceTableau>& choice = {});

// Forward construction driven by a peeling order of the whole rectangle
// (each box an outer corner of what remains).
PartialTableau construct_plus_corner_order(const Permutation& w, const Diagonal& d, const Rectangle& rect,
                                           std::span<const Box> corner_order);

// Insertion tableau of aug(w) restricted to lambda_plus. n = number of rows;
// lambda_plus may be any partition with at most n rows lying inside the
// insertion tableau.
PartialTableau construct_via_insertion(const Permutation& w, const Partition& lambda_plus, int m);

struct Construction {
  PartialTableau tableau;
  bool experimental = false;
  int promotion_order = 0;
  Partition lambda_plus;
};

// Default lambda_plus for the insertion route: the staircase when m >= n,
// rows max(1, m + 1 - r) when m < n.
Partition default_insertion_lambda_plus(const Rectangle& rect);

// T_w through the insertion route: the lambda_plus part from aug(w), the
// R/lambda_minus part as the dual of the insertion construction for
// w_0 w w_0 on the dual of lambda_minus. Needs the n-rows orientation. For
// m < n the result is flagged experimental; std::domain_error if a shape
// does not fit the insertion tableau, the halves disagree, or the splice is
// not standard.
Construction construct_tw_via_insertion(const Permutation& w, const Rectangle& rect,
                                        const std::optional<Partition>& lambda_plus = {});

struct BoxSequenceRun {
  std::vector<int> sigma_prefix;
  std::vector<Box> boxes;
  // delta[i-1] counts k with sigma_k = i and boxes[k] != b_i.
  std::vector<int> delta;
  // Every entry of the choice tableau was consumed within the run, so delta
  // is final.
  bool stabilized = false;
  Trace trace;  // U_0, U_1, ... when requested
};

// Reverse-slides the diagonal box b_{sigma_k} through U_{k-1} for
// k = 1..count, records the terminal, and deletes whatever landed on the
// diagonal box.
BoxSequenceRun box_sequence(const LetterSequence& sigma, const Diagonal& d, const ChoiceTableau& u, std::size_t count,
                            bool keep_trace = false);

// Run length after which the choice tableau is guaranteed empty, provided
// the sequence's cycle contains every letter: |head| + |cycle| (|lambda_minus| + 1).
std::size_t stabilization_length(const LetterSequence& sigma, const Diagonal& d);

// Smallest k with boxes[k] == b for every box of lambda_plus; the forward
// construction read off a box sequence of w*.
PartialTableau tableau_from_box_sequence(const BoxSequenceRun& run, const Diagonal& d);

// (1..n-d_1, 1..n-d_2, ...) then 1..n forever; first `count` terms.
std::vector<int> column_sequence(std::span<const int> descents_desc, int n, std::size_t count);

// delta(i) = C_i - #{j : d_j >= i} + #{j : d_j >= n + 1 - i} - 1, C_i the
// length of column i of lambda_plus. Index i-1 holds delta(i).
std::vector<int> delta_closed_form(const Permutation& w, const Partition& lambda_plus, int n);

// Sequences of boxes of two diagonals agree wherever both terms lie in both
// lambda_plus shapes.
bool compatible(std::span<const Box> a, const Partition& lambda_plus_a, std::span<const Box> b,
                const Partition& lambda_plus_b);

// Recovers w from a tableau of O_n via w(i) = T[b_i] mod n. Throws
// NotInMinimalOrbit if the residues collide or T_w != T.
Permutation invert(const PartialTableau& t, const std::optional<Diagonal>& d = {});

}  // namespace minorbit
