#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "minorbit/shapes.hpp"
#include "minorbit/tableaux.hpp"

namespace minorbit {

// A bijection of {1..n} in one-line notation.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> oneline);

  static Permutation identity(int n);
  // w_0 = n n-1 ... 1.
  static Permutation longest(int n);

  int size() const { return static_cast<int>(oneline_.size()); }
  // w(i), 1-based.
  int operator()(int i) const { return oneline_.at(static_cast<std::size_t>(i - 1)); }
  std::span<const int> oneline() const { return oneline_; }
  Permutation inverse() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> oneline_;
};

// Digits when n <= 9, comma list otherwise. Parsing also accepts [a,b,...].
std::string to_string(const Permutation& w);
Permutation parse_permutation(std::string_view text);

// Every permutation of {1..n} in lexicographic order.
std::vector<Permutation> all_permutations(int n);

std::vector<int> descents(const Permutation& w);
int major_index(const Permutation& w);

// Product read left to right: (w . v)(i) = v(w(i)), so promotion sends T_w
// to T_{w . c}.
Permutation right_multiply(const Permutation& w, const Permutation& v);
// c = (1 n n-1 ... 2): c(1) = n, c(k) = k - 1.
Permutation cycle_c(int n);
// w_0 w w_0.
Permutation conjugate_by_longest(const Permutation& w);

// Infinite sequence over {1..n}: a finite head followed by a repeating cycle.
// Terms are 1-based.
class LetterSequence {
 public:
  LetterSequence(std::vector<int> head, std::vector<int> cycle);

  static LetterSequence periodic(std::vector<int> generator) { return {{}, std::move(generator)}; }

  int term(std::size_t k) const;
  std::vector<int> prefix(std::size_t count) const;
  std::span<const int> head() const { return head_; }
  std::span<const int> cycle() const { return cycle_; }

  // Same sequence with the first `count` terms replaced (count >= head size).
  LetterSequence with_prefix(std::vector<int> new_prefix) const;

  bool operator==(const LetterSequence&) const = default;

 private:
  std::vector<int> head_;
  std::vector<int> cycle_;
};

// w* : the one-line word of w^{-1}, repeated.
LetterSequence w_star(const Permutation& w);
std::vector<int> w_star_prefix(const Permutation& w, std::size_t count);

// Blocks (d_1+1..n)(d_2+1..n)... for the descents d_1 > d_2 > ... of w,
// followed by 1..n forever.
LetterSequence descent_sequence(const Permutation& w);
LetterSequence descent_sequence(std::span<const int> descents_desc, int n);
std::vector<int> descent_sequence_prefix(const Permutation& w, std::size_t count);

// Schensted row insertion (repeated letters bump the first strictly larger entry).
PartialTableau insertion_tableau(std::span<const int> word);
void row_insert(std::vector<std::vector<int>>& rows, int x);

// Classical Knuth move at positions k, k+1, k+2 (1-based k):
//   y z x <-> y x z  when x < y <= z
//   x z y <-> z x y  when x <= y < z
std::optional<std::vector<int>> elementary_knuth(std::span<const int> word, int k);

// Poset order on boxes: a < b when b is weakly right of and weakly above a,
// and a != b.
bool box_less(Box a, Box b);

// Strict Knuth transformation kappa_k (1-based k) over any strict partial
// order. Absent when none of the four strict patterns holds, including when
// the terms needed by a pattern are incomparable.
template <typename T, typename Less>
std::optional<std::vector<T>> strict_knuth(std::span<const T> seq, int k, Less less) {
  if (k < 1 || static_cast<std::size_t>(k) + 2 > seq.size()) return std::nullopt;
  const auto i = static_cast<std::size_t>(k - 1);
  const T& a = seq[i];
  const T& b = seq[i + 1];
  const T& c = seq[i + 2];
  std::vector<T> out(seq.begin(), seq.end());
  if ((less(b, a) && less(a, c)) || (less(c, a) && less(a, b))) {
    std::swap(out[i + 1], out[i + 2]);
    return out;
  }
  if ((less(a, c) && less(c, b)) || (less(b, c) && less(c, a))) {
    std::swap(out[i], out[i + 1]);
    return out;
  }
  return std::nullopt;
}

inline std::optional<std::vector<int>> strict_knuth(std::span<const int> seq, int k) {
  return strict_knuth(seq, k, std::less<int>{});
}

inline std::optional<std::vector<Box>> strict_knuth(std::span<const Box> seq, int k) {
  return strict_knuth(seq, k, box_less);
}

// Positions k of the elementary Knuth moves that carry
// reading_word(P) . x to reading_word(P <- x), in the order applied, where
// P is the tableau given by `rows`.
std::vector<int> insertion_knuth_moves(const std::vector<std::vector<int>>& rows, int x);

enum class Verdict { proved, refuted_at_n, inconclusive };

struct EquivalenceResult {
  Verdict verdict = Verdict::inconclusive;
  std::vector<int> witness;  // kappa positions, applied first to last
  std::size_t states_explored = 0;
  std::size_t prefix_length = 0;
};

// Breadth-first search over strict Knuth moves on Trunc_L(a), L = N + slack,
// for a word whose first N terms equal Trunc_N(b). "refuted_at_n" means the
// whole strict-Knuth class of Trunc_L(a) was exhausted within the budget;
// it says nothing about longer prefixes.
EquivalenceResult equivalent_bounded(const LetterSequence& a, const LetterSequence& b, std::size_t n_terms,
                                     std::size_t budget, std::size_t slack = 4);

// w(1), w(1)+n, ..., w(1)+(m-1)n, w(2), ..., w(n)+(m-1)n.
std::vector<int> aug_word(const Permutation& w, int m);

}  // namespace minorbit
