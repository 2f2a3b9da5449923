#include "minorbit/words.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "minorbit/errors.hpp"

namespace minorbit {

Permutation::Permutation(std::vector<int> oneline) : oneline_(std::move(oneline)) {
  std::vector<bool> seen(oneline_.size() + 1, false);
  for (int v : oneline_) {
    if (v < 1 || v > size() || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(size()));
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::longest(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = n - i;
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(oneline_.size());
  for (int i = 1; i <= size(); ++i) inv[static_cast<std::size_t>((*this)(i) - 1)] = i;
  return Permutation(std::move(inv));
}

std::string to_string(const Permutation& w) {
  std::string out;
  const bool digits = w.size() <= 9;
  for (int i = 1; i <= w.size(); ++i) {
    if (digits) {
      out += static_cast<char>('0' + w(i));
    } else {
      if (i > 1) out += ",";
      out += std::to_string(w(i));
    }
  }
  return out;
}

Permutation parse_permutation(std::string_view text) {
  std::vector<int> values;
  if (text.size() >= 2 && text.front() == '[' && text.back() == ']') text = text.substr(1, text.size() - 2);
  if (text.find(',') != std::string_view::npos) {
    std::stringstream ss{std::string(text)};
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty() || !std::all_of(item.begin(), item.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw ParseError("bad permutation entry '" + item + "'");
      values.push_back(std::stoi(item));
    }
  } else {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad permutation text: " + std::string(text));
      values.push_back(c - '0');
    }
  }
  if (values.empty()) throw ParseError("empty permutation");
  try {
    return Permutation(std::move(values));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::vector<int> descents(const Permutation& w) {
  std::vector<int> out;
  for (int i = 1; i < w.size(); ++i)
    if (w(i) > w(i + 1)) out.push_back(i);
  return out;
}

int major_index(const Permutation& w) {
  const auto d = descents(w);
  return std::accumulate(d.begin(), d.end(), 0);
}

Permutation right_multiply(const Permutation& w, const Permutation& v) {
  if (w.size() != v.size()) throw std::invalid_argument("permutations of different sizes");
  std::vector<int> out;
  for (int i = 1; i <= w.size(); ++i) out.push_back(v(w(i)));
  return Permutation(std::move(out));
}

Permutation cycle_c(int n) {
  if (n < 1) throw std::invalid_argument("cycle_c needs n >= 1");
  std::vector<int> out{n};
  for (int k = 2; k <= n; ++k) out.push_back(k - 1);
  return Permutation(std::move(out));
}

Permutation conjugate_by_longest(const Permutation& w) {
  const int n = w.size();
  std::vector<int> out;
  for (int i = 1; i <= n; ++i) out.push_back(n + 1 - w(n + 1 - i));
  return Permutation(std::move(out));
}

LetterSequence::LetterSequence(std::vector<int> head, std::vector<int> cycle)
    : head_(std::move(head)), cycle_(std::move(cycle)) {
  if (cycle_.empty()) throw std::invalid_argument("sequence generator must be nonempty");
}

int LetterSequence::term(std::size_t k) const {
  if (k < 1) throw std::out_of_range("sequence terms are 1-based");
  if (k <= head_.size()) return head_[k - 1];
  return cycle_[(k - 1 - head_.size()) % cycle_.size()];
}

std::vector<int> LetterSequence::prefix(std::size_t count) const {
  std::vector<int> out;
  out.reserve(count);
  for (std::size_t k = 1; k <= count; ++k) out.push_back(term(k));
  return out;
}

LetterSequence LetterSequence::with_prefix(std::vector<int> new_prefix) const {
  if (new_prefix.size() < head_.size()) throw std::invalid_argument("replacement prefix shorter than the head");
  const std::size_t shift = (new_prefix.size() - head_.size()) % cycle_.size();
  std::vector<int> cycle = cycle_;
  std::rotate(cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(shift), cycle.end());
  return LetterSequence(std::move(new_prefix), std::move(cycle));
}

LetterSequence w_star(const Permutation& w) {
  const Permutation inv = w.inverse();
  return LetterSequence::periodic({inv.oneline().begin(), inv.oneline().end()});
}

std::vector<int> w_star_prefix(const Permutation& w, std::size_t count) { return w_star(w).prefix(count); }

LetterSequence descent_sequence(std::span<const int> descents_desc, int n) {
  std::vector<int> head;
  for (std::size_t j = 0; j < descents_desc.size(); ++j) {
    const int d = descents_desc[j];
    if (d < 1 || d > n - 1 || (j > 0 && d >= descents_desc[j - 1]))
      throw std::invalid_argument("descents must be strictly decreasing within 1..n-1");
    for (int v = d + 1; v <= n; ++v) head.push_back(v);
  }
  std::vector<int> cycle(static_cast<std::size_t>(n));
  std::iota(cycle.begin(), cycle.end(), 1);
  return LetterSequence(std::move(head), std::move(cycle));
}

LetterSequence descent_sequence(const Permutation& w) {
  auto d = descents(w);
  std::reverse(d.begin(), d.end());
  return descent_sequence(d, w.size());
}

std::vector<int> descent_sequence_prefix(const Permutation& w, std::size_t count) {
  return descent_sequence(w).prefix(count);
}

void row_insert(std::vector<std::vector<int>>& rows, int x) {
  for (auto& row : rows) {
    auto it = std::upper_bound(row.begin(), row.end(), x);
    if (it == row.end()) {
      row.push_back(x);
      return;
    }
    std::swap(*it, x);
  }
  rows.push_back({x});
}

PartialTableau insertion_tableau(std::span<const int> word) {
  std::vector<std::vector<int>> rows;
  for (int x : word) row_insert(rows, x);
  return PartialTableau::from_rows(rows);
}

std::optional<std::vector<int>> elementary_knuth(std::span<const int> word, int k) {
  if (k < 1 || static_cast<std::size_t>(k) + 2 > word.size()) return std::nullopt;
  const auto i = static_cast<std::size_t>(k - 1);
  const int a = word[i];
  const int b = word[i + 1];
  const int c = word[i + 2];
  std::vector<int> out(word.begin(), word.end());
  // y z x <-> y x z with x < y <= z: the pair after the first letter swaps.
  if ((c < a && a <= b) || (b < a && a <= c)) {
    std::swap(out[i + 1], out[i + 2]);
    return out;
  }
  // x z y <-> z x y with x <= y < z: the first pair swaps.
  if ((a <= c && c < b) || (b <= c && c < a)) {
    std::swap(out[i], out[i + 1]);
    return out;
  }
  return std::nullopt;
}

bool box_less(Box a, Box b) { return a != b && b.col >= a.col && b.row <= a.row; }

std::vector<int> insertion_knuth_moves(const std::vector<std::vector<int>>& rows, int x) {
  std::vector<int> moves;
  std::vector<int> word;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) word.insert(word.end(), it->begin(), it->end());
  word.push_back(x);

  auto apply = [&](int k) {
    auto next = elementary_knuth(word, k);
    if (!next) throw std::logic_error("bumping move at " + std::to_string(k) + " is not a Knuth move");
    word = std::move(*next);
    moves.push_back(k);
  };

  // 1-based start of the current row's segment; the letter being inserted
  // sits right after it.
  int start = static_cast<int>(word.size()) - (rows.empty() ? 0 : static_cast<int>(rows.front().size()));
  for (std::size_t j = 0; j < rows.size(); ++j) {
    const auto& row = rows[j];
    const int len = static_cast<int>(row.size());
    const int u = static_cast<int>(std::upper_bound(row.begin(), row.end(), x) - row.begin());
    if (u == len) return moves;
    const int bumped = row[static_cast<std::size_t>(u)];
    // Walk x left past the entries after the bumped one.
    for (int p = start + len; p > start + u + 1; --p) apply(p - 2);
    // Walk the bumped entry left to the front of the segment.
    for (int q = start + u; q > start; --q) apply(q - 1);
    x = bumped;
    if (j + 1 < rows.size()) start -= static_cast<int>(rows[j + 1].size());
  }
  return moves;
}

EquivalenceResult equivalent_bounded(const LetterSequence& a, const LetterSequence& b, std::size_t n_terms,
                                     std::size_t budget, std::size_t slack) {
  EquivalenceResult result;
  result.prefix_length = n_terms + slack;
  const std::vector<int> start = a.prefix(result.prefix_length);
  const std::vector<int> target = b.prefix(n_terms);
  auto matches = [&](const std::vector<int>& w) { return std::equal(target.begin(), target.end(), w.begin()); };

  // word -> (parent word, move taking parent to word)
  std::map<std::vector<int>, std::pair<std::vector<int>, int>> parent;
  std::deque<std::vector<int>> queue{start};
  parent.emplace(start, std::make_pair(std::vector<int>{}, 0));
  while (!queue.empty()) {
    std::vector<int> cur = std::move(queue.front());
    queue.pop_front();
    ++result.states_explored;
    if (matches(cur)) {
      for (std::vector<int> w = cur; w != start;) {
        const auto& [prev, k] = parent.at(w);
        result.witness.push_back(k);
        w = prev;
      }
      std::reverse(result.witness.begin(), result.witness.end());
      result.verdict = Verdict::proved;
      return result;
    }
    if (result.states_explored >= budget) {
      result.verdict = Verdict::inconclusive;
      return result;
    }
    for (int k = 1; static_cast<std::size_t>(k) + 2 <= cur.size(); ++k) {
      auto next = strict_knuth(std::span<const int>(cur), k);
      if (next && !parent.contains(*next)) {
        parent.emplace(*next, std::make_pair(cur, k));
        queue.push_back(std::move(*next));
      }
    }
  }
  result.verdict = Verdict::refuted_at_n;
  return result;
}

std::vector<int> aug_word(const Permutation& w, int m) {
  if (m < 1) throw std::invalid_argument("aug_word needs m >= 1");
  const int n = w.size();
  std::vector<int> out;
  for (int i = 1; i <= n; ++i)
    for (int j = 0; j < m; ++j) out.push_back(w(i) + j * n);
  return out;
}

}  // namespace minorbit
