#pragma once

#include <cstdint>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "redword/permutation.hpp"

namespace redword {

/// A word in the simple transpositions of S_n, letters in 1..n-1.
struct Word {
  int degree = 1;
  std::vector<Letter> letters;

  int size() const { return static_cast<int>(letters.size()); }
  auto operator<=>(const Word&) const = default;
};

/// Digit string for n <= 10 ("12321"), comma-separated otherwise ("10,11,2").
std::string to_string(std::span<const Letter> letters, int degree);
std::string to_string(const Word& w);

/// Inverse of to_string. Throws std::invalid_argument on letters outside 1..n-1.
Word parse_word(const std::string& text, int degree);

/// s_{w_1} ... s_{w_k} applied to the identity. Throws std::out_of_range on a bad letter.
Permutation evaluate(const Word& w);
Permutation evaluate(std::span<const Letter> letters, int degree);

bool is_reduced(const Word& w);

/// The set R(sigma) of reduced words of one permutation.
///
/// Words are stored back to back in one flat byte buffer with a fixed stride
/// of l(sigma), sorted lexicographically; vertex indices elsewhere refer to
/// this order. An open-addressing table maps a word back to its index.
class WordSet {
 public:
  /// `flat` holds `count` words of length l(sigma) back to back, in any order.
  /// Throws std::logic_error on duplicates.
  WordSet(Permutation sigma, std::vector<Letter> flat, std::size_t count);

  const Permutation& sigma() const { return sigma_; }
  int degree() const { return sigma_.degree(); }
  int word_length() const { return length_; }
  std::size_t size() const { return count_; }

  std::span<const Letter> operator[](std::size_t k) const {
    return {letters_.data() + k * static_cast<std::size_t>(length_), static_cast<std::size_t>(length_)};
  }

  std::optional<std::uint32_t> find(std::span<const Letter> w) const;
  bool contains(std::span<const Letter> w) const { return find(w).has_value(); }

  Word word(std::size_t k) const;
  std::vector<std::string> strings() const;

  bool operator==(const WordSet& o) const {
    return sigma_ == o.sigma_ && count_ == o.count_ && letters_ == o.letters_;
  }

 private:
  void build_index();

  Permutation sigma_;
  int length_ = 0;
  std::size_t count_ = 0;
  std::vector<Letter> letters_;
  std::vector<std::uint32_t> table_;  // 0 = empty slot, otherwise index + 1
};

/// Deterministic seed word: repeatedly strip the smallest descent from the right.
Word canonical_word(const Permutation& sigma);

/// R(sigma) = disjoint union over i in Des(sigma) of R(sigma s_i) . i
WordSet enumerate_desc(const Permutation& sigma);

/// Breadth-first closure of canonical_word(sigma) under commutation and braid moves.
WordSet enumerate_closure(const Permutation& sigma);

/// Calls `visit(neighbor_letters, is_braid)` for every single-move rewrite of `w`.
template <class Visit>
void for_each_move(std::span<const Letter> w, std::vector<Letter>& scratch, Visit&& visit) {
  const std::size_t len = w.size();
  scratch.assign(w.begin(), w.end());
  for (std::size_t p = 0; p + 1 < len; ++p) {
    const int a = w[p], b = w[p + 1];
    if (a - b > 1 || b - a > 1) {
      std::swap(scratch[p], scratch[p + 1]);
      visit(std::span<const Letter>(scratch), false);
      std::swap(scratch[p], scratch[p + 1]);
    }
    if (p + 2 < len && w[p + 2] == a && (a - b == 1 || b - a == 1)) {
      scratch[p] = scratch[p + 2] = static_cast<Letter>(b);
      scratch[p + 1] = static_cast<Letter>(a);
      visit(std::span<const Letter>(scratch), true);
      scratch[p] = scratch[p + 2] = static_cast<Letter>(a);
      scratch[p + 1] = static_cast<Letter>(b);
    }
  }
}

/// Thread-safe memo of |R(sigma)| via the descent recursion.
class WordCounter {
 public:
  /// Throws std::overflow_error if the count does not fit in 64 bits.
  std::uint64_t count(const Permutation& sigma);
  std::size_t memo_size() const;

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<Permutation, std::uint64_t, PermutationHash> memo_;
};

/// |R(sigma)| using a process-wide WordCounter.
std::uint64_t count_words(const Permutation& sigma);

/// A partition, parts weakly decreasing and positive.
struct Shape {
  std::vector<int> parts;

  int size() const;
  bool valid() const;
  bool operator==(const Shape&) const = default;
};

/// No positions i<j<k<l with sigma_j < sigma_i < sigma_l < sigma_k.
bool is_vexillary(const Permutation& sigma);

/// Lehmer code sorted decreasingly, zeros dropped.
Shape lambda_shape(const Permutation& sigma);

/// Number of standard Young tableaux by the hook-length formula.
/// Throws std::invalid_argument for an invalid shape.
std::uint64_t hook_count(const Shape& shape);

}  // namespace redword
