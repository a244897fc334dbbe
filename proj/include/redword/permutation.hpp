#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace redword {

/// Generator index i of the simple transposition s_i = (i i+1); 1-based.
using Letter = std::uint8_t;

/// A set of generator indices {1..n-1}, stored as a bitmask.
///
/// Used for descent and ascent sets as well as supports. Iteration is in
/// increasing order.
class GeneratorSet {
 public:
  GeneratorSet() = default;
  GeneratorSet(std::initializer_list<int> indices);

  static GeneratorSet from_mask(std::uint32_t mask) {
    GeneratorSet s;
    s.mask_ = mask;
    return s;
  }

  bool contains(int i) const { return i >= 1 && i < 32 && ((mask_ >> i) & 1u) != 0; }
  void insert(int i);
  void erase(int i);
  int size() const;
  bool empty() const { return mask_ == 0; }
  std::uint32_t mask() const { return mask_; }

  std::vector<int> to_vector() const;

  GeneratorSet operator|(GeneratorSet o) const { return from_mask(mask_ | o.mask_); }
  GeneratorSet operator&(GeneratorSet o) const { return from_mask(mask_ & o.mask_); }
  GeneratorSet operator-(GeneratorSet o) const { return from_mask(mask_ & ~o.mask_); }

  bool operator==(const GeneratorSet&) const = default;

  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    explicit iterator(std::uint32_t rest) : rest_(rest) {}
    int operator*() const { return __builtin_ctz(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      auto tmp = *this;
      ++*this;
      return tmp;
    }
    bool operator==(const iterator&) const = default;

   private:
    std::uint32_t rest_ = 0;
  };

  iterator begin() const { return iterator(mask_); }
  iterator end() const { return iterator(0); }

 private:
  std::uint32_t mask_ = 0;
};

using DescentSet = GeneratorSet;

std::string to_string(const GeneratorSet& s);

/// A permutation of {1..n} in one-line notation, n <= kMaxDegree.
///
/// Composition is (p*q)(x) = p(q(x)), so right multiplication by s_i swaps
/// the entries in positions i and i+1.
class Permutation {
 public:
  static constexpr int kMaxDegree = 16;

  Permutation() = default;

  /// Throws std::invalid_argument unless `one_line` is a bijection of {1..n}.
  explicit Permutation(std::span<const int> one_line);
  Permutation(std::initializer_list<int> one_line);

  static Permutation identity(int n);

  int degree() const { return n_; }

  /// sigma(pos) for 1 <= pos <= n.
  int operator()(int pos) const { return entries_[pos - 1]; }

  std::vector<int> one_line() const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

  std::size_t hash() const;

 private:
  friend Permutation right_mult(const Permutation&, int);
  friend Permutation compose(const Permutation&, const Permutation&);
  friend Permutation inverse(const Permutation&);

  // Entries past n_ are zero, so defaulted comparison orders by n then one-line.
  std::uint8_t n_ = 0;
  std::array<std::uint8_t, kMaxDegree> entries_{};
};

/// Number of inversions.
int length(const Permutation& p);

DescentSet descents(const Permutation& p);
DescentSet ascents(const Permutation& p);

/// p * s_i. Throws std::out_of_range unless 1 <= i <= n-1.
Permutation right_mult(const Permutation& p, int i);

/// (p*q)(x) = p(q(x)). Degrees must agree.
Permutation compose(const Permutation& p, const Permutation& q);

Permutation inverse(const Permutation& p);

/// The permutation reversing the window [i, i+k-1] and fixing everything else.
Permutation w0_block(int n, int k, int i);

/// The longest element [n, n-1, ..., 1].
Permutation longest(int n);

/// Right weak order: t <= s iff l(t) + l(t^-1 s) = l(s).
bool weak_leq(const Permutation& t, const Permutation& s);

/// Elements covered by s in the right weak order: {s*s_i : i in Des(s)}.
std::vector<Permutation> covers_of(const Permutation& s);

/// {j : sigma({1..j}) != {1..j}}.
GeneratorSet support(const Permutation& p);

/// All permutations of {1..n} in lexicographic one-line order.
std::vector<Permutation> all_permutations(int n);

/// Parses "[4,2,3,1,5]" or the compact "42315" (single digits, n <= 9).
/// Throws std::invalid_argument on malformed input.
Permutation parse_permutation(const std::string& text);

/// Compact form for n <= 9, bracketed comma form otherwise.
std::string to_string(const Permutation& p);

/// Always "[4,2,3,1,5]".
std::string to_bracket_string(const Permutation& p);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const { return p.hash(); }
};

}  // namespace redword

template <>
struct std::hash<redword::Permutation> {
  std::size_t operator()(const redword::Permutation& p) const { return p.hash(); }
};
