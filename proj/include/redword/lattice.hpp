#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "redword/permutation.hpp"

namespace redword {

struct Cover {
  std::uint32_t lower = 0;
  std::uint32_t upper = 0;
  int generator = 0;  // lower * s_generator = upper

  auto operator<=>(const Cover&) const = default;
};

/// Hasse diagram of the right weak order on S_n. Immutable once built.
class WeakOrderLattice {
 public:
  static constexpr int kMaxDegree = 8;

  /// Throws std::out_of_range unless 2 <= n <= max_degree (and max_degree <= 8).
  explicit WeakOrderLattice(int n, int max_degree = kMaxDegree);

  int degree() const { return n_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& element(std::uint32_t k) const { return elements_[k]; }
  std::uint32_t index_of(const Permutation& p) const;

  /// Sorted by (lower, upper).
  const std::vector<Cover>& covers() const { return covers_; }

  /// Undirected Hasse neighbours of an element, ascending.
  const std::vector<std::uint32_t>& neighbours(std::uint32_t k) const { return adjacency_[k]; }
  bool adjacent(std::uint32_t a, std::uint32_t b) const;

  std::uint32_t bottom() const;
  std::uint32_t top() const;

 private:
  int n_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> index_;
  std::vector<Cover> covers_;
  std::vector<std::vector<std::uint32_t>> adjacency_;
};

/// Counts from the descent sets: a square below sigma for each pair i, j in
/// Des(sigma) with |i - j| > 1, a hexagon for each pair i, i+1 in Des(sigma).
std::uint64_t count_4cycles(const WeakOrderLattice& lattice);
std::uint64_t count_6cycles(const WeakOrderLattice& lattice);

/// Chordless cycles of the given length in the undirected Hasse diagram,
/// one per vertex set, found by depth-first search.
std::uint64_t count_chordless_cycles(const WeakOrderLattice& lattice, int cycle_length);

/// {u : v <= u <= w}, ascending element indices. Throws std::invalid_argument
/// if v is not below w.
std::vector<std::uint32_t> interval(const WeakOrderLattice& lattice, const Permutation& v, const Permutation& w);

/// True iff v^{-1} w is a product of distinct pairwise commuting generators.
/// Throws std::invalid_argument if v is not below w.
bool is_boolean_interval(const Permutation& v, const Permutation& w);

/// Direct check that [v, w] is isomorphic to the Boolean lattice on its atoms:
/// u -> {atoms below u} must be an order isomorphism onto all subsets.
bool interval_is_boolean_poset(const WeakOrderLattice& lattice, const Permutation& v, const Permutation& w);

/// {"n", "elements": [...], "covers": [[lower, upper, i], ...]}
std::string export_json(const WeakOrderLattice& lattice);

}  // namespace redword
