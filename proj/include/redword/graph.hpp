#pragma once

#include <cstdint>
#include <map>
#include <shared_mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "redword/permutation.hpp"
#include "redword/words.hpp"

namespace redword {

enum class EdgeKind : std::uint8_t { Commutation, Braid };

const char* to_string(EdgeKind kind);

struct Edge {
  std::uint32_t u = 0;  // u < v, indices into the sorted vertex list
  std::uint32_t v = 0;
  EdgeKind kind = EdgeKind::Commutation;

  auto operator<=>(const Edge&) const = default;
};

/// G(sigma): vertices R(sigma), edges labelled by the move that relates two words.
class WordGraph {
 public:
  WordGraph(WordSet vertices, std::vector<Edge> edges);

  const Permutation& sigma() const { return vertices_.sigma(); }
  const WordSet& vertices() const { return vertices_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  std::size_t edge_count(EdgeKind kind) const;

  /// d_B(v) or d_C(v) for every vertex.
  std::vector<std::uint32_t> degrees(EdgeKind kind) const;

  bool connected() const;

 private:
  WordSet vertices_;
  std::vector<Edge> edges_;
};

/// Builds G(sigma) by rewriting each word at every adjacent pair and 3-window.
/// Throws std::logic_error if a rewrite leaves the vertex set (it is not closed
/// under moves, so it is not R(sigma)).
WordGraph build_graph(const Permutation& sigma);
WordGraph build_graph(WordSet vertices);

/// Components of G'_B or G'_C.
struct ClassPartition {
  EdgeKind kind = EdgeKind::Braid;
  std::vector<std::vector<std::uint32_t>> blocks;  // each sorted; blocks ordered by first vertex

  std::size_t count() const { return blocks.size(); }
};

ClassPartition classes(const WordGraph& g, EdgeKind kind);

/// Same as classes(g, kind).count() without materializing the blocks.
std::size_t class_count(const WordGraph& g, EdgeKind kind);

struct DegreeSums {
  std::uint64_t braid = 0;
  std::uint64_t commutation = 0;
};

DegreeSums degree_sums(const WordGraph& g);

/// Vertex indices grouped by final letter; keys are exactly Des(sigma).
/// Throws std::invalid_argument for the identity.
std::map<int, std::vector<std::uint32_t>> partition_by_last_letter(const WordGraph& g);

struct CrossCount {
  std::uint64_t braid = 0;
  std::uint64_t commutation = 0;

  bool operator==(const CrossCount&) const = default;
};

/// Edges whose endpoints end in different letters i < j, tallied per (i, j).
std::map<std::pair<int, int>, CrossCount> cross_edge_counts(const WordGraph& g);

/// Deterministic DOT text: solid commutation edges, dashed braid edges.
std::string export_dot(const WordGraph& g);

/// {"sigma", "n", "vertices", "edges": [[u,v,"B"|"C"],...], "braid_classes", "comm_classes"}
std::string export_json(const WordGraph& g);

/// Per-permutation counts used by the recursions and the scanner.
struct GraphStats {
  std::uint64_t r = 0;       // |R|
  std::uint64_t b = 0;       // |B|
  std::uint64_t c = 0;       // |C|
  std::uint64_t sum_db = 0;  // sum of braid degrees
  std::uint64_t sum_dc = 0;  // sum of commutation degrees
  bool connected = false;

  bool operator==(const GraphStats&) const = default;
};

GraphStats graph_stats(const WordGraph& g);

/// Same counts without materializing G(sigma): words are hashed with a
/// polynomial hash updated in place for each rewrite.
GraphStats graph_stats(const Permutation& sigma);

class ResourceCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thread-safe memo of GraphStats. Graphs are built on demand and discarded.
class StatsCache {
 public:
  explicit StatsCache(std::uint64_t max_words = 4'000'000) : max_words_(max_words) {}

  /// Throws ResourceCapExceeded if |R(sigma)| > max_words.
  GraphStats get(const Permutation& sigma);
  bool within_cap(const Permutation& sigma) const;
  std::uint64_t max_words() const { return max_words_; }

 private:
  std::uint64_t max_words_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<Permutation, GraphStats, PermutationHash> memo_;
};

/// Both sides of an identity, computed by separate routes.
struct IdentityCheck {
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;

  bool holds() const { return lhs == rhs; }
};

/// |R(sigma)| (vertex count of G(sigma)) against sum over Des of the memoized counts.
IdentityCheck verify_word_count_recursion(const Permutation& sigma, StatsCache& cache);

/// Sum d_B over G(sigma) against the children's sums plus 2 * sum |R(sigma s_i s_{i+1} s_i)|.
IdentityCheck verify_braid_edge_recursion(const Permutation& sigma, StatsCache& cache);

/// Sum d_C over G(sigma) against the children's sums plus 2 * sum_{|i-j|>1} |R(sigma s_j s_i)|.
IdentityCheck verify_comm_edge_recursion(const Permutation& sigma, StatsCache& cache);

/// |B(sigma)| against sum |B(sigma s_i)| - sum |B(sigma s_i s_{i+1} s_i)|.
/// The identity is its own base case: |B(e)| = 1.
IdentityCheck verify_braid_class_recursion(const Permutation& sigma, StatsCache& cache);

}  // namespace redword
