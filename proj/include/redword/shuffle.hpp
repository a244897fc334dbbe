#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "redword/factor.hpp"
#include "redword/graph.hpp"
#include "redword/words.hpp"

namespace redword {

/// A word whose letters carry a colour: 0 for alpha (blue), j for beta_j (red).
struct ColoredWord {
  Word word;
  std::vector<std::uint8_t> colors;

  bool operator==(const ColoredWord&) const = default;
};

/// "45|234232" style: bars between maximal runs of one colour.
std::string to_string(const ColoredWord& w);

/// sigma = alpha * beta_1 * ... * beta_m with lengths adding. The seed is
/// canonical_word(alpha) followed by one reduced word per beta.
struct ShuffleSplit {
  Permutation sigma = Permutation::identity(1);
  Permutation alpha = Permutation::identity(1);
  std::vector<Permutation> betas;
  ColoredWord seed;

  /// Colour whose positions label configurations: alpha, or beta_1 if alpha = e.
  std::uint8_t tracked_color() const;
  Permutation factor(std::uint8_t color) const { return color == 0 ? alpha : betas.at(color - 1); }
};

/// Throws std::invalid_argument if the lengths do not add up.
ShuffleSplit make_split(const Permutation& alpha, const std::vector<Permutation>& betas);

/// alpha = tau, betas = the w0 blocks of the staircase factorization.
ShuffleSplit staircase_split(const Permutation& sigma);

/// beta = w0 block of one maximal run of descents, alpha = sigma * beta.
ShuffleSplit block_split(const Permutation& sigma, const DescentBlock& block);

/// block_split on the first longest run. Throws std::invalid_argument for the identity.
ShuffleSplit longest_block_split(const Permutation& sigma);

enum class ShuffleType { Monochrome = 1, BichromeCommutation = 2, BichromeBraid = 3 };

/// Type of the single move taking w1 to w2. Commutations carry colours with
/// the letters; braids keep the colour pattern of the window in place.
/// Throws std::invalid_argument if the words are not one move apart.
ShuffleType classify_shuffle(const ColoredWord& w1, const ColoredWord& w2);

/// Two different colour classes have supports containing a and a+1.
bool can_type3(const ShuffleSplit& split);

class Type3Possible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// C_I: the words whose tracked-colour letters sit at positions I (1-based).
struct Configuration {
  std::vector<int> positions;
  std::vector<std::uint32_t> members;  // indices into R(sigma), ascending
};

struct ConfigurationSet {
  ShuffleSplit split;
  WordSet words;                                  // R(sigma)
  std::vector<std::vector<std::uint8_t>> colors;  // colouring of each word
  std::vector<Configuration> configs;             // ascending by positions

  ColoredWord colored(std::uint32_t v) const;
};

/// Colour-tracked closure of the seed under all moves. Throws Type3Possible
/// if can_type3(split), and std::logic_error if a word is reached with two
/// different colourings or the closure misses part of R(sigma).
ConfigurationSet configurations(const ShuffleSplit& split);

/// H_I: the induced subgraph of G(sigma) on C_I.
struct Subgraph {
  std::vector<std::uint32_t> vertices;
  std::vector<Edge> edges;  // indices into G(sigma)
};

Subgraph subgraph_H(const WordGraph& g, const Configuration& c);

/// Every edge of H_I changes one colour's subword by a move of the same kind,
/// so H_I embeds in the product of the factor graphs.
bool is_product_subgraph(const WordGraph& g, const ConfigurationSet& set, const Configuration& c);

struct CountBound {
  std::uint64_t lhs = 0;  // |R(sigma)|
  std::uint64_t rhs = 0;  // |R(alpha)| |R(beta)| binom(l(sigma), l(alpha))
  bool holds = false;
  bool type3_possible = false;
};

/// Throws std::invalid_argument unless sigma = alpha * beta with lengths adding.
CountBound check_count_bound(const Permutation& sigma, const Permutation& alpha, const Permutation& beta);

/// |R(alpha)| * sum d_B over G(beta) + |R(beta)| * sum d_B over G(alpha).
std::uint64_t product_braid_degree_sum(const Permutation& alpha, const Permutation& beta);

/// Degree sums of the Cartesian product graph, built edge by edge.
DegreeSums product_degree_sums(const WordGraph& a, const WordGraph& b);

/// {"sigma", "alpha", "betas", "tracked", "configurations": [{"positions", "size", "words"}]}
std::string export_json(const ConfigurationSet& set);

}  // namespace redword
