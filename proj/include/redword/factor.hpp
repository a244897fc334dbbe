#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "redword/graph.hpp"
#include "redword/permutation.hpp"
#include "redword/words.hpp"

namespace redword {

/// A maximal run [start, start + size - 1] of consecutive descents.
struct DescentBlock {
  int start = 0;
  int size = 0;

  int last() const { return start + size - 1; }
  auto operator<=>(const DescentBlock&) const = default;
};

/// Maximal runs of consecutive elements, ascending.
std::vector<DescentBlock> descent_blocks(const GeneratorSet& s);

/// w0^(k,i) reverses the window [i, i+k-1].
struct BlockFactor {
  int k = 0;
  int i = 0;

  auto operator<=>(const BlockFactor&) const = default;
};

/// sigma = tau * prod w0^(k_j, i_j), one factor per maximal descent block, lengths adding.
struct StaircaseFactorization {
  Permutation tau = Permutation::identity(1);
  std::vector<BlockFactor> factors;  // ascending i
};

StaircaseFactorization staircase_factorization(const Permutation& sigma);

/// i (i+1)i (i+2)(i+1)i ... (i+k-2)...i, a reduced word of w0^(k,i) in S_n.
Word staircase_word(int n, const BlockFactor& f);

/// canonical_word(tau) followed by the staircase words of the factors.
Word factorization_word(const StaircaseFactorization& f);

/// Product of w0 blocks over the maximal runs of D. Throws std::out_of_range
/// if D has an element outside 1..n-1.
Permutation minimal_perm_for_descents(const GeneratorSet& d, int n);

/// (k, i) if sigma reverses exactly one window of size k >= 2 and fixes the rest.
std::optional<BlockFactor> as_w0_block(const Permutation& sigma);

/// Some reduced word of s and some reduced word of t have the same sequence
/// of successive differences. Equal lengths are required.
bool are_equivalent(const Permutation& s, const Permutation& t);

/// Difference sequences of all reduced words, sorted and deduplicated.
std::vector<std::vector<int>> difference_sequences(const WordSet& words);

/// Matches vertices of g to vertices of h with the same difference sequence
/// and checks that this is a bijection carrying edges to edges of the same kind.
bool graphs_match_by_differences(const WordGraph& g, const WordGraph& h);

enum class CoverCheck { Holds, Fails, Skipped };

const char* to_string(CoverCheck c);

struct CoverUniqueness {
  CoverCheck status = CoverCheck::Skipped;
  int block_children = 0;  // j in Des(sigma) with sigma s_j a w0 block of size > 2
};

/// Skipped when sigma is itself a w0 block of size > 2, is covered by one, or
/// has no child that is one; otherwise Holds iff at most one child is.
CoverUniqueness check_w0_cover_uniqueness(const Permutation& sigma);

}  // namespace redword
