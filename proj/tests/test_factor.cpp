#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "redword/factor.hpp"

using namespace redword;

namespace {

std::size_t binom2(int k) { return static_cast<std::size_t>(k * (k - 1) / 2); }

}  // namespace

TEST_CASE("descent blocks") {
  CHECK(descent_blocks(GeneratorSet{1, 2, 4, 6}) == std::vector<DescentBlock>{{1, 2}, {4, 1}, {6, 1}});
  CHECK(descent_blocks(GeneratorSet{2, 3}) == std::vector<DescentBlock>{{2, 2}});
  CHECK(descent_blocks(GeneratorSet{}).empty());
  for (const auto& p : all_permutations(6)) {
    const auto blocks = descent_blocks(descents(p));
    GeneratorSet joined;
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      for (int i = blocks[k].start; i <= blocks[k].last(); ++i) joined.insert(i);
      if (k > 0) CHECK(blocks[k].start >= blocks[k - 1].last() + 2);
    }
    CHECK(joined == descents(p));
  }
}

TEST_CASE("staircase factorization examples") {
  const auto f = staircase_factorization(parse_permutation("3215476"));
  CHECK(f.tau == Permutation::identity(7));
  CHECK(f.factors == std::vector<BlockFactor>{{3, 1}, {2, 4}, {2, 6}});

  const auto g = staircase_factorization(parse_permutation("165324"));
  CHECK(g.tau == parse_permutation("123564"));
  CHECK(g.factors == std::vector<BlockFactor>{{4, 2}});
  CHECK(to_string(canonical_word(g.tau)) == "45");
  CHECK(to_string(staircase_word(6, g.factors[0])) == "232432");
  CHECK(to_string(factorization_word(g)) == "45232432");

  const auto e = staircase_factorization(Permutation::identity(5));
  CHECK(e.tau == Permutation::identity(5));
  CHECK(e.factors.empty());
}

TEST_CASE("staircase words") {
  CHECK(to_string(staircase_word(3, {3, 1})) == "121");
  CHECK(to_string(staircase_word(5, {2, 4})) == "4");
  CHECK(to_string(staircase_word(5, {4, 1})) == "121321");
  for (int n = 2; n <= 7; ++n)
    for (int k = 2; k <= n; ++k)
      for (int i = 1; i + k - 1 <= n; ++i) {
        const Word w = staircase_word(n, {k, i});
        CHECK(w.letters.size() == binom2(k));
        CHECK(evaluate(w) == w0_block(n, k, i));
      }
  CHECK_THROWS_AS(staircase_word(4, {4, 2}), std::out_of_range);
  CHECK_THROWS_AS(staircase_word(4, {1, 1}), std::out_of_range);
}

TEST_CASE("factorization roundtrip on S5 and S6") {
  for (int n : {5, 6})
    for (const auto& p : all_permutations(n)) {
      const auto f = staircase_factorization(p);
      Permutation product = f.tau;
      std::size_t block_length = 0;
      for (const auto& b : f.factors) {
        product = compose(product, w0_block(n, b.k, b.i));
        block_length += binom2(b.k);
      }
      CHECK(product == p);
      CHECK(static_cast<std::size_t>(length(f.tau)) + block_length == static_cast<std::size_t>(length(p)));
      for (std::size_t a = 0; a < f.factors.size(); ++a)
        for (std::size_t b = a + 1; b < f.factors.size(); ++b)
          CHECK(f.factors[a].i + f.factors[a].k <= f.factors[b].i);
      const Word w = factorization_word(f);
      CHECK(is_reduced(w));
      CHECK(evaluate(w) == p);
      if (n == 5) {
        const auto words = oracle::reduced_words(p.one_line());
        std::vector<int> letters(w.letters.begin(), w.letters.end());
        CHECK(std::binary_search(words.begin(), words.end(), letters));
      }
    }
}

TEST_CASE("minimal permutation for a descent set") {
  CHECK(minimal_perm_for_descents(GeneratorSet{1, 2}, 4) == parse_permutation("3214"));
  CHECK(minimal_perm_for_descents(GeneratorSet{1, 3}, 4) == parse_permutation("2143"));
  CHECK(minimal_perm_for_descents(GeneratorSet{}, 4) == Permutation::identity(4));
  CHECK_THROWS_AS(minimal_perm_for_descents(GeneratorSet{4}, 4), std::out_of_range);

  for (int n = 2; n <= 5; ++n) {
    std::map<std::uint32_t, std::vector<Permutation>> by_descents;
    for (const auto& p : oracle::all_perms(n)) {
      const Permutation q{std::span<const int>(p)};
      by_descents[descents(q).mask()].push_back(q);
    }
    CHECK(by_descents.size() == (std::size_t{1} << (n - 1)));
    for (const auto& [mask, members] : by_descents) {
      const auto d = GeneratorSet::from_mask(mask);
      const auto m = minimal_perm_for_descents(d, n);
      CHECK(descents(m) == d);
      for (const auto& q : members)
        if (q != m) CHECK(oracle::inversions(q.one_line()) > oracle::inversions(m.one_line()));
    }
  }
}

TEST_CASE("w0 block detection") {
  CHECK(as_w0_block(parse_permutation("123654")) == BlockFactor{3, 4});
  CHECK_FALSE(as_w0_block(parse_permutation("42315")));
  CHECK(as_w0_block(longest(5)) == BlockFactor{5, 1});
  CHECK(as_w0_block(parse_permutation("1324")) == BlockFactor{2, 2});
  CHECK_FALSE(as_w0_block(Permutation::identity(4)));
  CHECK_FALSE(as_w0_block(parse_permutation("2143")));
  int found = 0;
  for (const auto& p : all_permutations(6))
    if (as_w0_block(p)) ++found;
  CHECK(found == 15);
}

TEST_CASE("equivalence examples") {
  CHECK(are_equivalent(parse_permutation("321456"), parse_permutation("123654")));
  CHECK(are_equivalent(parse_permutation("42315"), parse_permutation("42315")));
  CHECK_FALSE(are_equivalent(parse_permutation("2134"), parse_permutation("2314")));
  CHECK_FALSE(are_equivalent(parse_permutation("2134"), parse_permutation("2143")));
  CHECK(are_equivalent(parse_permutation("2134"), parse_permutation("1243")));
}

TEST_CASE("equivalent pairs in S5 have matching graphs") {
  const auto perms = all_permutations(5);
  std::vector<std::vector<std::vector<int>>> diffs;
  for (const auto& p : perms) diffs.push_back(difference_sequences(enumerate_desc(p)));
  int pairs = 0;
  for (std::size_t a = 0; a < perms.size(); ++a)
    for (std::size_t b = a + 1; b < perms.size(); ++b) {
      if (!are_equivalent(perms[a], perms[b])) continue;
      ++pairs;
      CHECK(diffs[a] == diffs[b]);
      const auto g = build_graph(perms[a]);
      const auto h = build_graph(perms[b]);
      CHECK(graphs_match_by_differences(g, h));
      CHECK(graph_stats(g) == graph_stats(h));
    }
  CHECK(pairs > 0);
}

TEST_CASE("difference sequences") {
  const auto d = difference_sequences(enumerate_desc(longest(3)));
  CHECK(d == std::vector<std::vector<int>>{{-1, 1}, {1, -1}});
}

TEST_CASE("cover uniqueness") {
  CHECK(check_w0_cover_uniqueness(parse_permutation("2143")).status == CoverCheck::Skipped);
  CHECK(check_w0_cover_uniqueness(longest(4)).status == CoverCheck::Skipped);
  int holds = 0;
  for (const auto& p : all_permutations(5)) {
    const auto c = check_w0_cover_uniqueness(p);
    CHECK(c.status != CoverCheck::Fails);
    if (c.status == CoverCheck::Holds) {
      ++holds;
      CHECK(c.block_children == 1);
    }
  }
  CHECK(holds > 0);
  CHECK(std::string(to_string(CoverCheck::Skipped)) == "skipped");
}
