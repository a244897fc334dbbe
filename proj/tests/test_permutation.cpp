#include "doctest.h"
#include "oracles.hpp"
#include "redword/permutation.hpp"
#include "redword/words.hpp"

using namespace redword;

TEST_CASE("identity") {
  const auto e = Permutation::identity(4);
  CHECK(e.one_line() == std::vector<int>{1, 2, 3, 4});
  CHECK(length(e) == 0);
  CHECK(Permutation::identity(1).one_line() == std::vector<int>{1});
  CHECK(descents(Permutation::identity(5)).empty());
  CHECK_THROWS_AS(Permutation::identity(0), std::invalid_argument);
}

TEST_CASE("construction rejects non-bijections") {
  CHECK_THROWS_AS(Permutation({1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({1, 2, 4}), std::invalid_argument);
  std::vector<int> big(17);
  for (int k = 0; k < 17; ++k) big[k] = k + 1;
  CHECK_THROWS_AS(Permutation(std::span<const int>(big)), std::invalid_argument);
}

TEST_CASE("right multiplication swaps positions") {
  CHECK(right_mult(Permutation{4, 2, 3, 1, 5}, 1) == Permutation{2, 4, 3, 1, 5});
  const auto p = right_mult(Permutation::identity(3), 1);
  CHECK(p == Permutation{2, 1, 3});
  CHECK(length(p) == 1);
  CHECK(evaluate(parse_word("12321", 5)) == Permutation{4, 2, 3, 1, 5});
  CHECK_THROWS_AS(right_mult(Permutation::identity(3), 3), std::out_of_range);
  CHECK_THROWS_AS(right_mult(Permutation::identity(3), 0), std::out_of_range);
}

TEST_CASE("length") {
  CHECK(length(Permutation{4, 2, 3, 1, 5}) == 5);
  CHECK(length(Permutation::identity(7)) == 0);
  CHECK(length(longest(5)) == 10);
}

TEST_CASE("descents and ascents") {
  CHECK(descents(Permutation{2, 4, 3, 1}) == GeneratorSet{2, 3});
  CHECK(descents(Permutation{3, 2, 1, 5, 4, 7, 6}) == GeneratorSet{1, 2, 4, 6});
  CHECK(descents(Permutation::identity(6)).empty());
  for (const auto& p : all_permutations(5)) {
    const auto d = descents(p), a = ascents(p);
    CHECK((d & a).empty());
    CHECK((d | a) == GeneratorSet{1, 2, 3, 4});
  }
}

TEST_CASE("w0 blocks") {
  CHECK(w0_block(6, 3, 4) == Permutation{1, 2, 3, 6, 5, 4});
  CHECK(w0_block(6, 3, 1) == Permutation{3, 2, 1, 4, 5, 6});
  CHECK(w0_block(5, 5, 1) == longest(5));
  CHECK_THROWS_AS(w0_block(5, 3, 4), std::out_of_range);
  CHECK_THROWS_AS(w0_block(5, 1, 1), std::out_of_range);
  for (int n = 2; n <= 7; ++n)
    for (int k = 2; k <= n; ++k)
      for (int i = 1; i + k - 1 <= n; ++i) {
        const auto b = w0_block(n, k, i);
        GeneratorSet expected;
        for (int d = i; d <= i + k - 2; ++d) expected.insert(d);
        CHECK(descents(b) == expected);
        CHECK(length(b) == k * (k - 1) / 2);
      }
}

TEST_CASE("weak order") {
  CHECK_FALSE(weak_leq(Permutation{2, 1, 3}, Permutation{1, 3, 2}));
  CHECK_FALSE(oracle::reachable_upward({2, 1, 3}, {1, 3, 2}));
  for (const auto& s : all_permutations(4)) {
    CHECK(weak_leq(Permutation::identity(4), s));
    CHECK(weak_leq(s, longest(4)));
  }
  CHECK_THROWS_AS(weak_leq(Permutation::identity(3), Permutation::identity(4)), std::invalid_argument);
}

TEST_CASE("weak order agrees with cover-chain search and is a partial order on S4") {
  const auto perms = all_permutations(4);
  for (const auto& t : perms)
    for (const auto& s : perms) CHECK(weak_leq(t, s) == oracle::reachable_upward(t.one_line(), s.one_line()));
  for (const auto& a : perms) {
    CHECK(weak_leq(a, a));
    for (const auto& b : perms) {
      if (a != b && weak_leq(a, b)) CHECK_FALSE(weak_leq(b, a));
      for (const auto& c : perms)
        if (weak_leq(a, b) && weak_leq(b, c)) CHECK(weak_leq(a, c));
    }
  }
}

TEST_CASE("weak order is a partial order on S5") {
  const auto perms = all_permutations(5);
  std::vector<std::vector<bool>> leq(perms.size(), std::vector<bool>(perms.size()));
  for (std::size_t a = 0; a < perms.size(); ++a)
    for (std::size_t b = 0; b < perms.size(); ++b) leq[a][b] = weak_leq(perms[a], perms[b]);
  for (std::size_t a = 0; a < perms.size(); ++a) {
    CHECK(leq[a][a]);
    for (std::size_t b = 0; b < perms.size(); ++b) {
      if (a != b && leq[a][b]) CHECK_FALSE(leq[b][a]);
      if (!leq[a][b]) continue;
      for (std::size_t c = 0; c < perms.size(); ++c)
        if (leq[b][c]) CHECK(leq[a][c]);
    }
  }
}

TEST_CASE("covers") {
  CHECK(covers_of(Permutation::identity(4)).empty());
  const auto w0 = longest(3);
  const auto cov = covers_of(w0);
  REQUIRE(cov.size() == 2);
  CHECK(cov[0] == Permutation{2, 3, 1});
  CHECK(cov[1] == Permutation{3, 1, 2});
  CHECK(covers_of(Permutation{4, 2, 3, 1, 5}).size() == 2);
}

TEST_CASE("length changes by one under right multiplication") {
  for (const auto& p : all_permutations(5))
    for (int i = 1; i < 5; ++i) {
      const int delta = length(right_mult(p, i)) - length(p);
      CHECK((delta == 1 || delta == -1));
      CHECK((delta == -1) == descents(p).contains(i));
      CHECK(length(p) == oracle::inversions(p.one_line()));
    }
}

TEST_CASE("support") {
  CHECK(support(Permutation{4, 2, 3, 1, 5}) == GeneratorSet{1, 2, 3});
  CHECK(support(Permutation::identity(5)).empty());
  CHECK(support(w0_block(6, 3, 4)) == GeneratorSet{4, 5});
}

TEST_CASE("support equals the letters of every reduced word (S5)") {
  for (const auto& p : all_permutations(5)) {
    GeneratorSet letters;
    for (const auto& w : oracle::reduced_words(p.one_line()))
      for (int a : w) letters.insert(a);
    CHECK(support(p) == letters);
  }
}

TEST_CASE("group operations") {
  for (const auto& p : all_permutations(4)) {
    CHECK(compose(p, inverse(p)) == Permutation::identity(4));
    CHECK(length(inverse(p)) == length(p));
  }
  CHECK_THROWS_AS(compose(Permutation::identity(3), Permutation::identity(4)), std::invalid_argument);
}

TEST_CASE("text forms") {
  CHECK(parse_permutation("42315") == Permutation{4, 2, 3, 1, 5});
  CHECK(parse_permutation("[4,2,3,1,5]") == Permutation{4, 2, 3, 1, 5});
  CHECK(parse_permutation(" [4, 2, 3, 1, 5] ") == Permutation{4, 2, 3, 1, 5});
  CHECK(to_string(Permutation{4, 2, 3, 1, 5}) == "42315");
  CHECK(to_bracket_string(Permutation{4, 2, 3, 1, 5}) == "[4,2,3,1,5]");
  CHECK(to_string(Permutation::identity(10)) == "[1,2,3,4,5,6,7,8,9,10]");
  CHECK_THROWS_AS(parse_permutation("1234567891"), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation("4251"), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation("[1,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation("12a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation(""), std::invalid_argument);
}

TEST_CASE("permutations built along different words compare equal") {
  const auto a = evaluate(parse_word("121", 3));
  const auto b = evaluate(parse_word("212", 3));
  CHECK(a == b);
  CHECK(a.hash() == b.hash());
  CHECK(Permutation::identity(3) != Permutation::identity(4));
}
