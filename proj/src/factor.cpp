#include "redword/factor.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace redword {

std::vector<DescentBlock> descent_blocks(const GeneratorSet& s) {
  std::vector<DescentBlock> out;
  for (int i : s) {
    if (!out.empty() && out.back().last() + 1 == i)
      ++out.back().size;
    else
      out.push_back({i, 1});
  }
  return out;
}

StaircaseFactorization staircase_factorization(const Permutation& sigma) {
  StaircaseFactorization f;
  auto line = sigma.one_line();
  for (const auto& b : descent_blocks(descents(sigma))) {
    f.factors.push_back({b.size + 1, b.start});
    std::reverse(line.begin() + (b.start - 1), line.begin() + (b.start + b.size));
  }
  f.tau = Permutation(std::span<const int>(line));
  return f;
}

Word staircase_word(int n, const BlockFactor& f) {
  if (f.k < 2 || f.i < 1 || f.i + f.k - 1 > n) throw std::out_of_range("staircase_word: block outside S_n");
  Word w{n, {}};
  for (int top = f.i; top <= f.i + f.k - 2; ++top)
    for (int a = top; a >= f.i; --a) w.letters.push_back(static_cast<Letter>(a));
  return w;
}

Word factorization_word(const StaircaseFactorization& f) {
  Word w = canonical_word(f.tau);
  for (const auto& b : f.factors) {
    const Word v = staircase_word(f.tau.degree(), b);
    w.letters.insert(w.letters.end(), v.letters.begin(), v.letters.end());
  }
  return w;
}

Permutation minimal_perm_for_descents(const GeneratorSet& d, int n) {
  std::vector<int> line(n);
  for (int k = 0; k < n; ++k) line[k] = k + 1;
  for (int i : d)
    if (i >= n) throw std::out_of_range("descent " + std::to_string(i) + " outside 1.." + std::to_string(n - 1));
  for (const auto& b : descent_blocks(d)) std::reverse(line.begin() + (b.start - 1), line.begin() + (b.start + b.size));
  return Permutation(std::span<const int>(line));
}

std::optional<BlockFactor> as_w0_block(const Permutation& sigma) {
  const int n = sigma.degree();
  int lo = 1, hi = n;
  while (lo <= n && sigma(lo) == lo) ++lo;
  if (lo > n) return std::nullopt;
  while (sigma(hi) == hi) --hi;
  for (int p = lo; p <= hi; ++p)
    if (sigma(p) != lo + hi - p) return std::nullopt;
  return BlockFactor{hi - lo + 1, lo};
}

namespace {

std::vector<int> differences(std::span<const Letter> w) {
  std::vector<int> d;
  for (std::size_t k = 0; k + 1 < w.size(); ++k) d.push_back(static_cast<int>(w[k]) - static_cast<int>(w[k + 1]));
  return d;
}

struct DiffHash {
  std::size_t operator()(const std::vector<int>& d) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : d) h = (h ^ static_cast<std::size_t>(x + 64)) * 1099511628211ull;
    return h;
  }
};

}  // namespace

std::vector<std::vector<int>> difference_sequences(const WordSet& words) {
  std::vector<std::vector<int>> out;
  out.reserve(words.size());
  for (std::size_t k = 0; k < words.size(); ++k) out.push_back(differences(words[k]));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool are_equivalent(const Permutation& s, const Permutation& t) {
  if (length(s) != length(t)) return false;
  if (s == t) return true;
  const WordSet rs = enumerate_desc(s);
  std::unordered_map<std::vector<int>, bool, DiffHash> seen;
  seen.reserve(rs.size());
  for (std::size_t k = 0; k < rs.size(); ++k) seen.emplace(differences(rs[k]), true);
  const WordSet rt = enumerate_desc(t);
  for (std::size_t k = 0; k < rt.size(); ++k)
    if (seen.contains(differences(rt[k]))) return true;
  return false;
}

bool graphs_match_by_differences(const WordGraph& g, const WordGraph& h) {
  if (g.vertex_count() != h.vertex_count() || g.edges().size() != h.edges().size()) return false;
  std::unordered_map<std::vector<int>, std::uint32_t, DiffHash> target;
  for (std::uint32_t v = 0; v < h.vertex_count(); ++v)
    if (!target.emplace(differences(h.vertices()[v]), v).second) return false;
  std::vector<std::uint32_t> map(g.vertex_count());
  std::vector<bool> hit(h.vertex_count(), false);
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    auto it = target.find(differences(g.vertices()[v]));
    if (it == target.end() || hit[it->second]) return false;
    map[v] = it->second;
    hit[it->second] = true;
  }
  std::vector<Edge> image;
  for (const Edge& e : g.edges()) {
    auto [a, b] = std::minmax(map[e.u], map[e.v]);
    image.push_back({a, b, e.kind});
  }
  std::sort(image.begin(), image.end());
  return std::equal(image.begin(), image.end(), h.edges().begin(), h.edges().end());
}

const char* to_string(CoverCheck c) {
  switch (c) {
    case CoverCheck::Holds: return "holds";
    case CoverCheck::Fails: return "fails";
    case CoverCheck::Skipped: return "skipped";
  }
  return "?";
}

CoverUniqueness check_w0_cover_uniqueness(const Permutation& sigma) {
  auto big_block = [](const Permutation& p) {
    const auto b = as_w0_block(p);
    return b && b->k > 2;
  };
  CoverUniqueness out;
  if (big_block(sigma)) return out;
  for (int i : ascents(sigma))
    if (big_block(right_mult(sigma, i))) return out;
  for (int j : descents(sigma))
    if (big_block(right_mult(sigma, j))) ++out.block_children;
  if (out.block_children == 0) return out;
  out.status = out.block_children <= 1 ? CoverCheck::Holds : CoverCheck::Fails;
  return out;
}

}  // namespace redword
