#pragma once

// Brute-force reference computations for the test suites. Nothing here calls
// into the enumeration, graph or counting code under test; permutations are
// handled as plain vectors.

#include <algorithm>
#include <cstdlib>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace oracle {

using Perm = std::vector<int>;
using Letters = std::vector<int>;

inline int inversions(const Perm& p) {
  int c = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++c;
  return c;
}

inline Perm apply_word(const Letters& w, int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 1);
  for (int a : w) std::swap(p[a - 1], p[a]);
  return p;
}

/// Every sequence of length l(sigma) over {1..n-1} that evaluates to sigma.
inline std::vector<Letters> reduced_words(const Perm& sigma) {
  const int n = static_cast<int>(sigma.size());
  const int len = inversions(sigma);
  std::vector<Letters> out;
  if (n == 1 || len == 0) {
    out.push_back({});
    return out;
  }
  Letters w(len, 1);
  while (true) {
    if (apply_word(w, n) == sigma) out.push_back(w);
    int k = len - 1;
    while (k >= 0 && w[k] == n - 1) w[k--] = 1;
    if (k < 0) break;
    ++w[k];
  }
  return out;
}

inline std::string word_string(const Letters& w) {
  std::string s;
  for (int a : w) s += static_cast<char>('0' + a);
  return s;
}

enum class Kind { None, Commutation, Braid };

/// Classifies a pair of equal-length words by direct comparison.
inline Kind move_between(const Letters& x, const Letters& y) {
  std::vector<std::size_t> diff;
  for (std::size_t k = 0; k < x.size(); ++k)
    if (x[k] != y[k]) diff.push_back(k);
  if (diff.size() == 2 && diff[1] == diff[0] + 1) {
    const auto p = diff[0];
    if (x[p] == y[p + 1] && x[p + 1] == y[p] && std::abs(x[p] - x[p + 1]) > 1) return Kind::Commutation;
  }
  if (diff.size() == 3 && diff[2] == diff[0] + 2) {
    const auto p = diff[0];
    const int a = x[p], b = x[p + 1];
    if (x[p + 2] == a && std::abs(a - b) == 1 && y[p] == b && y[p + 1] == a && y[p + 2] == b) return Kind::Braid;
  }
  return Kind::None;
}

struct PairEdge {
  std::size_t u, v;
  Kind kind;
};

/// O(N^2) comparison of all word pairs; words must be sorted.
inline std::vector<PairEdge> pairwise_edges(const std::vector<Letters>& words) {
  std::vector<PairEdge> out;
  for (std::size_t u = 0; u < words.size(); ++u)
    for (std::size_t v = u + 1; v < words.size(); ++v) {
      const Kind k = move_between(words[u], words[v]);
      if (k != Kind::None) out.push_back({u, v, k});
    }
  return out;
}

inline std::size_t components(std::size_t n, const std::vector<PairEdge>& edges, Kind kind) {
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& e : edges)
    if (e.kind == kind) {
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
  std::vector<bool> seen(n, false);
  std::size_t count = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++count;
    std::deque<std::size_t> q{s};
    seen[s] = true;
    while (!q.empty()) {
      auto x = q.front();
      q.pop_front();
      for (auto y : adj[x])
        if (!seen[y]) {
          seen[y] = true;
          q.push_back(y);
        }
    }
  }
  return count;
}

struct Counts {
  std::size_t r, b, c, braid_edges, comm_edges;
};

inline Counts counts(const Perm& sigma) {
  const auto words = reduced_words(sigma);
  const auto edges = pairwise_edges(words);
  Counts out{words.size(), components(words.size(), edges, Kind::Braid),
             components(words.size(), edges, Kind::Commutation), 0, 0};
  for (const auto& e : edges) (e.kind == Kind::Braid ? out.braid_edges : out.comm_edges) += 1;
  return out;
}

/// Upward search along covers t -> t s_i (i an ascent of t) looking for s.
inline bool reachable_upward(const Perm& t, const Perm& s) {
  std::set<Perm> seen{t};
  std::deque<Perm> q{t};
  while (!q.empty()) {
    Perm x = q.front();
    q.pop_front();
    if (x == s) return true;
    for (std::size_t i = 0; i + 1 < x.size(); ++i)
      if (x[i] < x[i + 1]) {
        Perm y = x;
        std::swap(y[i], y[i + 1]);
        if (seen.insert(y).second) q.push_back(y);
      }
  }
  return false;
}

inline std::vector<Perm> all_perms(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 1);
  std::vector<Perm> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// f^lambda by the branching rule: remove one corner at a time.
inline std::uint64_t tableaux(std::vector<int> shape) {
  static std::map<std::vector<int>, std::uint64_t> memo;
  while (!shape.empty() && shape.back() == 0) shape.pop_back();
  if (shape.empty()) return 1;
  if (auto it = memo.find(shape); it != memo.end()) return it->second;
  std::uint64_t total = 0;
  for (std::size_t r = 0; r < shape.size(); ++r) {
    const bool corner = r + 1 == shape.size() || shape[r + 1] < shape[r];
    if (!corner) continue;
    auto smaller = shape;
    --smaller[r];
    total += tableaux(smaller);
  }
  return memo[shape] = total;
}

}  // namespace oracle
