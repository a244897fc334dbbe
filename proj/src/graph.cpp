#include "redword/graph.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace redword {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a < b) std::swap(a, b);
    parent_[a] = b;  // smaller index is the root
    return true;
  }

 private:
  std::vector<std::uint32_t> parent_;
};

}  // namespace

const char* to_string(EdgeKind kind) { return kind == EdgeKind::Braid ? "B" : "C"; }

WordGraph::WordGraph(WordSet vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
}

std::size_t WordGraph::edge_count(EdgeKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [kind](const Edge& e) { return e.kind == kind; }));
}

std::vector<std::uint32_t> WordGraph::degrees(EdgeKind kind) const {
  std::vector<std::uint32_t> d(vertex_count(), 0);
  for (const Edge& e : edges_)
    if (e.kind == kind) {
      ++d[e.u];
      ++d[e.v];
    }
  return d;
}

bool WordGraph::connected() const {
  DisjointSets ds(vertex_count());
  std::size_t components = vertex_count();
  for (const Edge& e : edges_)
    if (ds.unite(e.u, e.v)) --components;
  return components == 1;
}

WordGraph build_graph(const Permutation& sigma) { return build_graph(enumerate_desc(sigma)); }

WordGraph build_graph(WordSet vertices) {
  std::vector<Edge> edges;
  std::vector<Letter> scratch;
  for (std::uint32_t u = 0; u < vertices.size(); ++u) {
    for_each_move(vertices[u], scratch, [&](std::span<const Letter> next, bool braid) {
      const auto v = vertices.find(next);
      if (!v) throw std::logic_error("build_graph: vertex set not closed under moves");
      if (u < *v) edges.push_back({u, *v, braid ? EdgeKind::Braid : EdgeKind::Commutation});
    });
  }
  return WordGraph(std::move(vertices), std::move(edges));
}

ClassPartition classes(const WordGraph& g, EdgeKind kind) {
  DisjointSets ds(g.vertex_count());
  for (const Edge& e : g.edges())
    if (e.kind == kind) ds.unite(e.u, e.v);
  ClassPartition out{kind, {}};
  std::unordered_map<std::uint32_t, std::size_t> block_of_root;
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    const auto root = ds.find(v);
    auto [it, fresh] = block_of_root.try_emplace(root, out.blocks.size());
    if (fresh) out.blocks.emplace_back();
    out.blocks[it->second].push_back(v);
  }
  return out;
}

std::size_t class_count(const WordGraph& g, EdgeKind kind) {
  DisjointSets ds(g.vertex_count());
  std::size_t components = g.vertex_count();
  for (const Edge& e : g.edges())
    if (e.kind == kind && ds.unite(e.u, e.v)) --components;
  return components;
}

DegreeSums degree_sums(const WordGraph& g) {
  DegreeSums s;
  for (const Edge& e : g.edges()) (e.kind == EdgeKind::Braid ? s.braid : s.commutation) += 2;
  return s;
}

std::map<int, std::vector<std::uint32_t>> partition_by_last_letter(const WordGraph& g) {
  if (g.vertices().word_length() == 0) throw std::invalid_argument("partition_by_last_letter: identity has no descents");
  std::map<int, std::vector<std::uint32_t>> blocks;
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) blocks[g.vertices()[v].back()].push_back(v);
  return blocks;
}

std::map<std::pair<int, int>, CrossCount> cross_edge_counts(const WordGraph& g) {
  std::map<std::pair<int, int>, CrossCount> out;
  if (g.vertices().word_length() == 0) return out;
  for (const Edge& e : g.edges()) {
    int a = g.vertices()[e.u].back();
    int b = g.vertices()[e.v].back();
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    auto& cell = out[{a, b}];
    (e.kind == EdgeKind::Braid ? cell.braid : cell.commutation) += 1;
  }
  return out;
}

std::string export_dot(const WordGraph& g) {
  std::ostringstream os;
  const auto& words = g.vertices();
  auto label = [&](std::uint32_t v) {
    const auto s = to_string(words[v], words.degree());
    return "\"" + (s.empty() ? std::string("e") : s) + "\"";
  };
  os << "graph \"G(" << to_string(g.sigma()) << ")\" {\n";
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) os << "  " << label(v) << ";\n";
  for (const Edge& e : g.edges())
    os << "  " << label(e.u) << " -- " << label(e.v) << " [style="
       << (e.kind == EdgeKind::Braid ? "dashed" : "solid") << "];\n";
  os << "}\n";
  return os.str();
}

std::string export_json(const WordGraph& g) {
  nlohmann::ordered_json j;
  j["sigma"] = to_string(g.sigma());
  j["n"] = g.sigma().degree();
  j["vertices"] = g.vertices().strings();
  auto edges = nlohmann::ordered_json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v, to_string(e.kind)});
  j["edges"] = std::move(edges);
  j["braid_classes"] = class_count(g, EdgeKind::Braid);
  j["comm_classes"] = class_count(g, EdgeKind::Commutation);
  return j.dump();
}

namespace {

constexpr std::uint64_t kBase = 0x9E3779B97F4A7C15ull;

std::size_t slot_of(std::uint64_t h, std::size_t mask) { return static_cast<std::size_t>((h ^ (h >> 29)) * 0xBF58476D1CE4E5B9ull >> 20) & mask; }

void collect_words(const Permutation& p, int pos, std::vector<Letter>& word, std::vector<Letter>& out) {
  if (pos == 0) {
    out.insert(out.end(), word.begin(), word.end());
    return;
  }
  for (int i : descents(p)) {
    word[pos - 1] = static_cast<Letter>(i);
    collect_words(right_mult(p, i), pos - 1, word, out);
  }
}

}  // namespace

GraphStats graph_stats(const Permutation& sigma) {
  const std::size_t len = static_cast<std::size_t>(length(sigma));
  std::vector<Letter> flat, word(len);
  flat.reserve(static_cast<std::size_t>(count_words(sigma)) * len);
  collect_words(sigma, static_cast<int>(len), word, flat);
  const std::size_t count = len == 0 ? 1 : flat.size() / len;

  std::vector<std::uint64_t> power(len + 1, 1);
  for (std::size_t k = 1; k <= len; ++k) power[k] = power[k - 1] * kBase;
  std::vector<std::uint64_t> hashes(count, 0);
  for (std::size_t v = 0; v < count; ++v)
    for (std::size_t k = 0; k < len; ++k) hashes[v] += flat[v * len + k] * power[k];

  std::size_t cap = 16;
  while (cap < 2 * count) cap <<= 1;
  const std::size_t mask = cap - 1;
  std::vector<std::uint32_t> table(cap, 0);
  for (std::size_t v = 0; v < count; ++v) {
    std::size_t slot = slot_of(hashes[v], mask);
    while (table[slot] != 0) slot = (slot + 1) & mask;
    table[slot] = static_cast<std::uint32_t>(v + 1);
  }

  std::vector<Letter> next(len);
  auto find = [&](std::uint64_t h) -> std::uint32_t {
    for (std::size_t slot = slot_of(h, mask); table[slot] != 0; slot = (slot + 1) & mask) {
      const std::uint32_t v = table[slot] - 1;
      if (hashes[v] == h && std::equal(next.begin(), next.end(), flat.begin() + v * len)) return v;
    }
    throw std::logic_error("graph_stats: word set not closed under moves");
  };

  DisjointSets braid(count), comm(count), all(count);
  std::size_t braid_classes = count, comm_classes = count, components = count;
  GraphStats s;
  s.r = count;
  for (std::size_t u = 0; u < count; ++u) {
    const Letter* w = flat.data() + u * len;
    std::copy(w, w + len, next.begin());
    for (std::size_t p = 0; p + 1 < len; ++p) {
      const int a = w[p], b = w[p + 1];
      const auto d = static_cast<std::uint64_t>(static_cast<std::int64_t>(b - a));
      if (a - b > 1 || b - a > 1) {
        std::swap(next[p], next[p + 1]);
        const auto v = find(hashes[u] + d * power[p] - d * power[p + 1]);
        std::swap(next[p], next[p + 1]);
        ++s.sum_dc;
        if (comm.unite(static_cast<std::uint32_t>(u), v)) --comm_classes;
        if (all.unite(static_cast<std::uint32_t>(u), v)) --components;
      }
      if (p + 2 < len && w[p + 2] == a && (a - b == 1 || b - a == 1)) {
        next[p] = next[p + 2] = static_cast<Letter>(b);
        next[p + 1] = static_cast<Letter>(a);
        const auto v = find(hashes[u] + d * power[p] - d * power[p + 1] + d * power[p + 2]);
        next[p] = next[p + 2] = static_cast<Letter>(a);
        next[p + 1] = static_cast<Letter>(b);
        ++s.sum_db;
        if (braid.unite(static_cast<std::uint32_t>(u), v)) --braid_classes;
        if (all.unite(static_cast<std::uint32_t>(u), v)) --components;
      }
    }
  }
  s.b = braid_classes;
  s.c = comm_classes;
  s.connected = components == 1;
  return s;
}

GraphStats graph_stats(const WordGraph& g) {
  const auto sums = degree_sums(g);
  return GraphStats{g.vertex_count(),
                    class_count(g, EdgeKind::Braid),
                    class_count(g, EdgeKind::Commutation),
                    sums.braid,
                    sums.commutation,
                    g.connected()};
}

bool StatsCache::within_cap(const Permutation& sigma) const { return count_words(sigma) <= max_words_; }

GraphStats StatsCache::get(const Permutation& sigma) {
  {
    std::shared_lock lock(mutex_);
    if (auto it = memo_.find(sigma); it != memo_.end()) return it->second;
  }
  if (!within_cap(sigma))
    throw ResourceCapExceeded("|R(" + to_string(sigma) + ")| = " + std::to_string(count_words(sigma)) +
                              " exceeds the word cap " + std::to_string(max_words_));
  const GraphStats stats = graph_stats(sigma);
  std::unique_lock lock(mutex_);
  return memo_.try_emplace(sigma, stats).first->second;
}

namespace {

Permutation braid_child(const Permutation& sigma, int i) {
  return right_mult(right_mult(right_mult(sigma, i), i + 1), i);
}

std::int64_t as_signed(std::uint64_t v) { return static_cast<std::int64_t>(v); }

}  // namespace

IdentityCheck verify_word_count_recursion(const Permutation& sigma, StatsCache& cache) {
  IdentityCheck check{as_signed(cache.get(sigma).r), 0};
  const DescentSet des = descents(sigma);
  if (des.empty()) {
    check.rhs = 1;
    return check;
  }
  for (int i : des) check.rhs += as_signed(count_words(right_mult(sigma, i)));
  return check;
}

IdentityCheck verify_braid_edge_recursion(const Permutation& sigma, StatsCache& cache) {
  IdentityCheck check{as_signed(cache.get(sigma).sum_db), 0};
  const DescentSet des = descents(sigma);
  for (int i : des) {
    check.rhs += as_signed(cache.get(right_mult(sigma, i)).sum_db);
    if (des.contains(i + 1)) check.rhs += 2 * as_signed(count_words(braid_child(sigma, i)));
  }
  return check;
}

IdentityCheck verify_comm_edge_recursion(const Permutation& sigma, StatsCache& cache) {
  IdentityCheck check{as_signed(cache.get(sigma).sum_dc), 0};
  const DescentSet des = descents(sigma);
  for (int i : des) {
    check.rhs += as_signed(cache.get(right_mult(sigma, i)).sum_dc);
    for (int j : des)
      if (i - j > 1) check.rhs += 2 * as_signed(count_words(right_mult(right_mult(sigma, j), i)));
  }
  return check;
}

IdentityCheck verify_braid_class_recursion(const Permutation& sigma, StatsCache& cache) {
  IdentityCheck check{as_signed(cache.get(sigma).b), 0};
  const DescentSet des = descents(sigma);
  if (des.empty()) {
    check.rhs = 1;
    return check;
  }
  for (int i : des) {
    check.rhs += as_signed(cache.get(right_mult(sigma, i)).b);
    if (des.contains(i + 1)) check.rhs -= as_signed(cache.get(braid_child(sigma, i)).b);
  }
  return check;
}

}  // namespace redword
