#include "redword/shuffle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

#include "json.hpp"

namespace redword {

std::string to_string(const ColoredWord& w) {
  std::string out;
  for (std::size_t k = 0; k < w.word.letters.size(); ++k) {
    if (k > 0 && w.colors[k] != w.colors[k - 1]) out += "|";
    out += to_string(std::span<const Letter>(&w.word.letters[k], 1), w.word.degree);
  }
  return out;
}

std::uint8_t ShuffleSplit::tracked_color() const { return length(alpha) > 0 || betas.empty() ? 0 : 1; }

ShuffleSplit make_split(const Permutation& alpha, const std::vector<Permutation>& betas) {
  ShuffleSplit s;
  s.alpha = alpha;
  s.betas = betas;
  s.sigma = alpha;
  int total = length(alpha);
  s.seed.word = canonical_word(alpha);
  s.seed.colors.assign(s.seed.word.letters.size(), 0);
  for (std::size_t j = 0; j < betas.size(); ++j) {
    s.sigma = compose(s.sigma, betas[j]);
    total += length(betas[j]);
    std::optional<BlockFactor> block = as_w0_block(betas[j]);
    const Word v = block ? staircase_word(betas[j].degree(), *block) : canonical_word(betas[j]);
    s.seed.word.letters.insert(s.seed.word.letters.end(), v.letters.begin(), v.letters.end());
    s.seed.colors.insert(s.seed.colors.end(), v.letters.size(), static_cast<std::uint8_t>(j + 1));
  }
  if (total != length(s.sigma)) throw std::invalid_argument("make_split: lengths of the factors do not add up");
  return s;
}

ShuffleSplit staircase_split(const Permutation& sigma) {
  const auto f = staircase_factorization(sigma);
  std::vector<Permutation> betas;
  for (const auto& b : f.factors) betas.push_back(w0_block(sigma.degree(), b.k, b.i));
  return make_split(f.tau, betas);
}

ShuffleSplit block_split(const Permutation& sigma, const DescentBlock& block) {
  const Permutation beta = w0_block(sigma.degree(), block.size + 1, block.start);
  return make_split(compose(sigma, beta), {beta});
}

ShuffleSplit longest_block_split(const Permutation& sigma) {
  const auto blocks = descent_blocks(descents(sigma));
  if (blocks.empty()) throw std::invalid_argument("longest_block_split: identity has no descents");
  const auto longest = std::max_element(blocks.begin(), blocks.end(),
                                        [](const DescentBlock& a, const DescentBlock& b) { return a.size < b.size; });
  return block_split(sigma, *longest);
}

ShuffleType classify_shuffle(const ColoredWord& w1, const ColoredWord& w2) {
  const auto& a = w1.word.letters;
  const auto& b = w2.word.letters;
  if (a.size() != b.size() || w1.colors.size() != a.size() || w2.colors.size() != b.size())
    throw std::invalid_argument("classify_shuffle: words of different shape");
  std::vector<std::size_t> diff;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] != b[k] || w1.colors[k] != w2.colors[k]) diff.push_back(k);
  auto gap = [](int x, int y) { return x > y ? x - y : y - x; };
  if (diff.size() == 2 && diff[1] == diff[0] + 1) {
    const auto p = diff[0];
    if (a[p] == b[p + 1] && a[p + 1] == b[p] && gap(a[p], a[p + 1]) > 1 && w1.colors[p] == w2.colors[p + 1] &&
        w1.colors[p + 1] == w2.colors[p])
      return w1.colors[p] == w1.colors[p + 1] ? ShuffleType::Monochrome : ShuffleType::BichromeCommutation;
  }
  if (!diff.empty() && diff.back() - diff.front() <= 2) {
    for (std::size_t p = diff.back() >= 2 ? diff.back() - 2 : 0; p <= diff.front() && p + 2 < a.size(); ++p) {
      const bool braid = a[p] == a[p + 2] && gap(a[p], a[p + 1]) == 1 && b[p] == a[p + 1] && b[p + 1] == a[p] &&
                         b[p + 2] == a[p + 1];
      const bool colors_kept = std::equal(w1.colors.begin(), w1.colors.end(), w2.colors.begin());
      if (!braid || !colors_kept) continue;
      const bool mono = w1.colors[p] == w1.colors[p + 1] && w1.colors[p + 1] == w1.colors[p + 2];
      return mono ? ShuffleType::Monochrome : ShuffleType::BichromeBraid;
    }
  }
  throw std::invalid_argument("classify_shuffle: " + to_string(w1) + " and " + to_string(w2) +
                              " are not one move apart");
}

bool can_type3(const ShuffleSplit& split) {
  std::vector<GeneratorSet> supports{support(split.alpha)};
  for (const auto& b : split.betas) supports.push_back(support(b));
  for (std::size_t x = 0; x < supports.size(); ++x)
    for (std::size_t y = 0; y < supports.size(); ++y) {
      if (x == y) continue;
      for (int a : supports[x])
        if (supports[y].contains(a + 1)) return true;
    }
  return false;
}

ColoredWord ConfigurationSet::colored(std::uint32_t v) const {
  const auto w = words[v];
  return ColoredWord{Word{words.degree(), {w.begin(), w.end()}}, colors[v]};
}

ConfigurationSet configurations(const ShuffleSplit& split) {
  if (can_type3(split))
    throw Type3Possible("configurations: a bichrome braid move is possible for this split of " +
                        to_string(split.sigma));
  const std::size_t len = split.seed.word.letters.size();
  auto key_of = [&](const std::vector<Letter>& w, const std::vector<std::uint8_t>& c) {
    std::string key(w.begin(), w.end());
    key.append(c.begin(), c.end());
    return key;
  };

  std::unordered_map<std::string, std::vector<std::uint8_t>> coloring_of;  // word -> colours
  std::unordered_map<std::string, bool> seen;
  std::deque<std::pair<std::vector<Letter>, std::vector<std::uint8_t>>> queue;
  queue.emplace_back(split.seed.word.letters, split.seed.colors);
  seen.emplace(key_of(split.seed.word.letters, split.seed.colors), true);
  while (!queue.empty()) {
    auto [w, c] = std::move(queue.front());
    queue.pop_front();
    auto [it, fresh] = coloring_of.try_emplace(std::string(w.begin(), w.end()), c);
    if (!fresh && it->second != c)
      throw std::logic_error("configurations: word " + to_string(std::span<const Letter>(w), split.sigma.degree()) +
                             " carries two colourings");
    auto push = [&](std::vector<Letter> nw, std::vector<std::uint8_t> nc) {
      if (seen.emplace(key_of(nw, nc), true).second) queue.emplace_back(std::move(nw), std::move(nc));
    };
    for (std::size_t p = 0; p + 1 < len; ++p) {
      const int a = w[p], b = w[p + 1];
      if (a - b > 1 || b - a > 1) {
        auto nw = w;
        auto nc = c;
        std::swap(nw[p], nw[p + 1]);
        std::swap(nc[p], nc[p + 1]);
        push(std::move(nw), std::move(nc));
      }
      if (p + 2 < len && w[p + 2] == a && (a - b == 1 || b - a == 1)) {
        if (c[p] != c[p + 1] || c[p + 1] != c[p + 2])
          throw Type3Possible("configurations: bichrome braid window reached");
        auto nw = w;
        nw[p] = nw[p + 2] = static_cast<Letter>(b);
        nw[p + 1] = static_cast<Letter>(a);
        push(std::move(nw), c);
      }
    }
  }

  std::vector<Letter> flat;
  flat.reserve(coloring_of.size() * len);
  for (const auto& [w, c] : coloring_of) flat.insert(flat.end(), w.begin(), w.end());
  ConfigurationSet out{split, WordSet(split.sigma, std::move(flat), coloring_of.size()), {}, {}};
  if (out.words.size() != count_words(split.sigma))
    throw std::logic_error("configurations: closure does not cover R(" + to_string(split.sigma) + ")");
  out.colors.resize(out.words.size());
  for (const auto& [w, c] : coloring_of) {
    const std::vector<Letter> letters(w.begin(), w.end());
    out.colors[*out.words.find(letters)] = c;
  }

  const auto tracked = split.tracked_color();
  std::map<std::vector<int>, std::vector<std::uint32_t>> by_positions;
  for (std::uint32_t v = 0; v < out.words.size(); ++v) {
    std::vector<int> positions;
    for (std::size_t k = 0; k < len; ++k)
      if (out.colors[v][k] == tracked) positions.push_back(static_cast<int>(k) + 1);
    by_positions[positions].push_back(v);
  }
  for (auto& [positions, members] : by_positions) out.configs.push_back({positions, std::move(members)});
  return out;
}

Subgraph subgraph_H(const WordGraph& g, const Configuration& c) {
  Subgraph h{c.members, {}};
  for (const Edge& e : g.edges())
    if (std::binary_search(c.members.begin(), c.members.end(), e.u) &&
        std::binary_search(c.members.begin(), c.members.end(), e.v))
      h.edges.push_back(e);
  return h;
}

namespace {

std::vector<Letter> subword(std::span<const Letter> w, const std::vector<std::uint8_t>& colors, std::uint8_t color) {
  std::vector<Letter> out;
  for (std::size_t k = 0; k < w.size(); ++k)
    if (colors[k] == color) out.push_back(w[k]);
  return out;
}

bool one_move_apart(const std::vector<Letter>& x, const std::vector<Letter>& y, EdgeKind kind) {
  bool found = false;
  std::vector<Letter> scratch;
  for_each_move(x, scratch, [&](std::span<const Letter> next, bool braid) {
    if ((braid ? EdgeKind::Braid : EdgeKind::Commutation) == kind && std::equal(next.begin(), next.end(), y.begin(), y.end()))
      found = true;
  });
  return found;
}

}  // namespace

bool is_product_subgraph(const WordGraph& g, const ConfigurationSet& set, const Configuration& c) {
  const auto classes = static_cast<std::uint8_t>(set.split.betas.size() + 1);
  for (const Edge& e : subgraph_H(g, c).edges) {
    int changed = 0;
    for (std::uint8_t color = 0; color < classes; ++color) {
      const auto x = subword(set.words[e.u], set.colors[e.u], color);
      const auto y = subword(set.words[e.v], set.colors[e.v], color);
      if (x == y) continue;
      ++changed;
      if (!one_move_apart(x, y, e.kind)) return false;
      if (evaluate(x, set.words.degree()) != set.split.factor(color)) return false;
    }
    if (changed != 1) return false;
  }
  return true;
}

CountBound check_count_bound(const Permutation& sigma, const Permutation& alpha, const Permutation& beta) {
  if (compose(alpha, beta) != sigma) throw std::invalid_argument("check_count_bound: sigma != alpha * beta");
  if (length(alpha) + length(beta) != length(sigma))
    throw std::invalid_argument("check_count_bound: l(alpha) + l(beta) != l(sigma)");
  CountBound out;
  out.lhs = count_words(sigma);
  const int l = length(sigma), k = length(alpha);
  unsigned __int128 binom = 1;
  for (int t = 1; t <= k; ++t) binom = binom * static_cast<unsigned>(l - k + t) / static_cast<unsigned>(t);
  const unsigned __int128 rhs = binom * count_words(alpha) * count_words(beta);
  if (rhs > UINT64_MAX) throw std::overflow_error("check_count_bound: bound exceeds 64 bits");
  out.rhs = static_cast<std::uint64_t>(rhs);
  out.holds = out.lhs <= out.rhs;
  out.type3_possible = can_type3(make_split(alpha, {beta}));
  return out;
}

std::uint64_t product_braid_degree_sum(const Permutation& alpha, const Permutation& beta) {
  const auto a = graph_stats(build_graph(alpha));
  const auto b = graph_stats(build_graph(beta));
  return a.r * b.sum_db + b.r * a.sum_db;
}

DegreeSums product_degree_sums(const WordGraph& a, const WordGraph& b) {
  const std::uint64_t nb = b.vertex_count();
  std::vector<std::uint64_t> degree_b(a.vertex_count() * nb, 0), degree_c(a.vertex_count() * nb, 0);
  auto bump = [&](std::uint64_t u, std::uint64_t v, EdgeKind kind) {
    auto& d = kind == EdgeKind::Braid ? degree_b : degree_c;
    ++d[u];
    ++d[v];
  };
  for (const Edge& e : a.edges())
    for (std::uint64_t y = 0; y < nb; ++y) bump(e.u * nb + y, e.v * nb + y, e.kind);
  for (const Edge& e : b.edges())
    for (std::uint64_t x = 0; x < a.vertex_count(); ++x) bump(x * nb + e.u, x * nb + e.v, e.kind);
  DegreeSums s;
  for (auto d : degree_b) s.braid += d;
  for (auto d : degree_c) s.commutation += d;
  return s;
}

std::string export_json(const ConfigurationSet& set) {
  nlohmann::ordered_json j;
  j["sigma"] = to_string(set.split.sigma);
  j["alpha"] = to_string(set.split.alpha);
  auto betas = nlohmann::ordered_json::array();
  for (const auto& b : set.split.betas) betas.push_back(to_string(b));
  j["betas"] = std::move(betas);
  j["tracked"] = set.split.tracked_color();
  auto configs = nlohmann::ordered_json::array();
  for (const auto& c : set.configs) {
    nlohmann::ordered_json cj;
    cj["positions"] = c.positions;
    cj["size"] = c.members.size();
    auto words = nlohmann::ordered_json::array();
    for (auto v : c.members) words.push_back(to_string(set.colored(v)));
    cj["words"] = std::move(words);
    configs.push_back(std::move(cj));
  }
  j["configurations"] = std::move(configs);
  return j.dump();
}

}  // namespace redword
