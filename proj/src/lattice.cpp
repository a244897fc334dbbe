#include "redword/lattice.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace redword {

WeakOrderLattice::WeakOrderLattice(int n, int max_degree) : n_(n) {
  if (n < 2 || n > std::min(max_degree, kMaxDegree))
    throw std::out_of_range("lattice degree " + std::to_string(n) + " outside 2.." +
                            std::to_string(std::min(max_degree, kMaxDegree)));
  elements_ = all_permutations(n);
  index_.reserve(elements_.size());
  for (std::uint32_t k = 0; k < elements_.size(); ++k) index_.emplace(elements_[k], k);
  adjacency_.resize(elements_.size());
  for (std::uint32_t k = 0; k < elements_.size(); ++k)
    for (int i : descents(elements_[k])) {
      const auto lower = index_.at(right_mult(elements_[k], i));
      covers_.push_back({lower, k, i});
      adjacency_[k].push_back(lower);
      adjacency_[lower].push_back(k);
    }
  std::sort(covers_.begin(), covers_.end());
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

std::uint32_t WeakOrderLattice::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw std::invalid_argument("permutation " + to_string(p) + " not in lattice");
  return it->second;
}

bool WeakOrderLattice::adjacent(std::uint32_t a, std::uint32_t b) const {
  return std::binary_search(adjacency_[a].begin(), adjacency_[a].end(), b);
}

std::uint32_t WeakOrderLattice::bottom() const { return 0; }

std::uint32_t WeakOrderLattice::top() const { return static_cast<std::uint32_t>(elements_.size() - 1); }

std::uint64_t count_4cycles(const WeakOrderLattice& lattice) {
  std::uint64_t total = 0;
  for (const auto& p : lattice.elements()) {
    const auto d = descents(p).to_vector();
    for (std::size_t a = 0; a < d.size(); ++a)
      for (std::size_t b = a + 1; b < d.size(); ++b)
        if (d[b] - d[a] > 1) ++total;
  }
  return total;
}

std::uint64_t count_6cycles(const WeakOrderLattice& lattice) {
  std::uint64_t total = 0;
  for (const auto& p : lattice.elements()) {
    const auto d = descents(p);
    for (int i : d)
      if (d.contains(i + 1)) ++total;
  }
  return total;
}

namespace {

struct CycleSearch {
  const WeakOrderLattice& lattice;
  int target;
  std::uint32_t start = 0;
  std::vector<std::uint32_t> path;
  std::set<std::vector<std::uint32_t>> found;

  bool chordless() const {
    const std::size_t len = path.size();
    for (std::size_t a = 0; a < len; ++a)
      for (std::size_t b = a + 2; b < len; ++b) {
        if (a == 0 && b == len - 1) continue;
        if (lattice.adjacent(path[a], path[b])) return false;
      }
    return true;
  }

  void extend() {
    const auto last = path.back();
    for (auto next : lattice.neighbours(last)) {
      if (next == start && static_cast<int>(path.size()) == target) {
        if (chordless()) {
          auto key = path;
          std::sort(key.begin(), key.end());
          found.insert(std::move(key));
        }
        continue;
      }
      if (next <= start || static_cast<int>(path.size()) == target) continue;
      if (std::find(path.begin(), path.end(), next) != path.end()) continue;
      path.push_back(next);
      extend();
      path.pop_back();
    }
  }
};

}  // namespace

std::uint64_t count_chordless_cycles(const WeakOrderLattice& lattice, int cycle_length) {
  if (cycle_length < 3) return 0;
  CycleSearch search{lattice, cycle_length, 0, {}, {}};
  for (std::uint32_t s = 0; s < lattice.size(); ++s) {
    search.start = s;
    search.path.assign(1, s);
    search.extend();
  }
  return search.found.size();
}

std::vector<std::uint32_t> interval(const WeakOrderLattice& lattice, const Permutation& v, const Permutation& w) {
  if (!weak_leq(v, w)) throw std::invalid_argument("interval: " + to_string(v) + " is not below " + to_string(w));
  std::vector<std::uint32_t> out;
  for (std::uint32_t k = 0; k < lattice.size(); ++k) {
    const auto& u = lattice.element(k);
    if (weak_leq(v, u) && weak_leq(u, w)) out.push_back(k);
  }
  return out;
}

bool is_boolean_interval(const Permutation& v, const Permutation& w) {
  if (!weak_leq(v, w)) throw std::invalid_argument("interval: " + to_string(v) + " is not below " + to_string(w));
  const Permutation x = compose(inverse(v), w);
  const GeneratorSet supp = support(x);
  if (length(x) != supp.size()) return false;
  for (int i : supp)
    if (supp.contains(i + 1)) return false;
  return true;
}

bool interval_is_boolean_poset(const WeakOrderLattice& lattice, const Permutation& v, const Permutation& w) {
  const auto members = interval(lattice, v, w);
  const int rank = length(w) - length(v);
  if (rank > 20) return false;
  std::vector<std::uint32_t> atoms;
  for (auto k : members)
    if (length(lattice.element(k)) == length(v) + 1) atoms.push_back(k);
  if (static_cast<int>(atoms.size()) != rank) return false;
  if (members.size() != (std::size_t{1} << rank)) return false;

  std::vector<std::uint32_t> label(members.size(), 0);
  std::set<std::uint32_t> labels;
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t t = 0; t < atoms.size(); ++t)
      if (weak_leq(lattice.element(atoms[t]), lattice.element(members[a]))) label[a] |= 1u << t;
    labels.insert(label[a]);
  }
  if (labels.size() != members.size()) return false;
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = 0; b < members.size(); ++b) {
      const bool below = weak_leq(lattice.element(members[a]), lattice.element(members[b]));
      const bool subset = (label[a] & ~label[b]) == 0;
      if (below != subset) return false;
    }
  return true;
}

std::string export_json(const WeakOrderLattice& lattice) {
  nlohmann::ordered_json j;
  j["n"] = lattice.degree();
  auto elements = nlohmann::ordered_json::array();
  for (const auto& p : lattice.elements()) elements.push_back(to_string(p));
  j["elements"] = std::move(elements);
  auto covers = nlohmann::ordered_json::array();
  for (const auto& c : lattice.covers()) covers.push_back({c.lower, c.upper, c.generator});
  j["covers"] = std::move(covers);
  return j.dump();
}

}  // namespace redword
