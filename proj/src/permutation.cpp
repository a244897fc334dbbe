#include "redword/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace redword {

GeneratorSet::GeneratorSet(std::initializer_list<int> indices) {
  for (int i : indices) insert(i);
}

void GeneratorSet::insert(int i) {
  if (i < 1 || i >= 32) throw std::out_of_range("generator index out of range");
  mask_ |= 1u << i;
}

void GeneratorSet::erase(int i) {
  if (i >= 1 && i < 32) mask_ &= ~(1u << i);
}

int GeneratorSet::size() const { return __builtin_popcount(mask_); }

std::vector<int> GeneratorSet::to_vector() const { return {begin(), end()}; }

std::string to_string(const GeneratorSet& s) {
  std::string out = "{";
  bool first = true;
  for (int i : s) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

Permutation::Permutation(std::span<const int> one_line) {
  const auto n = static_cast<int>(one_line.size());
  if (n == 0) throw std::invalid_argument("permutation of degree 0 is not modeled");
  if (n > kMaxDegree) throw std::invalid_argument("permutation degree exceeds " + std::to_string(kMaxDegree));
  std::array<bool, kMaxDegree + 1> seen{};
  for (int v : one_line) {
    if (v < 1 || v > n || seen[v]) throw std::invalid_argument("not a bijection of {1..n}");
    seen[v] = true;
  }
  n_ = static_cast<std::uint8_t>(n);
  for (int k = 0; k < n; ++k) entries_[k] = static_cast<std::uint8_t>(one_line[k]);
}

Permutation::Permutation(std::initializer_list<int> one_line)
    : Permutation(std::span<const int>(one_line.begin(), one_line.size())) {}

Permutation Permutation::identity(int n) {
  if (n < 1) throw std::invalid_argument("identity: degree must be at least 1");
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(v);
}

std::vector<int> Permutation::one_line() const { return {entries_.begin(), entries_.begin() + n_}; }

std::size_t Permutation::hash() const {
  // FNV-1a over the degree and entries.
  std::size_t h = 1469598103934665603ull;
  h = (h ^ n_) * 1099511628211ull;
  for (int k = 0; k < n_; ++k) h = (h ^ entries_[k]) * 1099511628211ull;
  return h;
}

int length(const Permutation& p) {
  const int n = p.degree();
  int inv = 0;
  // Counting smaller entries to the right with a tiny Fenwick tree over values.
  std::array<int, Permutation::kMaxDegree + 1> tree{};
  for (int pos = n; pos >= 1; --pos) {
    const int v = p(pos);
    for (int x = v - 1; x > 0; x -= x & -x) inv += tree[x];
    for (int x = v; x <= n; x += x & -x) ++tree[x];
  }
  return inv;
}

DescentSet descents(const Permutation& p) {
  DescentSet d;
  for (int i = 1; i < p.degree(); ++i)
    if (p(i) > p(i + 1)) d.insert(i);
  return d;
}

DescentSet ascents(const Permutation& p) {
  DescentSet a;
  for (int i = 1; i < p.degree(); ++i)
    if (p(i) < p(i + 1)) a.insert(i);
  return a;
}

Permutation right_mult(const Permutation& p, int i) {
  if (i < 1 || i >= p.degree()) throw std::out_of_range("generator index out of range");
  Permutation q = p;
  std::swap(q.entries_[i - 1], q.entries_[i]);
  return q;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("compose: degree mismatch");
  Permutation r = q;
  for (int k = 0; k < q.n_; ++k) r.entries_[k] = p.entries_[q.entries_[k] - 1];
  return r;
}

Permutation inverse(const Permutation& p) {
  Permutation r = p;
  for (int k = 0; k < p.n_; ++k) r.entries_[p.entries_[k] - 1] = static_cast<std::uint8_t>(k + 1);
  return r;
}

Permutation w0_block(int n, int k, int i) {
  if (k < 2 || i < 1 || i + k - 1 > n) throw std::out_of_range("w0_block: window out of range");
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::reverse(v.begin() + (i - 1), v.begin() + (i - 1 + k));
  return Permutation(v);
}

Permutation longest(int n) {
  if (n < 1) throw std::invalid_argument("longest: degree must be at least 1");
  std::vector<int> v(n);
  std::iota(v.rbegin(), v.rend(), 1);
  return Permutation(v);
}

bool weak_leq(const Permutation& t, const Permutation& s) {
  if (t.degree() != s.degree()) throw std::invalid_argument("weak_leq: degree mismatch");
  return length(t) + length(compose(inverse(t), s)) == length(s);
}

std::vector<Permutation> covers_of(const Permutation& s) {
  std::vector<Permutation> out;
  for (int i : descents(s)) out.push_back(right_mult(s, i));
  return out;
}

GeneratorSet support(const Permutation& p) {
  GeneratorSet s;
  int prefix_max = 0;
  for (int j = 1; j < p.degree(); ++j) {
    prefix_max = std::max(prefix_max, p(j));
    if (prefix_max != j) s.insert(j);
  }
  return s;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

Permutation parse_permutation(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw std::invalid_argument("empty permutation");
  std::vector<int> v;
  if (t.front() == '[') {
    if (t.back() != ']') throw std::invalid_argument("unterminated permutation '" + text + "'");
    std::stringstream ss(t.substr(1, t.size() - 2));
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit))
        throw std::invalid_argument("bad entry in permutation '" + text + "'");
      v.push_back(std::stoi(item));
    }
  } else {
    if (!std::all_of(t.begin(), t.end(), ::isdigit))
      throw std::invalid_argument("bad permutation '" + text + "'");
    if (t.size() > 9) throw std::invalid_argument("compact form supports n <= 9 only");
    for (char c : t) v.push_back(c - '0');
  }
  return Permutation(v);
}

std::string to_bracket_string(const Permutation& p) {
  std::string out = "[";
  for (int pos = 1; pos <= p.degree(); ++pos) {
    if (pos > 1) out += ",";
    out += std::to_string(p(pos));
  }
  return out + "]";
}

std::string to_string(const Permutation& p) {
  if (p.degree() > 9) return to_bracket_string(p);
  std::string out;
  for (int pos = 1; pos <= p.degree(); ++pos) out += static_cast<char>('0' + p(pos));
  return out;
}

}  // namespace redword
