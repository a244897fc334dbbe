#include "redword/words.hpp"

#include <algorithm>
#include <cstring>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string_view>
#include <unordered_set>

namespace redword {

std::string to_string(std::span<const Letter> letters, int degree) {
  std::string out;
  const bool digits = degree <= 10;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    if (digits) {
      out += static_cast<char>('0' + letters[k]);
    } else {
      if (k > 0) out += ",";
      out += std::to_string(letters[k]);
    }
  }
  return out;
}

std::string to_string(const Word& w) { return to_string(w.letters, w.degree); }

Word parse_word(const std::string& text, int degree) {
  Word w{degree, {}};
  auto push = [&](int a) {
    if (a < 1 || a >= degree) throw std::invalid_argument("letter " + std::to_string(a) + " out of range");
    w.letters.push_back(static_cast<Letter>(a));
  };
  if (text.find(',') != std::string::npos) {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit))
        throw std::invalid_argument("bad letter in word '" + text + "'");
      push(std::stoi(item));
    }
  } else {
    for (char c : text) {
      if (c < '0' || c > '9') throw std::invalid_argument("bad letter in word '" + text + "'");
      push(c - '0');
    }
  }
  return w;
}

Permutation evaluate(std::span<const Letter> letters, int degree) {
  Permutation p = Permutation::identity(degree);
  for (Letter a : letters) p = right_mult(p, a);
  return p;
}

Permutation evaluate(const Word& w) { return evaluate(w.letters, w.degree); }

bool is_reduced(const Word& w) {
  for (Letter a : w.letters)
    if (a < 1 || a >= w.degree) return false;
  return length(evaluate(w)) == w.size();
}

namespace {

std::size_t hash_letters(std::span<const Letter> w) {
  return std::hash<std::string_view>{}(std::string_view(reinterpret_cast<const char*>(w.data()), w.size()));
}

}  // namespace

WordSet::WordSet(Permutation sigma, std::vector<Letter> flat, std::size_t count)
    : sigma_(sigma), length_(length(sigma)), count_(count) {
  const auto stride = static_cast<std::size_t>(length_);
  if (flat.size() != stride * count) throw std::logic_error("WordSet: buffer size mismatch");
  std::vector<std::uint32_t> order(count);
  std::iota(order.begin(), order.end(), 0u);
  auto at = [&](std::uint32_t k) { return flat.data() + k * stride; };
  std::sort(order.begin(), order.end(),
            [&](std::uint32_t a, std::uint32_t b) { return std::memcmp(at(a), at(b), stride) < 0; });
  letters_.resize(flat.size());
  for (std::size_t k = 0; k < count; ++k) {
    if (stride > 0) std::memcpy(letters_.data() + k * stride, at(order[k]), stride);
    if (k > 0 && std::memcmp(letters_.data() + (k - 1) * stride, letters_.data() + k * stride, stride) == 0)
      throw std::logic_error("WordSet: duplicate word");
  }
  build_index();
}

void WordSet::build_index() {
  std::size_t cap = 16;
  while (cap < 2 * count_) cap <<= 1;
  table_.assign(cap, 0);
  for (std::size_t k = 0; k < count_; ++k) {
    std::size_t slot = hash_letters((*this)[k]) & (cap - 1);
    while (table_[slot] != 0) slot = (slot + 1) & (cap - 1);
    table_[slot] = static_cast<std::uint32_t>(k + 1);
  }
}

std::optional<std::uint32_t> WordSet::find(std::span<const Letter> w) const {
  if (w.size() != static_cast<std::size_t>(length_)) return std::nullopt;
  const std::size_t mask = table_.size() - 1;
  for (std::size_t slot = hash_letters(w) & mask; table_[slot] != 0; slot = (slot + 1) & mask) {
    const std::uint32_t k = table_[slot] - 1;
    const auto cand = (*this)[k];
    if (std::equal(cand.begin(), cand.end(), w.begin())) return k;
  }
  return std::nullopt;
}

Word WordSet::word(std::size_t k) const {
  const auto w = (*this)[k];
  return Word{degree(), {w.begin(), w.end()}};
}

std::vector<std::string> WordSet::strings() const {
  std::vector<std::string> out;
  out.reserve(count_);
  for (std::size_t k = 0; k < count_; ++k) out.push_back(to_string((*this)[k], degree()));
  return out;
}

Word canonical_word(const Permutation& sigma) {
  const int len = length(sigma);
  Word w{sigma.degree(), std::vector<Letter>(len)};
  Permutation p = sigma;
  for (int pos = len - 1; pos >= 0; --pos) {
    const int i = *descents(p).begin();
    w.letters[pos] = static_cast<Letter>(i);
    p = right_mult(p, i);
  }
  return w;
}

namespace {

void descend(const Permutation& p, int pos, std::vector<Letter>& word, std::vector<Letter>& out, std::size_t& count) {
  if (pos == 0) {
    out.insert(out.end(), word.begin(), word.end());
    ++count;
    return;
  }
  for (int i : descents(p)) {
    word[pos - 1] = static_cast<Letter>(i);
    descend(right_mult(p, i), pos - 1, word, out, count);
  }
}

}  // namespace

WordSet enumerate_desc(const Permutation& sigma) {
  const int len = length(sigma);
  std::vector<Letter> word(len), flat;
  std::size_t count = 0;
  descend(sigma, len, word, flat, count);
  return WordSet(sigma, std::move(flat), count);
}

WordSet enumerate_closure(const Permutation& sigma) {
  const Word seed = canonical_word(sigma);
  auto key = [](std::span<const Letter> w) { return std::string(w.begin(), w.end()); };
  std::unordered_set<std::string> seen{key(seed.letters)};
  std::deque<std::string> queue{key(seed.letters)};
  std::vector<Letter> flat, scratch;
  while (!queue.empty()) {
    const std::string cur = std::move(queue.front());
    queue.pop_front();
    flat.insert(flat.end(), cur.begin(), cur.end());
    const std::span<const Letter> w(reinterpret_cast<const Letter*>(cur.data()), cur.size());
    for_each_move(w, scratch, [&](std::span<const Letter> next, bool) {
      auto [it, fresh] = seen.insert(key(next));
      if (fresh) queue.push_back(*it);
    });
  }
  return WordSet(sigma, std::move(flat), seen.size());
}

std::uint64_t WordCounter::count(const Permutation& sigma) {
  {
    std::shared_lock lock(mutex_);
    if (auto it = memo_.find(sigma); it != memo_.end()) return it->second;
  }
  std::uint64_t total = 0;
  const DescentSet des = descents(sigma);
  if (des.empty()) {
    total = 1;
  } else {
    for (int i : des) {
      if (__builtin_add_overflow(total, count(right_mult(sigma, i)), &total))
        throw std::overflow_error("reduced word count exceeds 64 bits");
    }
  }
  std::unique_lock lock(mutex_);
  return memo_.try_emplace(sigma, total).first->second;
}

std::size_t WordCounter::memo_size() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

std::uint64_t count_words(const Permutation& sigma) {
  static WordCounter counter;
  return counter.count(sigma);
}

int Shape::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

bool Shape::valid() const {
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (parts[k] <= 0) return false;
    if (k > 0 && parts[k] > parts[k - 1]) return false;
  }
  return true;
}

bool is_vexillary(const Permutation& sigma) {
  const int n = sigma.degree();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (sigma(j) >= sigma(i)) continue;
      for (int k = j + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l)
          if (sigma(i) < sigma(l) && sigma(l) < sigma(k)) return false;
    }
  return true;
}

Shape lambda_shape(const Permutation& sigma) {
  const int n = sigma.degree();
  Shape s;
  for (int i = 1; i <= n; ++i) {
    int c = 0;
    for (int j = i + 1; j <= n; ++j)
      if (sigma(j) < sigma(i)) ++c;
    if (c > 0) s.parts.push_back(c);
  }
  std::sort(s.parts.rbegin(), s.parts.rend());
  return s;
}

std::uint64_t hook_count(const Shape& shape) {
  if (!shape.valid()) throw std::invalid_argument("hook_count: not a partition");
  const int total = shape.size();
  // Exponent of each prime in total! / prod(hooks), then multiply out.
  std::map<int, int> exponent;
  auto add_factors = [&](int m, int sign) {
    for (int p = 2; m > 1; ++p)
      while (m % p == 0) {
        exponent[p] += sign;
        m /= p;
      }
  };
  for (int m = 2; m <= total; ++m) add_factors(m, +1);
  const int rows = static_cast<int>(shape.parts.size());
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < shape.parts[r]; ++c) {
      int below = 0;
      while (r + below + 1 < rows && shape.parts[r + below + 1] > c) ++below;
      add_factors(shape.parts[r] - c - 1 + below + 1, -1);
    }
  std::uint64_t result = 1;
  for (auto [p, e] : exponent) {
    if (e < 0) throw std::logic_error("hook_count: non-integral quotient");
    for (int k = 0; k < e; ++k)
      if (__builtin_mul_overflow(result, static_cast<std::uint64_t>(p), &result))
        throw std::overflow_error("hook_count exceeds 64 bits");
  }
  return result;
}

}  // namespace redword
