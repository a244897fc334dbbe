#include "redword/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <random>
#include <set>
#include <thread>

#include "json.hpp"
#include "redword/factor.hpp"

namespace redword {

std::int64_t a_statistic(const GraphStats& stats) {
  return static_cast<std::int64_t>(stats.r) - static_cast<std::int64_t>(stats.sum_db);
}

std::int64_t a_statistic(const Permutation& sigma, StatsCache& cache) { return a_statistic(cache.get(sigma)); }

const char* to_string(CaseLabel c) {
  switch (c) {
    case CaseLabel::K1: return "K1";
    case CaseLabel::SingleJ: return "SingleJ";
    case CaseLabel::CompletelyComm: return "CompletelyComm";
    case CaseLabel::FullyComm: return "FullyComm";
    case CaseLabel::W0Block: return "W0Block";
    case CaseLabel::Other: return "Other";
  }
  return "?";
}

bool is_321_avoiding(const Permutation& sigma) {
  const int n = sigma.degree();
  for (int j = 2; j < n; ++j) {
    bool bigger_left = false, smaller_right = false;
    for (int i = 1; i < j; ++i) bigger_left |= sigma(i) > sigma(j);
    for (int k = j + 1; k <= n; ++k) smaller_right |= sigma(k) < sigma(j);
    if (bigger_left && smaller_right) return false;
  }
  return true;
}

namespace {

bool commutes_with(const GeneratorSet& a, const GeneratorSet& b) {
  for (int x : a)
    for (int y : b)
      if (x - y <= 1 && y - x <= 1) return false;
  return true;
}

bool completely_commutative(const Permutation& p) {
  const GeneratorSet supp = support(p);
  if (length(p) != supp.size()) return false;
  for (int i : supp)
    if (supp.contains(i + 1)) return false;
  return true;
}

}  // namespace

CaseLabel classify_case(const Permutation& sigma) {
  const DescentSet des = descents(sigma);
  const auto blocks = descent_blocks(des);
  int longest = 0;
  for (const auto& b : blocks) longest = std::max(longest, b.size);
  if (longest <= 1) return CaseLabel::K1;
  if (as_w0_block(sigma)) return CaseLabel::W0Block;

  CaseLabel best = CaseLabel::Other;
  for (const auto& b : blocks) {
    if (b.size != longest) continue;
    const Permutation beta = w0_block(sigma.degree(), b.size + 1, b.start);
    const Permutation alpha = compose(sigma, beta);
    GeneratorSet run;
    for (int i = b.start; i <= b.last(); ++i) run.insert(i);
    const GeneratorSet j = des - run;
    if (j.empty() || descents(alpha) != j) continue;
    CaseLabel label = CaseLabel::Other;
    if (length(alpha) == 1)
      label = CaseLabel::SingleJ;
    else if (completely_commutative(alpha))
      label = CaseLabel::CompletelyComm;
    else if (is_321_avoiding(alpha) && commutes_with(support(alpha), support(beta)))
      label = CaseLabel::FullyComm;
    best = std::min(best, label);
  }
  return best;
}

std::optional<bool> check_casesproved(const Permutation& sigma, StatsCache& cache) {
  const CaseLabel label = classify_case(sigma);
  if (label == CaseLabel::Other) return std::nullopt;
  const std::int64_t a = a_statistic(sigma, cache);
  return label == CaseLabel::W0Block ? a == 0 : a > 0;
}

ClassBounds check_class_bounds(const GraphStats& s) {
  ClassBounds out;
  out.bound1 = s.b + s.c - 1 <= s.r && s.r <= s.b * s.c;
  out.weaker_v = 2 * s.b + 2 >= s.r;
  out.main_result = out.weaker_v && 2 * s.c <= s.r + 4;
  out.conj_braid = s.r <= 2 * s.b && s.b <= s.r;
  out.conj_comm = 2 * s.c <= s.r + 2;
  return out;
}

std::vector<Permutation> scan_domain(const ScanOptions& opt) {
  auto all = all_permutations(opt.n);
  if (!opt.sample || *opt.sample >= all.size()) return all;
  std::mt19937_64 rng(opt.seed);
  std::set<std::vector<int>> chosen;
  std::vector<int> line(opt.n);
  while (chosen.size() < *opt.sample) {
    for (int k = 0; k < opt.n; ++k) line[k] = k + 1;
    for (int k = opt.n - 1; k > 0; --k) {
      std::uniform_int_distribution<int> pick(0, k);
      std::swap(line[k], line[pick(rng)]);
    }
    chosen.insert(line);
  }
  std::vector<Permutation> out;
  for (const auto& l : chosen) out.emplace_back(std::span<const int>(l));
  return out;
}

namespace {

void expect(ScanRecord& rec, const char* name, const IdentityCheck& c) {
  if (!c.holds())
    rec.hard_failures.push_back(std::string(name) + ": " + std::to_string(c.lhs) + " != " + std::to_string(c.rhs));
}

std::string counts_note(const GraphStats& s) {
  return "(R=" + std::to_string(s.r) + " B=" + std::to_string(s.b) + " C=" + std::to_string(s.c) +
         " sum_dB=" + std::to_string(s.sum_db) + ")";
}

}  // namespace

ScanRecord scan_one(const Permutation& sigma, StatsCache& cache) {
  ScanRecord rec;
  rec.sigma = sigma;
  if (!cache.within_cap(sigma)) {
    rec.status = ScanStatus::Skipped;
    rec.stats.r = count_words(sigma);
    return rec;
  }
  rec.stats = cache.get(sigma);
  const GraphStats& s = rec.stats;
  rec.a_stat = a_statistic(s);
  rec.case_label = classify_case(sigma);
  const ClassBounds bounds = check_class_bounds(s);

  if (!bounds.bound1) rec.hard_failures.push_back("bound1 " + counts_note(s));
  if (!s.connected) rec.hard_failures.push_back("G(sigma) disconnected");
  expect(rec, "word_count_recursion", verify_word_count_recursion(sigma, cache));
  expect(rec, "braid_class_recursion", verify_braid_class_recursion(sigma, cache));
  expect(rec, "braid_degree_recursion", verify_braid_edge_recursion(sigma, cache));
  expect(rec, "comm_degree_recursion", verify_comm_edge_recursion(sigma, cache));
  if (const auto block = as_w0_block(sigma); block && block->k >= 3) {
    if (s.sum_db != s.r) rec.hard_failures.push_back("reiner " + counts_note(s));
    if (!bounds.weaker_v) rec.hard_failures.push_back("w0_braid_class_bound " + counts_note(s));
  }
  if (rec.case_label != CaseLabel::Other) {
    if (!bounds.main_result) rec.hard_failures.push_back("case_bounds " + counts_note(s));
    const bool sign_ok = rec.case_label == CaseLabel::W0Block ? rec.a_stat == 0 : rec.a_stat > 0;
    if (!sign_ok) rec.hard_failures.push_back(std::string("case_sign ") + to_string(rec.case_label) + " A=" +
                                              std::to_string(rec.a_stat));
  }

  if (!bounds.conj_braid) rec.soft_violations.push_back("braid_class_bounds " + counts_note(s));
  if (!bounds.conj_comm) rec.soft_violations.push_back("comm_class_bound " + counts_note(s));
  if (rec.a_stat < 0) rec.soft_violations.push_back("a_nonnegative A=" + std::to_string(rec.a_stat));
  return rec;
}

ScanReport scan(const ScanOptions& opt) {
  const auto domain = scan_domain(opt);
  StatsCache cache(opt.max_words);
  ScanReport report;
  report.records.resize(domain.size());

  unsigned threads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, domain.size())));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (std::size_t k = next++; k < domain.size(); k = next++) {
      try {
        report.records[k] = scan_one(domain[k], cache);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);

  auto consider = [&](const Permutation& p, const GraphStats& s) {
    const auto lhs = s.sum_db * report.best_r, rhs = report.best_db * s.r;
    if (report.argmax.empty() || lhs > rhs) {
      report.best_db = s.sum_db;
      report.best_r = s.r;
      report.argmax.assign(1, p);
    } else if (lhs == rhs) {
      report.argmax.push_back(p);
    }
  };
  std::set<Permutation> considered;
  for (const auto& rec : report.records) {
    if (rec.status == ScanStatus::Skipped) {
      ++report.skipped;
      continue;
    }
    ++report.checked;
    report.hard_failures += rec.hard_failures.size();
    report.soft_violations += rec.soft_violations.size();
    consider(rec.sigma, rec.stats);
    considered.insert(rec.sigma);
  }
  // Blocks outside a sample still compete for the maximum ratio.
  for (int k = 2; k <= opt.n; ++k)
    for (int i = 1; i + k - 1 <= opt.n; ++i) {
      const Permutation b = w0_block(opt.n, k, i);
      if (!considered.contains(b) && cache.within_cap(b)) consider(b, cache.get(b));
    }
  std::sort(report.argmax.begin(), report.argmax.end());
  report.argmax_has_block = report.argmax.empty() ||
                            std::any_of(report.argmax.begin(), report.argmax.end(),
                                        [](const Permutation& p) { return as_w0_block(p).has_value(); });
  if (!report.argmax_has_block) ++report.soft_violations;
  return report;
}

std::string to_json_lines(const ScanReport& report) {
  std::string out;
  for (const auto& rec : report.records) {
    nlohmann::ordered_json j;
    j["sigma"] = to_string(rec.sigma);
    if (rec.status == ScanStatus::Skipped) {
      j["status"] = "skipped";
      j["r"] = rec.stats.r;
    } else {
      j["status"] = "checked";
      j["r"] = rec.stats.r;
      j["b"] = rec.stats.b;
      j["c"] = rec.stats.c;
      j["sum_dB"] = rec.stats.sum_db;
      j["sum_dC"] = rec.stats.sum_dc;
      j["a"] = rec.a_stat;
      j["case"] = to_string(rec.case_label);
      j["hard"] = rec.hard_failures;
      j["soft"] = rec.soft_violations;
    }
    out += j.dump() + "\n";
  }
  nlohmann::ordered_json summary;
  summary["checked"] = report.checked;
  summary["skipped"] = report.skipped;
  summary["hard_failures"] = report.hard_failures;
  summary["soft_violations"] = report.soft_violations;
  summary["max_braid_ratio"] = std::to_string(report.best_db) + "/" + std::to_string(report.best_r);
  auto argmax = nlohmann::ordered_json::array();
  for (const auto& p : report.argmax) argmax.push_back(to_string(p));
  summary["argmax"] = std::move(argmax);
  summary["argmax_has_block"] = report.argmax_has_block;
  out += summary.dump() + "\n";
  return out;
}

}  // namespace redword
