#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "redword/graph.hpp"
#include "redword/permutation.hpp"

namespace redword {

/// |R(sigma)| minus the total braid degree of G(sigma).
std::int64_t a_statistic(const Permutation& sigma, StatsCache& cache);
std::int64_t a_statistic(const GraphStats& stats);

enum class CaseLabel { K1, SingleJ, CompletelyComm, FullyComm, W0Block, Other };

const char* to_string(CaseLabel c);

bool is_321_avoiding(const Permutation& sigma);

/// Des(sigma) = [i, i+k-1] u J with [i, i+k-1] a longest run; alpha = sigma * w0^(k+1,i)
/// must have Des(alpha) = J. K1: no two consecutive descents (the identity included).
CaseLabel classify_case(const Permutation& sigma);

/// A > 0 for K1, SingleJ, CompletelyComm, FullyComm; A = 0 for W0Block.
/// nullopt for Other.
std::optional<bool> check_casesproved(const Permutation& sigma, StatsCache& cache);

struct ClassBounds {
  bool bound1 = false;      // |B| + |C| - 1 <= |R| <= |B| |C|
  bool weaker_v = false;    // |B| >= |R|/2 - 1
  bool main_result = false; // weaker_v and |C| <= |R|/2 + 2
  bool conj_braid = false;  // |R|/2 <= |B| <= |R|
  bool conj_comm = false;   // |C| <= |R|/2 + 1
};

ClassBounds check_class_bounds(const GraphStats& s);

enum class ScanStatus { Checked, Skipped };

struct ScanRecord {
  Permutation sigma = Permutation::identity(1);
  ScanStatus status = ScanStatus::Checked;
  GraphStats stats;
  std::int64_t a_stat = 0;
  CaseLabel case_label = CaseLabel::Other;
  std::vector<std::string> hard_failures;
  std::vector<std::string> soft_violations;
};

struct ScanOptions {
  int n = 4;
  std::optional<std::size_t> sample;  // sample size; exhaustive if unset
  std::uint64_t seed = 0;
  std::uint64_t max_words = 4'000'000;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct ScanReport {
  std::vector<ScanRecord> records;  // ascending one-line order
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::size_t hard_failures = 0;
  std::size_t soft_violations = 0;
  // Largest sum d_B / |R| over checked records, as a fraction.
  std::uint64_t best_db = 0;
  std::uint64_t best_r = 1;
  std::vector<Permutation> argmax;
  bool argmax_has_block = true;
};

/// The permutations a scan visits: all of S_n, or `sample` distinct ones drawn
/// uniformly with a 64-bit Mersenne Twister seeded by `seed`; ascending.
std::vector<Permutation> scan_domain(const ScanOptions& opt);

/// Checks one permutation: proven identities and bounds become hard failures,
/// the conjectured bounds and A >= 0 soft violations.
ScanRecord scan_one(const Permutation& sigma, StatsCache& cache);

/// Runs scan_one over the domain in parallel and adds the argmax check for the
/// braid-degree ratio (a soft violation when no w0 block attains it).
ScanReport scan(const ScanOptions& opt);

/// One JSON object per record, then {"checked", "skipped", "hard_failures", "soft_violations"}.
std::string to_json_lines(const ScanReport& report);

}  // namespace redword
