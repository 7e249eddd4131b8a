#pragma once

// The full verification sweep: ten numbered criteria, each evaluated over a
// range of N with per-N work fanned out over `jobs` threads. Results are
// aggregated in increasing N, so output does not depend on scheduling.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace motiondual {

struct VerifyOptions {
  int n_min = 3;
  int n_max = 12;
  /// Overrides the per-N default model bound when set.
  std::optional<int> bound;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  /// Ranges covered, counts, and the first few failures.
  std::string detail;
  double seconds = 0;
};

struct VerifySummary {
  std::vector<CriterionResult> criteria;
  double seconds = 0;

  bool passed() const;
};

/// Throws PreconditionViolated for an empty or invalid range.
VerifySummary run_verify(const VerifyOptions& options);

/// "PASS [3] name: detail (0.12 s)" per criterion plus a closing line.
std::string format_summary(const VerifySummary& summary);

/// Thresholds pinned by the criteria.
namespace limits {
inline constexpr double orc_seconds = 10.0;
inline constexpr double sweep_seconds = 60.0;
inline constexpr std::size_t oracle_comparisons = 10000;
inline constexpr int oracle_entry_bound = 3;
inline constexpr int certificate_triples = 100;
inline constexpr int chain_random_pairs = 50;
inline constexpr int chain_n_max = 9;
inline constexpr int stability_n_max = 8;
inline constexpr int stability_entry_bound = 2;
}  // namespace limits

}  // namespace motiondual
