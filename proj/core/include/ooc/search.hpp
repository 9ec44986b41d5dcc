#pragma once

// Brute-force and backtracking oracles. These never consult the closed
// forms in bounds.hpp; tests compare the two.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "ooc/core.hpp"
#include "ooc/gdd.hpp"

namespace ooc {

enum class Strategy { exhaustive, branch_and_bound, exact_cover, hill_climb_restart };

std::string to_string(Strategy s);
Strategy strategy_from_string(const std::string& s);

struct SearchConfig {
  double time_budget_seconds = 60.0;
  std::uint64_t node_budget = 1'000'000'000;
  Strategy strategy = Strategy::exhaustive;
  std::uint64_t seed = 1;
};

struct SearchOutcome {
  std::variant<Code, GddBaseBlocks> best;
  std::int64_t best_size = 0;
  /// A witness was found (tight and GDD searches); always true for maximisation.
  bool success = false;
  /// Exhaustive or exact-cover search ran to completion, so best_size is the
  /// optimum (maximisation) or the success flag is decisive (existence).
  bool proven_optimal = false;
  std::uint64_t nodes = 0;
  double elapsed_seconds = 0.0;

  const Code& code() const { return std::get<Code>(best); }
  const GddBaseBlocks& gdd() const { return std::get<GddBaseBlocks>(best); }
};

/// Largest (n x m, 3, lambda_a, 1)-OOC: maximum independent set over
/// translation-normalized codewords with a conflict edge wherever two
/// codewords share a (row pair, difference).
SearchOutcome optimal_search(int n, int m, int lambda_a, const SearchConfig& config = {});

/// Largest equi-difference 1-D code on Z_m: lambda_a = 2 gives Psi^e(m),
/// lambda_a = 3 gives M^e(m, 3).
SearchOutcome equi_search(int m, int lambda_a, const SearchConfig& config = {});

/// Partition of Z_m \ {0} into supports of {0, a, 2a} (exact cover).
/// success = false with proven_optimal = true means no tight CAC exists.
SearchOutcome tight_search(int m, const SearchConfig& config = {});

/// Base blocks of an m-cyclic 3-GDD of type (3m)^u over I_{3u} x Z_m with
/// groups {3t, 3t+1, 3t+2}. Strategy exact_cover or hill_climb_restart.
SearchOutcome gdd_search(int u, int m, const SearchConfig& config = {});

}  // namespace ooc
