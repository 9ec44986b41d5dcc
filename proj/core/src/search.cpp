#include "ooc/search.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <map>
#include <random>
#include <stdexcept>

#include "ooc/bounds.hpp"
#include "ooc/budget.hpp"
#include "ooc/errors.hpp"
#include "ooc/exact_cover.hpp"
#include "ooc/independent_set.hpp"
#include "ooc/verify.hpp"

namespace ooc {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Flattened (row_i <= row_j, difference) key used for conflict detection.
std::vector<std::uint64_t> resources_of(const Codeword& cw, int n, int m) {
  std::vector<std::uint64_t> keys;
  const auto c = cw.cells();
  for (std::size_t a = 0; a < c.size(); ++a) {
    for (std::size_t b = 0; b < c.size(); ++b) {
      if (a == b || c[a].row > c[b].row) continue;
      const auto i = static_cast<std::uint64_t>(c[a].row);
      const auto j = static_cast<std::uint64_t>(c[b].row);
      keys.push_back((i * static_cast<std::uint64_t>(n) + j) * static_cast<std::uint64_t>(m) +
                     static_cast<std::uint64_t>(mod(c[a].slot - c[b].slot, m)));
    }
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  return keys;
}

int auto_multiplicity(const Codeword& cw, int m) {
  ResidueCounts pure;
  const auto c = cw.cells();
  for (std::size_t a = 0; a < c.size(); ++a) {
    for (std::size_t b = 0; b < c.size(); ++b) {
      if (a != b && c[a].row == c[b].row) ++pure[mod(c[a].slot - c[b].slot, m)];
    }
  }
  int best = 0;
  for (const auto& [d, count] : pure) best = std::max(best, count);
  return best;
}

// Maximum set of candidates with pairwise disjoint resources.
SearchOutcome pack(const std::vector<Codeword>& candidates, const CodeParams& params, const SearchConfig& config,
                   Clock::time_point start) {
  ConflictGraph graph(candidates.size());
  std::map<std::uint64_t, std::vector<std::size_t>> users;
  for (std::size_t v = 0; v < candidates.size(); ++v) {
    for (std::uint64_t key : resources_of(candidates[v], params.n, params.m)) users[key].push_back(v);
  }
  for (const auto& [key, list] : users) {
    for (std::size_t a = 0; a < list.size(); ++a) {
      for (std::size_t b = a + 1; b < list.size(); ++b) graph.add_edge(list[a], list[b]);
    }
  }
  Budget budget(config.time_budget_seconds, config.node_budget);
  const IndependentSetResult mis = maximum_independent_set(graph, budget);

  Code code{params, {}};
  for (std::size_t v : mis.vertices) code.codewords.push_back(candidates[v]);
  std::sort(code.codewords.begin(), code.codewords.end());
  if (!verify_code(code).ok()) throw std::logic_error("search produced a code that fails verification");

  SearchOutcome out;
  out.best_size = static_cast<std::int64_t>(code.size());
  out.best = std::move(code);
  out.success = true;
  out.proven_optimal = mis.complete;
  out.nodes = mis.nodes;
  out.elapsed_seconds = seconds_since(start);
  return out;
}

// Generators a with {0, a, 2a} a genuine 3-set, one per support (a ~ m - a).
std::vector<int> equi_generators(int m, int lambda_a) {
  std::vector<int> gens;
  for (int a = 1; 2 * a < m; ++a) {
    if (lambda_a < 3 && mod(3LL * a, m) == 0) continue;
    gens.push_back(a);
  }
  return gens;
}

SearchOutcome gdd_exact_cover(int u, int m, const SearchConfig& config, Clock::time_point start);
SearchOutcome gdd_hill_climb(int u, int m, const SearchConfig& config, Clock::time_point start);

}  // namespace

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::exhaustive: return "exhaustive";
    case Strategy::branch_and_bound: return "branch_and_bound";
    case Strategy::exact_cover: return "exact_cover";
    case Strategy::hill_climb_restart: return "hill_climb_restart";
  }
  return "?";
}

Strategy strategy_from_string(const std::string& s) {
  if (s == "exhaustive") return Strategy::exhaustive;
  if (s == "branch_and_bound") return Strategy::branch_and_bound;
  if (s == "exact_cover") return Strategy::exact_cover;
  if (s == "hill_climb_restart" || s == "hill_climb") return Strategy::hill_climb_restart;
  throw ParameterError("unknown search strategy: " + s);
}

SearchOutcome optimal_search(int n, int m, int lambda_a, const SearchConfig& config) {
  const auto start = Clock::now();
  const CodeParams params{n, m, 3, lambda_a, 1};
  params.validate();
  // Enumerate 3-subsets of the n*m cells, keeping one normalized codeword per
  // translation orbit whose autocorrelation is within lambda_a.
  const int cells = n * m;
  std::vector<Codeword> candidates;
  for (int a = 0; a < cells; ++a) {
    for (int b = a + 1; b < cells; ++b) {
      for (int c = b + 1; c < cells; ++c) {
        const Codeword cw{{a / m, a % m}, {b / m, b % m}, {c / m, c % m}};
        if (!(normalize(cw, m) == cw)) continue;
        if (auto_multiplicity(cw, m) > lambda_a) continue;
        candidates.push_back(cw);
      }
    }
  }
  return pack(candidates, params, config, start);
}

SearchOutcome equi_search(int m, int lambda_a, const SearchConfig& config) {
  const auto start = Clock::now();
  if (m < 1) throw DomainError("m must be positive");
  if (lambda_a != 2 && lambda_a != 3) throw DomainError("equi_search supports lambda_a in {2, 3}");
  const CodeParams params{1, m, 3, lambda_a, 1};
  std::vector<Codeword> candidates;
  for (int a : equi_generators(m, lambda_a)) candidates.push_back(Codeword::on_row(0, {0, a, 2LL * a}, m));
  return pack(candidates, params, config, start);
}

SearchOutcome tight_search(int m, const SearchConfig& config) {
  const auto start = Clock::now();
  if (m < 3) throw DomainError("tight search needs m >= 3");
  const std::vector<int> gens = equi_generators(m, 3);
  ExactCover problem(static_cast<std::size_t>(m - 1));
  for (int a : gens) {
    const std::array<int, 3> slots{0, a, mod(2LL * a, m)};
    std::vector<std::size_t> items;
    for (int d : slot_difference_support(slots, m)) items.push_back(static_cast<std::size_t>(d - 1));
    problem.add_option(items);
  }
  Budget budget(config.time_budget_seconds, config.node_budget);
  const auto cover = problem.solve(budget);

  SearchOutcome out;
  Code code{{1, m, 3, 3, 1}, {}};
  if (cover) {
    for (std::size_t option : *cover) {
      const int a = gens[option];
      code.codewords.push_back(Codeword::on_row(0, {0, a, 2LL * a}, m));
    }
    std::sort(code.codewords.begin(), code.codewords.end());
    if (!verify_code(code).ok() || !structural_facts(code).is_tight_cac) {
      throw std::logic_error("tight search produced an invalid cover");
    }
  }
  out.best_size = static_cast<std::int64_t>(code.size());
  out.best = std::move(code);
  out.success = cover.has_value();
  out.proven_optimal = !budget.exhausted();
  out.nodes = budget.nodes();
  out.elapsed_seconds = seconds_since(start);
  return out;
}

SearchOutcome gdd_search(int u, int m, const SearchConfig& config) {
  const auto start = Clock::now();
  if (u < 3 || m < 1) throw DomainError("gdd search needs u >= 3 and m >= 1");
  if (!gdd_exists(3, u, m)) {
    SearchOutcome out;
    GddBaseBlocks empty;
    empty.m = m;
    empty.group_type = {{3, u}};
    empty.groups = GddBaseBlocks::consecutive_groups(empty.group_type);
    out.best = std::move(empty);
    out.proven_optimal = true;
    out.elapsed_seconds = seconds_since(start);
    return out;
  }
  if (config.strategy == Strategy::exact_cover) return gdd_exact_cover(u, m, config, start);
  if (config.strategy == Strategy::hill_climb_restart) return gdd_hill_climb(u, m, config, start);
  throw ParameterError("gdd search supports exact_cover and hill_climb_restart");
}

namespace {

// Items of the GDD covering problem: one per (cross-group row pair i < j,
// difference slot_j - slot_i).
class GddItems {
 public:
  GddItems(int u, int m) : n_(3 * u), m_(m), pair_index_(static_cast<std::size_t>(n_ * n_), -1) {
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j) {
        if (i / 3 != j / 3) pair_index_[static_cast<std::size_t>(i * n_ + j)] = pairs_++;
      }
    }
  }

  std::size_t count() const { return static_cast<std::size_t>(pairs_) * static_cast<std::size_t>(m_); }

  // Item covered by cells (i, x) and (j, y), i != j in different groups.
  std::size_t item(Cell p, Cell q) const {
    if (p.row > q.row) std::swap(p, q);
    return static_cast<std::size_t>(pair_index_[static_cast<std::size_t>(p.row * n_ + q.row)]) *
               static_cast<std::size_t>(m_) +
           static_cast<std::size_t>(mod(q.slot - p.slot, m_));
  }

  std::array<std::size_t, 3> items(const std::array<Cell, 3>& b) const {
    return {item(b[0], b[1]), item(b[0], b[2]), item(b[1], b[2])};
  }

  int rows() const { return n_; }

 private:
  int n_;
  int m_;
  int pairs_ = 0;
  std::vector<int> pair_index_;
};

SearchOutcome finalize_gdd(int u, int m, std::vector<Codeword> blocks, bool proven, std::uint64_t nodes,
                         Clock::time_point start) {
  GddBaseBlocks gdd;
  gdd.m = m;
  gdd.group_type = {{3, u}};
  gdd.groups = GddBaseBlocks::consecutive_groups(gdd.group_type);
  for (Codeword& b : blocks) b = normalize(b, m);
  std::sort(blocks.begin(), blocks.end());
  gdd.base_blocks = std::move(blocks);
  SearchOutcome out;
  out.success = !gdd.base_blocks.empty() && check_gdd(gdd).empty();
  if (!gdd.base_blocks.empty() && !out.success) throw std::logic_error("gdd search produced an invalid design");
  out.best_size = out.success ? static_cast<std::int64_t>(gdd.base_blocks.size()) : 0;
  if (!out.success) gdd.base_blocks.clear();
  out.best = std::move(gdd);
  out.proven_optimal = proven;
  out.nodes = nodes;
  out.elapsed_seconds = seconds_since(start);
  return out;
}

SearchOutcome gdd_exact_cover(int u, int m, const SearchConfig& config, Clock::time_point start) {
  const GddItems items(u, m);
  const int n = items.rows();
  std::vector<std::array<Cell, 3>> options;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (i / 3 == j / 3) continue;
      for (int k = j + 1; k < n; ++k) {
        if (k / 3 == i / 3 || k / 3 == j / 3) continue;
        for (int a = 0; a < m; ++a) {
          for (int b = 0; b < m; ++b) options.push_back({Cell{i, 0}, Cell{j, a}, Cell{k, b}});
        }
      }
    }
  }
  std::mt19937_64 rng(config.seed);
  std::shuffle(options.begin(), options.end(), rng);
  ExactCover problem(items.count());
  for (const auto& o : options) {
    const auto it = items.items(o);
    problem.add_option(it);
  }
  Budget budget(config.time_budget_seconds, config.node_budget);
  const auto cover = problem.solve(budget);
  std::vector<Codeword> blocks;
  if (cover) {
    for (std::size_t option : *cover) {
      const auto& o = options[option];
      blocks.push_back(Codeword{o[0], o[1], o[2]});
    }
  }
  return finalize_gdd(u, m, std::move(blocks), !budget.exhausted(), budget.nodes(), start);
}

// Stinson-style hill climbing on the cyclic covering problem: join two
// uncovered partners of a live row into a block, evicting whichever block
// already covers the third pair. Unlike the Steiner triple case, a leftover
// triangle whose differences do not close up is invariant under that move,
// so a stalled climb drops a few random blocks and carries on.
SearchOutcome gdd_hill_climb(int u, int m, const SearchConfig& config, Clock::time_point start) {
  const GddItems items(u, m);
  const int n = items.rows();
  GddBaseBlocks shape;
  shape.m = m;
  shape.group_type = {{3, u}};
  const std::size_t target = expected_base_blocks(shape);
  const std::size_t stall_limit = 4 * items.count();

  std::mt19937_64 rng(config.seed);
  Budget budget(config.time_budget_seconds, config.node_budget);

  // Live blocks are kept densely in `blocks`; owner[] indexes into it.
  std::vector<std::array<Cell, 3>> blocks;
  std::vector<long long> owner(items.count(), -1);
  std::vector<long long> live_per_row(static_cast<std::size_t>(n), static_cast<long long>(n - 3) * m);

  const auto release = [&](std::size_t id) {
    for (std::size_t it : items.items(blocks[id])) owner[it] = -1;
    for (const Cell& c : blocks[id]) live_per_row[static_cast<std::size_t>(c.row)] += 2;
    if (id + 1 != blocks.size()) {
      blocks[id] = blocks.back();
      for (std::size_t it : items.items(blocks[id])) owner[it] = static_cast<long long>(id);
    }
    blocks.pop_back();
  };
  const auto place = [&](const std::array<Cell, 3>& b) {
    for (std::size_t it : items.items(b)) owner[it] = static_cast<long long>(blocks.size());
    for (const Cell& c : b) live_per_row[static_cast<std::size_t>(c.row)] -= 2;
    blocks.push_back(b);
  };
  const auto evict_random = [&]() {
    if (blocks.empty()) return;
    release(std::uniform_int_distribution<std::size_t>(0, blocks.size() - 1)(rng));
  };

  std::vector<Cell> partners;
  std::uniform_int_distribution<int> any_row(0, n - 1);
  std::size_t best = 0;
  std::size_t stall = 0;
  while (blocks.size() < target && budget.tick()) {
    int row = any_row(rng);
    while (live_per_row[static_cast<std::size_t>(row)] == 0) row = any_row(rng);
    partners.clear();
    for (int j = 0; j < n; ++j) {
      if (j / 3 == row / 3) continue;
      for (int s = 0; s < m; ++s) {
        if (owner[items.item({row, 0}, {j, s})] < 0) partners.push_back({j, s});
      }
    }
    std::uniform_int_distribution<std::size_t> pick(0, partners.size() - 1);
    bool placed = false;
    for (int attempt = 0; attempt < 32 && !placed; ++attempt) {
      const Cell p = partners[pick(rng)];
      const Cell q = partners[pick(rng)];
      if (p.row / 3 == q.row / 3) continue;
      const std::size_t third = items.item(p, q);
      if (owner[third] >= 0) release(static_cast<std::size_t>(owner[third]));
      place({Cell{row, 0}, p, q});
      placed = true;
    }
    if (!placed) evict_random();

    if (blocks.size() > best) {
      best = blocks.size();
      stall = 0;
    } else if (++stall > stall_limit) {
      const int drops = 1 + static_cast<int>(rng() % 3);
      for (int k = 0; k < drops; ++k) evict_random();
      best = blocks.size();
      stall = 0;
    }
  }

  std::vector<Codeword> out;
  if (blocks.size() == target) {
    for (const auto& b : blocks) out.push_back(Codeword{b[0], b[1], b[2]});
  }
  return finalize_gdd(u, m, std::move(out), false, budget.nodes(), start);
}

}  // namespace
}  // namespace ooc
