#include "ooc/gdd.hpp"

#include <numeric>

namespace ooc {

int GddBaseBlocks::rows() const {
  int n = 0;
  for (const GroupType& t : group_type) n += t.v * t.u;
  return n;
}

std::vector<std::vector<int>> GddBaseBlocks::consecutive_groups(const std::vector<GroupType>& type) {
  std::vector<std::vector<int>> groups;
  int next = 0;
  for (const GroupType& t : type) {
    for (int g = 0; g < t.u; ++g) {
      std::vector<int> rows(static_cast<std::size_t>(t.v));
      std::iota(rows.begin(), rows.end(), next);
      next += t.v;
      groups.push_back(std::move(rows));
    }
  }
  return groups;
}

std::size_t expected_base_blocks(const GddBaseBlocks& gdd) {
  // Each base block covers three (unordered row pair, difference) resources.
  const long long n = gdd.rows();
  long long within = 0;
  for (const GroupType& t : gdd.group_type) within += static_cast<long long>(t.u) * t.v * (t.v - 1) / 2;
  const long long cross_pairs = n * (n - 1) / 2 - within;
  return static_cast<std::size_t>(cross_pairs * gdd.m / 3);
}

std::string check_gdd(const GddBaseBlocks& gdd) {
  const int n = gdd.rows();
  const int m = gdd.m;
  if (m < 1) return "m must be positive";
  std::vector<int> group_of(static_cast<std::size_t>(n), -1);
  std::size_t expected_groups = 0;
  for (const GroupType& t : gdd.group_type) expected_groups += static_cast<std::size_t>(t.u);
  if (gdd.groups.size() != expected_groups) return "group count does not match the group type";
  {
    std::size_t g = 0;
    for (const GroupType& t : gdd.group_type) {
      for (int copy = 0; copy < t.u; ++copy, ++g) {
        if (gdd.groups[g].size() != static_cast<std::size_t>(t.v)) return "group size does not match the group type";
        for (int row : gdd.groups[g]) {
          if (row < 0 || row >= n || group_of[static_cast<std::size_t>(row)] != -1) {
            return "groups do not partition the rows";
          }
          group_of[static_cast<std::size_t>(row)] = static_cast<int>(g);
        }
      }
    }
  }
  // covered[(i * n + j) * m + d] for i < j: slot_j - slot_i = d.
  std::vector<int> covered(static_cast<std::size_t>(n) * n * m, 0);
  const CodeParams dims{n, m, 3, 3, 1};
  for (const Codeword& block : gdd.base_blocks) {
    if (block.weight() != 3 || !block.fits(dims)) return "base block is not a 3-subset of I_n x Z_m";
    const auto c = block.cells();
    for (std::size_t a = 0; a < 3; ++a) {
      for (std::size_t b = a + 1; b < 3; ++b) {
        const int i = c[a].row;
        const int j = c[b].row;
        if (group_of[static_cast<std::size_t>(i)] == group_of[static_cast<std::size_t>(j)]) {
          return "base block meets a group twice";
        }
        // Cells are sorted so i <= j; i == j would be caught above.
        const int d = mod(c[b].slot - c[a].slot, m);
        ++covered[(static_cast<std::size_t>(i) * n + j) * m + d];
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (group_of[static_cast<std::size_t>(i)] == group_of[static_cast<std::size_t>(j)]) continue;
      for (int d = 0; d < m; ++d) {
        const int c = covered[(static_cast<std::size_t>(i) * n + j) * m + d];
        if (c != 1) {
          return "rows " + std::to_string(i) + "," + std::to_string(j) + " difference " + std::to_string(d) +
                 " covered " + std::to_string(c) + " times";
        }
      }
    }
  }
  return {};
}

}  // namespace ooc
