#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ooc/core.hpp"

namespace ooc {

/// Group type entry: u groups of v rows each, i.e. (v*m)^u points.
struct GroupType {
  int v = 0;
  int u = 0;
  friend bool operator==(const GroupType&, const GroupType&) = default;
};

/// Base blocks of an m-cyclic 3-GDD over I_n x Z_m whose groups are sets of
/// whole rows. Developing every base block through Z_m must cover each pair
/// of cells from different groups exactly once.
struct GddBaseBlocks {
  int m = 0;
  std::vector<GroupType> group_type;
  std::vector<std::vector<int>> groups;  // rows of each group, consecutive blocks
  std::vector<Codeword> base_blocks;

  int rows() const;
  /// Groups as consecutive row blocks in group_type order.
  static std::vector<std::vector<int>> consecutive_groups(const std::vector<GroupType>& type);
};

/// Checks the GDD invariants directly: groups partition the rows consistently
/// with group_type, no block meets a group twice, and every cross-group
/// (row pair, difference) is covered exactly once. Empty string on success,
/// otherwise a description of the first problem found.
std::string check_gdd(const GddBaseBlocks& gdd);

/// Number of base blocks a valid GDD must have.
std::size_t expected_base_blocks(const GddBaseBlocks& gdd);

}  // namespace ooc
