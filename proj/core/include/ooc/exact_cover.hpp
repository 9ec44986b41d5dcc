#pragma once

// Algorithm X over dancing links. Items are 0..items-1, all primary.
// Column choice is minimum remaining values with lowest index on ties, so
// the search order depends only on the option insertion order.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ooc/budget.hpp"

namespace ooc {

class ExactCover {
 public:
  explicit ExactCover(std::size_t items);

  /// Returns the option index. Items must be distinct and in range.
  std::size_t add_option(std::span<const std::size_t> items);
  std::size_t options() const { return option_first_.size(); }

  /// First exact cover found, as option indices in selection order; nullopt
  /// if none exists or the budget ran out (check budget.exhausted()).
  std::optional<std::vector<std::size_t>> solve(Budget& budget);

  /// Number of exact covers, stopping early once `limit` are found.
  std::uint64_t count(Budget& budget, std::uint64_t limit);

 private:
  struct Node {
    std::size_t left, right, up, down, column, option;
  };

  void cover(std::size_t column);
  void uncover(std::size_t column);
  std::size_t choose_column() const;
  bool search(Budget& budget, std::vector<std::size_t>& chosen, std::uint64_t& found, std::uint64_t limit);

  std::vector<Node> nodes_;  // 0 is the root, 1..items are column headers
  std::vector<std::size_t> sizes_;
  std::vector<std::size_t> option_first_;
  std::size_t items_;
};

}  // namespace ooc
