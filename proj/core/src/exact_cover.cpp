#include "ooc/exact_cover.hpp"

#include <stdexcept>

namespace ooc {

ExactCover::ExactCover(std::size_t items) : nodes_(items + 1), sizes_(items + 1, 0), items_(items) {
  for (std::size_t c = 0; c <= items; ++c) {
    nodes_[c] = {c == 0 ? items : c - 1, c == items ? 0 : c + 1, c, c, c, SIZE_MAX};
  }
}

std::size_t ExactCover::add_option(std::span<const std::size_t> items) {
  if (items.empty()) throw std::invalid_argument("empty option");
  const std::size_t option = option_first_.size();
  const std::size_t first = nodes_.size();
  option_first_.push_back(first);
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (items[k] >= items_) throw std::out_of_range("option item out of range");
    const std::size_t column = items[k] + 1;
    const std::size_t id = nodes_.size();
    const std::size_t left = k == 0 ? id : id - 1;
    nodes_.push_back({left, first, nodes_[column].up, column, column, option});
    nodes_[nodes_[column].up].down = id;
    nodes_[column].up = id;
    nodes_[left].right = id;
    nodes_[first].left = id;
    ++sizes_[column];
  }
  return option;
}

void ExactCover::cover(std::size_t c) {
  nodes_[nodes_[c].right].left = nodes_[c].left;
  nodes_[nodes_[c].left].right = nodes_[c].right;
  for (std::size_t i = nodes_[c].down; i != c; i = nodes_[i].down) {
    for (std::size_t j = nodes_[i].right; j != i; j = nodes_[j].right) {
      nodes_[nodes_[j].down].up = nodes_[j].up;
      nodes_[nodes_[j].up].down = nodes_[j].down;
      --sizes_[nodes_[j].column];
    }
  }
}

void ExactCover::uncover(std::size_t c) {
  for (std::size_t i = nodes_[c].up; i != c; i = nodes_[i].up) {
    for (std::size_t j = nodes_[i].left; j != i; j = nodes_[j].left) {
      ++sizes_[nodes_[j].column];
      nodes_[nodes_[j].down].up = j;
      nodes_[nodes_[j].up].down = j;
    }
  }
  nodes_[nodes_[c].right].left = c;
  nodes_[nodes_[c].left].right = c;
}

std::size_t ExactCover::choose_column() const {
  std::size_t best = nodes_[0].right;
  for (std::size_t c = nodes_[0].right; c != 0; c = nodes_[c].right) {
    if (sizes_[c] < sizes_[best]) best = c;
  }
  return best;
}

bool ExactCover::search(Budget& budget, std::vector<std::size_t>& chosen, std::uint64_t& found,
                        std::uint64_t limit) {
  if (nodes_[0].right == 0) {
    ++found;
    return found >= limit;
  }
  if (!budget.tick()) return true;
  const std::size_t c = choose_column();
  if (sizes_[c] == 0) return false;
  cover(c);
  for (std::size_t r = nodes_[c].down; r != c; r = nodes_[r].down) {
    chosen.push_back(nodes_[r].option);
    for (std::size_t j = nodes_[r].right; j != r; j = nodes_[j].right) cover(nodes_[j].column);
    const bool stop = search(budget, chosen, found, limit);
    for (std::size_t j = nodes_[r].left; j != r; j = nodes_[j].left) uncover(nodes_[j].column);
    if (stop) {
      uncover(c);
      return true;
    }
    chosen.pop_back();
  }
  uncover(c);
  return false;
}

std::optional<std::vector<std::size_t>> ExactCover::solve(Budget& budget) {
  std::vector<std::size_t> chosen;
  std::uint64_t found = 0;
  search(budget, chosen, found, 1);
  if (found == 0) return std::nullopt;
  return chosen;
}

std::uint64_t ExactCover::count(Budget& budget, std::uint64_t limit) {
  std::vector<std::size_t> chosen;
  std::uint64_t found = 0;
  search(budget, chosen, found, limit);
  return found;
}

}  // namespace ooc
