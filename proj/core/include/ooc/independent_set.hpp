#pragma once

// Maximum independent set by branch and reduce: degree <= 1 and dominated
// triangle reductions, component splitting, and a greedy clique-cover bound.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ooc/budget.hpp"

namespace ooc {

class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t n) : words_((n + 63) / 64, 0), n_(n) {}

  static VertexSet full(std::size_t n);

  void insert(std::size_t v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(std::size_t v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  bool contains(std::size_t v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }
  bool empty() const;
  std::size_t count() const;
  std::size_t count_common(const VertexSet& other) const;
  void subtract(const VertexSet& other);
  void intersect(const VertexSet& other);
  std::size_t universe() const { return n_; }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = __builtin_ctzll(bits);
        fn(w * 64 + static_cast<std::size_t>(b));
        bits &= bits - 1;
      }
    }
  }

 private:
  std::vector<std::uint64_t> words_;
  std::size_t n_ = 0;
};

class ConflictGraph {
 public:
  explicit ConflictGraph(std::size_t n) : adj_(n, VertexSet(n)) {}

  void add_edge(std::size_t a, std::size_t b);
  bool adjacent(std::size_t a, std::size_t b) const { return adj_[a].contains(b); }
  const VertexSet& neighbours(std::size_t v) const { return adj_[v]; }
  std::size_t size() const { return adj_.size(); }

 private:
  std::vector<VertexSet> adj_;
};

struct IndependentSetResult {
  std::vector<std::size_t> vertices;  // sorted
  bool complete = false;              // search finished, so the set is maximum
  std::uint64_t nodes = 0;
};

IndependentSetResult maximum_independent_set(const ConflictGraph& graph, Budget& budget);

}  // namespace ooc
