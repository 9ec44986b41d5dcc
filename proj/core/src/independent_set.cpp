#include "ooc/independent_set.hpp"

#include <algorithm>
#include <bit>

namespace ooc {

VertexSet VertexSet::full(std::size_t n) {
  VertexSet s(n);
  for (std::size_t v = 0; v < n; ++v) s.insert(v);
  return s;
}

bool VertexSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t VertexSet::count() const {
  std::size_t c = 0;
  for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::size_t VertexSet::count_common(const VertexSet& other) const {
  std::size_t c = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  return c;
}

void VertexSet::subtract(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
}

void VertexSet::intersect(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
}

void ConflictGraph::add_edge(std::size_t a, std::size_t b) {
  if (a == b) return;
  adj_[a].insert(b);
  adj_[b].insert(a);
}

namespace {

using Vertices = std::vector<std::size_t>;

class Solver {
 public:
  Solver(const ConflictGraph& g, Budget& budget) : g_(g), budget_(budget) {}

  // A maximum independent set of G[live] whenever its size exceeds `floor`;
  // otherwise some independent set of size <= floor.
  Vertices run(VertexSet live, long floor) {
    Vertices chosen;
    if (!budget_.tick()) return greedy(live);
    reduce(live, chosen);
    floor -= static_cast<long>(chosen.size());
    if (live.empty()) return chosen;
    if (static_cast<long>(clique_cover(live)) <= floor) return chosen;

    std::vector<VertexSet> parts = components(live);
    if (parts.size() > 1) {
      for (VertexSet& part : parts) append(chosen, run(std::move(part), -1));
      return chosen;
    }

    std::size_t pivot = 0;
    std::size_t pivot_degree = 0;
    bool first = true;
    live.for_each([&](std::size_t v) {
      const std::size_t d = g_.neighbours(v).count_common(live);
      if (first || d > pivot_degree) {
        pivot = v;
        pivot_degree = d;
        first = false;
      }
    });

    VertexSet with = live;
    with.subtract(g_.neighbours(pivot));
    with.erase(pivot);
    Vertices take = run(std::move(with), floor - 1);
    take.push_back(pivot);

    VertexSet without = std::move(live);
    without.erase(pivot);
    Vertices skip = run(std::move(without), std::max(floor, static_cast<long>(take.size())));
    append(chosen, skip.size() > take.size() ? skip : take);
    return chosen;
  }

 private:
  static Vertices& append(Vertices& base, const Vertices& more) {
    base.insert(base.end(), more.begin(), more.end());
    return base;
  }

  // Vertices of degree <= 1, and degree-2 vertices whose neighbours are
  // adjacent, always belong to some maximum independent set.
  void reduce(VertexSet& live, Vertices& chosen) const {
    bool changed = true;
    while (changed) {
      changed = false;
      live.for_each([&](std::size_t v) {
        if (changed || !live.contains(v)) return;
        VertexSet nb = g_.neighbours(v);
        nb.intersect(live);
        const std::size_t d = nb.count();
        bool simplicial = d <= 1;
        if (d == 2) {
          std::size_t a = 0, b = 0, seen = 0;
          nb.for_each([&](std::size_t u) { (seen++ == 0 ? a : b) = u; });
          simplicial = g_.adjacent(a, b);
        }
        if (simplicial) {
          chosen.push_back(v);
          live.subtract(nb);
          live.erase(v);
          changed = true;
        }
      });
    }
  }

  std::size_t clique_cover(const VertexSet& live) const {
    std::vector<VertexSet> commons;
    live.for_each([&](std::size_t v) {
      for (VertexSet& c : commons) {
        if (c.contains(v)) {
          c.intersect(g_.neighbours(v));
          return;
        }
      }
      VertexSet c = g_.neighbours(v);
      c.intersect(live);
      commons.push_back(std::move(c));
    });
    return commons.size();
  }

  std::vector<VertexSet> components(const VertexSet& live) const {
    std::vector<VertexSet> parts;
    VertexSet unseen = live;
    while (!unseen.empty()) {
      std::size_t start = 0;
      bool found = false;
      unseen.for_each([&](std::size_t v) {
        if (!found) {
          start = v;
          found = true;
        }
      });
      VertexSet part(live.universe());
      Vertices stack{start};
      unseen.erase(start);
      while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        part.insert(v);
        VertexSet next = g_.neighbours(v);
        next.intersect(unseen);
        next.for_each([&](std::size_t u) {
          unseen.erase(u);
          stack.push_back(u);
        });
      }
      parts.push_back(std::move(part));
    }
    return parts;
  }

  Vertices greedy(VertexSet live) const {
    Vertices out;
    while (!live.empty()) {
      std::size_t best = 0;
      std::size_t best_degree = 0;
      bool first = true;
      live.for_each([&](std::size_t v) {
        const std::size_t d = g_.neighbours(v).count_common(live);
        if (first || d < best_degree) {
          best = v;
          best_degree = d;
          first = false;
        }
      });
      out.push_back(best);
      live.subtract(g_.neighbours(best));
      live.erase(best);
    }
    return out;
  }

  const ConflictGraph& g_;
  Budget& budget_;
};

}  // namespace

IndependentSetResult maximum_independent_set(const ConflictGraph& graph, Budget& budget) {
  Solver solver(graph, budget);
  IndependentSetResult result;
  result.vertices = solver.run(VertexSet::full(graph.size()), -1);
  std::sort(result.vertices.begin(), result.vertices.end());
  result.complete = !budget.exhausted();
  result.nodes = budget.nodes();
  return result;
}

}  // namespace ooc
