#pragma once

#include <chrono>
#include <cstdint>

namespace ooc {

/// Node and wall-clock limits for one search call.
class Budget {
 public:
  Budget(double seconds, std::uint64_t nodes)
      : deadline_(std::chrono::steady_clock::now() + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                                        std::chrono::duration<double>(seconds))),
        node_limit_(nodes) {}

  /// Counts one node; false once either limit is hit (sticky).
  bool tick() {
    if (exhausted_) return false;
    ++nodes_;
    if (nodes_ > node_limit_ || ((nodes_ & 0x3ff) == 0 && std::chrono::steady_clock::now() > deadline_)) {
      exhausted_ = true;
    }
    return !exhausted_;
  }

  bool exhausted() const { return exhausted_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  std::chrono::steady_clock::time_point deadline_;
  std::uint64_t node_limit_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace ooc
