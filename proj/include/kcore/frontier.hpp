#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "kcore/types.hpp"

namespace kcore {

/// Deduplicating work queue over vertex ids [0, capacity). Pushes are safe
/// from any number of workers; a vertex is stored at most once between two
/// drains. Membership uses a per-vertex epoch stamp, so drain() does not have
/// to clear flags.
class FrontierQueue {
 public:
  explicit FrontierQueue(vertex_t capacity);

  /// Returns true iff this call inserted v.
  bool push(vertex_t v);

  /// Returns every id pushed since the previous drain and starts a new epoch.
  /// Must not run concurrently with push().
  std::vector<vertex_t> drain();

  /// True if v was pushed since the last drain. Not synchronized with push().
  bool contains(vertex_t v) const { return epoch_of_[v].load(std::memory_order_acquire) == epoch_; }

  std::size_t size() const { return tail_.load(std::memory_order_acquire); }
  bool empty() const { return size() == 0; }
  vertex_t capacity() const { return static_cast<vertex_t>(epoch_of_.size()); }

  /// Slot `index` (< size()) once its writer has published it. Used to consume
  /// items while other workers are still pushing.
  vertex_t wait_item(std::size_t index) const;

 private:
  std::vector<std::atomic<std::uint32_t>> epoch_of_;
  std::vector<std::atomic<vertex_t>> items_;
  std::atomic<std::size_t> tail_{0};
  std::uint32_t epoch_ = 1;
};

}  // namespace kcore
