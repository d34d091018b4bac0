#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace kcore {

/// Fixed-size array of integer cells. All read-modify-writes are linearizable
/// and return the value held immediately before the modification.
class AtomicCellArray {
 public:
  using value_type = std::int64_t;

  AtomicCellArray() = default;
  explicit AtomicCellArray(std::size_t size) : cells_(size) {}

  template <class T>
  static AtomicCellArray from(std::span<const T> values) {
    AtomicCellArray a(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
      a.cells_[i].store(static_cast<value_type>(values[i]), std::memory_order_relaxed);
    }
    return a;
  }

  std::size_t size() const { return cells_.size(); }

  value_type load(std::size_t i) const { return cells_[i].load(std::memory_order_relaxed); }
  void store(std::size_t i, value_type v) { cells_[i].store(v, std::memory_order_relaxed); }

  value_type fetch_add(std::size_t i, value_type delta) {
    return cell(i).fetch_add(delta, std::memory_order_acq_rel);
  }
  value_type fetch_sub(std::size_t i, value_type delta) {
    return cell(i).fetch_sub(delta, std::memory_order_acq_rel);
  }

  /// Replaces old with (old > floor ? old - 1 : floor) as one transaction and
  /// returns old. When old == floor nothing is stored, so that branch costs a
  /// plain load.
  value_type clamped_decrement(std::size_t i, value_type floor) {
    auto& c = cell(i);
    value_type old = c.load(std::memory_order_acquire);
    for (;;) {
      if (old == floor) return old;
      const value_type next = old > floor ? old - 1 : floor;
      if (c.compare_exchange_weak(old, next, std::memory_order_acq_rel, std::memory_order_acquire)) {
        return old;
      }
    }
  }

  std::vector<value_type> snapshot() const {
    std::vector<value_type> out(cells_.size());
    for (std::size_t i = 0; i < cells_.size(); ++i) out[i] = load(i);
    return out;
  }

 private:
  std::atomic<value_type>& cell(std::size_t i) {
    if (i >= cells_.size()) {
      throw std::out_of_range("cell index " + std::to_string(i) + " out of range");
    }
    return cells_[i];
  }

  std::vector<std::atomic<value_type>> cells_;
};

/// Free-function form of AtomicCellArray::clamped_decrement.
inline AtomicCellArray::value_type clamped_decrement(AtomicCellArray& cells, std::size_t index,
                                                     AtomicCellArray::value_type floor) {
  return cells.clamped_decrement(index, floor);
}

}  // namespace kcore
