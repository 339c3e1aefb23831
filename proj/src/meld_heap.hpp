#pragma once

#include <cstddef>
#include <cstdint>

#include "scalar.hpp"

namespace disperse {

// Meldable min-heap over Int128 keys (pairing heap). insert and meld cost
// one key comparison; extract_min pairs up the root's children and is
// O(log n) amortized. An optional external counter receives one tick per
// key comparison; over any m operations the total stays below
// 4 * m * log2(m + 2).
//
// Duplicate keys are kept and extracted once each. No decrease-key or
// arbitrary deletion.
class MeldHeap {
 public:
  MeldHeap() = default;
  explicit MeldHeap(std::uint64_t* comparison_counter) : comparisons_(comparison_counter) {}
  ~MeldHeap();

  MeldHeap(const MeldHeap&) = delete;
  MeldHeap& operator=(const MeldHeap&) = delete;
  MeldHeap(MeldHeap&& other) noexcept;
  MeldHeap& operator=(MeldHeap&& other) noexcept;

  void insert(Int128 key);
  Int128 find_min() const;     // throws std::out_of_range when empty
  Int128 extract_min();        // throws std::out_of_range when empty
  void meld(MeldHeap& other);  // steals other's keys, leaving it empty

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

 private:
  struct Node {
    Int128 key;
    Node* child = nullptr;
    Node* sibling = nullptr;
  };

  Node* link(Node* a, Node* b);
  Node* merge_pairs(Node* first);
  void clear();

  Node* root_ = nullptr;
  std::size_t size_ = 0;
  std::uint64_t* comparisons_ = nullptr;
};

}  // namespace disperse
