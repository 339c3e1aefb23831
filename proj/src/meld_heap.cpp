#include "meld_heap.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace disperse {

MeldHeap::~MeldHeap() { clear(); }

MeldHeap::MeldHeap(MeldHeap&& other) noexcept
    : root_(std::exchange(other.root_, nullptr)),
      size_(std::exchange(other.size_, 0)),
      comparisons_(other.comparisons_) {}

MeldHeap& MeldHeap::operator=(MeldHeap&& other) noexcept {
  if (this != &other) {
    clear();
    root_ = std::exchange(other.root_, nullptr);
    size_ = std::exchange(other.size_, 0);
    comparisons_ = other.comparisons_;
  }
  return *this;
}

void MeldHeap::clear() {
  if (!root_) return;
  // iterative teardown; sibling lists can be as long as the heap itself
  std::vector<Node*> pending;
  pending.push_back(root_);
  while (!pending.empty()) {
    Node* n = pending.back();
    pending.pop_back();
    if (n->child) pending.push_back(n->child);
    if (n->sibling) pending.push_back(n->sibling);
    delete n;
  }
  root_ = nullptr;
  size_ = 0;
}

MeldHeap::Node* MeldHeap::link(Node* a, Node* b) {
  if (comparisons_) ++*comparisons_;
  if (b->key < a->key) std::swap(a, b);
  b->sibling = a->child;
  a->child = b;
  return a;
}

MeldHeap::Node* MeldHeap::merge_pairs(Node* first) {
  if (!first) return nullptr;
  // first pass: link adjacent pairs, keeping the survivors
  std::vector<Node*> halves;
  while (first) {
    Node* a = first;
    Node* b = a->sibling;
    if (!b) {
      a->sibling = nullptr;
      halves.push_back(a);
      break;
    }
    first = b->sibling;
    a->sibling = nullptr;
    b->sibling = nullptr;
    halves.push_back(link(a, b));
  }
  // second pass: fold right to left
  Node* root = halves.back();
  for (std::size_t k = halves.size() - 1; k > 0; --k) root = link(halves[k - 1], root);
  return root;
}

void MeldHeap::insert(Int128 key) {
  Node* n = new Node{key, nullptr, nullptr};
  root_ = root_ ? link(root_, n) : n;
  ++size_;
}

Int128 MeldHeap::find_min() const {
  if (!root_) throw std::out_of_range("MeldHeap::find_min on empty heap");
  return root_->key;
}

Int128 MeldHeap::extract_min() {
  if (!root_) throw std::out_of_range("MeldHeap::extract_min on empty heap");
  Node* old = root_;
  Int128 key = old->key;
  root_ = merge_pairs(old->child);
  delete old;
  --size_;
  return key;
}

void MeldHeap::meld(MeldHeap& other) {
  if (this == &other || !other.root_) return;
  root_ = root_ ? link(root_, other.root_) : other.root_;
  size_ += other.size_;
  other.root_ = nullptr;
  other.size_ = 0;
}

}  // namespace disperse
