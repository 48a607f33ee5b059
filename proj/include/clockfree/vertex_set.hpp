#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace clockfree {

// Hard ceiling on graph order. Everything here is desk scale.
inline constexpr int kMaxVertices = 256;

// Fixed-capacity bitset over vertex ids 0..kMaxVertices-1.
class VertexSet {
 public:
  static constexpr int kWords = kMaxVertices / 64;

  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    iterator(const VertexSet* s, int v) : set_(s), v_(v) {}
    int operator*() const { return v_; }
    iterator& operator++() {
      v_ = set_->next(v_);
      return *this;
    }
    iterator operator++(int) {
      iterator t = *this;
      ++*this;
      return t;
    }
    bool operator==(const iterator& o) const { return v_ == o.v_; }

   private:
    const VertexSet* set_ = nullptr;
    int v_ = -1;
  };

  constexpr VertexSet() = default;
  VertexSet(std::initializer_list<int> vs) {
    for (int v : vs) insert(v);
  }
  template <class It>
  VertexSet(It first, It last) {
    for (; first != last; ++first) insert(*first);
  }

  // {0, ..., n-1}
  static VertexSet range(int n);
  static VertexSet single(int v) {
    VertexSet s;
    s.insert(v);
    return s;
  }

  void insert(int v) { w_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(int v) { w_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  bool contains(int v) const { return (w_[v >> 6] >> (v & 63)) & 1; }
  void clear() { w_.fill(0); }

  int size() const {
    int c = 0;
    for (auto x : w_) c += std::popcount(x);
    return c;
  }
  bool empty() const {
    for (auto x : w_)
      if (x) return false;
    return true;
  }
  // Smallest element, or -1.
  int front() const { return next(-1); }
  // Largest element, or -1.
  int back() const;
  // Smallest element greater than v, or -1.
  int next(int v) const;

  bool intersects(const VertexSet& o) const {
    for (int i = 0; i < kWords; ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }
  bool is_subset_of(const VertexSet& o) const {
    for (int i = 0; i < kWords; ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) w_[i] |= o.w_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) w_[i] &= o.w_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) w_[i] &= ~o.w_[i];
    return *this;
  }
  VertexSet& operator^=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) w_[i] ^= o.w_[i];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }

  VertexSet with(int v) const {
    VertexSet s = *this;
    s.insert(v);
    return s;
  }
  VertexSet without(int v) const {
    VertexSet s = *this;
    s.erase(v);
    return s;
  }

  iterator begin() const { return iterator(this, front()); }
  iterator end() const { return iterator(this, -1); }

  std::vector<int> to_vector() const;
  std::uint64_t low_word() const { return w_[0]; }
  std::size_t hash() const;

  friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.w_ == b.w_; }
  // Lexicographic order on the sorted element sequences.
  friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b);

 private:
  std::array<std::uint64_t, kWords> w_{};
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace clockfree
