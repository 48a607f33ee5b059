#include "clockfree/vertex_set.hpp"

namespace clockfree {

VertexSet VertexSet::range(int n) {
  VertexSet s;
  for (int i = 0; i < kWords && n > 0; ++i, n -= 64)
    s.w_[i] = n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  return s;
}

int VertexSet::next(int v) const {
  int start = v + 1;
  if (start >= kMaxVertices) return -1;
  int i = start >> 6;
  std::uint64_t word = w_[i] & (~std::uint64_t{0} << (start & 63));
  while (true) {
    if (word) return (i << 6) + std::countr_zero(word);
    if (++i == kWords) return -1;
    word = w_[i];
  }
}

int VertexSet::back() const {
  for (int i = kWords - 1; i >= 0; --i)
    if (w_[i]) return (i << 6) + 63 - std::countl_zero(w_[i]);
  return -1;
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  for (int v : *this) out.push_back(v);
  return out;
}

std::size_t VertexSet::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (auto x : w_) {
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
  VertexSet d = a ^ b;
  int m = d.front();
  if (m < 0) return std::strong_ordering::equal;
  // The first difference is m. Whoever lacks m continues with a larger
  // element or ends; ending makes it a prefix and therefore smaller.
  if (a.contains(m)) return b.next(m) >= 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  return a.next(m) >= 0 ? std::strong_ordering::greater : std::strong_ordering::less;
}

}  // namespace clockfree
