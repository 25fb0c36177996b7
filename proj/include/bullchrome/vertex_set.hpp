#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace bullchrome {

/// Hard upper bound on the number of vertices of any graph.
inline constexpr int kMaxVertices = 512;

/// Fixed-capacity bitset over vertex indices 0..kMaxVertices-1.
class VertexSet {
 public:
  static constexpr int kWords = kMaxVertices / 64;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    iterator() = default;
    iterator(const VertexSet* set, int v) : set_(set), v_(v) {}
    int operator*() const { return v_; }
    iterator& operator++() {
      v_ = set_->next(v_);
      return *this;
    }
    iterator operator++(int) {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }
    bool operator==(const iterator& o) const { return v_ == o.v_; }

   private:
    const VertexSet* set_ = nullptr;
    int v_ = -1;
  };

  VertexSet() = default;
  VertexSet(std::initializer_list<int> vs) {
    for (int v : vs) insert(v);
  }
  template <typename Range>
  static VertexSet from(const Range& vs) {
    VertexSet s;
    for (int v : vs) s.insert(v);
    return s;
  }
  /// {0, ..., n-1}
  static VertexSet range(int n) {
    VertexSet s;
    for (int w = 0; w < kWords && n > 0; ++w, n -= 64)
      s.words_[w] = n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    return s;
  }

  bool contains(int v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
  void insert(int v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  int size() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  /// Least member, or -1.
  int first() const { return next(-1); }
  /// Least member greater than v, or -1.
  int next(int v) const {
    ++v;
    if (v >= kMaxVertices) return -1;
    int w = v >> 6;
    std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (v & 63));
    while (true) {
      if (bits) return (w << 6) + std::countr_zero(bits);
      if (++w == kWords) return -1;
      bits = words_[w];
    }
  }
  /// Greatest member, or -1.
  int last() const {
    for (int w = kWords - 1; w >= 0; --w)
      if (words_[w]) return (w << 6) + 63 - std::countl_zero(words_[w]);
    return -1;
  }

  bool intersects(const VertexSet& o) const {
    for (int w = 0; w < kWords; ++w)
      if (words_[w] & o.words_[w]) return true;
    return false;
  }
  bool is_subset_of(const VertexSet& o) const {
    for (int w = 0; w < kWords; ++w)
      if (words_[w] & ~o.words_[w]) return false;
    return true;
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int v : *this) out.push_back(v);
    return out;
  }

  std::uint64_t word(int i) const { return words_[i]; }

  iterator begin() const { return iterator(this, first()); }
  iterator end() const { return iterator(this, -1); }

  VertexSet& operator&=(const VertexSet& o) {
    for (int w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    for (int w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  VertexSet& operator^=(const VertexSet& o) {
    for (int w = 0; w < kWords; ++w) words_[w] ^= o.words_[w];
    return *this;
  }
  /// Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    for (int w = 0; w < kWords; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::array<std::uint64_t, kWords> words_{};
};

/// Lexicographic order on the ascending member lists.
inline bool lex_less(const VertexSet& a, const VertexSet& b) {
  auto ia = a.begin(), ib = b.begin();
  for (; ia != a.end() && ib != b.end(); ++ia, ++ib)
    if (*ia != *ib) return *ia < *ib;
  return ia == a.end() && ib != b.end();
}

}  // namespace bullchrome
