#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace indpoly::detail {

// Dynamic bitset over vertex indices, used as memo key and for set algebra.
class VertexMask {
 public:
  VertexMask() = default;
  explicit VertexMask(int n) : n_(n), words_((static_cast<std::size_t>(n) + 63) / 64, 0) {}

  static VertexMask full(int n) {
    VertexMask m(n);
    for (int v = 0; v < n; ++v) m.set(v);
    return m;
  }

  int universe() const { return n_; }

  void set(int v) { words_[idx(v)] |= bit(v); }
  void reset(int v) { words_[idx(v)] &= ~bit(v); }
  bool test(int v) const { return (words_[idx(v)] & bit(v)) != 0; }

  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  /// Lowest set index, or -1.
  int first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return static_cast<int>(i * 64) + std::countr_zero(words_[i]);
    return -1;
  }
  /// Lowest set index strictly greater than v, or -1.
  int next(int v) const {
    int i = v + 1;
    if (i >= n_) return -1;
    std::size_t w = idx(i);
    std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (i % 64));
    while (true) {
      if (cur) return static_cast<int>(w * 64) + std::countr_zero(cur);
      if (++w >= words_.size()) return -1;
      cur = words_[w];
    }
  }

  VertexMask& operator&=(const VertexMask& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexMask& operator|=(const VertexMask& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  /// this \ o
  VertexMask& subtract(const VertexMask& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  int intersection_count(const VertexMask& o) const {
    int c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & o.words_[i]);
    return c;
  }

  friend VertexMask operator&(VertexMask a, const VertexMask& b) { return a &= b; }
  friend VertexMask operator|(VertexMask a, const VertexMask& b) { return a |= b; }

  bool operator==(const VertexMask&) const = default;

  std::size_t hash() const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto w : words_) h = (h ^ std::hash<std::uint64_t>{}(w)) * 0x100000001b3ull;
    return h;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        f(static_cast<int>(i * 64) + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }

 private:
  static std::size_t idx(int v) { return static_cast<std::size_t>(v) / 64; }
  static std::uint64_t bit(int v) { return std::uint64_t{1} << (v % 64); }

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct VertexMaskHash {
  std::size_t operator()(const VertexMask& m) const { return m.hash(); }
};

}  // namespace indpoly::detail
