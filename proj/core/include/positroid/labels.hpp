#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace positroid {

/// A subset of the ground set [1..n], n <= 63. Value type backed by a
/// bitmask; iteration yields labels in ascending order.
class LabelSet {
 public:
  static constexpr int kMaxLabel = 63;

  constexpr LabelSet() = default;

  static LabelSet of(std::initializer_list<int> labels) {
    LabelSet s;
    for (int x : labels) s.insert(x);
    return s;
  }

  /// {1, 2, ..., n}
  static LabelSet range(int n) {
    LabelSet s;
    if (n > 0) s.bits_ = (n >= 64) ? ~0ull : ((1ull << n) - 1);
    return s;
  }

  static LabelSet from_bits(std::uint64_t bits) {
    LabelSet s;
    s.bits_ = bits;
    return s;
  }

  std::uint64_t bits() const { return bits_; }
  bool contains(int label) const { return (bits_ >> (label - 1)) & 1; }
  bool empty() const { return bits_ == 0; }
  int size() const { return __builtin_popcountll(bits_); }

  void insert(int label) { bits_ |= 1ull << (label - 1); }
  void erase(int label) { bits_ &= ~(1ull << (label - 1)); }

  LabelSet with(int label) const {
    LabelSet s = *this;
    s.insert(label);
    return s;
  }
  LabelSet without(int label) const {
    LabelSet s = *this;
    s.erase(label);
    return s;
  }

  /// Smallest label; 0 when empty.
  int min() const { return bits_ ? __builtin_ctzll(bits_) + 1 : 0; }
  /// Largest label; 0 when empty.
  int max() const { return bits_ ? 64 - __builtin_clzll(bits_) : 0; }

  friend LabelSet operator|(LabelSet a, LabelSet b) { return from_bits(a.bits_ | b.bits_); }
  friend LabelSet operator&(LabelSet a, LabelSet b) { return from_bits(a.bits_ & b.bits_); }
  /// Set difference.
  friend LabelSet operator-(LabelSet a, LabelSet b) { return from_bits(a.bits_ & ~b.bits_); }

  bool subset_of(LabelSet other) const { return (bits_ & ~other.bits_) == 0; }

  class iterator {
   public:
    iterator(std::uint64_t rest) : rest_(rest) {}
    int operator*() const { return __builtin_ctzll(rest_) + 1; }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    bool operator!=(const iterator& o) const { return rest_ != o.rest_; }

   private:
    std::uint64_t rest_;
  };
  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  std::vector<int> to_vector() const {
    std::vector<int> v;
    v.reserve(size());
    for (int x : *this) v.push_back(x);
    return v;
  }

  /// "124" when all labels are single digits, "{1,2,12}" otherwise,
  /// "{}" when empty.
  std::string to_string() const {
    if (empty()) return "{}";
    if (max() <= 9) {
      std::string s;
      for (int x : *this) s += static_cast<char>('0' + x);
      return s;
    }
    return braced();
  }

  /// Always the braced form "{1,2,4}".
  std::string braced() const {
    std::string s = "{";
    bool first = true;
    for (int x : *this) {
      if (!first) s += ",";
      s += std::to_string(x);
      first = false;
    }
    return s + "}";
  }

  /// Mask order; use label_lex_less for output ordering.
  auto operator<=>(const LabelSet&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Lexicographic order on the ascending label vectors, the order used for
/// all rendered basis lists.
inline bool label_lex_less(LabelSet a, LabelSet b) {
  auto ia = a.begin(), ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia != *ib) return *ia < *ib;
    ++ia, ++ib;
  }
  return ia != a.end() ? false : ib != b.end();
}

}  // namespace positroid
