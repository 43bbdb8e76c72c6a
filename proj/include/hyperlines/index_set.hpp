#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace hyperlines {

// Set of small nonnegative integers stored as a bitmask. Indices below 64 live
// in an inline word; larger indices spill into a heap vector that is kept
// trimmed (no trailing zero words), so equal sets always have equal storage.
template <class Tag>
class IndexSet {
 public:
  static constexpr std::size_t kWordBits = 64;

  IndexSet() = default;
  IndexSet(std::initializer_list<std::size_t> items) {
    for (auto i : items) insert(i);
  }

  static IndexSet from_word(std::uint64_t word) {
    IndexSet s;
    s.head_ = word;
    return s;
  }

  /// Set containing 0, 1, ..., count-1.
  static IndexSet prefix(std::size_t count) {
    IndexSet s;
    for (std::size_t w = 0; w * kWordBits < count; ++w) {
      std::size_t bits = count - w * kWordBits;
      std::uint64_t word = bits >= kWordBits ? ~std::uint64_t{0} : ((std::uint64_t{1} << bits) - 1);
      s.set_word(w, word);
    }
    return s;
  }

  void insert(std::size_t i) { set_word(i / kWordBits, word(i / kWordBits) | bit(i)); }

  void erase(std::size_t i) {
    if (i / kWordBits < word_count()) set_word(i / kWordBits, word(i / kWordBits) & ~bit(i));
  }

  bool contains(std::size_t i) const { return (word(i / kWordBits) & bit(i)) != 0; }

  std::size_t size() const {
    std::size_t c = static_cast<std::size_t>(std::popcount(head_));
    for (auto w : tail_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const { return head_ == 0 && tail_.empty(); }

  /// Number of storage words in use (1 + spilled words).
  std::size_t word_count() const { return 1 + tail_.size(); }

  std::uint64_t word(std::size_t w) const {
    if (w == 0) return head_;
    return w - 1 < tail_.size() ? tail_[w - 1] : 0;
  }

  IndexSet& operator|=(const IndexSet& other) {
    head_ |= other.head_;
    if (other.tail_.size() > tail_.size()) tail_.resize(other.tail_.size(), 0);
    for (std::size_t i = 0; i < other.tail_.size(); ++i) tail_[i] |= other.tail_[i];
    return *this;
  }

  IndexSet& operator&=(const IndexSet& other) {
    head_ &= other.head_;
    if (tail_.size() > other.tail_.size()) tail_.resize(other.tail_.size());
    for (std::size_t i = 0; i < tail_.size(); ++i) tail_[i] &= other.tail_[i];
    trim();
    return *this;
  }

  /// Set difference.
  IndexSet& operator-=(const IndexSet& other) {
    head_ &= ~other.head_;
    std::size_t common = std::min(tail_.size(), other.tail_.size());
    for (std::size_t i = 0; i < common; ++i) tail_[i] &= ~other.tail_[i];
    trim();
    return *this;
  }

  friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }
  friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }
  friend IndexSet operator-(IndexSet a, const IndexSet& b) { return a -= b; }

  bool is_subset_of(const IndexSet& other) const {
    if ((head_ & ~other.head_) != 0) return false;
    for (std::size_t i = 0; i < tail_.size(); ++i) {
      std::uint64_t o = i < other.tail_.size() ? other.tail_[i] : 0;
      if ((tail_[i] & ~o) != 0) return false;
    }
    return true;
  }

  bool intersects(const IndexSet& other) const {
    if ((head_ & other.head_) != 0) return true;
    std::size_t common = std::min(tail_.size(), other.tail_.size());
    for (std::size_t i = 0; i < common; ++i)
      if ((tail_[i] & other.tail_[i]) != 0) return true;
    return false;
  }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

  /// Lexicographic order of the ascending member lists, so {0,1} < {0,1,2} < {0,2}.
  friend std::strong_ordering operator<=>(const IndexSet& a, const IndexSet& b) {
    std::size_t words = std::max(a.word_count(), b.word_count());
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t diff = a.word(w) ^ b.word(w);
      if (diff == 0) continue;
      std::size_t x = w * kWordBits + static_cast<std::size_t>(std::countr_zero(diff));
      bool in_a = a.contains(x);
      const IndexSet& other = in_a ? b : a;
      // The set holding x is smaller iff the other set still has a member above x.
      bool other_continues = other.has_member_above(x);
      bool a_smaller = in_a ? other_continues : !other_continues;
      return a_smaller ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < word_count(); ++w) {
      std::uint64_t bits = word(w);
      while (bits != 0) {
        f(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  std::size_t hash() const {
    std::size_t h = std::hash<std::uint64_t>{}(head_);
    for (auto w : tail_) h = h * 0x9E3779B97F4A7C15ull + std::hash<std::uint64_t>{}(w);
    return h;
  }

 private:
  static std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << (i % kWordBits); }

  bool has_member_above(std::size_t x) const {
    std::size_t w = x / kWordBits;
    std::size_t offset = x % kWordBits;
    std::uint64_t above = offset + 1 < kWordBits ? (~std::uint64_t{0} << (offset + 1)) : 0;
    if ((word(w) & above) != 0) return true;
    for (std::size_t v = w + 1; v < word_count(); ++v)
      if (word(v) != 0) return true;
    return false;
  }

  void set_word(std::size_t w, std::uint64_t value) {
    if (w == 0) {
      head_ = value;
      return;
    }
    if (w - 1 >= tail_.size()) {
      if (value == 0) return;
      tail_.resize(w, 0);
    }
    tail_[w - 1] = value;
    trim();
  }

  void trim() {
    while (!tail_.empty() && tail_.back() == 0) tail_.pop_back();
  }

  std::uint64_t head_ = 0;
  std::vector<std::uint64_t> tail_;
};

struct VertexTag {};
struct LineIndexTag {};

using VertexId = std::size_t;
/// Vertex subset; a line is identified by its member set.
using VertexSet = IndexSet<VertexTag>;
/// Subset of the line set, addressed by line index.
using LineIndexSet = IndexSet<LineIndexTag>;

template <class Tag>
struct IndexSetHash {
  std::size_t operator()(const IndexSet<Tag>& s) const { return s.hash(); }
};

}  // namespace hyperlines
