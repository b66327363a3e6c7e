#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace condtorus {

/**
 * @brief Fixed-universe bit set over the indices [0, universe).
 *
 * The Tag parameter keeps vertex sets and edge sets from being mixed up.
 * Ordering compares the sets as unsigned integers (bit i has weight 2^i), so
 * the "least bit pattern" of a family of sets is well defined.
 */
template <typename Tag>
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}
  IndexSet(std::size_t universe, std::initializer_list<std::size_t> members)
      : IndexSet(universe) {
    for (auto m : members) insert(m);
  }

  static IndexSet full(std::size_t universe) {
    IndexSet s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.insert(i);
    return s;
  }

  static IndexSet from_mask(std::size_t universe, std::uint64_t mask) {
    if (universe < 64 && (mask >> universe) != 0) {
      throw std::out_of_range("IndexSet::from_mask: bits beyond universe");
    }
    IndexSet s(universe);
    if (!s.words_.empty()) s.words_[0] = mask;
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }

  bool contains(std::size_t i) const {
    check(i);
    return (words_[i / 64] >> (i % 64)) & 1U;
  }
  void insert(std::size_t i) {
    check(i);
    words_[i / 64] |= std::uint64_t{1} << (i % 64);
  }
  void erase(std::size_t i) {
    check(i);
    words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
  }

  std::size_t size() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
  }

  /// Members in increasing index order.
  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      for (auto w = words_[wi]; w != 0; w &= w - 1) {
        out.push_back(wi * 64 + static_cast<std::size_t>(std::countr_zero(w)));
      }
    }
    return out;
  }

  IndexSet& operator|=(const IndexSet& o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  IndexSet& operator&=(const IndexSet& o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  /// Set difference.
  IndexSet& operator-=(const IndexSet& o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }
  friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }
  friend IndexSet operator-(IndexSet a, const IndexSet& b) { return a -= b; }

  IndexSet complement() const { return full(universe_) - *this; }

  bool is_subset_of(const IndexSet& o) const {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~o.words_[i]) return false;
    }
    return true;
  }

  friend bool operator==(const IndexSet& a, const IndexSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  /// Numeric order of the bit patterns; universes must match.
  friend bool operator<(const IndexSet& a, const IndexSet& b) {
    a.same_universe(b);
    for (std::size_t i = a.words_.size(); i-- > 0;) {
      if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i];
    }
    return false;
  }

 private:
  void check(std::size_t i) const {
    if (i >= universe_) throw std::out_of_range("IndexSet: index outside universe");
  }
  void same_universe(const IndexSet& o) const {
    if (o.universe_ != universe_) throw std::invalid_argument("IndexSet: universe mismatch");
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct VertexTag {};
struct EdgeTag {};

using VertexSet = IndexSet<VertexTag>;
using EdgeSet = IndexSet<EdgeTag>;

}  // namespace condtorus
