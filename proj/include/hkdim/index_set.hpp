#pragma once

#include <cstdint>
#include <vector>

namespace hkdim {

/// Fixed-universe bitset over vertex ids. All sets taking part in a binary
/// operation must share the same universe size.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(int universe) : words_((universe + 63) / 64, 0) {}

  void add(int i) { words_[static_cast<std::size_t>(i) >> 6] |= bit(i); }
  void remove(int i) { words_[static_cast<std::size_t>(i) >> 6] &= ~bit(i); }

  bool contains(int i) const {
    return (words_[static_cast<std::size_t>(i) >> 6] & bit(i)) != 0;
  }

  bool intersects(const IndexSet& other) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if ((words_[k] & other.words_[k]) != 0) return true;
    }
    return false;
  }

  bool empty() const {
    for (auto w : words_) {
      if (w != 0) return false;
    }
    return true;
  }

  IndexSet& operator|=(const IndexSet& other) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
    return *this;
  }

  void clear() {
    for (auto& w : words_) w = 0;
  }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  static std::uint64_t bit(int i) { return std::uint64_t{1} << (i & 63); }

  std::vector<std::uint64_t> words_;
};

}  // namespace hkdim
