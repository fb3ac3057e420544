#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace markovcat {

/// Fixed-size bitset over a canonical element order. Subsets of finite sets
/// and open/closed set families are represented this way throughout.
class Bitset {
 public:
  explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  static Bitset full(std::size_t size) {
    Bitset b(size);
    for (std::size_t i = 0; i < size; ++i) b.set(i);
    return b;
  }
  static Bitset single(std::size_t size, std::size_t i) {
    Bitset b(size);
    b.set(i);
    return b;
  }

  std::size_t size() const { return size_; }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  bool any() const {
    for (auto w : words_) {
      if (w) return true;
    }
    return false;
  }
  bool none() const { return !any(); }

  std::size_t count() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(__builtin_popcountll(w));
    return n;
  }

  Bitset operator|(const Bitset& o) const {
    Bitset r(size_);
    for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] = words_[k] | o.words_[k];
    return r;
  }
  Bitset operator&(const Bitset& o) const {
    Bitset r(size_);
    for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] = words_[k] & o.words_[k];
    return r;
  }
  Bitset operator~() const {
    Bitset r(size_);
    for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] = ~words_[k];
    if (size_ & 63) {
      r.words_.back() &= (std::uint64_t{1} << (size_ & 63)) - 1;
    }
    return r;
  }

  bool is_subset_of(const Bitset& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if (words_[k] & ~o.words_[k]) return false;
    }
    return true;
  }
  bool intersects(const Bitset& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if (words_[k] & o.words_[k]) return true;
    }
    return false;
  }

  bool operator==(const Bitset& o) const { return size_ == o.size_ && words_ == o.words_; }
  bool operator!=(const Bitset& o) const { return !(*this == o); }
  bool operator<(const Bitset& o) const {
    if (size_ != o.size_) return size_ < o.size_;
    for (std::size_t k = words_.size(); k > 0; --k) {
      if (words_[k - 1] != o.words_[k - 1]) return words_[k - 1] < o.words_[k - 1];
    }
    return false;
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size_; ++i) {
      if (test(i)) out.push_back(i);
    }
    return out;
  }

  std::string show() const {
    std::string out;
    out.reserve(size_);
    for (std::size_t i = 0; i < size_; ++i) out += test(i) ? '1' : '0';
    return out;
  }

 private:
  std::size_t size_;
  std::vector<std::uint64_t> words_;
};

}  // namespace markovcat
