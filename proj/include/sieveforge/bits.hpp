#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace sieveforge {

/// Fixed-width bitset sized at construction. Canonical comparison is by
/// population count first, then lexicographically on the ascending member
/// list, which is the ordering used for every enumerated family in the
/// library.
class Bits {
 public:
  Bits() = default;
  explicit Bits(int n) : n_(n), w_((static_cast<size_t>(n) + 63) / 64, 0) {}

  int size() const { return n_; }

  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  bool none() const {
    for (auto w : w_)
      if (w) return false;
    return true;
  }
  bool any() const { return !none(); }

  int count() const {
    int c = 0;
    for (auto w : w_) c += __builtin_popcountll(w);
    return c;
  }

  bool subset_of(const Bits& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  bool intersects(const Bits& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  Bits operator&(const Bits& o) const {
    Bits r(n_);
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
    return r;
  }

  Bits operator|(const Bits& o) const {
    Bits r(n_);
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] | o.w_[i];
    return r;
  }

  bool operator==(const Bits& o) const = default;

  std::vector<int> members() const {
    std::vector<int> m;
    m.reserve(static_cast<size_t>(count()));
    for (int i = 0; i < n_; ++i)
      if (test(i)) m.push_back(i);
    return m;
  }

  /// Canonical strict order: size, then ascending-member lexicographic.
  bool canonical_less(const Bits& o) const {
    int a = count(), b = o.count();
    if (a != b) return a < b;
    for (int i = 0; i < n_; ++i) {
      bool x = test(i), y = o.test(i);
      if (x != y) return x;  // earlier member present => smaller
    }
    return false;
  }

  struct Hash {
    size_t operator()(const Bits& b) const {
      std::uint64_t h = 1469598103934665603ull;
      for (auto w : b.w_) {
        h ^= w;
        h *= 1099511628211ull;
      }
      return static_cast<size_t>(h ^ static_cast<std::uint64_t>(b.n_));
    }
  };

 private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace sieveforge
