#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sdsearch {

/// Fixed-capacity packed vector over GF(2). Bit i is coordinate i (0-based).
/// Lengths are tracked by the owning object; unused high bits stay zero.
class BitVec {
 public:
  static constexpr std::size_t kWords = 4;
  static constexpr std::size_t kBits = 64 * kWords;

  constexpr BitVec() = default;

  static BitVec from_string(std::string_view bits);
  static BitVec ones(std::size_t length);
  static BitVec unit(std::size_t i) {
    BitVec v;
    v.set(i);
    return v;
  }

  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
  void assign(std::size_t i, bool value) {
    if (value) {
      set(i);
    } else {
      reset(i);
    }
  }

  int popcount() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }
  bool any() const {
    std::uint64_t acc = 0;
    for (auto w : w_) acc |= w;
    return acc != 0;
  }
  bool none() const { return !any(); }

  /// Index of the lowest set bit, or -1 for the zero vector.
  int lowest() const {
    for (std::size_t k = 0; k < kWords; ++k) {
      if (w_[k]) return static_cast<int>(64 * k + std::countr_zero(w_[k]));
    }
    return -1;
  }

  BitVec& operator^=(const BitVec& o) {
    for (std::size_t k = 0; k < kWords; ++k) w_[k] ^= o.w_[k];
    return *this;
  }
  BitVec& operator&=(const BitVec& o) {
    for (std::size_t k = 0; k < kWords; ++k) w_[k] &= o.w_[k];
    return *this;
  }
  BitVec& operator|=(const BitVec& o) {
    for (std::size_t k = 0; k < kWords; ++k) w_[k] |= o.w_[k];
    return *this;
  }
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
  friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }
  friend BitVec operator|(BitVec a, const BitVec& b) { return a |= b; }
  BitVec operator~() const {
    BitVec r;
    for (std::size_t k = 0; k < kWords; ++k) r.w_[k] = ~w_[k];
    return r;
  }

  BitVec shifted_down(std::size_t s) const;
  BitVec shifted_up(std::size_t s) const;
  /// Keeps bits [0, length).
  BitVec truncated(std::size_t length) const;

  friend bool operator==(const BitVec&, const BitVec&) = default;
  /// Same order as comparing to_string() outputs.
  friend std::strong_ordering operator<=>(const BitVec& a, const BitVec& b);

  const std::array<std::uint64_t, kWords>& words() const { return w_; }
  std::array<std::uint64_t, kWords>& words() { return w_; }

  std::string to_string(std::size_t length) const;
  std::size_t hash() const;

 private:
  std::array<std::uint64_t, kWords> w_{};
};

/// Standard inner product over GF(2).
inline int dot(const BitVec& a, const BitVec& b) { return (a & b).popcount() & 1; }

/// Incrementally built echelon basis with full back-substitution on demand.
/// Pivots are lowest set bits; every stored row has a distinct pivot.
class Echelon {
 public:
  /// Reduces v against the basis; returns the remainder.
  BitVec reduce(BitVec v) const;
  /// Inserts v; returns true iff it was independent.
  bool insert(const BitVec& v);
  bool contains(const BitVec& v) const { return reduce(v).none(); }
  std::size_t rank() const { return rows_.size(); }
  /// Fully reduced rows sorted by pivot.
  std::vector<BitVec> reduced_rows() const;

 private:
  std::vector<BitVec> rows_;
  std::vector<int> pivots_;
};

/// Echelon basis whose rows remember which input combination produced them.
/// Used for coordinates with respect to a basis and for kernels.
class TrackedEchelon {
 public:
  struct Reduction {
    BitVec remainder;
    BitVec combination;  // tag of the rows that were added
  };

  /// Inserts v with tag `tag`; returns false (and keeps the kernel relation)
  /// when v is dependent.
  bool insert(const BitVec& v, const BitVec& tag);
  Reduction reduce(const BitVec& v) const;
  std::size_t rank() const { return rows_.size(); }
  /// Tags of dependent insertions after reduction: a basis of the relations.
  const std::vector<BitVec>& relations() const { return relations_; }

 private:
  std::vector<BitVec> rows_;
  std::vector<BitVec> tags_;
  std::vector<int> pivots_;
  std::vector<BitVec> relations_;
};

/// Reduced row-echelon form of the span of `rows`, sorted by pivot.
std::vector<BitVec> rref(std::span<const BitVec> rows);

/// Kernel of the linear map sending basis vector i to images[i]:
/// a basis of {x : sum x_i images[i] = 0}, as bit vectors over images.size() bits.
std::vector<BitVec> kernel(std::span<const BitVec> images);

/// One solution x of sum x_i images[i] = target, if any.
std::optional<BitVec> solve(std::span<const BitVec> images, const BitVec& target);

/// Sum of the basis vectors selected by the bits of `combination`.
BitVec combine(std::span<const BitVec> basis, const BitVec& combination);

/// Square or rectangular GF(2) matrix acting on row vectors from the right:
/// x * M = XOR of rows i with x_i = 1.
struct Gf2Matrix {
  std::size_t rows_count = 0;
  std::size_t cols_count = 0;
  std::vector<BitVec> rows;

  static Gf2Matrix identity(std::size_t n);
  BitVec apply(const BitVec& x) const;
  Gf2Matrix operator*(const Gf2Matrix& o) const;
  Gf2Matrix operator+(const Gf2Matrix& o) const;
  bool operator==(const Gf2Matrix& o) const = default;
  bool is_identity() const;
};

}  // namespace sdsearch

template <>
struct std::hash<sdsearch::BitVec> {
  std::size_t operator()(const sdsearch::BitVec& v) const noexcept { return v.hash(); }
};
