#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "sdsearch/bitvec.hpp"

namespace sdsearch {

/// Element of GF(4) = {0, 1, w, W} with W = w^2 = w + 1. Stored as lo + hi*w:
/// 0 = 00, 1 = 01, w = 10, W = 11 (bits hi lo).
class F4 {
 public:
  constexpr F4() = default;
  constexpr explicit F4(std::uint8_t code) : v_(code & 3U) {}

  static constexpr F4 zero() { return F4(0); }
  static constexpr F4 one() { return F4(1); }
  static constexpr F4 omega() { return F4(2); }
  static constexpr F4 omega_bar() { return F4(3); }
  static F4 from_char(char c);

  constexpr std::uint8_t code() const { return v_; }
  constexpr bool lo() const { return v_ & 1U; }
  constexpr bool hi() const { return v_ & 2U; }
  constexpr bool is_zero() const { return v_ == 0; }

  friend constexpr F4 operator+(F4 a, F4 b) { return F4(a.v_ ^ b.v_); }
  friend constexpr F4 operator*(F4 a, F4 b) {
    const unsigned a0 = a.v_ & 1U, a1 = a.v_ >> 1, b0 = b.v_ & 1U, b1 = b.v_ >> 1;
    const unsigned lo = (a0 & b0) ^ (a1 & b1);
    const unsigned hi = (a0 & b1) ^ (a1 & b0) ^ (a1 & b1);
    return F4(static_cast<std::uint8_t>(lo | (hi << 1)));
  }
  /// Frobenius x -> x^2.
  constexpr F4 conj() const { return F4(static_cast<std::uint8_t>(v_ ^ (v_ >> 1))); }
  F4 inverse() const;
  /// x + conj(x), an element of GF(2).
  constexpr bool trace() const { return hi(); }

  char to_char() const { return "01wW"[v_]; }

  friend constexpr bool operator==(F4, F4) = default;

 private:
  std::uint8_t v_ = 0;
};

/// Vector over GF(4) stored as two GF(2) layers: x = lo + hi*w coordinatewise.
/// The length is tracked by the owner.
struct F4Vec {
  BitVec lo;
  BitVec hi;

  static F4Vec from_string(std::string_view text);

  F4 at(std::size_t i) const {
    return F4(static_cast<std::uint8_t>(lo.test(i) | (hi.test(i) << 1)));
  }
  void set(std::size_t i, F4 x) {
    lo.assign(i, x.lo());
    hi.assign(i, x.hi());
  }
  int weight() const { return (lo | hi).popcount(); }
  bool is_zero() const { return lo.none() && hi.none(); }

  F4Vec& operator+=(const F4Vec& o) {
    lo ^= o.lo;
    hi ^= o.hi;
    return *this;
  }
  friend F4Vec operator+(F4Vec a, const F4Vec& b) { return a += b; }
  /// Scalar multiple s*x.
  F4Vec scaled(F4 s) const;
  /// Coordinatewise conjugate.
  F4Vec conj() const { return {lo ^ hi, hi}; }

  friend bool operator==(const F4Vec&, const F4Vec&) = default;
  friend auto operator<=>(const F4Vec& a, const F4Vec& b) {
    if (auto c = a.hi <=> b.hi; c != 0) return c;
    return a.lo <=> b.lo;
  }

  std::string to_string(std::size_t length) const;

  /// Packs into one GF(2) vector of length 2n: bits [0,n) = lo, [n,2n) = hi.
  BitVec pack(std::size_t n) const { return lo | hi.shifted_up(n); }
  static F4Vec unpack(const BitVec& v, std::size_t n) {
    return {v.truncated(n), v.shifted_down(n).truncated(n)};
  }
};

/// Hermitian product sum x_i * conj(y_i).
F4 hermitian_product(const F4Vec& x, const F4Vec& y);
/// Trace-Hermitian form sum (x_i conj(y_i) + conj(x_i) y_i), a GF(2) value.
inline int trace_hermitian(const F4Vec& x, const F4Vec& y) {
  return ((x.lo & y.hi).popcount() + (x.hi & y.lo).popcount()) & 1;
}

}  // namespace sdsearch
