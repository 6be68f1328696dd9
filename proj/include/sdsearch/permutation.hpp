#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sdsearch/binary_code.hpp"
#include "sdsearch/bitvec.hpp"

namespace sdsearch {

/// Permutation of {0, ..., degree-1}; the text form uses 1-based points.
///
/// Products read left to right, matching exponent notation: (p * q)(i) = q(p(i)),
/// so x^(pq) = (x^p)^q.
class Permutation {
 public:
  Permutation() = default;
  /// Identity of the given degree.
  explicit Permutation(std::size_t degree);

  /// images[i] is the image of point i (0-based).
  static Permutation from_images(const std::vector<int>& images);
  /// Cycles with 1-based points, e.g. {{1,2},{3,4}}.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<int>>& cycles);
  /// Disjoint-cycle notation "(1,2)(3,4)"; "()" is the identity.
  static Permutation parse(std::string_view text, std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  int operator[](std::size_t i) const { return images_[i]; }
  const std::vector<std::uint8_t>& images() const { return images_; }

  Permutation operator*(const Permutation& o) const;
  Permutation inverse() const;
  Permutation pow(long long e) const;

  bool is_identity() const;
  int order() const;
  bool is_fixed_point_free() const;
  /// Cycle lengths (including fixed points) in non-increasing order.
  std::vector<int> cycle_type() const;
  /// Cycles of length > 1, 0-based, each starting at its smallest point,
  /// sorted by that point.
  std::vector<std::vector<int>> cycles() const;
  /// All cycles including fixed points, in the same normalised order.
  std::vector<std::vector<int>> all_cycles() const;

  std::string to_string() const;

  /// v^p: coordinate i of v moves to position p(i).
  BitVec apply(const BitVec& v) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

  std::size_t hash() const;

 private:
  std::vector<std::uint8_t> images_;
};

/// t^-1 a t.
Permutation conjugate(const Permutation& a, const Permutation& t);

/// A permutation t with t^-1 a t = b, built by aligning the cycles of a onto
/// those of b (cycles matched by length, smallest moved point first). None
/// when the cycle types differ.
std::optional<Permutation> conjugating_element(const Permutation& a, const Permutation& b);

/// Lift of rho on m points to 2m points: 2a-1 -> 2rho(a)-1, 2a -> 2rho(a)
/// (1-based). The lift commutes with (1,2)(3,4)...(2m-1,2m).
Permutation natural_lift(const Permutation& rho);

/// The coordinate permutation applied to a code, re-canonicalised.
BinaryCode act_on_code(const BinaryCode& code, const Permutation& p);

/// True iff the code is mapped onto itself.
bool is_automorphism(const BinaryCode& code, const Permutation& p);

}  // namespace sdsearch

template <>
struct std::hash<sdsearch::Permutation> {
  std::size_t operator()(const sdsearch::Permutation& p) const noexcept { return p.hash(); }
};
