#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "sdsearch/binary_code.hpp"
#include "sdsearch/f4.hpp"
#include "sdsearch/permutation.hpp"

namespace sdsearch {

/// GF(4)-linear code in reduced row-echelon form over GF(4): every row has a
/// leading 1 at its pivot (lowest nonzero coordinate) and zeros at the other
/// pivots; rows sorted by pivot.
class LinearF4Code {
 public:
  LinearF4Code() = default;
  explicit LinearF4Code(std::size_t length);
  LinearF4Code(std::size_t length, std::span<const F4Vec> generators);

  /// The GF(4)-span of the GF(2) code given in packed [lo|hi] layout; throws
  /// InputError if that code is not closed under multiplication by w.
  static LinearF4Code from_packed(const BinaryCode& packed, std::size_t n);
  static LinearF4Code from_strings(const std::vector<std::string>& rows);

  std::size_t length() const { return length_; }
  std::size_t dimension() const { return rows_.size(); }
  const std::vector<F4Vec>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  F4Vec reduce(F4Vec v) const;
  bool contains(const F4Vec& v) const { return reduce(v).is_zero(); }
  /// The code as a GF(2) space in packed layout (rows r and w*r).
  BinaryCode packed() const;

  friend bool operator==(const LinearF4Code& a, const LinearF4Code& b) {
    return a.length_ == b.length_ && a.rows_ == b.rows_;
  }

 private:
  std::size_t length_ = 0;
  std::vector<F4Vec> rows_;
  std::vector<int> pivots_;
};

/// GF(2)-subspace of GF(4)^n, stored as a BinaryCode of length 2n in packed
/// [lo|hi] layout.
class AdditiveF4Code {
 public:
  AdditiveF4Code() = default;
  explicit AdditiveF4Code(std::size_t length) : length_(length), packed_(2 * length) {}
  AdditiveF4Code(std::size_t length, std::span<const F4Vec> generators);
  AdditiveF4Code(std::size_t length, BinaryCode packed);

  static AdditiveF4Code from_strings(std::size_t length, const std::vector<std::string>& rows);

  std::size_t length() const { return length_; }
  /// GF(2)-dimension m; the code has 2^m elements.
  std::size_t dimension() const { return packed_.dimension(); }
  const BinaryCode& packed() const { return packed_; }
  /// Canonical generators (the packed RREF rows, unpacked).
  std::vector<F4Vec> rows() const;
  bool contains(const F4Vec& v) const { return packed_.contains(v.pack(length_)); }

  friend bool operator==(const AdditiveF4Code& a, const AdditiveF4Code& b) {
    return a.length_ == b.length_ && a.packed_ == b.packed_;
  }
  std::size_t hash() const { return packed_.hash(); }

 private:
  std::size_t length_ = 0;
  BinaryCode packed_;
};

/// Exchanges the lo and hi halves of a packed vector of length 2n.
BitVec swap_halves(const BitVec& v, std::size_t n);

LinearF4Code hermitian_dual(const LinearF4Code& code);
AdditiveF4Code trace_hermitian_dual(const AdditiveF4Code& code);
bool is_hermitian_self_dual(const LinearF4Code& code);
bool is_trace_hermitian_self_dual(const AdditiveF4Code& code);

/// Minimum Hamming weight over GF(4) by enumerating combinations of t rows
/// (leading coefficient 1), with the same early-abort contract as the binary
/// version.
DistanceResult min_distance(const LinearF4Code& code, std::optional<int> upper_bound = std::nullopt);
/// Minimum weight of an additive code by full enumeration (budgeted).
int min_distance(const AdditiveF4Code& code);

/// (e1,...,em) -> (e1, conj e1, ..., em, conj em).
F4Vec interleave_conj(const F4Vec& v, std::size_t m);

/// GF(4)-span of the interleaved words of X.
LinearF4Code phi_lift(const AdditiveF4Code& x);
/// Words e with interleave_conj(e) in E. E must be invariant under
/// sigma_action_f4; throws InputError otherwise.
AdditiveF4Code pi_project(const LinearF4Code& e);

/// (e1, e2, ..., e_{2m-1}, e_{2m}) -> (conj e2, conj e1, ..., conj e_{2m}, conj e_{2m-1}).
F4Vec sigma_action_f4(const F4Vec& v, std::size_t length);

/// x -> y with y_{perm(i)} = scalar_i * (conj_i ? conj(x_i) : x_i).
struct MonomialMap {
  Permutation perm;
  std::vector<F4> scalars;
  std::vector<bool> conj;

  static MonomialMap identity(std::size_t n);
  std::size_t degree() const { return perm.degree(); }
  bool has_conjugation() const;

  F4Vec apply(const F4Vec& x) const;
  /// Apply this map, then o.
  MonomialMap operator*(const MonomialMap& o) const;
  MonomialMap inverse() const;
  friend bool operator==(const MonomialMap&, const MonomialMap&) = default;
};

/// Doubling of M to 2m coordinates: position 2i carries scalar s_i and 2i+1
/// carries conj(s_i), both sent to the pair of perm(i). A conjugation flag at
/// i becomes a swap of the two entries of the pair, so the lift is GF(4)-linear.
MonomialMap monomial_lift(const MonomialMap& m);

AdditiveF4Code apply(const AdditiveF4Code& code, const MonomialMap& m);
LinearF4Code apply(const LinearF4Code& code, const MonomialMap& m);

}  // namespace sdsearch

template <>
struct std::hash<sdsearch::AdditiveF4Code> {
  std::size_t operator()(const sdsearch::AdditiveF4Code& c) const noexcept { return c.hash(); }
};
