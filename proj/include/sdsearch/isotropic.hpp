#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "sdsearch/bitvec.hpp"

namespace sdsearch {

/// Deterministic partition of a search by the index of its top-level branch.
struct Shard {
  std::size_t index = 0;
  std::size_t count = 1;
  bool owns(std::uint64_t branch) const { return branch % count == index; }
};

/// Symmetric bilinear form b on GF(2)^dim, optionally with a quadratic form q
/// (given by an upper-triangular matrix U with q(x) = sum_{i<=j} x_i x_j U_ij).
struct F2Form {
  std::size_t dim = 0;
  std::vector<BitVec> gram;
  std::vector<BitVec> quad;

  /// The standard dot product on GF(2)^n.
  static F2Form standard(std::size_t n);
  /// The symplectic form x.swap(y) on packed [lo|hi] vectors of length 2n,
  /// i.e. the trace-Hermitian form on GF(4)^n.
  static F2Form trace_hermitian(std::size_t n);

  bool has_quad() const { return !quad.empty(); }
  /// x * gram, so that b(x, y) = dot(functional(x), y).
  BitVec functional(const BitVec& x) const;
  int b(const BitVec& x, const BitVec& y) const { return dot(functional(x), y); }
  int q(const BitVec& x) const;
  /// Diagonal of the gram matrix: b(x, x) = dot(diagonal(), x).
  BitVec diagonal() const;
  std::size_t rank() const;
};

/// Calls visit(rows) for every k-dimensional subspace U with b(U, U) = 0 (and
/// q(U) = 0 when q is present). Rows are the RREF basis sorted by pivot.
/// Rows are chosen from the largest pivot down, solving the orthogonality
/// constraints as a linear system at every step. visit returns false to stop.
void enumerate_isotropic(const F2Form& form, std::size_t k,
                         const std::function<bool(const std::vector<BitVec>&)>& visit,
                         Shard shard = {});

std::uint64_t count_isotropic(const F2Form& form, std::size_t k, Shard shard = {});

}  // namespace sdsearch
