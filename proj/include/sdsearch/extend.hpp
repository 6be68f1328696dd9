#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "sdsearch/binary_code.hpp"
#include "sdsearch/bitvec.hpp"
#include "sdsearch/configuration.hpp"
#include "sdsearch/f4.hpp"
#include "sdsearch/isotropic.hpp"
#include "sdsearch/permutation.hpp"

namespace sdsearch {

/// Sum of D^(sigma^i) for i < order.
BinaryCode build_E(const BinaryCode& d_tilde, const Permutation& sigma, int order);

/// Subcode of words fixed by p (any order).
BinaryCode invariant_subcode(const BinaryCode& code, const Permutation& p);

/// V = E^perp / E in coordinates x over a fixed set of coset representatives.
/// b is the dot product of lifts; q(x) = wt(lift)/2 mod 2 is present only when
/// E is doubly-even and contains the all-ones word, which makes every lift even.
class QuotientSpace {
 public:
  QuotientSpace() = default;
  explicit QuotientSpace(const BinaryCode& e);

  const BinaryCode& base() const { return base_; }
  const BinaryCode& ambient() const { return ambient_; }
  const std::vector<BitVec>& basis() const { return basis_; }
  const F2Form& form() const { return form_; }
  std::size_t dim() const { return basis_.size(); }

  BitVec lift(const BitVec& x) const { return combine(basis_, x); }
  /// E plus the lifts of xs.
  BinaryCode lift_code(const std::vector<BitVec>& xs) const;
  /// Coordinates of v modulo E; throws InputError if v is not in E^perp.
  BitVec coordinates(const BitVec& v) const;
  /// Matrix of a code automorphism on V (row vectors, x -> x * M).
  Gf2Matrix action(const Permutation& p) const;

 private:
  BinaryCode base_;
  BinaryCode ambient_;
  std::vector<BitVec> basis_;
  F2Form form_;
  TrackedEchelon tracker_;
};

/// Form restricted to the span of `basis` (vectors in the form's coordinates),
/// in coordinates over that basis.
F2Form restrict_form(const F2Form& form, const std::vector<BitVec>& basis);

/// V = V(sigma) + W for an action of order dividing 3: V(sigma) = ker(A + 1),
/// W = im(A^2 + A). Both as bases in V-coordinates.
struct SigmaSplit {
  std::vector<BitVec> fixed;
  std::vector<BitVec> moving;
};
SigmaSplit sigma_split(const F2Form& form, const Gf2Matrix& action);

/// GF(4)-structure on W with omega acting as `action`, and the Hermitian form
/// H(u,v) = b(u,v) + w b(u, vA) + w^2 b(u, vA^2).
struct HermitianSpace {
  std::size_t dim_f4 = 0;
  /// GF(2) vectors u_i (in V-coordinates) forming an F4-basis.
  std::vector<BitVec> basis;
  Gf2Matrix action;
  std::vector<std::vector<F4>> gram;

  /// sum c_i * u_i with w * u = uA.
  BitVec to_f2(const std::vector<F4>& coords) const;
  F4 h(const std::vector<F4>& x, const std::vector<F4>& y) const;
};
HermitianSpace hermitian_structure(const F2Form& form, const std::vector<BitVec>& w, const Gf2Matrix& action);

/// prod_{i=1}^{m} (2^(2i-1) + 1): maximal isotropic subspaces of F4^(2m).
std::uint64_t max_isotropic_count_formula(std::size_t m);
/// (2^n - (-1)^n)(2^(n-1) - (-1)^(n-1)) / 3: isotropic points of F4^n.
std::uint64_t isotropic_point_count_formula(std::size_t n);

/// Maximal totally isotropic subspaces of F4^n under sum x_i conj(y_i), n
/// even, as RREF rows. Depth-first from the largest pivot down; each step
/// solves the orthogonality conditions over F4. visit returns false to stop.
void enumerate_max_isotropic_standard(std::size_t n,
                                      const std::function<bool(const std::vector<std::vector<F4>>&)>& visit,
                                      Shard shard = {});
std::uint64_t count_max_isotropic(std::size_t m, Shard shard = {});

/// Maximal isotropic F4-subspaces of a Hermitian space, each given as a GF(2)
/// basis (2 * dim_f4 / 2 vectors) in V-coordinates.
void enumerate_max_isotropic(const HermitianSpace& space,
                             const std::function<bool(const std::vector<BitVec>&)>& visit, Shard shard = {});

/// Isotropic F4-points, each as the GF(2) pair {u, uA}.
void isotropic_points(const HermitianSpace& space, const std::function<bool(const std::vector<BitVec>&)>& visit,
                      Shard shard = {});

struct LiftVerdict {
  std::vector<BitVec> subspace;
  BinaryCode code;
  bool doubly_even = false;
  bool self_dual = false;
  bool meets_threshold = false;
};

/// Maximal subspaces of span(basis) that are b- and q-isotropic and invariant
/// under every action matrix, each lifted through V with its verdict.
std::vector<LiftVerdict> selfdual_submodules(const QuotientSpace& v, const std::vector<BitVec>& basis,
                                             const std::vector<Gf2Matrix>& actions, int threshold);

struct ModuleStructure {
  BinaryCode code;
  Permutation k;
  /// code * (1 + k + k^2 + k^3).
  BinaryCode socle;
  std::optional<std::size_t> free_rank;
};
ModuleStructure socle(const BinaryCode& code, const Permutation& k);

/// v(1 + k + k^2 + k^3).
BitVec norm_map(const BitVec& v, const Permutation& k);

struct D8Search {
  BinaryCode e;
  /// RREF basis b_1..b_r of the fixed code E(k).
  std::vector<BitVec> socle_basis;
  /// |W_j| for each b_j.
  std::vector<std::uint64_t> w_sizes;
  /// Lifted representatives of the cosets in each W_j.
  std::vector<std::vector<BitVec>> witnesses;
  bool killed() const;
};

/// W_j = {w + E : w(1+k+k^2+k^3) in b_j + E(1+k+k^2+k^3), d(E + w F2<k>) >= threshold}.
D8Search d8_overcode_search(const BinaryCode& e, const Permutation& k, int threshold);

struct A4Branch {
  LiftVerdict submodule;
  std::size_t f4_dim = 0;
  std::uint64_t points = 0;
  std::uint64_t points_kept = 0;
  std::uint64_t subspaces = 0;
};

struct A4Search {
  BinaryCode e;
  std::size_t dim_v = 0;
  std::size_t dim_fixed = 0;
  std::size_t dim_moving = 0;
  std::vector<A4Branch> branches;
  /// Doubly-even self-dual overcodes meeting the threshold, deduplicated.
  std::vector<BinaryCode> found;
};

/// Doubly-even self-dual overcodes of E invariant under the configuration's
/// A4 with minimum distance >= threshold: self-dual submodules of V(sigma),
/// then isotropic points of the Hermitian quotient kept when their lift meets
/// the threshold, then maximal isotropic subspaces above each kept point.
/// Points are split across shards.
A4Search a4_overcode_search(const BinaryCode& e, const HConfig& config, int threshold, Shard shard = {});

}  // namespace sdsearch
