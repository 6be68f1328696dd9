#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "sdsearch/permutation.hpp"

namespace sdsearch {

/// Permutation group given by generators, with a stabilizer chain built by the
/// deterministic Schreier-Sims algorithm. Immutable after construction.
class PermGroup {
 public:
  PermGroup() = default;
  explicit PermGroup(std::size_t degree, std::vector<Permutation> generators = {},
                     const std::vector<int>& base_prefix = {});

  static PermGroup symmetric(std::size_t degree);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<int>& base() const { return base_; }

  /// Group order; throws InvariantError if it does not fit in 64 bits.
  std::uint64_t order() const;
  /// log2 of the order, always available.
  double log2_order() const;
  /// Sizes of the basic orbits; their product is the order.
  std::vector<std::size_t> basic_orbit_sizes() const;

  bool contains(const Permutation& p) const;
  Permutation identity() const { return Permutation(degree_); }

  std::vector<int> orbit(int point) const;
  /// Orbits as sorted point lists, ordered by smallest point.
  std::vector<std::vector<int>> orbits() const;

  /// Pointwise stabilizer of base()[0..count). The chain already holds it,
  /// so this is cheap; use base_prefix at construction to pick the points.
  PermGroup stabilizer_of_base_prefix(std::size_t count) const;

  /// Calls f(element) for every element; f returns false to stop.
  void for_each_element(const std::function<bool(const Permutation&)>& f) const;
  /// All elements; throws BudgetError above `limit`.
  std::vector<Permutation> elements(std::uint64_t limit) const;

  /// Uniformly random element from the chain.
  Permutation random_element(std::mt19937_64& rng) const;

  /// Coset representative of level `level` sending the base point to `point`.
  const std::optional<Permutation>& transversal(std::size_t level, int point) const {
    return levels_[level].reps[static_cast<std::size_t>(point)];
  }
  std::size_t base_length() const { return levels_.size(); }
  const std::vector<int>& basic_orbit(std::size_t level) const { return levels_[level].orbit; }

  /// Sifts p through the chain; returns the residue and the level reached.
  std::pair<Permutation, std::size_t> strip(const Permutation& p, std::size_t from = 0) const;

 private:
  struct Level {
    int base_point = 0;
    std::vector<Permutation> gens;
    std::vector<int> orbit;
    std::vector<std::optional<Permutation>> reps;
    std::vector<std::optional<Permutation>> inv_reps;
    // done[k]: generators gens[0..done[k]) already checked against orbit[k].
    std::vector<std::size_t> done;
  };

  void build(const std::vector<int>& base_prefix);
  /// Refreshes the generator list of level i and extends its orbit; existing
  /// transversal elements are kept so earlier checks stay valid.
  void extend_level(std::size_t i);
  bool fixes_prefix(const Permutation& p, std::size_t count) const;

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> strong_;
  std::vector<int> base_;
  std::vector<Level> levels_;
};

/// Subgroup generated inside `group` by conjugation-orbit Schreier generators:
/// the centralizer of x in the group. The orbit of x under conjugation is
/// enumerated explicitly and must fit the budget.
PermGroup centralizer_of_element(const PermGroup& group, const Permutation& x);

/// t in group with t^-1 a t = b, found by walking the conjugacy class of a.
std::optional<Permutation> conjugating_element_in(const PermGroup& group, const Permutation& a,
                                                  const Permutation& b);

/// Centralizer of a list of elements (intersection of single centralizers).
PermGroup centralizer_in(const PermGroup& group, const std::vector<Permutation>& elems);

/// Centralizer in the full symmetric group of a group acting semiregularly:
/// built structurally from base points of its regular orbits, then verified.
/// Throws InputError when the action is not semiregular.
PermGroup semiregular_centralizer(std::size_t degree, const std::vector<Permutation>& gens);

/// Homomorphism defined on generators. The graph group (x, phi(x)) on
/// degree + codomain_degree points gives the kernel and checks that the
/// generator images define a map at all.
class GroupHom {
 public:
  GroupHom(PermGroup domain, std::size_t codomain_degree, std::vector<Permutation> images);

  const PermGroup& domain() const { return domain_; }
  const PermGroup& image() const { return image_; }
  std::size_t codomain_degree() const { return codomain_degree_; }
  /// Image of an element given as a word-free permutation: evaluated through
  /// the graph group, so any element of the domain is accepted.
  Permutation operator()(const Permutation& x) const;
  std::uint64_t kernel_order() const;
  /// True iff |graph| = |domain|, i.e. the images define a homomorphism.
  bool well_defined() const;

 private:
  PermGroup domain_;
  std::size_t codomain_degree_;
  std::vector<Permutation> images_;
  PermGroup graph_;
  PermGroup image_;
};

/// Permutation induced on a block system (blocks listed as 0-based point sets).
/// Throws InputError if p does not permute the blocks.
Permutation block_action(const Permutation& p, const std::vector<std::vector<int>>& blocks);

/// Left transversal {t_j} of `sub` in `group` (group = union of t_j * sub),
/// found by closing {identity} under left multiplication by generators.
std::vector<Permutation> left_transversal(const PermGroup& group, const PermGroup& sub);

}  // namespace sdsearch
