#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sdsearch/binary_code.hpp"
#include "sdsearch/configuration.hpp"
#include "sdsearch/f4_codes.hpp"
#include "sdsearch/perm_group.hpp"
#include "sdsearch/permutation.hpp"

namespace sdsearch {

/// Counters from one backtrack run.
struct SearchStats {
  std::vector<int> shell_weights;
  std::size_t shell_words = 0;
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
};

struct AutGroup {
  BinaryCode code;
  PermGroup group;
  SearchStats stats;
};

/// Full setwise stabilizer of the code in S_n. Coordinates are refined by
/// incidence with weight shells (lightest first, more shells until they span
/// the code); every leaf is checked exactly against the code.
AutGroup automorphism_group(const BinaryCode& code);

/// Growing list of pairwise inequivalent codes. Each entry keeps its
/// refinement structure and automorphism group, so a lookup costs one search
/// per candidate with the same weight profile.
class ClassIndex {
 public:
  struct Match {
    std::size_t index;
    /// act_on_code(query, witness) == rep(index).
    Permutation witness;
  };

  ClassIndex();
  ~ClassIndex();
  ClassIndex(ClassIndex&&) noexcept;
  ClassIndex& operator=(ClassIndex&&) noexcept;

  std::optional<Match> find(const BinaryCode& c) const;
  /// Appends c without checking for an equivalent entry.
  std::size_t add(const BinaryCode& c);
  /// Index of the class of c, and whether c opened a new class.
  std::pair<std::size_t, bool> insert(const BinaryCode& c);

  std::size_t size() const;
  const BinaryCode& rep(std::size_t i) const;
  const AutGroup& aut(std::size_t i) const;

 private:
  struct Entry;
  std::vector<std::unique_ptr<Entry>> entries_;
};

/// A permutation p with act_on_code(a, p) == b, or none.
std::optional<Permutation> is_equivalent(const BinaryCode& a, const BinaryCode& b);

struct SelfDualClass {
  BinaryCode rep;
  std::uint64_t aut_order = 0;
  /// Enumerated codes that fell into this class.
  std::uint64_t count = 0;
};

struct SelfDualClassification {
  std::size_t n = 0;
  std::uint64_t total = 0;
  std::vector<SelfDualClass> classes;
  /// Sum of n!/|Aut| over the classes.
  std::uint64_t mass = 0;
};

/// Enumerates every self-dual code of length n and sorts them into
/// equivalence classes, in order of first appearance.
SelfDualClassification classify_self_dual(std::size_t n);

/// prod_{i=1}^{n/2-1} (2^i + 1).
std::uint64_t self_dual_count_formula(std::size_t n);

/// A permutation g in `group` with act_on_code(a, g) == b, or none. Works
/// through Aut(a) cosets, so Aut(a) must be enumerable.
std::optional<Permutation> same_orbit(const BinaryCode& a, const BinaryCode& b, const PermGroup& group);

enum class FpfMethod { Auto, Enumerate, Backtrack };

/// One representative (lexicographically least images) per class of
/// fixed-point-free elements of the given order in `group`, under conjugation
/// by `acting` (defaults to `group` itself). `acting` must normalize that set.
/// Enumerate lists the whole group; Backtrack walks the stabilizer chain and
/// prunes branches that fix a base point. Auto picks Enumerate up to 10^6.
std::vector<Permutation> fpf_element_classes(const PermGroup& group, int order,
                                             const PermGroup* acting = nullptr,
                                             FpfMethod method = FpfMethod::Auto);

/// Random search for a fixed-point-free element of prime order: powers of
/// uniform random elements. None after `attempts` misses.
std::optional<Permutation> random_fpf_element(const PermGroup& group, int order, std::mt19937_64& rng,
                                              int attempts = 20000);

/// A fixed-point-free involution s in `group` with s^-1 g s = g^-1, or none.
std::optional<Permutation> inverting_involution(const PermGroup& group, const Permutation& g);

struct OrbitRep {
  BinaryCode code;
  Permutation tau;
  Permutation rho_tilde;
  Permutation h;
  Permutation sigma;
};

struct OrbitRepSet {
  std::string source_class;
  std::vector<OrbitRep> reps;
};

/// Self-dual, pi1(h) in Aut(D) and pi2(sigma) in Aut(pi3(D(pi1(h)))). The
/// minimum distance condition is left to the caller.
bool in_defining_set(const BinaryCode& d, const HConfig& config);

/// Representatives of the G_36-orbits on the codes equivalent to y that lie
/// in the defining set. y lives on config.half() points.
OrbitRepSet lemma_repr(const BinaryCode& y, const HConfig& config, std::string source_class = {});

/// Throws InvariantError unless every record satisfies its witness equation
/// and the defining-set conditions.
void check_rep_set(const BinaryCode& y, const HConfig& config, const OrbitRepSet& set);

/// Expands reps by the transversal and keeps one code per orbit of `group`.
std::vector<BinaryCode> orbit_fuse(const std::vector<BinaryCode>& reps, const PermGroup& group,
                                   const std::vector<Permutation>& transversal);
/// Same, keeping witnesses: rho_tilde absorbs the transversal element, so the
/// records still pass check_rep_set.
OrbitRepSet orbit_fuse(const OrbitRepSet& set, const PermGroup& group, const std::vector<Permutation>& transversal);

/// Order-3 reduction of a self-dual code: a fixed-point-free order-3
/// automorphism g and an inverting fixed-point-free involution sigma are found
/// in Aut(code), coordinates are relabelled by sigma_alignment, and the even
/// subcode is mapped to GF(4) and projected along sigma.
struct Order3Reduction {
  /// g and sigma after relabelling.
  Permutation g;
  Permutation sigma;
  Permutation relabel;
  BinaryCode code;
  BinaryCode fixed;
  BinaryCode even;
  LinearF4Code f4;
  AdditiveF4Code additive;
};
/// Throws InputError if Aut(code) has no suitable g or sigma.
Order3Reduction order3_reduction(const BinaryCode& code, std::uint64_t seed);

}  // namespace sdsearch
