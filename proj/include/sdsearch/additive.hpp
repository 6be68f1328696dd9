#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "sdsearch/f4_codes.hpp"
#include "sdsearch/isotropic.hpp"

namespace sdsearch {

/// Every trace-Hermitian self-dual additive code of length n.
void for_each_additive_selfdual(std::size_t n, const std::function<bool(const AdditiveF4Code&)>& f,
                                Shard shard = {});

/// Order of the monomial group on n coordinates: n! * 3^n, times 2^n with
/// per-coordinate conjugation.
std::uint64_t monomial_group_order(std::size_t n, bool with_conjugation);

/// Calls f for every element of the monomial group; f returns false to stop.
void for_each_monomial(std::size_t n, bool with_conjugation,
                       const std::function<bool(const MonomialMap&)>& f);

/// Generators of the monomial group: a transposition, an n-cycle, w at the
/// first coordinate, and (optionally) conjugation at the first coordinate.
std::vector<MonomialMap> monomial_generators(std::size_t n, bool with_conjugation);

struct AdditiveClass {
  AdditiveF4Code representative;
  std::uint64_t orbit_size = 0;
  /// Counted by running over the whole monomial group.
  std::uint64_t stabilizer_order = 0;
  int min_distance = 0;
};

struct AdditiveClassification {
  std::size_t length = 0;
  bool with_conjugation = false;
  std::uint64_t group_order = 0;
  /// Number of self-dual codes found by direct enumeration.
  std::uint64_t total = 0;
  std::vector<AdditiveClass> classes;

  /// sum over classes of group_order / stabilizer_order.
  std::uint64_t mass() const;
};

/// Classes of trace-Hermitian self-dual additive codes of length n <= 5 under
/// the monomial group. Representatives are the smallest code of each orbit
/// (by packed generator rows).
AdditiveClassification classify_small_additive_selfdual(std::size_t n, bool with_conjugation);

/// One line of an S3 filter report.
struct S3Record {
  std::size_t index = 0;
  std::size_t dimension = 0;
  /// min(d(phi(X)), cap); -1 when the record was not evaluated.
  int d_phi = -1;
  /// "ok", "contradiction", "not-self-dual", "low-distance", "malformed".
  std::string status;
  std::string detail;
};

struct S3Report {
  std::vector<S3Record> records;
  std::map<int, std::uint64_t> histogram;
  int max_d_phi = -1;
  std::uint64_t contradictions = 0;
  std::uint64_t rejected = 0;

  void add(const S3Record& r);
  /// Lines "index m d_phi status", then a histogram block.
  std::string to_text() const;
};

/// Checks one record: X must be trace-Hermitian self-dual with d(X) >= min_dx;
/// then d(phi(X)) is computed with an abort at `cap` (d >= cap is a
/// contradiction with an S3 action on an extremal code).
S3Record s3_check(std::size_t index, const AdditiveF4Code& x, int min_dx = 4, int cap = 8);

/// min(d(code), cap), enumerating only combinations of fewer than cap rows.
int min_distance_capped(const LinearF4Code& code, int cap);

}  // namespace sdsearch
