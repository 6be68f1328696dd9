#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "sdsearch/bitvec.hpp"

namespace sdsearch {

/// Binary linear code of length n, stored as its reduced row-echelon generator
/// matrix. Two codes are equal iff their canonical generators agree bit for bit.
class BinaryCode {
 public:
  BinaryCode() = default;
  /// Zero code of the given length.
  explicit BinaryCode(std::size_t length);
  /// Span of `generators`; dependent rows are dropped.
  BinaryCode(std::size_t length, std::span<const BitVec> generators);
  BinaryCode(std::size_t length, std::initializer_list<BitVec> generators)
      : BinaryCode(length, std::span<const BitVec>(generators.begin(), generators.size())) {}

  static BinaryCode full(std::size_t length);
  static BinaryCode from_strings(const std::vector<std::string>& rows);

  std::size_t length() const { return length_; }
  std::size_t dimension() const { return rows_.size(); }
  const std::vector<BitVec>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  bool contains(const BitVec& v) const { return reduce(v).none(); }
  /// Remainder of v modulo the code (zero at every pivot column).
  BitVec reduce(BitVec v) const;
  bool is_subcode_of(const BinaryCode& other) const;

  friend bool operator==(const BinaryCode& a, const BinaryCode& b) {
    return a.length_ == b.length_ && a.rows_ == b.rows_;
  }

  std::size_t hash() const;

 private:
  std::size_t length_ = 0;
  std::vector<BitVec> rows_;
  std::vector<int> pivots_;
};

/// Codeword-weight histogram.
struct WeightProfile {
  std::map<int, std::uint64_t> counts;
  /// Minimum weight of a nonzero codeword; 0 for the zero code.
  int min_nonzero = 0;
};

/// Result of a minimum-distance computation. With bound_hit set, `distance`
/// is the weight of a codeword found at or below the caller's bound, which
/// need not be the minimum.
struct DistanceResult {
  int distance = 0;
  bool bound_hit = false;
};

BinaryCode dual(const BinaryCode& code);

/// Minimum distance by enumerating sums of t generator rows for t = 1, 2, ...
/// (a sum of t RREF rows has weight >= t). Stops once t reaches the best
/// weight found, or as soon as a codeword of weight <= upper_bound appears.
DistanceResult min_distance(const BinaryCode& code, std::optional<int> upper_bound = std::nullopt);

/// True iff every nonzero codeword has weight >= d. Stops at the first
/// lighter codeword, and after all sums of fewer than d rows.
bool has_min_distance_at_least(const BinaryCode& code, int d);

bool is_self_dual(const BinaryCode& code);
bool is_self_orthogonal(const BinaryCode& code);
/// Generator weights divisible by 4 and pairwise orthogonal generators.
bool is_doubly_even(const BinaryCode& code);

/// Exact weight histogram by Gray-code enumeration of all 2^k codewords.
WeightProfile weight_profile(const BinaryCode& code);

/// Codewords of exactly the given weights, in enumeration order.
std::vector<BitVec> codewords_of_weight(const BinaryCode& code, std::span<const int> weights);

/// Calls f(codeword) for every codeword (including zero). f returns false to stop.
template <class F>
void for_each_codeword(const BinaryCode& code, F&& f) {
  const auto& rows = code.rows();
  const std::size_t k = rows.size();
  BitVec acc;
  if (!f(acc)) return;
  const std::uint64_t total = k >= 64 ? 0 : (std::uint64_t{1} << k);
  for (std::uint64_t i = 1; i < total; ++i) {
    acc ^= rows[static_cast<std::size_t>(std::countr_zero(i))];
    if (!f(acc)) return;
  }
}

BinaryCode sum_codes(const BinaryCode& a, const BinaryCode& b);
BinaryCode intersect_codes(const BinaryCode& a, const BinaryCode& b);

}  // namespace sdsearch

template <>
struct std::hash<sdsearch::BinaryCode> {
  std::size_t operator()(const sdsearch::BinaryCode& c) const noexcept { return c.hash(); }
};
