#include "sdsearch/binary_code.hpp"

#include <algorithm>
#include <string>

#include "sdsearch/errors.hpp"

namespace sdsearch {

namespace {

void check_length(std::size_t n) {
  if (n > BitVec::kBits) {
    throw InputError("code length " + std::to_string(n) + " exceeds " +
                     std::to_string(BitVec::kBits));
  }
}

// Visits every sum of exactly `t` of the rows; `visit` returns false to stop.
template <class Visit>
bool sums_of_t_rows(const std::vector<BitVec>& rows, std::size_t start, std::size_t t,
                    const BitVec& acc, Visit& visit) {
  if (t == 0) return visit(acc);
  const std::size_t k = rows.size();
  for (std::size_t i = start; i + t <= k; ++i) {
    if (!sums_of_t_rows(rows, i + 1, t - 1, acc ^ rows[i], visit)) return false;
  }
  return true;
}

}  // namespace

BinaryCode::BinaryCode(std::size_t length) : length_(length) { check_length(length); }

BinaryCode::BinaryCode(std::size_t length, std::span<const BitVec> generators)
    : length_(length) {
  check_length(length);
  const BitVec mask = BitVec::ones(length);
  for (const auto& g : generators) {
    if ((g & ~mask).any()) throw InputError("generator has bits beyond the code length");
  }
  rows_ = rref(generators);
  pivots_.reserve(rows_.size());
  for (const auto& r : rows_) pivots_.push_back(r.lowest());
}

BinaryCode BinaryCode::full(std::size_t length) {
  std::vector<BitVec> rows;
  for (std::size_t i = 0; i < length; ++i) rows.push_back(BitVec::unit(i));
  return BinaryCode(length, rows);
}

BinaryCode BinaryCode::from_strings(const std::vector<std::string>& rows) {
  if (rows.empty()) throw InputError("from_strings: no rows (length unknown)");
  std::vector<BitVec> v;
  for (const auto& r : rows) {
    if (r.size() != rows.front().size()) throw InputError("rows of unequal length");
    v.push_back(BitVec::from_string(r));
  }
  return BinaryCode(rows.front().size(), v);
}

BitVec BinaryCode::reduce(BitVec v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (v.test(static_cast<std::size_t>(pivots_[i]))) v ^= rows_[i];
  }
  return v;
}

bool BinaryCode::is_subcode_of(const BinaryCode& other) const {
  if (length_ != other.length_) return false;
  return std::all_of(rows_.begin(), rows_.end(),
                     [&](const BitVec& r) { return other.contains(r); });
}

std::size_t BinaryCode::hash() const {
  std::size_t h = length_ * 0x9e3779b97f4a7c15ULL;
  for (const auto& r : rows_) h = (h ^ r.hash()) * 0x100000001b3ULL;
  return h;
}

BinaryCode dual(const BinaryCode& code) {
  const std::size_t n = code.length();
  std::vector<bool> is_pivot(n, false);
  for (int p : code.pivots()) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<BitVec> out;
  out.reserve(n - code.dimension());
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    BitVec y = BitVec::unit(f);
    for (std::size_t i = 0; i < code.rows().size(); ++i) {
      if (code.rows()[i].test(f)) y.set(static_cast<std::size_t>(code.pivots()[i]));
    }
    out.push_back(y);
  }
  return BinaryCode(n, out);
}

DistanceResult min_distance(const BinaryCode& code, std::optional<int> upper_bound) {
  if (code.dimension() == 0) throw InputError("min_distance: no nonzero codewords");
  const auto& rows = code.rows();
  int best = static_cast<int>(code.length()) + 1;
  bool hit = false;
  auto visit = [&](const BitVec& v) {
    const int w = v.popcount();
    if (w < best) best = w;
    if (upper_bound && best <= *upper_bound) {
      hit = true;
      return false;
    }
    return true;
  };
  for (std::size_t t = 1; t <= rows.size() && static_cast<int>(t) < best; ++t) {
    if (!sums_of_t_rows(rows, 0, t, BitVec{}, visit)) break;
  }
  return {best, hit};
}

bool has_min_distance_at_least(const BinaryCode& code, int d) {
  if (code.dimension() == 0) return true;
  const auto& rows = code.rows();
  bool ok = true;
  auto visit = [&](const BitVec& v) {
    if (v.popcount() < d) {
      ok = false;
      return false;
    }
    return true;
  };
  for (std::size_t t = 1; t <= rows.size() && static_cast<int>(t) < d; ++t) {
    if (!sums_of_t_rows(rows, 0, t, BitVec{}, visit)) break;
  }
  return ok;
}

bool is_self_orthogonal(const BinaryCode& code) {
  const auto& r = code.rows();
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = i; j < r.size(); ++j) {
      if (dot(r[i], r[j])) return false;
    }
  }
  return true;
}

bool is_self_dual(const BinaryCode& code) {
  return 2 * code.dimension() == code.length() && is_self_orthogonal(code);
}

bool is_doubly_even(const BinaryCode& code) {
  const auto& r = code.rows();
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i].popcount() % 4 != 0) return false;
    for (std::size_t j = i + 1; j < r.size(); ++j) {
      if (dot(r[i], r[j])) return false;
    }
  }
  return true;
}

WeightProfile weight_profile(const BinaryCode& code) {
  const int k = static_cast<int>(code.dimension());
  if (k > budget::max_enumeration_dimension()) {
    throw BudgetError("weight_profile: enumeration too large (dimension " + std::to_string(k) +
                      ")");
  }
  std::vector<std::uint64_t> counts(code.length() + 1, 0);
  for_each_codeword(code, [&](const BitVec& v) {
    ++counts[static_cast<std::size_t>(v.popcount())];
    return true;
  });
  WeightProfile p;
  for (std::size_t w = 0; w < counts.size(); ++w) {
    if (counts[w]) p.counts[static_cast<int>(w)] = counts[w];
  }
  for (std::size_t w = 1; w < counts.size(); ++w) {
    if (counts[w]) {
      p.min_nonzero = static_cast<int>(w);
      break;
    }
  }
  return p;
}

std::vector<BitVec> codewords_of_weight(const BinaryCode& code, std::span<const int> weights) {
  const int k = static_cast<int>(code.dimension());
  if (k > budget::max_enumeration_dimension()) {
    throw BudgetError("codewords_of_weight: enumeration too large (dimension " +
                      std::to_string(k) + ")");
  }
  std::vector<bool> wanted(code.length() + 1, false);
  for (int w : weights) {
    if (w >= 0 && static_cast<std::size_t>(w) <= code.length()) {
      wanted[static_cast<std::size_t>(w)] = true;
    }
  }
  std::vector<BitVec> out;
  for_each_codeword(code, [&](const BitVec& v) {
    if (wanted[static_cast<std::size_t>(v.popcount())]) out.push_back(v);
    return true;
  });
  return out;
}

BinaryCode sum_codes(const BinaryCode& a, const BinaryCode& b) {
  if (a.length() != b.length()) throw InputError("sum_codes: length mismatch");
  std::vector<BitVec> rows = a.rows();
  rows.insert(rows.end(), b.rows().begin(), b.rows().end());
  return BinaryCode(a.length(), rows);
}

BinaryCode intersect_codes(const BinaryCode& a, const BinaryCode& b) {
  if (a.length() != b.length()) throw InputError("intersect_codes: length mismatch");
  return dual(sum_codes(dual(a), dual(b)));
}

}  // namespace sdsearch
