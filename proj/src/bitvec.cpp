#include "sdsearch/bitvec.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "sdsearch/errors.hpp"

namespace sdsearch {

BitVec BitVec::from_string(std::string_view bits) {
  if (bits.size() > kBits) throw InputError("bit string longer than " + std::to_string(kBits));
  BitVec v;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw InputError("invalid bit character '" + std::string(1, bits[i]) + "'");
    }
  }
  return v;
}

BitVec BitVec::ones(std::size_t length) {
  BitVec v;
  for (std::size_t k = 0; k < kWords && 64 * k < length; ++k) {
    const std::size_t left = length - 64 * k;
    v.w_[k] = left >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << left) - 1);
  }
  return v;
}

BitVec BitVec::shifted_down(std::size_t s) const {
  BitVec r;
  if (s >= kBits) return r;
  const std::size_t ws = s / 64, bs = s % 64;
  for (std::size_t k = 0; k + ws < kWords; ++k) {
    std::uint64_t lo = w_[k + ws] >> bs;
    std::uint64_t hi = (bs && k + ws + 1 < kWords) ? (w_[k + ws + 1] << (64 - bs)) : 0;
    r.w_[k] = lo | hi;
  }
  return r;
}

BitVec BitVec::shifted_up(std::size_t s) const {
  BitVec r;
  if (s >= kBits) return r;
  const std::size_t ws = s / 64, bs = s % 64;
  for (std::size_t k = kWords; k-- > ws;) {
    std::uint64_t hi = w_[k - ws] << bs;
    std::uint64_t lo = (bs && k - ws >= 1) ? (w_[k - ws - 1] >> (64 - bs)) : 0;
    r.w_[k] = hi | lo;
  }
  return r;
}

BitVec BitVec::truncated(std::size_t length) const { return *this & ones(length); }

std::strong_ordering operator<=>(const BitVec& a, const BitVec& b) {
  const int i = (a ^ b).lowest();
  if (i < 0) return std::strong_ordering::equal;
  return a.test(static_cast<std::size_t>(i)) ? std::strong_ordering::greater
                                             : std::strong_ordering::less;
}

std::string BitVec::to_string(std::size_t length) const {
  std::string s(length, '0');
  for (std::size_t i = 0; i < length; ++i) {
    if (test(i)) s[i] = '1';
  }
  return s;
}

std::size_t BitVec::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (auto w : w_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xbf58476d1ce4e5b9ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 31));
}

BitVec Echelon::reduce(BitVec v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (v.test(static_cast<std::size_t>(pivots_[r]))) v ^= rows_[r];
  }
  return v;
}

bool Echelon::insert(const BitVec& v) {
  BitVec r = reduce(v);
  const int p = r.lowest();
  if (p < 0) return false;
  // Keep earlier rows free of the new pivot so reduce() stays a single pass.
  for (auto& row : rows_) {
    if (row.test(static_cast<std::size_t>(p))) row ^= r;
  }
  rows_.push_back(r);
  pivots_.push_back(p);
  return true;
}

std::vector<BitVec> Echelon::reduced_rows() const {
  std::vector<std::size_t> order(rows_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
  std::vector<BitVec> out;
  out.reserve(rows_.size());
  for (auto i : order) out.push_back(rows_[i]);
  return out;
}

bool TrackedEchelon::insert(const BitVec& v, const BitVec& tag) {
  auto [r, comb] = reduce(v);
  comb ^= tag;
  const int p = r.lowest();
  if (p < 0) {
    relations_.push_back(comb);
    return false;
  }
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].test(static_cast<std::size_t>(p))) {
      rows_[i] ^= r;
      tags_[i] ^= comb;
    }
  }
  rows_.push_back(r);
  tags_.push_back(comb);
  pivots_.push_back(p);
  return true;
}

TrackedEchelon::Reduction TrackedEchelon::reduce(const BitVec& v) const {
  Reduction out{v, BitVec{}};
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (out.remainder.test(static_cast<std::size_t>(pivots_[r]))) {
      out.remainder ^= rows_[r];
      out.combination ^= tags_[r];
    }
  }
  return out;
}

std::vector<BitVec> rref(std::span<const BitVec> rows) {
  Echelon e;
  for (const auto& r : rows) e.insert(r);
  return e.reduced_rows();
}

std::vector<BitVec> kernel(std::span<const BitVec> images) {
  if (images.size() > BitVec::kBits) throw InputError("kernel: too many generators");
  TrackedEchelon e;
  for (std::size_t i = 0; i < images.size(); ++i) e.insert(images[i], BitVec::unit(i));
  return rref(e.relations());
}

std::optional<BitVec> solve(std::span<const BitVec> images, const BitVec& target) {
  TrackedEchelon e;
  for (std::size_t i = 0; i < images.size(); ++i) e.insert(images[i], BitVec::unit(i));
  auto red = e.reduce(target);
  if (red.remainder.any()) return std::nullopt;
  return red.combination;
}

BitVec combine(std::span<const BitVec> basis, const BitVec& combination) {
  BitVec acc;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (combination.test(i)) acc ^= basis[i];
  }
  return acc;
}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
  Gf2Matrix m{n, n, {}};
  m.rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) m.rows.push_back(BitVec::unit(i));
  return m;
}

BitVec Gf2Matrix::apply(const BitVec& x) const { return combine(rows, x); }

Gf2Matrix Gf2Matrix::operator*(const Gf2Matrix& o) const {
  if (cols_count != o.rows_count) throw InputError("matrix dimension mismatch");
  Gf2Matrix m{rows_count, o.cols_count, {}};
  m.rows.reserve(rows_count);
  for (const auto& r : rows) m.rows.push_back(o.apply(r));
  return m;
}

Gf2Matrix Gf2Matrix::operator+(const Gf2Matrix& o) const {
  if (rows_count != o.rows_count || cols_count != o.cols_count) {
    throw InputError("matrix dimension mismatch");
  }
  Gf2Matrix m = *this;
  for (std::size_t i = 0; i < rows.size(); ++i) m.rows[i] ^= o.rows[i];
  return m;
}

bool Gf2Matrix::is_identity() const { return *this == identity(rows_count); }

namespace budget {
namespace {
std::uint64_t& storage() {
  static std::uint64_t value = [] {
    if (const char* env = std::getenv("SDSEARCH_BUDGET")) {
      char* end = nullptr;
      const unsigned long long v = std::strtoull(env, &end, 10);
      if (end != env && v > 0) return static_cast<std::uint64_t>(v);
    }
    return std::uint64_t{1} << 28;
  }();
  return value;
}
}  // namespace

std::uint64_t limit() { return storage(); }
void set_limit(std::uint64_t value) { storage() = value; }

int max_enumeration_dimension() {
  const std::uint64_t l = limit();
  return l == 0 ? 0 : 63 - std::countl_zero(l);
}

void require(std::uint64_t count, const std::string& what) {
  if (count > limit()) {
    throw BudgetError(what + ": " + std::to_string(count) + " items exceed budget " +
                      std::to_string(limit()));
  }
}

}  // namespace budget

}  // namespace sdsearch
