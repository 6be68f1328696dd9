#include "sdsearch/constructions.hpp"

#include <algorithm>
#include <numeric>

namespace sdsearch {

BinaryCode repetition_code(std::size_t n) { return BinaryCode(n, {BitVec::ones(n)}); }

BinaryCode extended_hamming8() {
  return BinaryCode::from_strings({"11110000", "00111100", "00001111", "01010101"});
}

BinaryCode extended_golay24() {
  // Coefficients of g(x) from x^0 upward.
  const int g[] = {1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1};
  std::vector<BitVec> rows;
  for (std::size_t shift = 0; shift < 12; ++shift) {
    BitVec r;
    for (std::size_t i = 0; i < 12; ++i) {
      if (g[i]) r.set(i + shift);
    }
    if (r.popcount() % 2) r.set(23);
    rows.push_back(r);
  }
  return BinaryCode(24, rows);
}

BinaryCode direct_sum(const BinaryCode& a, const BinaryCode& b) {
  std::vector<BitVec> rows = a.rows();
  for (const auto& r : b.rows()) rows.push_back(r.shifted_up(a.length()));
  return BinaryCode(a.length() + b.length(), rows);
}

Permutation random_permutation(std::size_t degree, std::mt19937_64& rng) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation::from_images(img);
}

BinaryCode random_code(std::size_t n, std::size_t k, std::mt19937_64& rng) {
  std::vector<BitVec> rows;
  std::bernoulli_distribution bit(0.5);
  for (std::size_t r = 0; r < k; ++r) {
    BitVec v;
    for (std::size_t i = 0; i < n; ++i) v.assign(i, bit(rng));
    rows.push_back(v);
  }
  return BinaryCode(n, rows);
}

std::optional<BinaryCode> random_invariant_self_dual(std::size_t n,
                                                     const std::vector<Permutation>& group,
                                                     std::mt19937_64& rng, bool doubly_even,
                                                     int attempts) {
  if (n % 2) return std::nullopt;
  std::bernoulli_distribution bit(0.5);
  for (int attempt = 0; attempt < attempts; ++attempt) {
    BinaryCode s(n);
    int stale = 0;
    while (2 * s.dimension() < n && stale < 400) {
      // Random element of s^perp outside s.
      const BinaryCode perp = dual(s);
      BitVec v;
      for (const auto& r : perp.rows()) {
        if (bit(rng)) v ^= r;
      }
      v = s.reduce(v);
      bool ok = v.any() && v.popcount() % (doubly_even ? 4 : 2) == 0;
      for (std::size_t i = 0; ok && i < group.size(); ++i) ok = dot(v, group[i].apply(v)) == 0;
      if (!ok) {
        ++stale;
        continue;
      }
      std::vector<BitVec> rows = s.rows();
      for (const auto& g : group) rows.push_back(g.apply(v));
      s = BinaryCode(n, rows);
      stale = 0;
    }
    if (2 * s.dimension() == n) return s;
  }
  return std::nullopt;
}

}  // namespace sdsearch
