#include <map>
#include <random>

#include "doctest.h"
#include "sdsearch/binary_code.hpp"
#include "sdsearch/constructions.hpp"
#include "sdsearch/errors.hpp"

using namespace sdsearch;

namespace {

// Naive span of a list of rows: every subset sum, no echelon form.
std::vector<BitVec> naive_span(const std::vector<BitVec>& rows) {
  std::vector<BitVec> out;
  const std::size_t k = rows.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    BitVec v;
    for (std::size_t i = 0; i < k; ++i) {
      if ((mask >> i) & 1U) v ^= rows[i];
    }
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::map<int, std::uint64_t> naive_weights(const BinaryCode& c) {
  std::map<int, std::uint64_t> m;
  for (const auto& v : naive_span(c.rows())) ++m[v.popcount()];
  return m;
}

}  // namespace

TEST_CASE("dual of small codes") {
  const auto rep2 = BinaryCode::from_strings({"11"});
  CHECK(dual(rep2) == rep2);
  CHECK(dual(BinaryCode::full(5)).dimension() == 0);
  const auto h8 = extended_hamming8();
  // Pairwise orthogonality of all 16 x 16 codeword pairs.
  const auto words = naive_span(h8.rows());
  REQUIRE(words.size() == 16);
  for (const auto& a : words) {
    for (const auto& b : words) CHECK(dot(a, b) == 0);
  }
  CHECK(dual(h8) == h8);
}

TEST_CASE("dual is an involution and dimensions add up") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 70;
    const auto c = random_code(n, rng() % (n + 1), rng);
    const auto d = dual(c);
    CHECK(c.dimension() + d.dimension() == n);
    CHECK(dual(d) == c);
    for (const auto& r : c.rows()) {
      for (const auto& s : d.rows()) CHECK(dot(r, s) == 0);
    }
  }
}

TEST_CASE("minimum distance and weight profiles") {
  CHECK(min_distance(repetition_code(9)).distance == 9);
  const auto h8 = extended_hamming8();
  CHECK(min_distance(h8).distance == 4);
  const auto wp = weight_profile(h8);
  CHECK(wp.counts == std::map<int, std::uint64_t>{{0, 1}, {4, 14}, {8, 1}});
  const auto golay = extended_golay24();
  CHECK(golay.dimension() == 12);
  const auto gw = weight_profile(golay);
  CHECK(gw.counts == naive_weights(golay));
  CHECK(gw.counts == std::map<int, std::uint64_t>{{0, 1}, {8, 759}, {12, 2576}, {16, 759}, {24, 1}});
  CHECK(min_distance(golay).distance == 8);
  const auto early = min_distance(golay, 10);
  CHECK(early.bound_hit);
  CHECK(early.distance <= 10);
  CHECK(has_min_distance_at_least(golay, 8));
  CHECK_FALSE(has_min_distance_at_least(golay, 9));
  CHECK_THROWS_AS(min_distance(BinaryCode(4)), InputError);
}

TEST_CASE("min_distance agrees with brute force on random codes") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 4 + rng() % 30;
    const auto c = random_code(n, 1 + rng() % 10, rng);
    if (c.dimension() == 0) continue;
    const auto w = naive_weights(c);
    CHECK(min_distance(c).distance == std::next(w.begin())->first);
    CHECK(weight_profile(c).min_nonzero == std::next(w.begin())->first);
  }
}

TEST_CASE("self-duality and doubly-even checks") {
  const auto golay = extended_golay24();
  CHECK(is_self_dual(golay));
  CHECK(is_doubly_even(golay));
  const auto rep2 = BinaryCode::from_strings({"11"});
  CHECK(is_self_dual(rep2));
  CHECK_FALSE(is_doubly_even(rep2));
  CHECK_FALSE(is_self_dual(BinaryCode(4)));
  CHECK(is_doubly_even(BinaryCode(4)));
}

TEST_CASE("sum and intersection") {
  const auto a = BinaryCode::from_strings({"11"});
  const auto b = BinaryCode::from_strings({"01"});
  CHECK(sum_codes(a, a) == a);
  CHECK(sum_codes(a, b) == BinaryCode::full(2));
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto x = random_code(12, 3, rng);
    const auto y = random_code(12, 4, rng);
    const auto s = sum_codes(x, y);
    const auto i = intersect_codes(x, y);
    CHECK(s.dimension() + i.dimension() == x.dimension() + y.dimension());
    const auto sx = naive_span(x.rows());
    const auto sy = naive_span(y.rows());
    std::vector<BitVec> common;
    std::set_intersection(sx.begin(), sx.end(), sy.begin(), sy.end(), std::back_inserter(common));
    CHECK(naive_span(i.rows()) == common);
  }
  CHECK_THROWS_AS(sum_codes(a, BinaryCode(3)), InputError);
}

TEST_CASE("canonical form is invariant under row mixing") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto c = random_code(40, 10, rng);
    std::vector<BitVec> mixed;
    for (int r = 0; r < 20; ++r) {
      BitVec v;
      for (const auto& row : c.rows()) {
        if (rng() & 1U) v ^= row;
      }
      mixed.push_back(v);
    }
    mixed.insert(mixed.end(), c.rows().begin(), c.rows().end());
    std::shuffle(mixed.begin(), mixed.end(), rng);
    CHECK(BinaryCode(40, mixed) == c);
    CHECK(BinaryCode(40, c.rows()) == c);
  }
}

TEST_CASE("weight profile respects the budget") {
  budget::set_limit(1U << 10);
  CHECK_THROWS_AS(weight_profile(extended_golay24()), BudgetError);
  budget::set_limit(std::uint64_t{1} << 28);
  CHECK_NOTHROW(weight_profile(extended_golay24()));
}
