#include <random>
#include <set>

#include "doctest.h"
#include "sdsearch/errors.hpp"
#include "sdsearch/f4_codes.hpp"
#include "sdsearch/isotropic.hpp"

using namespace sdsearch;

namespace {

// Multiplication table written out from w^2 = w + 1.
F4 table_mul(int a, int b) {
  static const int t[4][4] = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
  return F4(static_cast<std::uint8_t>(t[a][b]));
}

F4Vec random_f4vec(std::size_t n, std::mt19937_64& rng) {
  F4Vec v;
  for (std::size_t i = 0; i < n; ++i) v.set(i, F4(static_cast<std::uint8_t>(rng() & 3U)));
  return v;
}

// All GF(2)-subspaces of GF(4)^n of dimension k, by brute force over k-tuples of vectors.
std::set<std::vector<BitVec>> brute_subspaces(std::size_t n, std::size_t k) {
  std::set<std::vector<BitVec>> out;
  const std::size_t total = std::size_t{1} << (2 * n);
  std::vector<std::size_t> idx(k, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
    if (pos == k) {
      std::vector<BitVec> rows;
      for (auto i : idx) {
        BitVec v;
        v.words()[0] = i;
        rows.push_back(v);
      }
      auto r = rref(rows);
      if (r.size() == k) out.insert(r);
      return;
    }
    for (std::size_t i = start; i < total; ++i) {
      idx[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 1);
  return out;
}

}  // namespace

TEST_CASE("GF(4) arithmetic") {
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      CHECK(F4(static_cast<std::uint8_t>(a)) * F4(static_cast<std::uint8_t>(b)) == table_mul(a, b));
    }
    const F4 x(static_cast<std::uint8_t>(a));
    CHECK(x.conj() == x * x);
    if (a) CHECK(x * x.inverse() == F4::one());
  }
  CHECK(F4::omega().conj() == F4::omega_bar());
  CHECK(F4::from_char('W') == F4::omega_bar());
  CHECK_THROWS_AS(F4::from_char('x'), InputError);
}

TEST_CASE("vector scaling and products") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 50; ++t) {
    const auto x = random_f4vec(13, rng);
    const auto y = random_f4vec(13, rng);
    F4 h = F4::zero();
    int tr = 0;
    for (std::size_t i = 0; i < 13; ++i) {
      h = h + x.at(i) * y.at(i).conj();
      tr ^= (x.at(i) * y.at(i).conj() + x.at(i).conj() * y.at(i)).code();
    }
    CHECK(hermitian_product(x, y) == h);
    CHECK(trace_hermitian(x, y) == tr);
    for (int s = 0; s < 4; ++s) {
      const auto sx = x.scaled(F4(static_cast<std::uint8_t>(s)));
      for (std::size_t i = 0; i < 13; ++i) CHECK(sx.at(i) == F4(static_cast<std::uint8_t>(s)) * x.at(i));
    }
  }
  CHECK(F4Vec::from_string("01wW").to_string(4) == "01wW");
}

TEST_CASE("Hermitian duals of linear codes") {
  CHECK(hermitian_dual(LinearF4Code(3)).dimension() == 3);
  const auto c = LinearF4Code::from_strings({"11"});
  CHECK(hermitian_dual(c) == c);
  CHECK(is_hermitian_self_dual(c));
  std::mt19937_64 rng(6);
  for (int t = 0; t < 30; ++t) {
    std::vector<F4Vec> gens;
    for (int r = 0; r < 3; ++r) gens.push_back(random_f4vec(7, rng));
    const LinearF4Code code(7, gens);
    const auto d = hermitian_dual(code);
    CHECK(code.dimension() + d.dimension() == 7);
    CHECK(hermitian_dual(d) == code);
    for (const auto& x : code.rows()) {
      for (const auto& y : d.rows()) CHECK(hermitian_product(x, y).is_zero());
    }
  }
}

TEST_CASE("trace-Hermitian duality at length 1") {
  const auto zero = AdditiveF4Code(3);
  CHECK(trace_hermitian_dual(zero).dimension() == 6);
  // All 1-dimensional GF(2)-subspaces of GF(4): each is its own dual.
  const auto lines = brute_subspaces(1, 1);
  CHECK(lines.size() == 3);
  for (const auto& l : lines) {
    const AdditiveF4Code x(1, BinaryCode(2, l));
    CHECK(trace_hermitian_dual(x) == x);
  }
  CHECK(count_isotropic(F2Form::trace_hermitian(1), 1) == 3);
}

TEST_CASE("Lagrangian counts agree with brute force") {
  for (std::size_t n = 1; n <= 3; ++n) {
    std::uint64_t brute = 0;
    for (const auto& rows : brute_subspaces(n, n)) {
      if (is_trace_hermitian_self_dual(AdditiveF4Code(n, BinaryCode(2 * n, rows)))) ++brute;
    }
    CHECK(count_isotropic(F2Form::trace_hermitian(n), n) == brute);
  }
}

TEST_CASE("phi and pi") {
  const auto x = AdditiveF4Code::from_strings(1, {"1"});
  const auto e = phi_lift(x);
  CHECK(e == LinearF4Code::from_strings({"11"}));
  CHECK(is_hermitian_self_dual(e));
  CHECK(pi_project(e) == x);
  CHECK(phi_lift(AdditiveF4Code(2)).dimension() == 0);
  CHECK_THROWS_AS(pi_project(LinearF4Code::from_strings({"10"})), InputError);
}

TEST_CASE("sigma action") {
  const auto v = F4Vec::from_string("1w00");
  CHECK(sigma_action_f4(v, 4).to_string(4) == "W100");
  std::mt19937_64 rng(12);
  for (int t = 0; t < 20; ++t) {
    const auto u = random_f4vec(24, rng);
    CHECK(sigma_action_f4(sigma_action_f4(u, 24), 24) == u);
    CHECK(sigma_action_f4(u.scaled(F4::omega()), 24) == sigma_action_f4(u, 24).scaled(F4::omega_bar()));
  }
}

TEST_CASE("monomial maps") {
  std::mt19937_64 rng(21);
  MonomialMap m = MonomialMap::identity(3);
  m.scalars[0] = F4::omega();
  const auto l = monomial_lift(m);
  CHECK(l.scalars[0] == F4::omega());
  CHECK(l.scalars[1] == F4::omega_bar());
  CHECK(monomial_lift(MonomialMap::identity(4)) == MonomialMap::identity(8));
  for (int t = 0; t < 30; ++t) {
    MonomialMap a = MonomialMap::identity(5), b = MonomialMap::identity(5);
    for (auto* mm : {&a, &b}) {
      std::vector<int> img{0, 1, 2, 3, 4};
      std::shuffle(img.begin(), img.end(), rng);
      mm->perm = Permutation::from_images(img);
      for (std::size_t i = 0; i < 5; ++i) {
        mm->scalars[i] = F4(static_cast<std::uint8_t>(1 + rng() % 3));
        mm->conj[i] = rng() & 1U;
      }
    }
    const auto v = random_f4vec(5, rng);
    CHECK((a * b).apply(v) == b.apply(a.apply(v)));
    CHECK(a.inverse().apply(a.apply(v)) == v);
    CHECK(monomial_lift(a * b) == monomial_lift(a) * monomial_lift(b));
  }
}
