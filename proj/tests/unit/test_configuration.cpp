#include "doctest.h"
#include "sdsearch/configuration.hpp"

using namespace sdsearch;

TEST_CASE("explicit generators of H") {
  const auto a4 = make_config(HKind::A4);
  CHECK(a4.degree == 72);
  CHECK(a4.g.is_fixed_point_free());
  CHECK(a4.g.cycle_type() == std::vector<int>(36, 2));
  CHECK(a4.sigma.cycle_type() == std::vector<int>(24, 3));
  CHECK(a4.sigma.to_string().ends_with("(64,66,71)"));
  CHECK(PermGroup(72, {a4.g, a4.h}).order() == 4);
  CHECK(PermGroup(72, a4.generators()).order() == 12);

  const auto d8 = make_config(HKind::D8);
  CHECK(d8.sigma.to_string().ends_with("(68,70)"));
  CHECK(PermGroup(72, d8.generators()).order() == 8);
  CHECK(d8.k().order() == 4);
  CHECK(d8.k().to_string().starts_with("(1,8,3,6)(2,5,4,7)"));
  CHECK(d8.k() * d8.k() == d8.h);

  CHECK(a4.pi1_h() == Permutation::parse("(1,2)(3,4)(5,6)(7,8)(9,10)(11,12)(13,14)(15,16)(17,18)"
                                         "(19,20)(21,22)(23,24)(25,26)(27,28)(29,30)(31,32)"
                                         "(33,34)(35,36)",
                                         36));
  CHECK(a4.pi2_sigma().to_string().starts_with("(1,2,3)(4,5,6)"));
  CHECK(d8.pi2_sigma().to_string().starts_with("(1,2)(3,4)"));
}

TEST_CASE("wreath centralizers at full size") {
  const auto a4 = wreath_centralizer(make_config(HKind::A4));
  const std::uint64_t s6 = 720, s9 = 362880;
  std::uint64_t p12 = 1, p24 = 1, p8 = 1;
  for (int i = 0; i < 6; ++i) {
    p12 *= 12;
    p24 *= 24;
  }
  for (int i = 0; i < 9; ++i) p8 *= 8;
  CHECK(a4.G.order() == p12 * s6);
  CHECK(a4.pi1_G.order() == p12 * s6);
  CHECK(a4.G36.order() == p24 * s6);
  CHECK(a4.G36.order() / a4.pi1_G.order() == 64);
  CHECK(a4.transversal.size() == 64);
  CHECK(a4.transversal.front().is_identity());
  const auto cfg = make_config(HKind::A4);
  for (const auto& t : a4.G.generators()) {
    for (const auto& x : cfg.generators()) CHECK(t * x == x * t);
  }

  const auto d8 = wreath_centralizer(make_config(HKind::D8));
  CHECK(d8.G.order() == p8 * s9);
  CHECK(d8.G36.order() == p8 * s9);
  CHECK(d8.transversal.size() == 1);
}

TEST_CASE("scaled configurations") {
  for (std::size_t m = 1; m <= 3; ++m) {
    const auto w = wreath_centralizer(make_config(HKind::A4, m));
    CHECK(w.transversal.size() == (std::size_t{1} << m));
    const auto d = wreath_centralizer(make_config(HKind::D8, m));
    CHECK(d.transversal.size() == 1);
  }
}
