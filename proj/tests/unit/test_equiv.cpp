#include <random>
#include <set>

#include "brute.hpp"
#include "doctest.h"
#include "sdsearch/constructions.hpp"
#include "sdsearch/equiv.hpp"
#include "sdsearch/errors.hpp"

using namespace sdsearch;

TEST_CASE("automorphism group: small codes against S_n brute force") {
  CHECK(automorphism_group(repetition_code(2)).group.order() == 2);
  CHECK(automorphism_group(BinaryCode(5)).group.order() == 120);
  const auto e8 = automorphism_group(extended_hamming8());
  CHECK(e8.group.order() == 1344);
  CHECK(brute::aut_order(extended_hamming8()) == 1344);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 3 + trial % 5;
    const std::size_t k = 1 + static_cast<std::size_t>(rng() % (n - 1));
    const BinaryCode c = random_code(n, k, rng);
    const auto a = automorphism_group(c);
    for (const auto& g : a.group.generators()) CHECK(is_automorphism(c, g));
    CHECK(a.group.order() == brute::aut_order(c));
  }
}

TEST_CASE("automorphism group: extended Golay") {
  const BinaryCode g24 = extended_golay24();
  const auto a = automorphism_group(g24);
  CHECK(a.group.order() == 244823040ULL);
  CHECK(a.stats.shell_weights == std::vector<int>{8});
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) CHECK(is_automorphism(g24, a.group.random_element(rng)));
  CHECK(a.group.orbits().size() == 1);
}

TEST_CASE("equivalence witnesses") {
  std::mt19937_64 rng(5);
  const BinaryCode e8 = extended_hamming8();
  CHECK(is_equivalent(e8, e8));
  const BinaryCode i2 = repetition_code(2);
  const BinaryCode i2x4 = direct_sum(direct_sum(i2, i2), direct_sum(i2, i2));
  CHECK_FALSE(is_equivalent(e8, i2x4));

  for (const BinaryCode& c : {e8, extended_golay24(), i2x4}) {
    for (int t = 0; t < 5; ++t) {
      const BinaryCode d = act_on_code(c, random_permutation(c.length(), rng));
      const auto w = is_equivalent(c, d);
      REQUIRE(w);
      CHECK(act_on_code(c, *w) == d);
      const auto back = is_equivalent(d, c);
      REQUIRE(back);
      CHECK(is_automorphism(c, *w * *back));
    }
  }

  // Equivalence classes of random codes agree with S_n images.
  for (int trial = 0; trial < 10; ++trial) {
    const BinaryCode a = random_code(6, 3, rng);
    const BinaryCode b = random_code(6, 3, rng);
    const auto images = brute::all_images(a);
    const bool brute_eq = std::find(images.begin(), images.end(), b) != images.end();
    const auto w = is_equivalent(a, b);
    CHECK(static_cast<bool>(w) == brute_eq);
    if (w) CHECK(act_on_code(a, *w) == b);
  }
}

TEST_CASE("fpf element classes") {
  CHECK(fpf_element_classes(PermGroup(3), 2).empty());
  const auto s2 = fpf_element_classes(automorphism_group(repetition_code(2)).group, 2);
  REQUIRE(s2.size() == 1);
  CHECK(s2[0].to_string() == "(1,2)");

  const PermGroup s4 = PermGroup::symmetric(4);
  const auto c4 = fpf_element_classes(s4, 2);
  REQUIRE(c4.size() == 1);
  CHECK(c4[0].cycle_type() == std::vector<int>{2, 2});
  CHECK(c4[0] == Permutation::parse("(1,2)(3,4)", 4));

  // Both search paths agree, and class sizes add up to the brute-force count.
  const BinaryCode i2 = repetition_code(2);
  const BinaryCode i2x4 = direct_sum(direct_sum(i2, i2), direct_sum(i2, i2));
  for (const BinaryCode& c : {extended_hamming8(), i2x4, direct_sum(i2x4, i2)}) {
    const PermGroup g = automorphism_group(c).group;
    for (int order : {2, 3, 4}) {
      const auto a = fpf_element_classes(g, order, nullptr, FpfMethod::Enumerate);
      const auto b = fpf_element_classes(g, order, nullptr, FpfMethod::Backtrack);
      CHECK(a == b);
      std::uint64_t total = 0;
      g.for_each_element([&](const Permutation& p) {
        total += p.is_fixed_point_free() && p.order() == order;
        return true;
      });
      std::uint64_t covered = 0;
      for (const auto& r : a) {
        std::set<Permutation> cls;
        g.for_each_element([&](const Permutation& t) {
          cls.insert(conjugate(r, t));
          return true;
        });
        covered += cls.size();
      }
      CHECK(covered == total);
    }
  }
}

TEST_CASE("lemma repr matches brute-force orbits at length 6 and 8") {
  struct Case {
    HKind kind;
    std::size_t blocks;
  };
  for (const Case cs : {Case{HKind::D8, 2}, Case{HKind::A4, 1}}) {
    const HConfig cfg = make_config(cs.kind, cs.blocks);
    const std::size_t n = cfg.half();
    const WreathData wd = wreath_centralizer(cfg);
    const auto all = brute::all_self_dual(n);
    ClassIndex classes;
    for (const auto& c : all) classes.insert(c);
    for (std::size_t ci = 0; ci < classes.size(); ++ci) {
      const BinaryCode& y = classes.rep(ci);
      const auto images = brute::all_images(y);
      std::vector<BinaryCode> dk;
      for (const auto& c : images) {
        if (brute::in_set(c, cfg)) dk.push_back(c);
      }
      int orbit_count = 0;
      const auto ids = brute::orbit_ids(dk, wd.G36.generators(), orbit_count);
      REQUIRE(ids.size() == dk.size());
      const OrbitRepSet reps = lemma_repr(y, cfg, "y");
      CHECK(static_cast<int>(reps.reps.size()) == orbit_count);
      std::set<int> hit;
      for (const auto& r : reps.reps) {
        auto it = std::find(dk.begin(), dk.end(), r.code);
        REQUIRE(it != dk.end());
        hit.insert(ids[static_cast<std::size_t>(it - dk.begin())]);
      }
      CHECK(static_cast<int>(hit.size()) == orbit_count);
    }
  }
}

TEST_CASE("lemma repr: input checks") {
  const HConfig cfg = make_config(HKind::A4, 1);
  CHECK_THROWS_AS(lemma_repr(BinaryCode::from_strings({"110000"}), cfg), InputError);
  CHECK_THROWS_AS(lemma_repr(extended_hamming8(), cfg), InputError);
}

TEST_CASE("orbit fuse: index-2 subgroup against brute force") {
  const HConfig cfg = make_config(HKind::A4, 1);
  const WreathData wd = wreath_centralizer(cfg);
  REQUIRE(wd.transversal.size() == 2);
  const auto all = brute::all_self_dual(cfg.half());
  std::vector<BinaryCode> dk;
  for (const auto& c : all) {
    if (brute::in_set(c, cfg)) dk.push_back(c);
  }
  int big = 0, small = 0;
  const auto big_ids = brute::orbit_ids(dk, wd.G36.generators(), big);
  const auto small_ids = brute::orbit_ids(dk, wd.pi1_G.generators(), small);
  REQUIRE_FALSE(big_ids.empty());
  REQUIRE_FALSE(small_ids.empty());
  std::vector<BinaryCode> reps;
  for (int o = 0; o < big; ++o) {
    for (std::size_t i = 0; i < dk.size(); ++i) {
      if (big_ids[i] == o) {
        reps.push_back(dk[i]);
        break;
      }
    }
  }
  const auto fused = orbit_fuse(reps, wd.pi1_G, wd.transversal);
  CHECK(static_cast<int>(fused.size()) == small);
  std::set<int> hit;
  for (const auto& f : fused) {
    auto it = std::find(dk.begin(), dk.end(), f);
    REQUIRE(it != dk.end());
    hit.insert(small_ids[static_cast<std::size_t>(it - dk.begin())]);
  }
  CHECK(static_cast<int>(hit.size()) == small);
  CHECK(orbit_fuse(reps, wd.G36, {Permutation(cfg.half())}).size() == reps.size());

  // With witnesses: every fused record still satisfies its equations.
  const BinaryCode y = dk.front();
  const OrbitRepSet set = lemma_repr(y, cfg, "y");
  const OrbitRepSet fused_set = orbit_fuse(set, wd.pi1_G, wd.transversal);
  check_rep_set(y, cfg, fused_set);
  std::vector<BinaryCode> codes;
  for (const auto& r : set.reps) codes.push_back(r.code);
  CHECK(fused_set.reps.size() == orbit_fuse(codes, wd.pi1_G, wd.transversal).size());
}

TEST_CASE("self-dual classification: enumeration count and mass agree") {
  // Class counts by length: 1, 1, 1, 2, 2, 3 for n = 2..12.
  const std::vector<std::size_t> expected_classes{1, 1, 1, 2, 2, 3};
  for (std::size_t n = 2; n <= 12; n += 2) {
    const auto cls = classify_self_dual(n);
    CHECK(cls.total == self_dual_count_formula(n));
    CHECK(cls.mass == cls.total);
    CHECK(cls.classes.size() == expected_classes[n / 2 - 1]);
    std::uint64_t fact = 1;
    for (std::size_t i = 2; i <= n; ++i) fact *= i;
    for (const auto& c : cls.classes) CHECK(c.count == fact / c.aut_order);
  }
}

TEST_CASE("class index: witnesses map the query onto the representative") {
  std::mt19937_64 rng(17);
  ClassIndex index;
  index.add(extended_golay24());
  index.add(direct_sum(extended_hamming8(), direct_sum(extended_hamming8(), extended_hamming8())));
  for (int t = 0; t < 4; ++t) {
    const BinaryCode q = act_on_code(index.rep(t % 2), random_permutation(24, rng));
    const auto m = index.find(q);
    REQUIRE(m);
    CHECK(m->index == static_cast<std::size_t>(t % 2));
    CHECK(act_on_code(q, m->witness) == index.rep(m->index));
  }
}
