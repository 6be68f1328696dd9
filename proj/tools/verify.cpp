#include <functional>
#include <random>
#include <unordered_set>

#include "cli_common.hpp"
#include "sdsearch/additive.hpp"
#include "sdsearch/constructions.hpp"
#include "sdsearch/decomp.hpp"
#include "sdsearch/equiv.hpp"
#include "sdsearch/errors.hpp"
#include "sdsearch/extend.hpp"

namespace cli {

using namespace sdsearch;

namespace {

class Suite {
 public:
  explicit Suite(std::string name) : name_(std::move(name)) {}

  void check(const std::string& what, bool ok, json detail = json::object()) {
    ++total_;
    passed_ += ok;
    detail["suite"] = name_;
    detail["check"] = what;
    detail["pass"] = ok;
    emit(detail);
  }

  int finish() const {
    emit({{"summary", "verify"}, {"suite", name_}, {"passed", passed_}, {"total", total_}});
    footer("verify " + name_ + ": " + std::to_string(passed_) + "/" + std::to_string(total_) + " checks passed, " +
           std::to_string(clock_.seconds()) + " s");
    return passed_ == total_ ? kDone : kInvariant;
  }

 private:
  std::string name_;
  int total_ = 0;
  int passed_ = 0;
  Stopwatch clock_;
};

Permutation three_cycles(std::size_t n) {
  std::vector<std::vector<int>> cyc;
  for (int a = 1; a + 2 <= static_cast<int>(n); a += 3) cyc.push_back({a, a + 1, a + 2});
  return Permutation::from_cycles(n, cyc);
}

std::vector<Permutation> elements(std::size_t degree, const std::vector<Permutation>& gens) {
  std::vector<Permutation> out;
  PermGroup(degree, gens).for_each_element([&](const Permutation& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

int suite_core() {
  Suite s("core");
  std::mt19937_64 rng(1);
  bool dual_ok = true;
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 8 + rng() % 40;
    const BinaryCode c = random_code(n, 1 + rng() % n, rng);
    const BinaryCode d = dual(c);
    dual_ok = dual_ok && c.dimension() + d.dimension() == n && dual(d) == c;
    for (const auto& r : c.rows()) {
      for (const auto& x : d.rows()) dual_ok = dual_ok && dot(r, x) == 0;
    }
  }
  s.check("dual dimension and involution on random codes", dual_ok);

  const BinaryCode g24 = extended_golay24();
  const auto wp = weight_profile(g24);
  s.check("Golay code is doubly-even self-dual with d = 8",
          is_self_dual(g24) && is_doubly_even(g24) && wp.min_nonzero == 8 && min_distance(g24).distance == 8,
          {{"weights", wp.counts}});

  bool sym_ok = true;
  std::uint64_t fact = 1;
  for (std::size_t n = 1; n <= 9; ++n) {
    fact *= n;
    sym_ok = sym_ok && PermGroup::symmetric(n).order() == fact;
  }
  s.check("|S_n| = n! from stabilizer chains", sym_ok);

  const AutGroup a8 = automorphism_group(extended_hamming8());
  s.check("|Aut(e8)| = 1344", a8.group.order() == 1344);
  const AutGroup a24 = automorphism_group(g24);
  bool members = true;
  for (int t = 0; t < 50; ++t) {
    const Permutation p = a24.group.random_element(rng);
    members = members && is_automorphism(g24, p) && a24.group.contains(p);
  }
  const Permutation outside = Permutation::parse("(1,2)", 24);
  s.check("Aut(Golay) has order 244823040 and consistent membership",
          a24.group.order() == 244823040ULL && members && !a24.group.contains(outside),
          {{"order", a24.group.order()}});

  int split_ok = 0, tried = 0;
  for (std::size_t n : {12, 18, 24}) {
    const Permutation g = three_cycles(n);
    const auto group = elements(n, {g});
    for (int t = 0; t < 10; ++t) {
      const auto c = random_invariant_self_dual(n, group, rng);
      if (!c) continue;
      ++tried;
      const MaschkeSplit m = maschke_split(*c, g);
      split_ok += m.even.dimension() == n / 3 && m.fixed.dimension() + m.even.dimension() == c->dimension() &&
                  sum_codes(m.fixed, m.even) == *c;
    }
  }
  s.check("C = C(g) + E(g) with dim E(g) = c for planted order-3 automorphisms", tried > 0 && split_ok == tried,
          {{"codes", tried}});
  return s.finish();
}

int suite_golay() {
  Suite s("golay");
  const Order3Reduction r = order3_reduction(extended_golay24(), 2024);
  s.check("fixed subcode has dimension 4", r.fixed.dimension() == 4);
  s.check("even subcode has dimension 8", r.even.dimension() == 8);
  bool herm = r.f4.length() == 8 && r.f4.dimension() == 4;
  for (const auto& x : r.f4.rows()) {
    for (const auto& y : r.f4.rows()) herm = herm && hermitian_product(x, y) == F4::zero();
  }
  const int d = min_distance_capped(r.f4, 8);
  s.check("image is a Hermitian self-dual [8,4,4] code", herm && d == 4, {{"d", d}});
  bool action = true;
  for (const auto& v : r.even.rows()) {
    action = action && map_vector_to_F4(r.sigma.apply(v), r.g) == sigma_action_f4(map_vector_to_F4(v, r.g), 8);
  }
  s.check("sigma acts on the image by swap and conjugation", action);
  s.check("projection is a trace-Hermitian self-dual (4, 2^4) code",
          r.additive.length() == 4 && r.additive.dimension() == 4 && is_trace_hermitian_self_dual(r.additive));
  s.check("phi(pi(image)) = image", phi_lift(r.additive) == r.f4);
  return s.finish();
}

int suite_counts() {
  Suite s("counts");
  for (std::size_t m = 1; m <= 3; ++m) {
    const auto c = count_max_isotropic(m);
    s.check("maximal isotropic subspaces of GF(4)^" + std::to_string(2 * m), c == max_isotropic_count_formula(m),
            {{"count", c}, {"formula", max_isotropic_count_formula(m)}});
  }
  s.check("formula values for m = 4, 5",
          max_isotropic_count_formula(4) == 114939 && max_isotropic_count_formula(5) == 58963707);
  for (std::size_t n = 2; n <= 12; n += 2) {
    const auto cls = classify_self_dual(n);
    s.check("self-dual codes of length " + std::to_string(n),
            cls.total == self_dual_count_formula(n) && cls.mass == cls.total,
            {{"total", cls.total}, {"mass", cls.mass}, {"classes", cls.classes.size()}});
  }
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto cls = classify_small_additive_selfdual(n, false);
    s.check("additive self-dual codes of length " + std::to_string(n) + ": mass equals count",
            cls.mass() == cls.total, {{"total", cls.total}, {"classes", cls.classes.size()}});
  }
  return s.finish();
}

int suite_lemma() {
  Suite s("lemma-repr");
  struct Case {
    HKind kind;
    std::size_t blocks;
  };
  for (const Case cs : {Case{HKind::D8, 2}, Case{HKind::A4, 1}, Case{HKind::D8, 3}, Case{HKind::A4, 2}}) {
    const HConfig cfg = make_config(cs.kind, cs.blocks);
    const std::size_t n = cfg.half();
    const WreathData wd = wreath_centralizer(cfg);
    // Every self-dual code of length n in the defining set, sorted into classes.
    std::vector<BinaryCode> in_set;
    ClassIndex classes;
    std::vector<std::size_t> class_of;
    enumerate_isotropic(F2Form::standard(n), n / 2, [&](const std::vector<BitVec>& rows) {
      BinaryCode c(n, rows);
      const auto [ci, fresh] = classes.insert(c);
      (void)fresh;
      if (in_defining_set(c, cfg)) {
        in_set.push_back(std::move(c));
        class_of.push_back(ci);
      }
      return true;
    });
    // G36-orbits by closure under the generators.
    std::unordered_set<BinaryCode> seen;
    std::vector<std::size_t> orbits_per_class(classes.size(), 0);
    for (std::size_t i = 0; i < in_set.size(); ++i) {
      if (seen.count(in_set[i])) continue;
      ++orbits_per_class[class_of[i]];
      std::vector<BinaryCode> stack{in_set[i]};
      seen.insert(in_set[i]);
      while (!stack.empty()) {
        const BinaryCode c = stack.back();
        stack.pop_back();
        for (const auto& g : wd.G36.generators()) {
          BinaryCode d = act_on_code(c, g);
          if (seen.insert(d).second) stack.push_back(std::move(d));
        }
      }
    }
    bool ok = true;
    std::size_t total = 0;
    for (std::size_t ci = 0; ci < classes.size(); ++ci) {
      const OrbitRepSet reps = lemma_repr(classes.rep(ci), cfg);
      ok = ok && reps.reps.size() == orbits_per_class[ci];
      total += reps.reps.size();
    }
    s.check(to_string(cs.kind) + " on " + std::to_string(n) + " points: reps match orbit closure", ok,
            {{"reps", total}, {"classes", classes.size()}});
  }
  return s.finish();
}

int suite_d8() {
  Suite s("d8-socle");
  const HConfig cfg = make_config(HKind::D8, 2);
  const Permutation k = cfg.k();
  const auto kk = elements(cfg.degree, {k});
  std::mt19937_64 rng(31);
  int planted = 0, found = 0;
  for (int trial = 0; trial < 40 && planted < 3; ++trial) {
    const auto c = random_invariant_self_dual(cfg.degree, kk, rng);
    if (!c || !socle(*c, k).free_rank) continue;
    ++planted;
    std::vector<BitVec> et;
    for (const auto& r : c->rows()) et.push_back(r ^ k.apply(r));
    const BinaryCode e(cfg.degree, et);
    const D8Search srch = d8_overcode_search(e, k, min_distance(*c).distance);
    bool all = !srch.killed();
    for (std::size_t j = 0; j < srch.socle_basis.size(); ++j) {
      std::vector<BitVec> images;
      for (const auto& r : c->rows()) images.push_back(norm_map(r, k));
      const auto x = solve(images, srch.socle_basis[j]);
      const BitVec w = x ? combine(c->rows(), *x) : BitVec{};
      all = all && x && std::any_of(srch.witnesses[j].begin(), srch.witnesses[j].end(),
                                    [&](const BitVec& u) { return e.contains(u ^ w); });
    }
    found += all;
  }
  s.check("planted free overcodes appear in every W set", planted == 3 && found == planted,
          {{"planted", planted}, {"found", found}});
  return s.finish();
}

}  // namespace

int cmd_verify(const std::string& suite) {
  if (suite == "core") return suite_core();
  if (suite == "golay") return suite_golay();
  if (suite == "counts") return suite_counts();
  if (suite == "lemma-repr") return suite_lemma();
  if (suite == "d8-socle") return suite_d8();
  throw InputError("unknown suite '" + suite + "' (expected core, golay, counts, lemma-repr or d8-socle)");
}

}  // namespace cli
