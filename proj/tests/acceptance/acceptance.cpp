// Acceptance suite: one PASS/FAIL line per criterion. Expected values are
// either computed here by brute force or pinned below; runtimes are checked
// against the limits listed with each criterion.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "brute.hpp"
#include "sdsearch/additive.hpp"
#include "sdsearch/constructions.hpp"
#include "sdsearch/decomp.hpp"
#include "sdsearch/equiv.hpp"
#include "sdsearch/errors.hpp"
#include "sdsearch/extend.hpp"
#include "sdsearch/io.hpp"

using namespace sdsearch;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
  // Criterion skipped because an input is missing.
  bool conditional = false;
};

int failures = 0;

void run(int id, const std::string& name, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool slow = !o.conditional && s > limit_s;
  const char* tag = o.conditional ? "CONDITIONAL" : (o.pass && !slow ? "PASS" : "FAIL");
  if (!o.conditional && (!o.pass || slow)) ++failures;
  std::printf("%s [%d] %s: %s (%.2f s, limit %.0f s)%s\n", tag, id, name.c_str(), o.detail.c_str(), s, limit_s,
              slow ? " over time limit" : "");
  std::fflush(stdout);
}

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

// All GF(4)-combinations of the rows.
std::vector<F4Vec> f4_words(const LinearF4Code& c) {
  std::vector<F4Vec> words{F4Vec{}};
  for (const auto& r : c.rows()) {
    std::vector<F4Vec> more;
    for (const auto& w : words) {
      for (F4 s : {F4::one(), F4::omega(), F4::omega_bar()}) more.push_back(w + r.scaled(s));
    }
    words.insert(words.end(), more.begin(), more.end());
  }
  return words;
}

// All GF(2)-combinations of the generators.
std::vector<F4Vec> additive_words(const AdditiveF4Code& x) {
  std::vector<F4Vec> words{F4Vec{}};
  for (const auto& r : x.rows()) {
    const std::size_t s = words.size();
    for (std::size_t i = 0; i < s; ++i) words.push_back(words[i] + r);
  }
  return words;
}

// sum_i Tr(x_i conj(y_i)) over GF(2).
bool trace_product(const F4Vec& x, const F4Vec& y, std::size_t n) {
  F4 s;
  for (std::size_t i = 0; i < n; ++i) s = s + x.at(i) * y.at(i).conj();
  return (s + s.conj()).lo();
}

F4 herm(const F4Vec& x, const F4Vec& y, std::size_t n) {
  F4 s;
  for (std::size_t i = 0; i < n; ++i) s = s + x.at(i) * y.at(i).conj();
  return s;
}

Outcome criterion1() {
  std::mt19937_64 rng(101);
  int codes = 0, good = 0;
  for (std::size_t n : {12, 18, 24}) {
    const Permutation g = three_cycles(n);
    const auto group = elements(n, {g});
    for (int made = 0; made < 34;) {
      const auto c = random_invariant_self_dual(n, group, rng);
      if (!c) continue;
      ++made;
      ++codes;
      const MaschkeSplit m = maschke_split(*c, g);
      // Oracle: sort every codeword into fixed (cg = c) and trace-zero
      // (c + cg + cg^2 = 0) by enumeration.
      std::uint64_t fixed = 0, trace_zero = 0, both = 0;
      bool members = true;
      for_each_codeword(*c, [&](const BitVec& v) {
        const BitVec vg = g.apply(v), vg2 = g.apply(vg);
        const bool f = vg == v, t = (v ^ vg ^ vg2).none();
        fixed += f;
        trace_zero += t;
        both += f && t;
        members = members && m.fixed.contains(v) == f && m.even.contains(v) == t;
        return true;
      });
      const std::uint64_t total = std::uint64_t{1} << c->dimension();
      const std::size_t cycles = n / 3;
      good += members && both == 1 && fixed * trace_zero == total && m.even.dimension() == (3 - 1) * cycles / 2 &&
              trace_zero == (std::uint64_t{1} << m.even.dimension());
    }
  }
  return {codes >= 100 && good == codes, std::to_string(good) + "/" + std::to_string(codes) +
                                             " codes split as C(g) + E(g) with dim E(g) = c"};
}

Outcome criterion2() {
  const Order3Reduction r = order3_reduction(extended_golay24(), 2024);
  const auto words = f4_words(r.f4);
  int dmin = 99;
  bool orth = words.size() == 256;
  for (const auto& x : words) {
    if (x.weight() > 0) dmin = std::min(dmin, x.weight());
    for (const auto& y : words) orth = orth && herm(x, y, 8) == F4::zero();
  }
  const bool hex = r.f4.length() == 8 && r.f4.dimension() == 4 && orth && dmin == 4;

  const auto xw = additive_words(r.additive);
  bool self_dual = r.additive.length() == 4 && xw.size() == 16;
  for (const auto& x : xw) {
    for (const auto& y : xw) self_dual = self_dual && !trace_product(x, y, 4);
  }
  const bool round_trip = phi_lift(r.additive) == r.f4;
  return {hex && self_dual && round_trip,
          "[8," + std::to_string(r.f4.dimension()) + "," + std::to_string(dmin) + "] Hermitian " +
              (orth ? "self-dual" : "not self-dual") + ", additive (4, 2^" + std::to_string(r.additive.dimension()) +
              ") " + (self_dual ? "self-dual" : "not self-dual") + ", phi(pi) " + (round_trip ? "= id" : "!= id")};
}

Outcome criterion3() {
  std::mt19937_64 rng(303);
  std::uint64_t codes = 0, good = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    std::uint64_t seen = 0;
    for_each_additive_selfdual(n, [&](const AdditiveF4Code& x) {
      // Every code up to length 4, then every 50th at length 5.
      if (n == 5 && seen++ % 50) return true;
      ++codes;
      const LinearF4Code e = phi_lift(x);
      const auto words = f4_words(e);
      bool herm_sd = e.length() == 2 * n && e.dimension() == n;
      for (const auto& a : e.rows()) {
        for (const auto& b : e.rows()) herm_sd = herm_sd && herm(a, b, 2 * n) == F4::zero();
      }
      MonomialMap m = MonomialMap::identity(n);
      m.perm = random_permutation(n, rng);
      for (std::size_t i = 0; i < n; ++i) {
        m.scalars[i] = F4(static_cast<std::uint8_t>(1 + rng() % 3));
        m.conj[i] = rng() & 1U;
      }
      // Oracle for the image codes: map every word.
      std::vector<F4Vec> mx;
      for (const auto& w : additive_words(x)) mx.push_back(m.apply(w));
      const AdditiveF4Code xm(n, mx);
      const MonomialMap lift = monomial_lift(m);
      std::vector<F4Vec> me;
      for (const auto& w : e.rows()) me.push_back(lift.apply(w));
      const LinearF4Code em(2 * n, me);
      good += herm_sd && pi_project(e) == x && phi_lift(xm) == em && words.size() == (std::size_t{1} << (2 * n));
      return true;
    });
  }
  return {codes >= 1000 && good == codes,
          std::to_string(good) + "/" + std::to_string(codes) + " codes pass phi, pi and monomial checks"};
}

Outcome criterion4() {
  std::string detail;
  bool ok = true;
  for (std::size_t n = 2; n <= 12; n += 2) {
    const auto cls = classify_self_dual(n);
    const std::uint64_t formula = self_dual_count_formula(n);
    bool row = cls.total == formula && cls.mass == cls.total;
    // Second algorithm: unpruned RREF enumeration up to length 10.
    if (n <= 10) row = row && brute::self_dual_rref(n) == cls.total;
    // |Aut| against S_n up to length 8.
    if (n <= 8) {
      for (const auto& c : cls.classes) row = row && brute::aut_order(c.rep) == c.aut_order;
    }
    ok = ok && row;
    detail += "n=" + std::to_string(n) + ":" + std::to_string(cls.total) + "/" +
              std::to_string(cls.classes.size()) + " ";
  }
  detail += "(total/classes)";
  return {ok, detail};
}

Outcome criterion5() {
  const std::vector<std::uint64_t> expected{3, 27, 891};
  bool ok = true;
  std::string detail;
  for (std::size_t m = 1; m <= 3; ++m) {
    const auto brute_count = brute::max_isotropic_rref(2 * m);
    const auto count = count_max_isotropic(m);
    ok = ok && brute_count == expected[m - 1] && count == brute_count;
    detail += std::to_string(count) + " ";
  }
  const auto c4 = count_max_isotropic(4);
  ok = ok && c4 == max_isotropic_count_formula(4);
  ok = ok && max_isotropic_count_formula(4) == 114939 && max_isotropic_count_formula(5) == 58963707;
  detail += "; m=4 enumerated " + std::to_string(c4) + ", formula m=4,5: " +
            std::to_string(max_isotropic_count_formula(4)) + ", " + std::to_string(max_isotropic_count_formula(5));
  return {ok, detail};
}

Outcome criterion6() {
  const WreathData a4 = wreath_centralizer(make_config(HKind::A4));
  const WreathData d8 = wreath_centralizer(make_config(HKind::D8));
  const std::uint64_t index = a4.G36.order() / a4.pi1_G.order();
  const bool exact = a4.G36.order() % a4.pi1_G.order() == 0;
  // Each transversal element lies in G36 and no two share a coset of pi1(G).
  bool cosets = a4.transversal.size() == 64;
  for (std::size_t i = 0; i < a4.transversal.size() && cosets; ++i) {
    cosets = a4.G36.contains(a4.transversal[i]);
    for (std::size_t j = 0; j < i && cosets; ++j) {
      cosets = !a4.pi1_G.contains(a4.transversal[j].inverse() * a4.transversal[i]);
    }
  }
  const bool ok = exact && index == 64 && cosets && d8.transversal.size() == 1 && d8.G36.order() == d8.pi1_G.order();
  return {ok, "A4 index " + std::to_string(index) + ", D8 transversal length " + std::to_string(d8.transversal.size())};
}

Outcome criterion7() {
  struct Case {
    HKind kind;
    std::size_t blocks;
  };
  bool ok = true;
  std::string detail;
  for (const Case cs : {Case{HKind::A4, 1}, Case{HKind::D8, 2}, Case{HKind::D8, 3}, Case{HKind::A4, 2}}) {
    const HConfig cfg = make_config(cs.kind, cs.blocks);
    const std::size_t n = cfg.half();
    const WreathData wd = wreath_centralizer(cfg);
    const auto all = brute::all_self_dual(n);
    std::vector<BinaryCode> dk;
    for (const auto& c : all) {
      if (brute::in_set(c, cfg)) dk.push_back(c);
    }
    int orbit_count = 0;
    const auto ids = brute::orbit_ids(dk, wd.G36.generators(), orbit_count);
    if (ids.size() != dk.size()) return {false, "defining set not closed under G36"};
    ClassIndex classes;
    for (const auto& c : all) classes.insert(c);
    std::set<int> hit;
    std::size_t reps_total = 0;
    for (std::size_t ci = 0; ci < classes.size(); ++ci) {
      const OrbitRepSet reps = lemma_repr(classes.rep(ci), cfg);
      for (const auto& r : reps.reps) {
        ++reps_total;
        const auto it = std::find(dk.begin(), dk.end(), r.code);
        if (it == dk.end()) return {false, "rep outside the defining set"};
        hit.insert(ids[static_cast<std::size_t>(it - dk.begin())]);
      }
    }
    // Complete: every orbit hit. Irredundant: no orbit hit twice.
    const bool row = static_cast<int>(hit.size()) == orbit_count && reps_total == hit.size();
    ok = ok && row;
    detail += to_string(cs.kind) + "/" + std::to_string(n) + ": " + std::to_string(reps_total) + " reps, " +
              std::to_string(orbit_count) + " orbits; ";
  }
  return {ok, detail};
}

Outcome criterion8() {
  const HConfig cfg = make_config(HKind::D8, 2);
  const Permutation k = cfg.k();
  const auto kk = elements(cfg.degree, {k});
  std::mt19937_64 rng(31);

  auto brute_w = [&](const BinaryCode& e, const BitVec& b, int t) {
    const QuotientSpace v(e);
    std::vector<BitVec> tn;
    for (const auto& r : e.rows()) tn.push_back(norm_map(r, k));
    const BinaryCode et(e.length(), tn);
    std::uint64_t count = 0;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << v.dim()); ++m) {
      BitVec x;
      x.words()[0] = m;
      const BitVec w = v.lift(x);
      if (!et.contains(norm_map(w, k) ^ b)) continue;
      std::vector<BitVec> rows = e.rows();
      for (const auto& p : kk) rows.push_back(p.apply(w));
      count += min_distance(BinaryCode(e.length(), rows)).distance >= t;
    }
    return count;
  };
  auto e_of = [&](const BinaryCode& c) {
    std::vector<BitVec> et;
    for (const auto& r : c.rows()) et.push_back(r ^ k.apply(r));
    return BinaryCode(cfg.degree, et);
  };

  int planted = 0, found = 0;
  for (int trial = 0; trial < 40 && planted < 3; ++trial) {
    const auto c = random_invariant_self_dual(cfg.degree, kk, rng);
    if (!c || !socle(*c, k).free_rank) continue;
    ++planted;
    const BinaryCode e = e_of(*c);
    const int d = min_distance(*c).distance;
    const D8Search s = d8_overcode_search(e, k, d);
    bool all = !s.killed();
    for (std::size_t j = 0; j < s.socle_basis.size(); ++j) {
      std::vector<BitVec> images;
      for (const auto& r : c->rows()) images.push_back(norm_map(r, k));
      const auto x = solve(images, s.socle_basis[j]);
      if (!x) {
        all = false;
        continue;
      }
      const BitVec w = combine(c->rows(), *x);
      all = all && s.w_sizes[j] == brute_w(e, s.socle_basis[j], d) &&
            std::any_of(s.witnesses[j].begin(), s.witnesses[j].end(),
                        [&](const BitVec& u) { return e.contains(u ^ w); });
    }
    found += all;
  }

  // Without a plant: the threshold exceeds every invariant self-dual overcode.
  int unplanted = 0, killed = 0;
  for (int trial = 0; trial < 40 && unplanted < 3; ++trial) {
    const auto c = random_invariant_self_dual(cfg.degree, kk, rng);
    if (!c || !socle(*c, k).free_rank) continue;
    ++unplanted;
    const BinaryCode e = e_of(*c);
    const QuotientSpace v(e);
    int best = 0;
    enumerate_isotropic(v.form(), v.dim() / 2, [&](const std::vector<BitVec>& r) {
      const BinaryCode over = v.lift_code(r);
      if (is_automorphism(over, k)) best = std::max(best, min_distance(over).distance);
      return true;
    });
    const D8Search s = d8_overcode_search(e, k, best + 2);
    bool agree = true;
    for (std::size_t j = 0; j < s.socle_basis.size(); ++j) agree = agree && s.w_sizes[j] == brute_w(e, s.socle_basis[j], best + 2);
    killed += agree && s.killed();
  }
  return {planted == 3 && found == 3 && unplanted == 3 && killed == 3,
          std::to_string(found) + "/" + std::to_string(planted) + " plants found in every W set, " +
              std::to_string(killed) + "/" + std::to_string(unplanted) + " unplanted cases with an empty W set"};
}

const char* env(const char* name) {
  const char* v = std::getenv(name);
  return v && *v ? v : nullptr;
}

Outcome criterion9() {
  const char* codes_dir = env("SDSEARCH_LENGTH36_CODES");
  const char* additive = env("SDSEARCH_ADDITIVE_DATASET");
  if (!codes_dir && !additive) {
    return {false,
            "conditional: external dataset (set SDSEARCH_LENGTH36_CODES and SDSEARCH_ADDITIVE_DATASET to run)", true};
  }
  bool ok = true;
  std::string detail;
  if (codes_dir) {
    const HConfig cfg = make_config(HKind::D8);
    std::uint64_t orbits = 0, survivors = 0, classes = 0;
    for (const auto& f : dataset_files(codes_dir)) {
      for (const auto& y : read_code_file(f)) {
        ++classes;
        const OrbitRepSet reps = lemma_repr(y, cfg);
        orbits += reps.reps.size();
        for (const auto& r : reps.reps) {
          const BinaryCode e = build_E(blow_up_code(r.code, 2), cfg.sigma, 2);
          survivors += e.dimension() == 26 && is_doubly_even(e) && has_min_distance_at_least(e, 16);
        }
      }
    }
    ok = ok && classes == 41 && orbits == 9590 && survivors == 4;
    detail += std::to_string(classes) + " codes, " + std::to_string(orbits) + " D8 orbits, " +
              std::to_string(survivors) + " doubly-even [72,26,16] E; ";
  } else {
    detail += "orbit count conditional: external dataset; ";
  }
  if (additive) {
    std::ifstream in(additive);
    AdditiveReader reader(in, additive);
    AdditiveRecord rec;
    std::uint64_t records = 0;
    int max_d = -1;
    while (reader.next(rec)) {
      ++records;
      if (!rec.code) {
        ok = false;
        continue;
      }
      const S3Record r = s3_check(rec.index, *rec.code);
      max_d = std::max(max_d, r.d_phi);
    }
    ok = ok && records == 195520 && max_d == 6;
    detail += std::to_string(records) + " additive records, max d(phi(X)) = " + std::to_string(max_d);
  } else {
    detail += "S3 sweep conditional: external dataset";
  }
  return {ok, detail};
}

}  // namespace

int main() {
  run(1, "Maschke split on planted order-3 automorphisms", 10, criterion1);
  run(2, "Golay to hexacode to additive (4, 2^4)", 5, criterion2);
  run(3, "phi/pi round trip and monomial compatibility", 30, criterion3);
  run(4, "self-dual counts and mass formula", 120, criterion4);
  run(5, "maximal isotropic subspace counts", 60, criterion5);
  run(6, "wreath index and transversal", 10, criterion6);
  run(7, "orbit representatives against brute force", 300, criterion7);
  run(8, "D8 socle method with and without a plant", 60, criterion8);
  run(9, "full-scale counts from external datasets", 900, criterion9);
  std::printf("%s: %d failing criteria\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
