#include "sdsearch/additive.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "sdsearch/errors.hpp"

namespace sdsearch {

void for_each_additive_selfdual(std::size_t n, const std::function<bool(const AdditiveF4Code&)>& f,
                                Shard shard) {
  enumerate_isotropic(
      F2Form::trace_hermitian(n), n,
      [&](const std::vector<BitVec>& rows) { return f(AdditiveF4Code(n, BinaryCode(2 * n, rows))); },
      shard);
}

std::uint64_t monomial_group_order(std::size_t n, bool with_conjugation) {
  std::uint64_t o = 1;
  for (std::size_t i = 1; i <= n; ++i) o *= i * (with_conjugation ? 6 : 3);
  return o;
}

void for_each_monomial(std::size_t n, bool with_conjugation,
                       const std::function<bool(const MonomialMap&)>& f) {
  budget::require(monomial_group_order(n, with_conjugation), "monomial group enumeration");
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  const std::uint64_t scalar_count = [&] {
    std::uint64_t s = 1;
    for (std::size_t i = 0; i < n; ++i) s *= 3;
    return s;
  }();
  const std::uint64_t conj_count = with_conjugation ? (std::uint64_t{1} << n) : 1;
  MonomialMap m = MonomialMap::identity(n);
  do {
    m.perm = Permutation::from_images(img);
    for (std::uint64_t s = 0; s < scalar_count; ++s) {
      std::uint64_t code = s;
      for (std::size_t i = 0; i < n; ++i) {
        m.scalars[i] = F4(static_cast<std::uint8_t>(1 + code % 3));
        code /= 3;
      }
      for (std::uint64_t c = 0; c < conj_count; ++c) {
        for (std::size_t i = 0; i < n; ++i) m.conj[i] = (c >> i) & 1U;
        if (!f(m)) return;
      }
    }
  } while (std::next_permutation(img.begin(), img.end()));
}

std::vector<MonomialMap> monomial_generators(std::size_t n, bool with_conjugation) {
  std::vector<MonomialMap> gens;
  if (n >= 2) {
    auto t = MonomialMap::identity(n);
    t.perm = Permutation::from_cycles(n, {{1, 2}});
    gens.push_back(t);
  }
  if (n >= 3) {
    auto c = MonomialMap::identity(n);
    std::vector<int> cyc(n);
    std::iota(cyc.begin(), cyc.end(), 1);
    c.perm = Permutation::from_cycles(n, {cyc});
    gens.push_back(c);
  }
  auto w = MonomialMap::identity(n);
  w.scalars[0] = F4::omega();
  gens.push_back(w);
  if (with_conjugation) {
    auto k = MonomialMap::identity(n);
    k.conj[0] = true;
    gens.push_back(k);
  }
  return gens;
}

std::uint64_t AdditiveClassification::mass() const {
  std::uint64_t s = 0;
  for (const auto& c : classes) s += group_order / c.stabilizer_order;
  return s;
}

AdditiveClassification classify_small_additive_selfdual(std::size_t n, bool with_conjugation) {
  if (n == 0 || n > 5) throw InputError("additive classification is limited to 1 <= n <= 5");
  AdditiveClassification out;
  out.length = n;
  out.with_conjugation = with_conjugation;
  out.group_order = monomial_group_order(n, with_conjugation);

  std::vector<AdditiveF4Code> all;
  for_each_additive_selfdual(n, [&](const AdditiveF4Code& x) {
    all.push_back(x);
    return true;
  });
  out.total = all.size();

  const auto gens = monomial_generators(n, with_conjugation);
  std::unordered_set<AdditiveF4Code> seen;
  auto rows_less = [](const AdditiveF4Code& a, const AdditiveF4Code& b) {
    return a.packed().rows() < b.packed().rows();
  };
  for (const auto& start : all) {
    if (seen.count(start)) continue;
    std::vector<AdditiveF4Code> orbit{start};
    seen.insert(start);
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (const auto& g : gens) {
        auto y = apply(orbit[k], g);
        if (seen.insert(y).second) orbit.push_back(std::move(y));
      }
    }
    AdditiveClass cls;
    cls.representative = *std::min_element(orbit.begin(), orbit.end(), rows_less);
    cls.orbit_size = orbit.size();
    const auto rep_rows = cls.representative.rows();
    for_each_monomial(n, with_conjugation, [&](const MonomialMap& m) {
      for (const auto& r : rep_rows) {
        if (!cls.representative.contains(m.apply(r))) return true;
      }
      ++cls.stabilizer_order;
      return true;
    });
    cls.min_distance = min_distance(cls.representative);
    out.classes.push_back(std::move(cls));
  }
  std::sort(out.classes.begin(), out.classes.end(), [&](const auto& a, const auto& b) {
    return rows_less(a.representative, b.representative);
  });
  return out;
}

int min_distance_capped(const LinearF4Code& code, int cap) {
  if (code.dimension() == 0) throw InputError("min_distance: no nonzero codewords");
  int best = cap;
  const auto& rows = code.rows();
  // Same enumeration as min_distance, bounded by the cap.
  std::function<void(std::size_t, std::size_t, bool, const F4Vec&)> rec =
      [&](std::size_t start, std::size_t t, bool lead, const F4Vec& acc) {
        if (t == 0) {
          best = std::min(best, acc.weight());
          return;
        }
        for (std::size_t i = start; i + t <= rows.size(); ++i) {
          for (std::uint8_t c = 1; c <= (lead ? 1 : 3); ++c) {
            rec(i + 1, t - 1, false, acc + rows[i].scaled(F4(c)));
          }
        }
      };
  for (std::size_t t = 1; t <= rows.size() && static_cast<int>(t) < best; ++t) rec(0, t, true, F4Vec{});
  return best;
}

S3Record s3_check(std::size_t index, const AdditiveF4Code& x, int min_dx, int cap) {
  S3Record r;
  r.index = index;
  r.dimension = x.dimension();
  if (!is_trace_hermitian_self_dual(x)) {
    r.status = "not-self-dual";
    return r;
  }
  const int dx = min_distance(x);
  if (dx < min_dx) {
    r.status = "low-distance";
    r.detail = "d(X)=" + std::to_string(dx);
    return r;
  }
  const auto e = phi_lift(x);
  if (!is_hermitian_self_dual(e)) throw InvariantError("phi(X) is not Hermitian self-dual");
  r.d_phi = min_distance_capped(e, cap);
  r.status = r.d_phi >= cap ? "contradiction" : "ok";
  return r;
}

void S3Report::add(const S3Record& r) {
  records.push_back(r);
  if (r.d_phi >= 0) {
    ++histogram[r.d_phi];
    max_d_phi = std::max(max_d_phi, r.d_phi);
    if (r.status == "contradiction") ++contradictions;
  } else {
    ++rejected;
  }
}

std::string S3Report::to_text() const {
  std::ostringstream os;
  for (const auto& r : records) {
    os << r.index << ' ' << r.dimension << ' ' << r.d_phi << ' ' << r.status;
    if (!r.detail.empty()) os << ' ' << r.detail;
    os << '\n';
  }
  os << "# histogram d_phi count\n";
  for (const auto& [d, c] : histogram) os << "# " << d << ' ' << c << '\n';
  os << "# records " << records.size() << " rejected " << rejected << " max_d_phi " << max_d_phi
     << " contradictions " << contradictions << '\n';
  return os.str();
}

}  // namespace sdsearch
