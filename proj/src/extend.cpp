#include "sdsearch/extend.hpp"

#include <algorithm>
#include <unordered_set>

#include "sdsearch/errors.hpp"

namespace sdsearch {

BinaryCode build_E(const BinaryCode& d_tilde, const Permutation& sigma, int order) {
  if (sigma.degree() != d_tilde.length()) throw InputError("build_E: degree mismatch");
  if (sigma.order() != order) throw InputError("build_E: sigma has order " + std::to_string(sigma.order()));
  std::vector<BitVec> rows;
  Permutation s(sigma.degree());
  for (int i = 0; i < order; ++i, s = s * sigma) {
    for (const auto& r : d_tilde.rows()) rows.push_back(s.apply(r));
  }
  return BinaryCode(d_tilde.length(), rows);
}

BinaryCode invariant_subcode(const BinaryCode& code, const Permutation& p) {
  std::vector<BitVec> images;
  for (const auto& r : code.rows()) images.push_back(r ^ p.apply(r));
  std::vector<BitVec> gens;
  for (const auto& x : kernel(images)) gens.push_back(combine(code.rows(), x));
  return BinaryCode(code.length(), gens);
}

QuotientSpace::QuotientSpace(const BinaryCode& e) : base_(e), ambient_(dual(e)) {
  if (!e.is_subcode_of(ambient_)) throw InputError("quotient: code is not self-orthogonal");
  for (const auto& r : ambient_.rows()) {
    const BitVec v = base_.reduce(r);
    if (v.none()) continue;
    if (tracker_.insert(v, BitVec::unit(basis_.size()))) basis_.push_back(v);
  }
  const std::size_t d = basis_.size();
  form_.dim = d;
  form_.gram.assign(d, BitVec{});
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) form_.gram[i].assign(j, dot(basis_[i], basis_[j]));
  }
  if (e.contains(BitVec::ones(e.length())) && is_doubly_even(e) && d > 0) {
    form_.quad.assign(d, BitVec{});
    for (std::size_t i = 0; i < d; ++i) {
      form_.quad[i].assign(i, (basis_[i].popcount() / 2) % 2);
      for (std::size_t j = i + 1; j < d; ++j) form_.quad[i].assign(j, dot(basis_[i], basis_[j]));
    }
  }
}

BinaryCode QuotientSpace::lift_code(const std::vector<BitVec>& xs) const {
  std::vector<BitVec> rows = base_.rows();
  for (const auto& x : xs) rows.push_back(lift(x));
  return BinaryCode(base_.length(), rows);
}

BitVec QuotientSpace::coordinates(const BitVec& v) const {
  if (!ambient_.contains(v)) throw InputError("quotient: vector not in E^perp");
  const auto red = tracker_.reduce(base_.reduce(v));
  if (red.remainder.any()) throw InvariantError("quotient: coset basis incomplete");
  return red.combination;
}

Gf2Matrix QuotientSpace::action(const Permutation& p) const {
  if (!is_automorphism(base_, p)) throw InputError("quotient: permutation does not preserve E");
  Gf2Matrix m;
  m.rows_count = m.cols_count = dim();
  for (const auto& r : basis_) m.rows.push_back(coordinates(p.apply(r)));
  return m;
}

F2Form restrict_form(const F2Form& form, const std::vector<BitVec>& basis) {
  F2Form out;
  const std::size_t s = basis.size();
  out.dim = s;
  out.gram.assign(s, BitVec{});
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) out.gram[i].assign(j, form.b(basis[i], basis[j]));
  }
  if (form.has_quad() && s > 0) {
    out.quad.assign(s, BitVec{});
    for (std::size_t i = 0; i < s; ++i) {
      out.quad[i].assign(i, form.q(basis[i]));
      for (std::size_t j = i + 1; j < s; ++j) out.quad[i].assign(j, form.b(basis[i], basis[j]));
    }
  }
  return out;
}

SigmaSplit sigma_split(const F2Form& form, const Gf2Matrix& action) {
  const Gf2Matrix id = Gf2Matrix::identity(action.rows_count);
  const Gf2Matrix a2 = action * action;
  if (!(a2 * action).is_identity()) throw InputError("sigma_split: action does not have order dividing 3");
  SigmaSplit out;
  out.fixed = kernel((action + id).rows);
  out.moving = rref((a2 + action).rows);
  if (out.fixed.size() + out.moving.size() != action.rows_count) {
    throw InvariantError("sigma_split: dimensions do not add up");
  }
  for (const auto& u : out.fixed) {
    for (const auto& w : out.moving) {
      if (form.b(u, w)) throw InvariantError("sigma_split: parts are not orthogonal");
    }
  }
  return out;
}

namespace {

// omega^k * x for the structure given by the action.
BitVec scale(const BitVec& u, F4 c, const Gf2Matrix& a) {
  if (c == F4::zero()) return BitVec{};
  if (c == F4::one()) return u;
  const BitVec ua = a.apply(u);
  return c == F4::omega() ? ua : a.apply(ua);
}

// Kernel over GF(4) of a dense matrix with `cols` columns.
std::vector<std::vector<F4>> f4_kernel(std::vector<std::vector<F4>> m, std::size_t cols) {
  std::vector<int> pivot_of_col(cols, -1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == F4::zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const F4 inv = m[r][c].inverse();
    for (auto& x : m[r]) x = x * inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == F4::zero()) continue;
      const F4 f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = m[i][j] + f * m[r][j];
    }
    pivot_of_col[c] = static_cast<int>(r);
    ++r;
  }
  std::vector<std::vector<F4>> out;
  for (std::size_t c = 0; c < cols; ++c) {
    if (pivot_of_col[c] >= 0) continue;
    std::vector<F4> v(cols, F4::zero());
    v[c] = F4::one();
    for (std::size_t c2 = 0; c2 < cols; ++c2) {
      if (pivot_of_col[c2] >= 0) v[c2] = m[static_cast<std::size_t>(pivot_of_col[c2])][c];
    }
    out.push_back(std::move(v));
  }
  return out;
}

// Calls f for every GF(4)-combination of the basis vectors.
template <class F>
void for_each_f4_combination(const std::vector<std::vector<F4>>& basis, std::size_t len, F&& f) {
  std::vector<F4> acc(len, F4::zero());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == basis.size()) {
      f(acc);
      return;
    }
    for (std::uint8_t c = 0; c < 4; ++c) {
      const F4 s(c);
      for (std::size_t j = 0; j < len; ++j) acc[j] = acc[j] + s * basis[i][j];
      rec(i + 1);
      for (std::size_t j = 0; j < len; ++j) acc[j] = acc[j] + s * basis[i][j];
    }
  };
  rec(0);
}

int f4_weight(const std::vector<F4>& v) {
  return static_cast<int>(std::count_if(v.begin(), v.end(), [](F4 x) { return x != F4::zero(); }));
}

// Orthonormal basis (H(b_i, b_j) = delta_ij) of a nondegenerate Hermitian
// space, as coordinate vectors over the space's basis.
std::vector<std::vector<F4>> orthonormal_basis(const HermitianSpace& s) {
  const std::size_t m = s.dim_f4;
  std::vector<std::vector<F4>> pool;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<F4> e(m, F4::zero());
    e[i] = F4::one();
    pool.push_back(std::move(e));
  }
  std::vector<std::vector<F4>> out;
  while (!pool.empty()) {
    std::size_t pick = pool.size();
    for (std::size_t i = 0; i < pool.size() && pick == pool.size(); ++i) {
      if (s.h(pool[i], pool[i]) != F4::zero()) pick = i;
    }
    if (pick == pool.size()) {
      // All remaining vectors isotropic: x + l*y has H = trace(conj(l) H(x,y)).
      for (std::size_t i = 0; i < pool.size() && pick == pool.size(); ++i) {
        for (std::size_t j = 0; j < pool.size() && pick == pool.size(); ++j) {
          const F4 a = s.h(pool[i], pool[j]);
          if (i == j || a == F4::zero()) continue;
          for (std::uint8_t c = 1; c < 4; ++c) {
            const F4 l(c);
            if ((l.conj() * a).trace()) {
              for (std::size_t t = 0; t < m; ++t) pool[i][t] = pool[i][t] + l * pool[j][t];
              pick = i;
              break;
            }
          }
        }
      }
      if (pick == pool.size()) throw InputError("hermitian space is degenerate");
    }
    std::vector<F4> u = pool[pick];
    pool.erase(pool.begin() + static_cast<long>(pick));
    for (auto& y : pool) {
      const F4 c = s.h(y, u);
      for (std::size_t t = 0; t < m; ++t) y[t] = y[t] + c * u[t];
    }
    out.push_back(std::move(u));
  }
  return out;
}

std::vector<F4> to_space_coords(const std::vector<std::vector<F4>>& onb, const std::vector<F4>& std_coords) {
  std::vector<F4> out(onb.size(), F4::zero());
  for (std::size_t k = 0; k < onb.size(); ++k) {
    if (std_coords[k] == F4::zero()) continue;
    for (std::size_t t = 0; t < out.size(); ++t) out[t] = out[t] + std_coords[k] * onb[k][t];
  }
  return out;
}

}  // namespace

BitVec HermitianSpace::to_f2(const std::vector<F4>& coords) const {
  BitVec v;
  for (std::size_t i = 0; i < coords.size(); ++i) v ^= scale(basis[i], coords[i], action);
  return v;
}

F4 HermitianSpace::h(const std::vector<F4>& x, const std::vector<F4>& y) const {
  F4 s = F4::zero();
  for (std::size_t i = 0; i < dim_f4; ++i) {
    if (x[i] == F4::zero()) continue;
    for (std::size_t j = 0; j < dim_f4; ++j) {
      if (y[j] != F4::zero()) s = s + x[i] * gram[i][j] * y[j].conj();
    }
  }
  return s;
}

HermitianSpace hermitian_structure(const F2Form& form, const std::vector<BitVec>& w, const Gf2Matrix& action) {
  HermitianSpace s;
  s.action = action;
  for (const auto& u : w) {
    const BitVec ua = action.apply(u);
    if ((action.apply(ua) ^ ua ^ u).any()) {
      throw InputError("hermitian_structure: action does not have minimal polynomial x^2 + x + 1");
    }
  }
  Echelon span;
  for (const auto& u : w) {
    if (span.contains(u)) continue;
    span.insert(u);
    span.insert(action.apply(u));
    s.basis.push_back(u);
  }
  if (span.rank() != rref(w).size()) throw InvariantError("hermitian_structure: W is not action-invariant");
  s.dim_f4 = s.basis.size();
  auto hform = [&](const BitVec& u, const BitVec& v) {
    const BitVec va = action.apply(v);
    F4 r = form.b(u, v) ? F4::one() : F4::zero();
    if (form.b(u, va)) r = r + F4::omega();
    if (form.b(u, action.apply(va))) r = r + F4::omega_bar();
    return r;
  };
  const std::size_t m = s.dim_f4;
  s.gram.assign(m, std::vector<F4>(m, F4::zero()));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) s.gram[i][j] = hform(s.basis[i], s.basis[j]);
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (s.gram[i][i].hi()) throw InvariantError("hermitian_structure: H(u,u) not in GF(2)");
    for (std::size_t j = 0; j < m; ++j) {
      if (s.gram[j][i] != s.gram[i][j].conj()) throw InvariantError("hermitian_structure: not conjugate-symmetric");
      if (hform(action.apply(s.basis[i]), s.basis[j]) != F4::omega() * s.gram[i][j]) {
        throw InvariantError("hermitian_structure: not linear in the first argument");
      }
    }
  }
  if (m > 0 && f4_kernel(s.gram, m).size() != 0) throw InputError("hermitian_structure: form is degenerate");
  return s;
}

std::uint64_t max_isotropic_count_formula(std::size_t m) {
  std::uint64_t p = 1;
  for (std::size_t i = 1; i <= m; ++i) p *= (std::uint64_t{1} << (2 * i - 1)) + 1;
  return p;
}

std::uint64_t isotropic_point_count_formula(std::size_t n) {
  const long long sn = (n % 2) ? -1 : 1;
  const long long a = (1LL << n) - sn;
  const long long b = (1LL << (n - 1)) + sn;
  return static_cast<std::uint64_t>(a * b / 3);
}

void enumerate_max_isotropic_standard(std::size_t n,
                                      const std::function<bool(const std::vector<std::vector<F4>>&)>& visit,
                                      Shard shard) {
  if (n % 2) throw InputError("enumerate_max_isotropic: odd dimension");
  const std::size_t m = n / 2;
  std::vector<std::vector<F4>> rows;
  std::vector<bool> is_pivot(n, false);
  std::uint64_t top_branch = 0;
  std::uint64_t visited = 0;
  bool stop = false;
  std::function<void(std::size_t)> rec = [&](std::size_t upper) {
    if (rows.size() == m) {
      if (++visited > budget::limit()) throw BudgetError("max isotropic enumeration over budget");
      if (!visit(rows)) stop = true;
      return;
    }
    const std::size_t remaining = m - rows.size();
    for (std::size_t p = upper; p-- > remaining - 1 && !stop;) {
      std::vector<std::size_t> free;
      for (std::size_t c = p + 1; c < n; ++c) {
        if (!is_pivot[c]) free.push_back(c);
      }
      // Orthogonality to every chosen row: sum_c x_c conj(r_c) = 0.
      std::vector<std::vector<F4>> eqs;
      for (const auto& r : rows) {
        std::vector<F4> e(free.size());
        for (std::size_t i = 0; i < free.size(); ++i) e[i] = r[free[i]].conj();
        eqs.push_back(std::move(e));
      }
      const auto ker = f4_kernel(eqs, free.size());
      for_each_f4_combination(ker, free.size(), [&](const std::vector<F4>& x) {
        if (stop) return;
        // h(v, v) = number of nonzero entries mod 2, the pivot included.
        if ((f4_weight(x) + 1) % 2) return;
        if (rows.empty() && !shard.owns(top_branch++)) return;
        std::vector<F4> v(n, F4::zero());
        v[p] = F4::one();
        for (std::size_t i = 0; i < free.size(); ++i) v[free[i]] = x[i];
        rows.push_back(std::move(v));
        is_pivot[p] = true;
        rec(p);
        is_pivot[p] = false;
        rows.pop_back();
      });
    }
  };
  if (m == 0) {
    if (shard.owns(0)) visit(rows);
    return;
  }
  rec(n);
}

std::uint64_t count_max_isotropic(std::size_t m, Shard shard) {
  std::uint64_t c = 0;
  enumerate_max_isotropic_standard(2 * m, [&](const auto&) {
    ++c;
    return true;
  }, shard);
  return c;
}

void enumerate_max_isotropic(const HermitianSpace& space,
                             const std::function<bool(const std::vector<BitVec>&)>& visit, Shard shard) {
  const auto onb = orthonormal_basis(space);
  enumerate_max_isotropic_standard(space.dim_f4, [&](const std::vector<std::vector<F4>>& rows) {
    std::vector<BitVec> out;
    for (const auto& r : rows) {
      const BitVec u = space.to_f2(to_space_coords(onb, r));
      out.push_back(u);
      out.push_back(space.action.apply(u));
    }
    return visit(out);
  }, shard);
}

void isotropic_points(const HermitianSpace& space, const std::function<bool(const std::vector<BitVec>&)>& visit,
                      Shard shard) {
  const auto onb = orthonormal_basis(space);
  const std::size_t n = space.dim_f4;
  std::uint64_t index = 0;
  for (std::size_t p = 0; p < n; ++p) {
    std::vector<std::vector<F4>> units;
    for (std::size_t c = p + 1; c < n; ++c) {
      std::vector<F4> e(n - p - 1, F4::zero());
      e[c - p - 1] = F4::one();
      units.push_back(std::move(e));
    }
    bool stop = false;
    for_each_f4_combination(units, n - p - 1, [&](const std::vector<F4>& tail) {
      if (stop || (f4_weight(tail) + 1) % 2) return;
      if (!shard.owns(index++)) return;
      std::vector<F4> v(n, F4::zero());
      v[p] = F4::one();
      std::copy(tail.begin(), tail.end(), v.begin() + static_cast<long>(p) + 1);
      const BitVec u = space.to_f2(to_space_coords(onb, v));
      if (!visit({u, space.action.apply(u)})) stop = true;
    });
    if (stop) return;
  }
}

std::vector<LiftVerdict> selfdual_submodules(const QuotientSpace& v, const std::vector<BitVec>& basis,
                                             const std::vector<Gf2Matrix>& actions, int threshold) {
  std::vector<LiftVerdict> out;
  if (basis.size() % 2) return out;
  const F2Form sub = restrict_form(v.form(), basis);
  enumerate_isotropic(sub, basis.size() / 2, [&](const std::vector<BitVec>& rows) {
    std::vector<BitVec> xs;
    for (const auto& r : rows) xs.push_back(combine(basis, r));
    Echelon span;
    for (const auto& x : xs) span.insert(x);
    for (const auto& a : actions) {
      for (const auto& x : xs) {
        if (!span.contains(a.apply(x))) return true;
      }
    }
    LiftVerdict lv;
    lv.subspace = xs;
    lv.code = v.lift_code(xs);
    lv.doubly_even = is_doubly_even(lv.code);
    lv.self_dual = is_self_dual(lv.code);
    lv.meets_threshold = has_min_distance_at_least(lv.code, threshold);
    out.push_back(std::move(lv));
    return true;
  });
  return out;
}

BitVec norm_map(const BitVec& v, const Permutation& k) {
  BitVec acc = v, x = v;
  for (int i = 1; i < 4; ++i) {
    x = k.apply(x);
    acc ^= x;
  }
  return acc;
}

ModuleStructure socle(const BinaryCode& code, const Permutation& k) {
  if (k.order() != 4) throw InputError("socle: k must have order 4");
  if (!is_automorphism(code, k)) throw InputError("socle: k is not an automorphism");
  ModuleStructure m{code, k, BinaryCode(code.length()), std::nullopt};
  std::vector<BitVec> imgs;
  for (const auto& r : code.rows()) imgs.push_back(norm_map(r, k));
  m.socle = BinaryCode(code.length(), imgs);
  if (code.dimension() == 4 * m.socle.dimension()) m.free_rank = m.socle.dimension();
  return m;
}

bool D8Search::killed() const {
  return std::any_of(w_sizes.begin(), w_sizes.end(), [](std::uint64_t s) { return s == 0; });
}

D8Search d8_overcode_search(const BinaryCode& e, const Permutation& k, int threshold) {
  if (k.order() != 4 || !is_automorphism(e, k)) throw InputError("d8 search: k must be an order-4 automorphism of E");
  D8Search out;
  out.e = e;
  const BinaryCode ambient = dual(e);
  if (!e.is_subcode_of(ambient)) throw InputError("d8 search: E is not self-orthogonal");
  out.socle_basis = invariant_subcode(e, k).rows();

  // Coset representatives of E in E^perp.
  std::vector<BitVec> reps;
  Echelon seen;
  for (const auto& r : e.rows()) seen.insert(r);
  for (const auto& r : ambient.rows()) {
    if (seen.insert(r)) reps.push_back(r);
  }
  std::vector<BitVec> norm_rows;
  for (const auto& r : e.rows()) norm_rows.push_back(norm_map(r, k));
  const BinaryCode e_norm(e.length(), norm_rows);
  std::vector<BitVec> images;
  for (const auto& r : reps) images.push_back(e_norm.reduce(norm_map(r, k)));
  const auto ker = kernel(images);
  budget::require(ker.size() >= 63 ? ~std::uint64_t{0} : std::uint64_t{1} << ker.size(), "d8 search: coset solutions");

  for (const auto& b : out.socle_basis) {
    std::uint64_t count = 0;
    std::vector<BitVec> wit;
    const auto x0 = solve(images, e_norm.reduce(b));
    if (x0) {
      const std::uint64_t total = std::uint64_t{1} << ker.size();
      for (std::uint64_t mask = 0; mask < total; ++mask) {
        BitVec x = *x0;
        for (std::size_t i = 0; i < ker.size(); ++i) {
          if ((mask >> i) & 1U) x ^= ker[i];
        }
        const BitVec w = combine(reps, x);
        std::vector<BitVec> rows = e.rows();
        BitVec y = w;
        for (int t = 0; t < 4; ++t, y = k.apply(y)) rows.push_back(y);
        if (has_min_distance_at_least(BinaryCode(e.length(), rows), threshold)) {
          ++count;
          wit.push_back(w);
        }
      }
    }
    out.w_sizes.push_back(count);
    out.witnesses.push_back(std::move(wit));
  }
  return out;
}

A4Search a4_overcode_search(const BinaryCode& e, const HConfig& config, int threshold, Shard shard) {
  A4Search out;
  out.e = e;
  if (config.degree != e.length()) throw InputError("a4 search: configuration degree differs from the code length");
  const QuotientSpace v(e);
  out.dim_v = v.dim();
  if (!v.form().has_quad()) throw InputError("a4 search: the all-ones word must lie in E");
  if (!v.action(config.g).is_identity() || !v.action(config.h).is_identity()) {
    throw InvariantError("a4 search: g or h acts nontrivially on E^perp/E");
  }
  const Gf2Matrix a = v.action(config.sigma);
  const SigmaSplit split = sigma_split(v.form(), a);
  out.dim_fixed = split.fixed.size();
  out.dim_moving = split.moving.size();

  std::unordered_set<BinaryCode> found;
  for (auto& sub : selfdual_submodules(v, split.fixed, {a}, threshold)) {
    A4Branch br;
    br.submodule = sub;
    if (!sub.doubly_even || !sub.meets_threshold) {
      out.branches.push_back(std::move(br));
      continue;
    }
    const QuotientSpace v3(sub.code);
    const Gf2Matrix a3 = v3.action(config.sigma);
    std::vector<BitVec> all;
    for (std::size_t i = 0; i < v3.dim(); ++i) all.push_back(BitVec::unit(i));
    const HermitianSpace hs = hermitian_structure(v3.form(), all, a3);
    br.f4_dim = hs.dim_f4;
    if (hs.dim_f4 == 0) {
      if (shard.owns(0)) found.insert(sub.code);
      out.branches.push_back(std::move(br));
      continue;
    }
    isotropic_points(hs, [&](const std::vector<BitVec>& pt) {
      ++br.points;
      const BinaryCode e_bar = v3.lift_code(pt);
      if (!has_min_distance_at_least(e_bar, threshold)) return true;
      ++br.points_kept;
      const QuotientSpace v4(e_bar);
      std::vector<BitVec> all4;
      for (std::size_t i = 0; i < v4.dim(); ++i) all4.push_back(BitVec::unit(i));
      const HermitianSpace h4 = hermitian_structure(v4.form(), all4, v4.action(config.sigma));
      auto take = [&](const std::vector<BitVec>& u) {
        ++br.subspaces;
        BinaryCode c = v4.lift_code(u);
        if (has_min_distance_at_least(c, threshold)) found.insert(std::move(c));
        return true;
      };
      if (h4.dim_f4 == 0) {
        take({});
      } else {
        enumerate_max_isotropic(h4, take);
      }
      return true;
    }, shard);
    out.branches.push_back(std::move(br));
  }
  out.found.assign(found.begin(), found.end());
  std::sort(out.found.begin(), out.found.end(), [](const BinaryCode& x, const BinaryCode& y) {
    return x.rows() < y.rows();
  });
  for (const auto& c : out.found) {
    if (!is_self_dual(c) || !is_doubly_even(c)) throw InvariantError("a4 search: lifted code is not doubly-even self-dual");
  }
  return out;
}

}  // namespace sdsearch
