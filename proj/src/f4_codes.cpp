#include "sdsearch/f4_codes.hpp"

#include <algorithm>

#include "sdsearch/errors.hpp"

namespace sdsearch {

namespace {

void check_f4_length(std::size_t n) {
  if (2 * n > BitVec::kBits) throw InputError("GF(4) code length above " + std::to_string(BitVec::kBits / 2));
}

int lowest_coordinate(const F4Vec& v) { return (v.lo | v.hi).lowest(); }

// Combinations of exactly t rows starting at `start`, each with a nonzero
// coefficient; `lead` forces the first chosen coefficient to 1.
template <class Visit>
bool f4_sums(const std::vector<F4Vec>& rows, std::size_t start, std::size_t t, bool lead,
             const F4Vec& acc, Visit& visit) {
  if (t == 0) return visit(acc);
  for (std::size_t i = start; i + t <= rows.size(); ++i) {
    for (std::uint8_t c = 1; c <= (lead ? 1 : 3); ++c) {
      if (!f4_sums(rows, i + 1, t - 1, false, acc + rows[i].scaled(F4(c)), visit)) return false;
    }
  }
  return true;
}

}  // namespace

LinearF4Code::LinearF4Code(std::size_t length) : length_(length) { check_f4_length(length); }

LinearF4Code::LinearF4Code(std::size_t length, std::span<const F4Vec> generators)
    : length_(length) {
  check_f4_length(length);
  const BitVec mask = BitVec::ones(length);
  for (const auto& g : generators) {
    if (((g.lo | g.hi) & ~mask).any()) throw InputError("generator has entries beyond the code length");
    F4Vec v = reduce(g);
    if (v.is_zero()) continue;
    const int p = lowest_coordinate(v);
    v = v.scaled(v.at(static_cast<std::size_t>(p)).inverse());
    for (auto& r : rows_) {
      const F4 c = r.at(static_cast<std::size_t>(p));
      if (!c.is_zero()) r += v.scaled(c);
    }
    rows_.push_back(v);
    pivots_.push_back(p);
  }
  std::vector<std::size_t> order(rows_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return pivots_[a] < pivots_[b]; });
  std::vector<F4Vec> rows;
  std::vector<int> pivots;
  for (auto i : order) {
    rows.push_back(rows_[i]);
    pivots.push_back(pivots_[i]);
  }
  rows_ = std::move(rows);
  pivots_ = std::move(pivots);
}

LinearF4Code LinearF4Code::from_packed(const BinaryCode& packed, std::size_t n) {
  if (packed.length() != 2 * n) throw InputError("packed code has the wrong length");
  std::vector<F4Vec> gens;
  for (const auto& r : packed.rows()) gens.push_back(F4Vec::unpack(r, n));
  LinearF4Code c(n, gens);
  if (2 * c.dimension() != packed.dimension()) throw InputError("code is not GF(4)-linear");
  return c;
}

LinearF4Code LinearF4Code::from_strings(const std::vector<std::string>& rows) {
  if (rows.empty()) throw InputError("from_strings: no rows (length unknown)");
  std::vector<F4Vec> gens;
  for (const auto& r : rows) {
    if (r.size() != rows.front().size()) throw InputError("rows of unequal length");
    gens.push_back(F4Vec::from_string(r));
  }
  return LinearF4Code(rows.front().size(), gens);
}

F4Vec LinearF4Code::reduce(F4Vec v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const F4 c = v.at(static_cast<std::size_t>(pivots_[i]));
    if (!c.is_zero()) v += rows_[i].scaled(c);
  }
  return v;
}

BinaryCode LinearF4Code::packed() const {
  std::vector<BitVec> gens;
  for (const auto& r : rows_) {
    gens.push_back(r.pack(length_));
    gens.push_back(r.scaled(F4::omega()).pack(length_));
  }
  return BinaryCode(2 * length_, gens);
}

AdditiveF4Code::AdditiveF4Code(std::size_t length, std::span<const F4Vec> generators)
    : length_(length) {
  check_f4_length(length);
  std::vector<BitVec> packed;
  for (const auto& g : generators) packed.push_back(g.pack(length));
  packed_ = BinaryCode(2 * length, packed);
}

AdditiveF4Code::AdditiveF4Code(std::size_t length, BinaryCode packed)
    : length_(length), packed_(std::move(packed)) {
  check_f4_length(length);
  if (packed_.length() != 2 * length) throw InputError("packed code has the wrong length");
}

AdditiveF4Code AdditiveF4Code::from_strings(std::size_t length, const std::vector<std::string>& rows) {
  std::vector<F4Vec> gens;
  for (const auto& r : rows) {
    if (r.size() != length) throw InputError("row length differs from the code length");
    gens.push_back(F4Vec::from_string(r));
  }
  return AdditiveF4Code(length, gens);
}

std::vector<F4Vec> AdditiveF4Code::rows() const {
  std::vector<F4Vec> out;
  for (const auto& r : packed_.rows()) out.push_back(F4Vec::unpack(r, length_));
  return out;
}

BitVec swap_halves(const BitVec& v, std::size_t n) {
  return v.shifted_down(n).truncated(n) | v.truncated(n).shifted_up(n);
}

AdditiveF4Code trace_hermitian_dual(const AdditiveF4Code& code) {
  // <x, y> = lo(x).hi(y) + hi(x).lo(y) = x . swap(y) in packed layout.
  const std::size_t n = code.length();
  std::vector<BitVec> rows;
  const BinaryCode d = dual(code.packed());
  for (const auto& r : d.rows()) rows.push_back(swap_halves(r, n));
  return AdditiveF4Code(n, BinaryCode(2 * n, rows));
}

LinearF4Code hermitian_dual(const LinearF4Code& code) {
  // For GF(4)-linear codes the Hermitian and trace-Hermitian duals coincide.
  const AdditiveF4Code a(code.length(), code.packed());
  return LinearF4Code::from_packed(trace_hermitian_dual(a).packed(), code.length());
}

bool is_hermitian_self_dual(const LinearF4Code& code) {
  if (2 * code.dimension() != code.length()) return false;
  for (const auto& x : code.rows()) {
    for (const auto& y : code.rows()) {
      if (!hermitian_product(x, y).is_zero()) return false;
    }
  }
  return true;
}

bool is_trace_hermitian_self_dual(const AdditiveF4Code& code) {
  if (code.dimension() != code.length()) return false;
  const auto rows = code.rows();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      if (trace_hermitian(rows[i], rows[j])) return false;
    }
  }
  return true;
}

DistanceResult min_distance(const LinearF4Code& code, std::optional<int> upper_bound) {
  if (code.dimension() == 0) throw InputError("min_distance: no nonzero codewords");
  int best = static_cast<int>(code.length()) + 1;
  bool hit = false;
  auto visit = [&](const F4Vec& v) {
    best = std::min(best, v.weight());
    if (upper_bound && best <= *upper_bound) {
      hit = true;
      return false;
    }
    return true;
  };
  for (std::size_t t = 1; t <= code.dimension() && static_cast<int>(t) < best; ++t) {
    if (!f4_sums(code.rows(), 0, t, true, F4Vec{}, visit)) break;
  }
  return {best, hit};
}

int min_distance(const AdditiveF4Code& code) {
  if (code.dimension() == 0) throw InputError("min_distance: no nonzero codewords");
  if (static_cast<int>(code.dimension()) > budget::max_enumeration_dimension()) {
    throw BudgetError("additive min_distance: enumeration too large");
  }
  int best = static_cast<int>(code.length()) + 1;
  const std::size_t n = code.length();
  for_each_codeword(code.packed(), [&](const BitVec& v) {
    if (v.any()) best = std::min(best, (v.truncated(n) | v.shifted_down(n)).popcount());
    return true;
  });
  return best;
}

F4Vec interleave_conj(const F4Vec& v, std::size_t m) {
  F4Vec out;
  for (std::size_t i = 0; i < m; ++i) {
    const F4 x = v.at(i);
    out.set(2 * i, x);
    out.set(2 * i + 1, x.conj());
  }
  return out;
}

LinearF4Code phi_lift(const AdditiveF4Code& x) {
  std::vector<F4Vec> gens;
  for (const auto& r : x.rows()) gens.push_back(interleave_conj(r, x.length()));
  return LinearF4Code(2 * x.length(), gens);
}

F4Vec sigma_action_f4(const F4Vec& v, std::size_t length) {
  if (length % 2) throw InputError("sigma action needs even length");
  F4Vec out;
  for (std::size_t i = 0; i < length; i += 2) {
    out.set(i, v.at(i + 1).conj());
    out.set(i + 1, v.at(i).conj());
  }
  return out;
}

AdditiveF4Code pi_project(const LinearF4Code& e) {
  const std::size_t n = e.length();
  if (n % 2) throw InputError("pi_project needs even length");
  for (const auto& r : e.rows()) {
    if (!e.contains(sigma_action_f4(r, n)) || !e.contains(sigma_action_f4(r.scaled(F4::omega()), n))) {
      throw InputError("code is not invariant under the sigma action");
    }
  }
  const std::size_t m = n / 2;
  const BinaryCode packed = e.packed();
  std::vector<BitVec> images;
  std::vector<BitVec> units;
  for (std::size_t i = 0; i < m; ++i) {
    for (F4 s : {F4::one(), F4::omega()}) {
      F4Vec u;
      u.set(i, s);
      units.push_back(u.pack(m));
      images.push_back(packed.reduce(interleave_conj(u, m).pack(n)));
    }
  }
  std::vector<BitVec> gens;
  for (const auto& comb : kernel(images)) gens.push_back(combine(units, comb));
  return AdditiveF4Code(m, BinaryCode(2 * m, gens));
}

MonomialMap MonomialMap::identity(std::size_t n) {
  return {Permutation(n), std::vector<F4>(n, F4::one()), std::vector<bool>(n, false)};
}

bool MonomialMap::has_conjugation() const {
  return std::any_of(conj.begin(), conj.end(), [](bool b) { return b; });
}

F4Vec MonomialMap::apply(const F4Vec& x) const {
  F4Vec y;
  for (std::size_t i = 0; i < degree(); ++i) {
    const F4 v = conj[i] ? x.at(i).conj() : x.at(i);
    y.set(static_cast<std::size_t>(perm[i]), scalars[i] * v);
  }
  return y;
}

MonomialMap MonomialMap::operator*(const MonomialMap& o) const {
  MonomialMap r;
  r.perm = perm * o.perm;
  r.scalars.resize(degree());
  r.conj.resize(degree());
  for (std::size_t i = 0; i < degree(); ++i) {
    const auto j = static_cast<std::size_t>(perm[i]);
    r.scalars[i] = o.scalars[j] * (o.conj[j] ? scalars[i].conj() : scalars[i]);
    r.conj[i] = conj[i] != o.conj[j];
  }
  return r;
}

MonomialMap MonomialMap::inverse() const {
  // y_{p(i)} = s_i c_i(x_i)  =>  x_i = c_i(s_i^-1 y_{p(i)}).
  MonomialMap r;
  r.perm = perm.inverse();
  r.scalars.resize(degree());
  r.conj.resize(degree());
  for (std::size_t i = 0; i < degree(); ++i) {
    const auto j = static_cast<std::size_t>(perm[i]);
    const F4 inv = scalars[i].inverse();
    r.scalars[j] = conj[i] ? inv.conj() : inv;
    r.conj[j] = conj[i];
  }
  return r;
}

MonomialMap monomial_lift(const MonomialMap& m) {
  const std::size_t n = m.degree();
  std::vector<int> img(2 * n);
  MonomialMap r;
  r.scalars.resize(2 * n);
  r.conj.assign(2 * n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const int t = 2 * m.perm[i];
    const F4 s = m.scalars[i];
    if (m.conj[i]) {
      img[2 * i] = t + 1;
      img[2 * i + 1] = t;
      r.scalars[2 * i] = s.conj();
      r.scalars[2 * i + 1] = s;
    } else {
      img[2 * i] = t;
      img[2 * i + 1] = t + 1;
      r.scalars[2 * i] = s;
      r.scalars[2 * i + 1] = s.conj();
    }
  }
  r.perm = Permutation::from_images(img);
  return r;
}

AdditiveF4Code apply(const AdditiveF4Code& code, const MonomialMap& m) {
  if (m.degree() != code.length()) throw InputError("monomial map degree mismatch");
  std::vector<F4Vec> gens;
  for (const auto& r : code.rows()) gens.push_back(m.apply(r));
  return AdditiveF4Code(code.length(), gens);
}

LinearF4Code apply(const LinearF4Code& code, const MonomialMap& m) {
  if (m.degree() != code.length()) throw InputError("monomial map degree mismatch");
  // Mixed conjugation flags need not preserve linearity; from_packed checks.
  std::vector<BitVec> gens;
  for (const auto& r : code.rows()) {
    gens.push_back(m.apply(r).pack(code.length()));
    gens.push_back(m.apply(r.scaled(F4::omega())).pack(code.length()));
  }
  return LinearF4Code::from_packed(BinaryCode(2 * code.length(), gens), code.length());
}

}  // namespace sdsearch
