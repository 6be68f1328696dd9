#include "sdsearch/isotropic.hpp"

#include <algorithm>

#include "sdsearch/errors.hpp"

namespace sdsearch {

F2Form F2Form::standard(std::size_t n) {
  F2Form f;
  f.dim = n;
  for (std::size_t i = 0; i < n; ++i) f.gram.push_back(BitVec::unit(i));
  return f;
}

F2Form F2Form::trace_hermitian(std::size_t n) {
  F2Form f;
  f.dim = 2 * n;
  for (std::size_t i = 0; i < 2 * n; ++i) f.gram.push_back(BitVec::unit(i < n ? i + n : i - n));
  return f;
}

BitVec F2Form::functional(const BitVec& x) const {
  BitVec r;
  for (std::size_t i = 0; i < dim; ++i) {
    if (x.test(i)) r ^= gram[i];
  }
  return r;
}

int F2Form::q(const BitVec& x) const {
  int s = 0;
  for (std::size_t i = 0; i < dim; ++i) {
    if (x.test(i)) s += (quad[i] & x).popcount();
  }
  return s & 1;
}

BitVec F2Form::diagonal() const {
  BitVec d;
  for (std::size_t i = 0; i < dim; ++i) d.assign(i, gram[i].test(i));
  return d;
}

std::size_t F2Form::rank() const {
  Echelon e;
  for (const auto& r : gram) e.insert(r);
  return e.rank();
}

namespace {

class IsotropicSearch {
 public:
  IsotropicSearch(const F2Form& form, std::size_t k,
                  const std::function<bool(const std::vector<BitVec>&)>& visit, Shard shard)
      : form_(form), k_(k), visit_(visit), shard_(shard), diag_(form.diagonal()) {}

  void run() { rec(form_.dim); }

 private:
  // Chooses the next row with pivot below `upper`.
  bool rec(std::size_t upper) {
    const std::size_t remaining = k_ - rows_.size();
    if (remaining == 0) {
      std::vector<BitVec> out(rows_.rbegin(), rows_.rend());
      return visit_(out);
    }
    const bool top = rows_.empty();
    for (std::size_t p = remaining - 1; p < upper; ++p) {
      std::vector<std::size_t> cols;
      for (std::size_t c = p + 1; c < form_.dim; ++c) {
        if (!pivot_mask_.test(c)) cols.push_back(c);
      }
      // Constraint j is dot(r, functional_j) = 0; the diagonal constraint
      // comes last when the form is not alternating.
      std::vector<BitVec> cons = functionals_;
      if (diag_.any()) cons.push_back(diag_);
      std::vector<BitVec> images(cols.size());
      for (std::size_t v = 0; v < cols.size(); ++v) {
        for (std::size_t j = 0; j < cons.size(); ++j) images[v].assign(j, cons[j].test(cols[v]));
      }
      BitVec target;
      for (std::size_t j = 0; j < cons.size(); ++j) target.assign(j, cons[j].test(p));
      const auto x0 = solve(images, target);
      if (!x0) continue;
      BitVec r = BitVec::unit(p);
      for (std::size_t v = 0; v < cols.size(); ++v) {
        if (x0->test(v)) r.set(cols[v]);
      }
      std::vector<BitVec> moves;
      for (const auto& kv : kernel(images)) {
        BitVec m;
        for (std::size_t v = 0; v < cols.size(); ++v) {
          if (kv.test(v)) m.set(cols[v]);
        }
        moves.push_back(m);
      }
      budget::require(moves.size() >= 64 ? ~std::uint64_t{0} : std::uint64_t{1} << moves.size(),
                      "isotropic row candidates");
      const std::uint64_t total = std::uint64_t{1} << moves.size();
      for (std::uint64_t i = 0; i < total; ++i) {
        if (i) r ^= moves[static_cast<std::size_t>(std::countr_zero(i))];
        if (form_.has_quad() && form_.q(r)) continue;
        if (top && !shard_.owns(branch_++)) continue;
        rows_.push_back(r);
        functionals_.push_back(form_.functional(r));
        pivot_mask_.set(p);
        const bool go_on = rec(p);
        pivot_mask_.reset(p);
        functionals_.pop_back();
        rows_.pop_back();
        if (!go_on) return false;
      }
    }
    return true;
  }

  const F2Form& form_;
  std::size_t k_;
  const std::function<bool(const std::vector<BitVec>&)>& visit_;
  Shard shard_;
  BitVec diag_;
  std::vector<BitVec> rows_;
  std::vector<BitVec> functionals_;
  BitVec pivot_mask_;
  std::uint64_t branch_ = 0;
};

}  // namespace

void enumerate_isotropic(const F2Form& form, std::size_t k,
                         const std::function<bool(const std::vector<BitVec>&)>& visit,
                         Shard shard) {
  if (shard.count == 0 || shard.index >= shard.count) throw InputError("invalid shard");
  if (form.gram.size() != form.dim) throw InputError("gram matrix has the wrong size");
  if (k > form.dim) return;
  if (k == 0) {
    if (shard.owns(0)) visit({});
    return;
  }
  IsotropicSearch(form, k, visit, shard).run();
}

std::uint64_t count_isotropic(const F2Form& form, std::size_t k, Shard shard) {
  std::uint64_t n = 0;
  enumerate_isotropic(
      form, k,
      [&](const std::vector<BitVec>&) {
        ++n;
        return true;
      },
      shard);
  return n;
}

}  // namespace sdsearch
