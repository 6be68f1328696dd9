#include "sdsearch/decomp.hpp"

#include "sdsearch/errors.hpp"

namespace sdsearch {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

void check_action(const BinaryCode& code, const Permutation& g) {
  if (g.degree() != code.length()) throw InputError("permutation degree differs from the code length");
  const int p = g.order();
  if (p != 1 && !is_prime(p)) throw InputError("g must have prime order");
  if (!is_automorphism(code, g)) throw InputError("not invariant");
}

}  // namespace

BinaryCode fixed_code(const BinaryCode& code, const Permutation& g) {
  check_action(code, g);
  std::vector<BitVec> images;
  for (const auto& r : code.rows()) images.push_back(g.apply(r) ^ r);
  std::vector<BitVec> words;
  for (const auto& comb : kernel(images)) words.push_back(combine(code.rows(), comb));
  return BinaryCode(code.length(), words);
}

BinaryCode even_subcode(const BinaryCode& code, const Permutation& g) {
  check_action(code, g);
  const int p = g.order();
  if (p % 2 == 1 && p > 1) {
    std::vector<BitVec> words;
    for (const auto& r : code.rows()) {
      BitVec acc;
      BitVec cur = r;
      for (int e = 1; e < p; ++e) {
        cur = g.apply(cur);
        acc ^= cur;
      }
      words.push_back(acc);
    }
    return BinaryCode(code.length(), words);
  }
  // Kernel of the per-cycle parity map.
  const auto cycles = g.all_cycles();
  std::vector<BitVec> parities;
  for (const auto& r : code.rows()) {
    BitVec par;
    for (std::size_t c = 0; c < cycles.size(); ++c) {
      int s = 0;
      for (int x : cycles[c]) s ^= r.test(static_cast<std::size_t>(x));
      par.assign(c, s);
    }
    parities.push_back(par);
  }
  std::vector<BitVec> words;
  for (const auto& comb : kernel(parities)) words.push_back(combine(code.rows(), comb));
  return BinaryCode(code.length(), words);
}

MaschkeSplit maschke_split(const BinaryCode& code, const Permutation& g) {
  const int p = g.order();
  if (p % 2 == 0) throw InputError("Maschke splitting needs odd order");
  MaschkeSplit s{fixed_code(code, g), even_subcode(code, g)};
  if (s.fixed.dimension() + s.even.dimension() != code.dimension() ||
      sum_codes(s.fixed, s.even).dimension() != code.dimension()) {
    throw InvariantError("fixed and even subcodes do not split the code");
  }
  return s;
}

BitVec collapse(const BitVec& v, std::size_t n, std::size_t width) {
  if (n % width) throw InputError("length is not a multiple of the block width");
  BitVec u;
  for (std::size_t a = 0; a < n / width; ++a) {
    const bool bit = v.test(a * width);
    for (std::size_t j = 1; j < width; ++j) {
      if (v.test(a * width + j) != bit) throw InputError("not in fixed space");
    }
    u.assign(a, bit);
  }
  return u;
}

BitVec blow_up(const BitVec& u, std::size_t m, std::size_t width) {
  BitVec v;
  for (std::size_t a = 0; a < m; ++a) {
    if (u.test(a)) {
      for (std::size_t j = 0; j < width; ++j) v.set(a * width + j);
    }
  }
  return v;
}

BinaryCode collapse_code(const BinaryCode& code, std::size_t width) {
  std::vector<BitVec> rows;
  for (const auto& r : code.rows()) rows.push_back(collapse(r, code.length(), width));
  return BinaryCode(code.length() / width, rows);
}

BinaryCode blow_up_code(const BinaryCode& code, std::size_t width) {
  std::vector<BitVec> rows;
  for (const auto& r : code.rows()) rows.push_back(blow_up(r, code.length(), width));
  return BinaryCode(code.length() * width, rows);
}

F4 f4_identify(unsigned block) {
  switch (block & 7U) {
    case 0b000:
      return F4::zero();
    case 0b110:
      return F4::one();
    case 0b011:
      return F4::omega();
    case 0b101:
      return F4::omega_bar();
    default:
      throw InputError("not in P (odd weight block)");
  }
}

unsigned f4_expand(F4 e) {
  static const unsigned table[4] = {0b000, 0b110, 0b011, 0b101};
  return table[e.code()];
}

unsigned cyclic_multiply3(unsigned a, unsigned b) {
  unsigned r = 0;
  for (unsigned i = 0; i < 3; ++i) {
    for (unsigned j = 0; j < 3; ++j) {
      if (((a >> i) & 1U) && ((b >> j) & 1U)) r ^= 1U << ((i + j) % 3);
    }
  }
  return r;
}

F4Vec map_vector_to_F4(const BitVec& v, const Permutation& g) {
  const auto cycles = g.all_cycles();
  F4Vec out;
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    unsigned block = 0;
    for (std::size_t j = 0; j < 3; ++j) {
      if (v.test(static_cast<std::size_t>(cycles[c][j]))) block |= 1U << j;
    }
    out.set(c, f4_identify(block));
  }
  return out;
}

LinearF4Code map_E_to_F4(const BinaryCode& even_code, const Permutation& g) {
  if (g.degree() != even_code.length()) throw InputError("permutation degree differs from the code length");
  if (g.order() != 3 || !g.is_fixed_point_free()) throw InputError("g must be fixed-point-free of order 3");
  const std::size_t c = g.degree() / 3;
  std::vector<BitVec> packed;
  for (const auto& r : even_code.rows()) packed.push_back(map_vector_to_F4(r, g).pack(c));
  return LinearF4Code::from_packed(BinaryCode(2 * c, packed), c);
}

Permutation sigma_alignment(const Permutation& g, const Permutation& sigma) {
  const std::size_t n = g.degree();
  if (g.order() != 3 || !g.is_fixed_point_free()) throw InputError("g must be fixed-point-free of order 3");
  if (sigma.degree() != n || sigma.order() != 2) throw InputError("sigma must be an involution");
  if (conjugate(g, sigma) != g.inverse()) throw InputError("sigma does not invert g");
  std::vector<int> img(n, -1);
  int next = 0;
  for (const auto& cyc : g.all_cycles()) {
    if (img[static_cast<std::size_t>(cyc[0])] >= 0) continue;
    int b = sigma[static_cast<std::size_t>(cyc[0])];
    if (img[static_cast<std::size_t>(b)] >= 0 || b == cyc[1] || b == cyc[2] || b == cyc[0]) {
      throw InputError("sigma fixes a cycle of g");
    }
    for (int a : cyc) img[static_cast<std::size_t>(a)] = next++;
    for (int j = 0; j < 3; ++j, b = g[static_cast<std::size_t>(b)]) img[static_cast<std::size_t>(b)] = next++;
  }
  return Permutation::from_images(img);
}

}  // namespace sdsearch
