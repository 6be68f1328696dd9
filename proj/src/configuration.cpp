#include "sdsearch/configuration.hpp"

#include "sdsearch/errors.hpp"

namespace sdsearch {

std::string to_string(HKind kind) { return kind == HKind::A4 ? "a4" : "d8"; }

HKind parse_hkind(const std::string& text) {
  if (text == "a4" || text == "A4") return HKind::A4;
  if (text == "d8" || text == "D8") return HKind::D8;
  throw InputError("unknown group kind '" + text + "' (expected a4 or d8)");
}

HConfig make_config(HKind kind, std::size_t blocks) {
  const std::size_t width = kind == HKind::A4 ? 12 : 8;
  if (blocks == 0 || blocks * width > 252) throw InputError("block count out of range");
  HConfig c;
  c.kind = kind;
  c.blocks = blocks;
  c.degree = blocks * width;
  std::vector<std::vector<int>> g, h, s;
  for (int a = 1; a < static_cast<int>(c.degree); a += 2) g.push_back({a, a + 1});
  for (int b = 0; b < static_cast<int>(c.degree); b += 4) {
    h.push_back({b + 1, b + 3});
    h.push_back({b + 2, b + 4});
  }
  const std::vector<std::vector<int>> pattern =
      kind == HKind::A4
          ? std::vector<std::vector<int>>{{1, 5, 9}, {2, 7, 12}, {3, 8, 10}, {4, 6, 11}}
          : std::vector<std::vector<int>>{{1, 5}, {2, 8}, {3, 7}, {4, 6}};
  for (std::size_t b = 0; b < blocks; ++b) {
    for (auto cyc : pattern) {
      for (int& x : cyc) x += static_cast<int>(b * width);
      s.push_back(cyc);
    }
  }
  c.g = Permutation::from_cycles(c.degree, g);
  c.h = Permutation::from_cycles(c.degree, h);
  c.sigma = Permutation::from_cycles(c.degree, s);
  return c;
}

HConfig make_config(HKind kind) { return make_config(kind, kind == HKind::A4 ? 6 : 9); }

std::vector<std::vector<int>> pair_blocks(std::size_t n) {
  std::vector<std::vector<int>> out;
  for (int a = 0; a + 1 < static_cast<int>(n); a += 2) out.push_back({a, a + 1});
  return out;
}

std::vector<std::vector<int>> quad_blocks(std::size_t n) {
  std::vector<std::vector<int>> out;
  for (int a = 0; a + 3 < static_cast<int>(n); a += 4) out.push_back({a, a + 1, a + 2, a + 3});
  return out;
}

Permutation pi1_perm(const Permutation& p) { return block_action(p, pair_blocks(p.degree())); }

Permutation pi2_perm(const Permutation& p) { return block_action(p, quad_blocks(p.degree())); }

Permutation HConfig::pi1_h() const { return pi1_perm(h); }

Permutation HConfig::pi2_sigma() const { return pi2_perm(sigma); }

WreathData wreath_centralizer(const HConfig& config) {
  WreathData out;
  out.G = semiregular_centralizer(config.degree, config.generators());

  std::vector<Permutation> images;
  for (const auto& t : out.G.generators()) images.push_back(pi1_perm(t));
  const GroupHom pi1(out.G, config.half(), images);
  if (pi1.kernel_order() != 1) throw InvariantError("pi1 is not injective on the centralizer");
  out.pi1_G = pi1.image();

  // G36 = preimage under pi3 of the centralizer of pi2(sigma): the pair swaps
  // form the kernel, natural lifts cover the image.
  const std::size_t n36 = config.half();
  std::vector<Permutation> gens;
  for (int a = 1; a < static_cast<int>(n36); a += 2) {
    gens.push_back(Permutation::from_cycles(n36, {{a, a + 1}}));
  }
  const auto c18 = semiregular_centralizer(config.quarter(), {config.pi2_sigma()});
  for (const auto& rho : c18.generators()) gens.push_back(natural_lift(rho));
  out.G36 = PermGroup(n36, gens);

  const auto h36 = config.pi1_h();
  const auto s18 = config.pi2_sigma();
  for (const auto& t : out.G36.generators()) {
    if (t * h36 != h36 * t || pi3_perm(t) * s18 != s18 * pi3_perm(t)) {
      throw InvariantError("G36 generator violates its defining conditions");
    }
  }
  for (const auto& t : out.pi1_G.generators()) {
    if (!out.G36.contains(t)) throw InvariantError("pi1(G) is not contained in G36");
  }
  out.transversal = left_transversal(out.G36, out.pi1_G);
  return out;
}

}  // namespace sdsearch
