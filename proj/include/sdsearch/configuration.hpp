#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sdsearch/perm_group.hpp"
#include "sdsearch/permutation.hpp"

namespace sdsearch {

enum class HKind { A4, D8 };

std::string to_string(HKind kind);
/// Accepts "a4"/"A4"/"d8"/"D8".
HKind parse_hkind(const std::string& text);

/// The acting group H = <g, h, sigma> on `degree` points, made of `blocks`
/// copies of the basic pattern (12 points for A4, 8 for D8). With the
/// default block count the degree is 72.
struct HConfig {
  HKind kind = HKind::A4;
  std::size_t blocks = 0;
  std::size_t degree = 0;
  Permutation g, h, sigma;

  std::size_t half() const { return degree / 2; }
  std::size_t quarter() const { return degree / 4; }
  /// Order of sigma (3 for A4, 2 for D8).
  int sigma_order() const { return kind == HKind::A4 ? 3 : 2; }
  /// g*sigma, the element of order 4 in the D8 case.
  Permutation k() const { return g * sigma; }
  /// (1,2)(3,4)... on half() points.
  Permutation pi1_h() const;
  /// Action of sigma on the quarter() orbits of <g,h>.
  Permutation pi2_sigma() const;
  std::vector<Permutation> generators() const { return {g, h, sigma}; }
};

HConfig make_config(HKind kind, std::size_t blocks);
/// Full-size configuration (degree 72).
HConfig make_config(HKind kind);

/// Pairs {2a, 2a+1} (0-based) of n points, as a block system.
std::vector<std::vector<int>> pair_blocks(std::size_t n);
/// Quads {4a..4a+3} of n points.
std::vector<std::vector<int>> quad_blocks(std::size_t n);

/// Induced permutation on the pairs; p must commute with (1,2)(3,4)...
Permutation pi1_perm(const Permutation& p);
/// Induced permutation on the quads; p must permute them.
Permutation pi2_perm(const Permutation& p);
/// Same as pi1_perm, on half() points (named separately for readability).
inline Permutation pi3_perm(const Permutation& p) { return pi1_perm(p); }

/// Groups attached to a configuration.
struct WreathData {
  /// Centralizer of H in the symmetric group on degree points.
  PermGroup G;
  /// pi1(G) on half() points.
  PermGroup pi1_G;
  /// Elements of C(pi1(h)) whose pi3-image commutes with pi2(sigma).
  PermGroup G36;
  /// Left transversal of pi1(G) in G36, starting with the identity.
  std::vector<Permutation> transversal;
};

WreathData wreath_centralizer(const HConfig& config);

}  // namespace sdsearch
