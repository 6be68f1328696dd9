#pragma once

#include <cstddef>
#include <vector>

#include "sdsearch/binary_code.hpp"
#include "sdsearch/f4_codes.hpp"
#include "sdsearch/permutation.hpp"

namespace sdsearch {

/// Subcode of words fixed by g. Throws InputError("not invariant") unless g
/// is an automorphism; g must have prime order (or be the identity).
BinaryCode fixed_code(const BinaryCode& code, const Permutation& g);

/// Subcode of words of even weight on every cycle of g. For odd prime order p
/// this is computed as the image of C under g + g^2 + ... + g^(p-1).
BinaryCode even_subcode(const BinaryCode& code, const Permutation& g);

struct MaschkeSplit {
  BinaryCode fixed;
  BinaryCode even;
};

/// C = C(g) + E(g) for g of odd prime order; the decomposition is verified
/// (trivial intersection, dimensions add up) before it is returned.
MaschkeSplit maschke_split(const BinaryCode& code, const Permutation& g);

/// Collapses blocks {w*a, ..., w*a+w-1} of a vector of length n = w*m that is
/// constant on them; throws InputError("not in fixed space") otherwise.
BitVec collapse(const BitVec& v, std::size_t n, std::size_t width);
/// Inverse of collapse: each coordinate repeated `width` times.
BitVec blow_up(const BitVec& u, std::size_t m, std::size_t width);

inline BitVec pi1(const BitVec& v, std::size_t n) { return collapse(v, n, 2); }
inline BitVec pi2(const BitVec& v, std::size_t n) { return collapse(v, n, 4); }
inline BitVec pi3(const BitVec& v, std::size_t n) { return collapse(v, n, 2); }

BinaryCode collapse_code(const BinaryCode& code, std::size_t width);
BinaryCode blow_up_code(const BinaryCode& code, std::size_t width);

/// The even-weight part of GF(2)[x]/(x^3 - 1) identified with GF(4). Bit j of
/// `block` is the coefficient of x^j: 000 -> 0, x+x^2 -> 1, 1+x -> w, 1+x^2 -> W.
F4 f4_identify(unsigned block);
unsigned f4_expand(F4 e);
/// Product in GF(2)[x]/(x^3 - 1) of two 3-bit blocks.
unsigned cyclic_multiply3(unsigned a, unsigned b);

/// The map f: each cycle (i, g(i), g^2(i)) of g (cycles ordered by smallest
/// point) becomes one GF(4) coordinate. g must have order 3 and be fixed-point
/// free; the code must have even weight on every cycle.
LinearF4Code map_E_to_F4(const BinaryCode& even_code, const Permutation& g);
/// Image of a single vector under the same map.
F4Vec map_vector_to_F4(const BitVec& v, const Permutation& g);

/// Relabelling p for an order-3 fixed-point-free g and an involution sigma
/// with sigma g sigma = g^-1 that moves every cycle of g. After p, g is
/// (1,2,3)(4,5,6)... and sigma swaps cycles 2i-1, 2i with the first points
/// matched, so sigma acts on f-images as sigma_action_f4.
Permutation sigma_alignment(const Permutation& g, const Permutation& sigma);

}  // namespace sdsearch
