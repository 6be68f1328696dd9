#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <vector>

#include "sdsearch/binary_code.hpp"
#include "sdsearch/permutation.hpp"

namespace sdsearch {

/// Repetition code [n,1].
BinaryCode repetition_code(std::size_t n);

/// Extended Hamming [8,4,4] code (e8).
BinaryCode extended_hamming8();

/// Extended binary Golay [24,12,8] code: the cyclic code of length 23 with
/// generator x^11+x^10+x^6+x^5+x^4+x^2+1, extended by an overall parity bit.
BinaryCode extended_golay24();

/// Direct sum of codes (coordinates concatenated).
BinaryCode direct_sum(const BinaryCode& a, const BinaryCode& b);

/// Uniformly random permutation of the given degree.
Permutation random_permutation(std::size_t degree, std::mt19937_64& rng);

/// Random code spanned by `k` random vectors of length n (dimension may be < k).
BinaryCode random_code(std::size_t n, std::size_t k, std::mt19937_64& rng);

/// Random self-dual code of length n invariant under the group whose full
/// element list is `group`: grows a self-orthogonal invariant code by orbit
/// spans of random vectors and restarts on dead ends. With doubly_even the
/// result is doubly-even. Returns nullopt after `attempts` failed restarts.
std::optional<BinaryCode> random_invariant_self_dual(std::size_t n,
                                                     const std::vector<Permutation>& group,
                                                     std::mt19937_64& rng, bool doubly_even = false,
                                                     int attempts = 200);

}  // namespace sdsearch
