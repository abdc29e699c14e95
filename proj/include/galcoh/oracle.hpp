#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "galcoh/orbits.hpp"

namespace galcoh {

/// Deliberately naive re-implementations used as ground truth by the test
/// suites. No code shared with the fgab / orbits engines: machine integers,
/// direct enumeration, union-find.

/// Z^n modulo coordinate-wise moduli (0 = free factor) with an involution
/// given entrywise.
struct OracleModule {
  std::vector<long> moduli;
  std::vector<std::vector<long>> sigma;
};

/// |H^1(Gamma, M)| by enumerating cocycles in a coordinate box and merging
/// along (sigma-1)-shifts. Requires moduli <= 8, free rank <= 4,
/// box >= 2 * max modulus. Throws CapError outside these bounds.
long brute_h1_gamma(const OracleModule& m, long box = 16);

/// Orbit partition from applying every element of the closed affine group
/// (not just generators). Throws CapError when the group exceeds `cap`.
std::vector<std::vector<std::uint32_t>> brute_orbits_full_group(const TwistedAction& action,
                                                                long cap = 10'000);

/// Number of isomorphism classes of forms over R, counted signature by
/// signature: "hermitian" (rank n), "quadratic-odd" (dim 2n+1, fixed det),
/// "quadratic-even" (dim 2n, fixed disc sign), "quaternionic" (rank n),
/// "symplectic", "sl", "hermitian-det1" (rank n, fixed disc parity).
long classification_count(const std::string& family, int n);

/// |H^1(R, G)| for G = {g in GL2 : (det g)^2 = 1} from the exact sequence
/// 1 -> G -> GL2 -> Gm (g -> det(g)^2): the connecting map identifies it
/// with R^x modulo squares-of-determinants, computed on the sign group.
long exact_sequence_gl2_count();

}  // namespace galcoh
