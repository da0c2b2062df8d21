#pragma once

#include "ietforge/iet.hpp"

namespace ietforge {

/// Reverse-shift family on [0,1): m > 3 intervals, permutation
/// (m-1, m-2, ..., 2, m, 1), lengths
/// (1/(m-1), ..., 1/(m-1), 1/(m-1) - alpha, alpha) with alpha in
/// (0, 1/(m-1)). Its translations all carry alpha-coefficient 1 and agree
/// with a common step modulo rationals, so it has a continuous eigenfunction
/// witness and a certifiable orbit-separation argument.
Iet reverse_shift_family(int m, const AlphaOracle& alpha);

/// Block-rotation family on [0, n): 2n intervals driven by a permutation
/// sigma of the n unit cells. Cell [i-1, i) maps onto [sigma(i)-1, sigma(i))
/// by x + 1 - alpha + sigma(i) - i on the left part [i-1, i-1+alpha) and
/// x - alpha + sigma(i) - i on the right part.
Iet block_rotation_family(int n, const Permutation& sigma, const AlphaOracle& alpha);

/// The 4-interval exchange on [0,1) with permutation (4 3 2 1) and lengths
/// (alpha, 1/2 - alpha, alpha, 1/2 - alpha), alpha in (0, 1/2). This is the
/// two-cell block rotation brought to unit length.
Iet half_swap_family(const AlphaOracle& alpha);

/// Rotation by theta (mod 1) on [0,1) as a canonical exchange (identity for
/// theta == 0, two intervals otherwise).
Iet rotation(const QAlpha& theta, const AlphaOracle& oracle);

/// h o R_alpha o h^-1 in canonical form; at most twice as many intervals as
/// h. A classical source of maps with non-continuous eigenfunctions.
Iet conjugated_rotation(const AlphaOracle& alpha, const Iet& h);

}  // namespace ietforge
