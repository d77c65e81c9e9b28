#pragma once

#include <string>
#include <vector>

#include "bextlab/biext.hpp"

namespace bextlab {

// Coefficients.
BraidedXMod z2_to_trivial();             // Z/2 -> 1
BraidedXMod z2_square_bracket();         // Z/2 -0-> Z/2, <x,y> = xy (symmetric, not Picard)
BraidedXMod z4_mult_bracket();           // Z/4 -0-> Z/4, <x,y> = xy (braided, not symmetric)
BraidedXMod trivial_to_z2();             // 1 -> Z/2
BraidedXMod z2_identity();               // id: Z/2 -> Z/2

// g1(h,h';k) = hh'k, g2(h;k,k') = hkk', x = 0 over H = K = Z/2, coefficient Z/2 -> 1.
BiextCocycle f2_trilinear();
// H = Z/8, K = Z/4, coefficient z4_mult_bracket, x(h,k) = hk, g1 = 0,
// g2(h;k,k') = -q(h) k k' with q(h) = h(h-1)/2: the bracket term is nonzero.
BiextCocycle z4_bracket_biext();
// H = Z/4, K = Z/2, coefficient z2_square_bracket, x(h,k) = hk mod 2,
// g2(h;k,k') = q(h) k k'.
BiextCocycle z2_bracket_biext();

// x(h,k) = hk over H = K = Z/2 with coefficient 1 -> Z/2.
BiextCocycle f2_pairing();

struct NamedBiext {
    std::string name;
    BiextCocycle c;
};
std::vector<NamedBiext> biext_fixtures();

}  // namespace bextlab
