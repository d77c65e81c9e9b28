#include "bextlab/fixtures.hpp"

namespace bextlab {

BraidedXMod z2_to_trivial() { return trivially_braided(make_xmod(cyclic(2), trivial_group(), {0, 0})); }

BraidedXMod z2_square_bracket()
{
    return with_bracket(make_xmod(cyclic(2), cyclic(2), {0, 0}), [](int x, int y) { return x * y % 2; });
}

BraidedXMod z4_mult_bracket()
{
    return with_bracket(make_xmod(cyclic(4), cyclic(4), {0, 0, 0, 0}), [](int x, int y) { return x * y % 4; });
}

BraidedXMod trivial_to_z2() { return trivially_braided(make_xmod(trivial_group(), cyclic(2), {0})); }

BraidedXMod z2_identity() { return trivially_braided(identity_xmod(cyclic(2))); }

BiextCocycle f2_pairing()
{
    FinGroup Z2 = cyclic(2);
    BiextCocycle c = trivial_biext(Z2, Z2, trivial_to_z2());
    c.x = {0, 0, 0, 1};
    return c;
}

BiextCocycle f2_trilinear()
{
    FinGroup Z2 = cyclic(2);
    BiextCocycle c = trivial_biext(Z2, Z2, z2_to_trivial());
    for (int h = 0; h < 2; ++h)
        for (int h2 = 0; h2 < 2; ++h2)
            for (int k = 0; k < 2; ++k) {
                c.g1[(h * 2 + h2) * 2 + k] = h * h2 * k;
                c.g2[(h * 2 + h2) * 2 + k] = h * h2 * k;
            }
    return c;
}

namespace {

BiextCocycle bilinear_bracket_biext(int nh, int nk, int m, const BraidedXMod& coeff)
{
    BiextCocycle c = trivial_biext(cyclic(nh), cyclic(nk), coeff);
    auto q = [&](int h) { return (h * (h - 1) / 2) % m; };
    for (int h = 0; h < nh; ++h)
        for (int k = 0; k < nk; ++k) {
            c.x[h * nk + k] = h * k % m;
            for (int k2 = 0; k2 < nk; ++k2) c.g2[(h * nk + k) * nk + k2] = ((m - q(h)) * k * k2) % m;
        }
    return c;
}

}  // namespace

BiextCocycle z4_bracket_biext() { return bilinear_bracket_biext(8, 4, 4, z4_mult_bracket()); }

BiextCocycle z2_bracket_biext() { return bilinear_bracket_biext(4, 2, 2, z2_square_bracket()); }

std::vector<NamedBiext> biext_fixtures()
{
    FinGroup Z2 = cyclic(2);
    return {{"trivial_z2", trivial_biext(Z2, Z2, z2_to_trivial())},
            {"f2_trilinear", f2_trilinear()},
            {"f2_pairing", f2_pairing()},
            {"z2_bracket", z2_bracket_biext()},
            {"z4_bracket", z4_bracket_biext()}};
}

}  // namespace bextlab
